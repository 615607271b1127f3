// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every check is exact (tolerance zero); the time limits are part of the
// criteria and are enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gindex/verify.hpp"

using namespace gindex;

namespace {

struct Criterion {
    int id;
    std::string text;
    long long limit_ms;  // 0 = no limit stated
    std::function<Report()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "table reproduction for n = 1..5, term-for-term", 1000,
         [] { return verify_table(); }},
        {2, "four-way expansion agreement for n <= 8", 30000,
         [] { return verify_expand({8, 3, 20}); }},
        {3, "worked p-values by recurrence, tableau sum and enumeration", 10000,
         [] { return verify_pkmu({9, 3, 20}); }},
        {4, "SYT forms of A_n (n <= 8) and C_n (n <= 7) against descent oracles", 120000,
         [] { return verify_syt_families({8, 3, 20}); }},
        {5, "corollary sums: n!, (2n-1)!! for n <= 9; E_{n+1} for n <= 8", 0,
         [] { return verify_corollaries({9, 3, 20}); }},
        {6, "fiber sums equal G_T for n <= 7; |Gamma_1| = |Gamma_2| for n <= 6", 0,
         [] { return verify_fibers({7, 3, 20}); }},
        {7, "series identities at truncation order 20 for n <= 5, k <= 3", 30000,
         [] { return verify_thm11({5, 3, 20}); }},
        {8, "grammar suite: Dumont and Andre slices for n <= 8, 20 random grammars", 0,
         [] { return verify_grammar_suite({8, 3, 20}); }},
        {9, "family cross-checks: 1/k-Eulerian, Andre, Frobenius and gamma expansions", 0,
         [] { return verify_families_suite({9, 3, 20}); }},
        {10, "a(n,lambda) aggregate identities for n <= 9", 0,
         [] { return verify_aggregates({9, 3, 20}); }},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Report report = c.run();
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        bool pass = report.all_pass() && (c.limit_ms == 0 || elapsed <= c.limit_ms);
        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.text
                  << " [" << report.checks.size() << " checks, " << elapsed << " ms";
        if (c.limit_ms != 0) std::cout << ", limit " << c.limit_ms << " ms";
        std::cout << "]\n";
        if (!pass) {
            for (const auto& check : report.checks)
                if (!check.pass) {
                    std::cout << "     FAILED: " << check.name << "\n";
                    if (!check.detail.empty()) std::cout << "       " << check.detail << "\n";
                }
            if (c.limit_ms != 0 && elapsed > c.limit_ms)
                std::cout << "     exceeded the time limit\n";
        }
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above")
              << "\n";
    return all_pass ? 0 : 1;
}
