// Command-line surface: exact expansions of (cD)^n f, tableau listings with
// g-indexes, polynomial families, brute-force oracles, and the identity
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gindex/cache.hpp"
#include "gindex/families.hpp"
#include "gindex/render.hpp"
#include "gindex/verify.hpp"

namespace {

using namespace gindex;

std::vector<unsigned> parse_csv(const std::string& text) {
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string piece = text.substr(start, comma - start);
        if (!piece.empty()) out.push_back(static_cast<unsigned>(std::stoul(piece)));
        start = comma + 1;
    }
    return out;
}

struct RunConfig {
    std::string format = "text";
    unsigned n = 0;
    unsigned nmax = 0;
    unsigned k = 2;
    unsigned order = kDefaultSeriesOrder;
    std::string grouping = "raw";
    std::string id;
    std::string mu_text;
    std::string shape_text;
    std::string stat;
    std::string s_text;
    std::string suite = "all";
    std::string method = "recurrence";
    std::string cache_path;
    bool with_g_index = false;
};

void emit(const nlohmann::ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

template <typename T, typename GFn>
void list_tableaux(const std::vector<T>& items, const RunConfig& cfg, GFn&& g_of) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : items) {
        if (cfg.format == "json") {
            ordered_json tj = to_json(t);
            if (cfg.with_g_index) {
                GIndexVector g = g_of(t);
                ordered_json gv = ordered_json::array();
                for (unsigned v : g.g) gv.push_back(v);
                tj["g"] = std::move(gv);
                tj["G"] = json_int(g.product());
            }
            arr.push_back(std::move(tj));
        } else {
            std::cout << render_tableau(t);
            if (cfg.with_g_index) std::cout << render_g_vector(g_of(t)) << "\n";
            std::cout << "\n";
        }
    }
    if (cfg.format == "json") emit(arr);
}

int cmd_expand(const RunConfig& cfg) {
    Expansion e = expand_recurrence(cfg.n);
    if (cfg.grouping == "raw") {
        if (cfg.format == "json")
            emit(expansion_to_json(e));
        else if (cfg.format == "latex")
            std::cout << expansion_to_latex(e) << "\n";
        else
            std::cout << diffpoly_to_string(e.body) << "\n";
        return 0;
    }
    // type and tableau groupings list one record per type
    PTable table;
    ordered_json records = ordered_json::array();
    for (const auto& t : types_of(cfg.n)) {
        BigInt p = table.value(t);
        DiffPolynomial term = DiffPolynomial::monomial(
            DiffMonomial(t.k, 1 + t.slot_multiplicity(0), t.mu.parts()), p);
        if (cfg.format == "json") {
            ordered_json rec = to_json(t);
            rec["p"] = json_int(p);
            if (cfg.grouping == "tableau") {
                ordered_json zs = ordered_json::array();
                for (const auto& z : ktableaux_of(t)) {
                    ordered_json zj = to_json(z);
                    GIndexVector g = g_index_k(z);
                    ordered_json gv = ordered_json::array();
                    for (unsigned v : g.g) gv.push_back(v);
                    zj["g"] = std::move(gv);
                    zj["G"] = json_int(g.product());
                    zs.push_back(std::move(zj));
                }
                rec["tableaux"] = std::move(zs);
            }
            records.push_back(std::move(rec));
        } else {
            std::cout << "type " << t.to_string() << "  p = " << p
                      << "  term: " << diffpoly_to_string(term) << "\n";
            if (cfg.grouping == "tableau") {
                for (const auto& z : ktableaux_of(t))
                    std::cout << render_tableau(z) << render_g_vector(g_index_k(z)) << "\n\n";
            }
        }
    }
    if (cfg.format == "json")
        emit(ordered_json{{"n", cfg.n}, {"grouping", cfg.grouping}, {"types", records}});
    return 0;
}

UniPoly family_value(const std::string& id, unsigned n, unsigned k) {
    if (id == "eulerian") return eulerian(n);
    if (id == "eulerian-classic") return eulerian_classic(n);
    if (id == "second-order") return second_order(n, k);
    if (id == "one-over-k") return one_over_k(n, k);
    if (id == "lap") return left_ascent_plateau(n);
    if (id == "type-b") return type_b(n);
    if (id == "andre") return andre(n);
    if (id == "gamma-eulerian") return gamma_eulerian(n);
    if (id == "gamma-andre") return gamma_andre(n);
    throw invalid_input_error("unknown family id: " + id);
}

unsigned family_min_n(const std::string& id) {
    return (id == "andre" || id == "gamma-eulerian" || id == "gamma-andre") ? 1 : 0;
}

int cmd_family(const RunConfig& cfg) {
    if (cfg.nmax != 0) {
        std::vector<UniPoly> rows;
        unsigned lo = family_min_n(cfg.id);
        for (unsigned n = lo; n <= cfg.nmax; ++n) rows.push_back(family_value(cfg.id, n, cfg.k));
        if (cfg.format == "bfile") {
            std::cout << render_bfile(rows);
        } else if (cfg.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& p : rows) arr.push_back(to_json(p));
            emit(ordered_json{{"id", cfg.id}, {"nmin", lo}, {"rows", std::move(arr)}});
        } else {
            for (unsigned n = lo; n <= cfg.nmax; ++n)
                std::cout << "n=" << n << ": " << rows[n - lo].to_string() << "\n";
        }
        return 0;
    }
    UniPoly p = family_value(cfg.id, cfg.n, cfg.k);
    if (cfg.format == "json")
        emit(ordered_json{{"id", cfg.id}, {"n", cfg.n}, {"coeffs", to_json(p)}});
    else if (cfg.format == "bfile")
        std::cout << render_bfile({p});
    else
        std::cout << p.to_string() << "\n";
    return 0;
}

int cmd_tableaux_syt(const RunConfig& cfg) {
    std::vector<Tableau> items;
    if (!cfg.shape_text.empty()) {
        Partition shape(parse_csv(cfg.shape_text));
        if (shape.weight() != cfg.n)
            throw invalid_input_error("tableaux: shape weight does not match --n");
        items = syt_of_shape(shape);
    } else {
        items = syt_all(cfg.n);
    }
    list_tableaux(items, cfg, [](const Tableau& t) { return g_index(t); });
    return 0;
}

int cmd_tableaux_k(const RunConfig& cfg, unsigned shape_k) {
    TypeKMu type(cfg.n, shape_k, Partition(parse_csv(cfg.mu_text)));
    list_tableaux(ktableaux_of(type), cfg, [](const KTableau& z) { return g_index_k(z); });
    return 0;
}

int cmd_pkmu(const RunConfig& cfg) {
    TypeKMu type(cfg.n, cfg.k, Partition(parse_csv(cfg.mu_text)));
    PTable table;
    if (!cfg.cache_path.empty()) load_ptable(table, cfg.cache_path);

    auto report = [&](const BigInt& v) {
        if (cfg.format == "json") {
            ordered_json doc = to_json(type);
            doc["n"] = type.n;
            doc["p"] = json_int(v);
            doc["method"] = cfg.method;
            emit(doc);
        } else {
            std::cout << v << "\n";
        }
    };

    if (cfg.method == "all") {
        BigInt rec = p_value(type, PMethod::Recurrence, table);
        BigInt tab = p_value(type, PMethod::Tableau, table);
        BigInt enu = p_value(type, PMethod::Enumeration, table);
        if (!(rec == tab && tab == enu)) {
            std::cerr << "method disagreement at " << type.to_string() << ": recurrence "
                      << rec << ", tableau " << tab << ", enumeration " << enu << "\n";
            return 1;
        }
        report(rec);
    } else if (cfg.method == "recurrence") {
        report(p_value(type, PMethod::Recurrence, table));
    } else if (cfg.method == "tableau") {
        report(p_value(type, PMethod::Tableau, table));
    } else {
        report(p_value(type, PMethod::Enumeration, table));
    }
    if (!cfg.cache_path.empty() && (cfg.method == "recurrence" || cfg.method == "all"))
        save_ptable(table, cfg.cache_path);
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    const std::string& stat = cfg.stat;
    UniPoly poly;
    BigInt count;
    bool is_count = false;
    if (stat == "des-aug") poly = perm_poly(cfg.n, PermStatistic::DesAug);
    else if (stat == "des-classic") poly = perm_poly(cfg.n, PermStatistic::DesClassic);
    else if (stat == "exc-cyc") poly = exc_cyc_poly(cfg.n, cfg.k);
    else if (stat == "peaks-gamma") poly = gamma_peak_poly(cfg.n);
    else if (stat == "simsun-des") poly = simsun_des_poly(cfg.n);
    else if (stat == "stirling-des") poly = stirling_des_poly(cfg.n, cfg.k);
    else if (stat == "stirling-ap") poly = stirling_ap_poly(cfg.n, cfg.k);
    else if (stat == "stirling-lap") poly = stirling_lap_poly(cfg.n);
    else if (stat == "trees012") poly = trees012_leaf_poly(cfg.n);
    else if (stat == "type-b-des") poly = signed_desB_poly(cfg.n);
    else if (stat == "asc-s") poly = s_ascent_poly(parse_csv(cfg.s_text));
    else if (stat == "alternating") { count = alternating_count(cfg.n); is_count = true; }
    else if (stat == "simsun-count") { count = simsun_count(cfg.n); is_count = true; }
    else throw invalid_input_error("unknown oracle statistic: " + stat);

    if (is_count) {
        if (cfg.format == "json")
            emit(ordered_json{{"stat", stat}, {"n", cfg.n}, {"count", json_int(count)}});
        else
            std::cout << count << "\n";
        return 0;
    }
    if (cfg.format == "json")
        emit(ordered_json{{"stat", stat}, {"n", cfg.n}, {"coeffs", to_json(poly)}});
    else if (cfg.format == "bfile")
        std::cout << render_bfile({poly});
    else
        std::cout << poly.to_string() << "\n";
    return 0;
}

int cmd_grammar(const RunConfig& cfg, const std::string& rules, const std::string& u_letter,
                const std::string& target_letter, bool check_expansion) {
    Grammar g = Grammar::parse(rules);
    MPoly target = MPoly::letter(target_letter);
    if (check_expansion) {
        if (u_letter.empty())
            throw invalid_input_error("grammar: --check-expansion needs --u");
        bool ok = u_dg_expansion_check(g, MPoly::letter(u_letter), target, cfg.n);
        std::cout << (ok ? "PASS" : "FAIL") << " structural expansion of (u D_G)^"
                  << cfg.n << "\n";
        return ok ? 0 : 1;
    }
    MPoly result = u_letter.empty()
                       ? derive_n(g, target, cfg.n)
                       : u_dg_power(g, MPoly::letter(u_letter), target, cfg.n);
    if (cfg.format == "json")
        emit(ordered_json{{"n", cfg.n}, {"result", to_json(result)}});
    else
        std::cout << result.to_string() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyParams params;
    params.nmax = cfg.nmax;
    params.kmax = cfg.k;
    params.order = cfg.order;
    std::vector<std::string> suites;
    if (cfg.suite == "all")
        suites = verify_suite_names();
    else
        suites.push_back(cfg.suite);

    bool all_pass = true;
    for (const auto& name : suites) {
        Report report = run_suite(name, params);
        for (const auto& check : report.checks) {
            std::cout << (check.pass ? "PASS" : "FAIL") << " [" << report.suite << "] "
                      << check.name << "\n";
            if (!check.pass && !check.detail.empty())
                std::cout << "     " << check.detail << "\n";
        }
        all_pass = all_pass && report.all_pass();
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of (cD)^n expansions, Young tableau g-indexes, and "
                 "Eulerian-type polynomial families"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    CLI::App* expand = app.add_subcommand("expand", "expansion of (cD)^n f");
    expand->add_option("--n", cfg.n, "order of the expansion")
        ->required()
        ->check(CLI::Range(1u, 10u));
    expand->add_option("--grouping", cfg.grouping, "raw, type or tableau")
        ->check(CLI::IsMember({"raw", "type", "tableau"}))
        ->capture_default_str();
    add_format(expand, {"text", "json", "latex"});

    CLI::App* family = app.add_subcommand("family", "polynomial families");
    family->add_option("--id", cfg.id, "family identifier")
        ->required()
        ->check(CLI::IsMember({"eulerian", "eulerian-classic", "second-order",
                               "one-over-k", "lap", "type-b", "andre", "gamma-eulerian",
                               "gamma-andre"}));
    family->add_option("--n", cfg.n, "single index to compute");
    family->add_option("--nmax", cfg.nmax, "emit the whole triangle up to this n");
    family->add_option("--k", cfg.k, "parameter k for second-order / one-over-k")
        ->capture_default_str();
    add_format(family, {"text", "json", "bfile"});

    CLI::App* tab = app.add_subcommand("tableaux", "tableau listings with g-indexes");
    unsigned shape_k = 0;
    tab->add_option("--n", cfg.n, "size")->required()->check(CLI::Range(1u, 10u));
    tab->add_option("--shape", cfg.shape_text, "SYT shape, e.g. 3,2");
    tab->add_option("--shape-k", shape_k, "bottom row length of a k-Young tableau");
    tab->add_option("--shape-mu", cfg.mu_text, "top shape mu of a k-Young tableau");
    tab->add_flag("--g-index", cfg.with_g_index, "print g-vectors and products");
    add_format(tab, {"text", "json"});

    CLI::App* pkmu = app.add_subcommand("pkmu", "the inversion-sequence counts p_{k,mu}");
    pkmu->add_option("--n", cfg.n, "size")->required();
    pkmu->add_option("--k", cfg.k, "k of the type")->required();
    pkmu->add_option("--mu", cfg.mu_text, "mu as a comma list, e.g. 2,1,1")
        ->capture_default_str();
    pkmu->add_option("--method", cfg.method, "recurrence, tableau, enumeration or all")
        ->check(CLI::IsMember({"recurrence", "tableau", "enumeration", "all"}))
        ->capture_default_str();
    pkmu->add_option("--cache", cfg.cache_path, "JSON cache file for the recurrence table");
    add_format(pkmu, {"text", "json"});

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force enumeration oracles");
    oracle->add_option("--stat", cfg.stat, "statistic name")
        ->required()
        ->check(CLI::IsMember({"des-aug", "des-classic", "exc-cyc", "peaks-gamma",
                               "simsun-des", "simsun-count", "alternating", "trees012",
                               "stirling-des", "stirling-ap", "stirling-lap", "type-b-des",
                               "asc-s"}));
    oracle->add_option("--n", cfg.n, "size");
    oracle->add_option("--k", cfg.k, "parameter k where applicable")->capture_default_str();
    oracle->add_option("--s", cfg.s_text, "s-sequence for asc-s, e.g. 1,3,5");
    add_format(oracle, {"text", "json", "bfile"});

    CLI::App* grammar = app.add_subcommand("grammar", "formal grammar derivatives");
    std::string rules_text, u_letter, target_letter;
    bool check_expansion = false;
    grammar->add_option("--rules", rules_text, "rule list, e.g. \"x -> x*y; y -> y\"")
        ->required();
    grammar->add_option("--target", target_letter, "letter to derive")->required();
    grammar->add_option("--u", u_letter, "apply (u D_G)^n instead of D_G^n");
    grammar->add_option("--n", cfg.n, "number of applications")->required();
    grammar->add_flag("--check-expansion", check_expansion,
                      "check the structural type expansion of (u D_G)^n");
    add_format(grammar, {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "identity verification suites");
    verify->add_option("--suite", cfg.suite, "suite name or all")
        ->check(CLI::IsMember({"all", "table", "expand", "pkmu", "syt-families",
                               "corollaries", "fibers", "thm1.1", "grammars", "families",
                               "aggregates"}))
        ->capture_default_str();
    verify->add_option("--nmax", cfg.nmax, "override the tested range");
    verify->add_option("--kmax", cfg.k, "k range for thm1.1 and families");
    verify->add_option("--order", cfg.order, "series truncation order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(cfg);
        if (family->parsed()) {
            if (cfg.nmax == 0 && !family->count("--n"))
                throw invalid_input_error("family: give --n or --nmax");
            return cmd_family(cfg);
        }
        if (tab->parsed()) {
            if (tab->count("--shape-k") != 0 || !cfg.mu_text.empty()) {
                if (tab->count("--shape-k") == 0)
                    throw invalid_input_error("tableaux: --shape-mu needs --shape-k");
                return cmd_tableaux_k(cfg, shape_k);
            }
            return cmd_tableaux_syt(cfg);
        }
        if (pkmu->parsed()) return cmd_pkmu(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (grammar->parsed())
            return cmd_grammar(cfg, rules_text, u_letter, target_letter, check_expansion);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const size_limit_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
