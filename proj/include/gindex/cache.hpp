#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "gindex/expansion.hpp"

namespace gindex {

inline constexpr const char* kPkmuCacheSchema = "gindex-pkmu-cache-v1";

// Loads a p_{k,mu} cache written by save_ptable. Returns false when the file
// is missing, unreadable, or carries a different schema tag; stale caches are
// ignored rather than migrated.
inline bool load_ptable(PTable& table, const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    if (!doc.is_object() || doc.value("schema", "") != kPkmuCacheSchema) return false;
    if (!doc.contains("values") || !doc["values"].is_object()) return false;
    for (const auto& [key, value] : doc["values"].items()) {
        std::size_t bar = key.find('|');
        if (bar == std::string::npos || !value.is_string()) continue;
        unsigned k = static_cast<unsigned>(std::stoul(key.substr(0, bar)));
        std::vector<unsigned> mu;
        std::string rest = key.substr(bar + 1);
        std::size_t start = 0;
        while (start < rest.size()) {
            std::size_t comma = rest.find(',', start);
            if (comma == std::string::npos) comma = rest.size();
            mu.push_back(static_cast<unsigned>(std::stoul(rest.substr(start, comma - start))));
            start = comma + 1;
        }
        table.insert(k, std::move(mu), BigInt(value.get<std::string>()));
    }
    return true;
}

inline void save_ptable(const PTable& table, const std::string& path) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, mu, v] : table.entries()) {
        std::string key = std::to_string(k) + "|";
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(mu[i]);
        }
        values[key] = v.to_string();
    }
    nlohmann::ordered_json doc{{"schema", kPkmuCacheSchema}, {"values", std::move(values)}};
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
}

}  // namespace gindex
