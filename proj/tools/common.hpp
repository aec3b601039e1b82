#pragma once

#include "liecg/catalog.hpp"
#include "liecg/json_io.hpp"

#include <cstdlib>
#include <iostream>

namespace liecg::cli {

// exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 invalid input
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

/// Resolves --algebra (catalog name, then $LIECG_CATALOG_PATH/<name>.json)
/// or --file.
inline AlgebraPtr resolve_algebra(const std::string& name, const std::string& file) {
    if (!file.empty()) return algebra_from_json(read_json_file(file));
    if (name.empty()) throw IoError("one of --algebra or --file is required");
    try {
        return catalog_algebra(name);
    } catch (const UnknownAlgebra&) {
        const char* dir = std::getenv("LIECG_CATALOG_PATH");
        if (dir != nullptr) {
            std::string path = std::string(dir) + "/" + name + ".json";
            std::ifstream probe(path);
            if (probe.good()) return algebra_from_json(read_json_file(path));
        }
        throw;
    }
}

inline Functional parse_functional_arg(const std::string& csv, std::size_t dim) {
    Vec v;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        if (!tok.empty()) v.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.size() != dim)
        throw IoError("functional needs " + std::to_string(dim) + " comma-separated rationals");
    return Functional{v};
}

inline void emit_report(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        write_json_file(out_path, report);
    }
}

}  // namespace liecg::cli
