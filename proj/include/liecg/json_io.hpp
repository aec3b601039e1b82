#pragma once

#include "chain.hpp"
#include "modules.hpp"

#include <json.hpp>

#include <fstream>

namespace liecg {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- structure-constant files ----------------------------------------------
//
// {"name": str, "basis": [str],
//  "brackets": [{"i": str, "j": str, "value": {label: "p/q"}}]}
// omitted pairs are zero; rationals are strings "p/q" or "n".

inline Json algebra_to_json(const LieAlgebra& g) {
    Json j;
    j["name"] = g.name;
    j["basis"] = g.labels;
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = i + 1; k < g.dim(); ++k) {
            const Vec& v = g.bracket_basis(i, k);
            if (is_zero(v)) continue;
            Json entry;
            entry["i"] = g.labels[i];
            entry["j"] = g.labels[k];
            Json val;
            for (std::size_t c = 0; c < g.dim(); ++c)
                if (v[c] != 0) val[g.labels[c]] = rational_str(v[c]);
            entry["value"] = std::move(val);
            brackets.push_back(std::move(entry));
        }
    j["brackets"] = std::move(brackets);
    return j;
}

inline AlgebraPtr algebra_from_json(const Json& j) {
    if (!j.contains("name") || !j.contains("basis") || !j.contains("brackets"))
        throw IoError("algebra file needs name/basis/brackets");
    std::string name = j["name"].get<std::string>();
    std::vector<std::string> labels = j["basis"].get<std::vector<std::string>>();
    std::map<std::string, std::size_t> ix;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (ix.count(labels[i])) throw IoError("duplicate basis label '" + labels[i] + "'");
        ix.emplace(labels[i], i);
    }
    std::size_t n = labels.size();
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (const auto& entry : j["brackets"]) {
        auto it_i = ix.find(entry.at("i").get<std::string>());
        auto it_j = ix.find(entry.at("j").get<std::string>());
        if (it_i == ix.end() || it_j == ix.end()) throw IoError("bracket uses unknown label");
        std::size_t a = it_i->second, b = it_j->second;
        Vec v = zero_vec(n);
        for (const auto& [lab, val] : entry.at("value").items()) {
            auto it = ix.find(lab);
            if (it == ix.end()) throw IoError("bracket value uses unknown label '" + lab + "'");
            v[it->second] = parse_rational(val.get<std::string>());
        }
        table[a][b] = std::move(v);
        given[a][b] = true;
    }
    // mirror pairs stated only one way; explicit contradictions are left for
    // validate() to flag
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (given[a][b] && !given[b][a]) table[b][a] = scaled(table[a][b], Rational(-1));
    return validate(std::move(name), std::move(labels), std::move(table));
}

// ---- module specs ------------------------------------------------------------

inline Vec parse_rational_vec(const Json& arr) {
    Vec v;
    for (const auto& x : arr) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

inline Json rational_vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_str(x));
    return a;
}

inline Mat parse_rational_mat(const Json& rows) {
    Mat m;
    for (const auto& r : rows) m.push_back(parse_rational_vec(r));
    return m;
}

/// {"kind": "matrix"|"induced"|"shift"|"functional", ...}; matrices are
/// row-major rational-string arrays keyed by basis label.
inline ModulePtr module_from_json(const Json& j, AlgebraPtr g) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "matrix") {
        std::vector<Mat> images;
        const auto& imgs = j.at("images");
        for (const auto& lab : g->labels) {
            if (!imgs.contains(lab)) throw IoError("missing image for basis label '" + lab + "'");
            images.push_back(parse_rational_mat(imgs.at(lab)));
        }
        return as_module(make_rep(std::move(g), std::move(images)));
    }
    if (kind == "functional") {
        Functional f{parse_rational_vec(j.at("coords"))};
        return as_module(character_rep(std::move(g), f));
    }
    if (kind == "shift") {
        return std::make_shared<ShiftModule>(std::move(g), j.value("truncation", 12));
    }
    if (kind == "induced") {
        Subspace h;
        if (j.at("subalgebra").is_object() && j.at("subalgebra").contains("span")) {
            Mat rows;
            for (const auto& lab : j.at("subalgebra").at("span")) {
                auto idx = g->label_index(lab.get<std::string>());
                if (!idx) throw IoError("unknown label in subalgebra span");
                rows.push_back(unit_vec(g->dim(), *idx));
            }
            h = span(std::move(rows));
        } else {
            h = span(parse_rational_mat(j.at("subalgebra")));
        }
        bool twist = j.value("twist", true);
        int level = j.value("level", 2 * static_cast<int>(g->dim()) + 2);
        Functional f{parse_rational_vec(j.at("functional"))};
        if (f.coords.size() == g->dim()) {
            // functional given on g; restrict to h
            Vec on_h = zero_vec(h.dim());
            for (std::size_t a = 0; a < h.dim(); ++a) on_h[a] = dot(f.coords, h.basis[a]);
            f = Functional{on_h};
        }
        return std::make_shared<InducedModule>(std::move(g), h, f, twist, level);
    }
    throw IoError("unknown module kind '" + kind + "'");
}

inline Json ideal_to_json(const UAlgebra& ua, const TruncatedIdeal& v) {
    Json j;
    j["degree"] = v.degree;
    j["probe_level"] = v.probe_level;
    j["certified"] = v.certified;
    Json basis = Json::array();
    for (const auto& u : ideal_members(ua, v)) basis.push_back(element_str(ua.algebra(), u));
    j["basis"] = std::move(basis);
    return j;
}

// ---- chain presentations ----------------------------------------------------

inline Json presentation_to_json(const ChainPresentation& p) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : p.generators) {
        Json e;
        e["id"] = g.id;
        if (g.character) e["character"] = rational_vec_json(*g.character);
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto& r : p.relations) {
        Json e;
        switch (r.type) {
            case ChainRelation::Type::product:
                e["type"] = "product";
                e["args"] = Json::array({r.a, r.b, r.c});
                break;
            case ChainRelation::Type::unit:
                e["type"] = "unit";
                e["args"] = Json::array({r.a});
                break;
            case ChainRelation::Type::inverse:
                e["type"] = "inverse";
                e["args"] = Json::array({r.a, r.b});
                break;
        }
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    return j;
}

inline ChainPresentation presentation_from_json(const Json& j) {
    std::vector<ChainGenerator> gens;
    for (const auto& e : j.at("generators")) {
        ChainGenerator g;
        g.id = e.at("id").get<std::string>();
        if (e.contains("character")) g.character = parse_rational_vec(e.at("character"));
        gens.push_back(std::move(g));
    }
    std::vector<ChainRelation> rels;
    for (const auto& e : j.at("relations")) {
        std::string t = e.at("type").get<std::string>();
        const auto& args = e.at("args");
        ChainRelation r;
        if (t == "product") {
            r = {ChainRelation::Type::product, args.at(0), args.at(1), args.at(2)};
        } else if (t == "unit") {
            r = {ChainRelation::Type::unit, args.at(0), "", ""};
        } else if (t == "inverse") {
            r = {ChainRelation::Type::inverse, args.at(0), args.at(1), ""};
        } else {
            throw IoError("unknown relation type '" + t + "'");
        }
        rels.push_back(std::move(r));
    }
    return build(std::move(gens), std::move(rels));
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    Json j;
    in >> j;
    return j;
}

}  // namespace liecg
