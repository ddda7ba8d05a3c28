#include "sumcat/json_io.hpp"

namespace sumcat {

using nlohmann::json;

json to_json(const Phase& p) { return p.str(); }

json to_json(const CycNum& c) {
    json terms = json::array();
    for (const auto& [e, coef] : c.terms())
        terms.push_back({{"coef", q_str(coef)}, {"exp", q_str(e)}});
    return terms;
}

json to_json(const ExpPoly& p) {
    // coefficient map keyed by monomial exponent vectors
    json coeffs = json::object();
    auto key = [&](std::vector<int> exps) {
        std::string k;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (i) k += ",";
            k += std::to_string(exps[i]);
        }
        return k;
    };
    std::vector<int> zero(static_cast<size_t>(p.nvars()), 0);
    if (p.const_term() != 0) coeffs[key(zero)] = q_str(p.const_term());
    for (int i = 0; i < p.nvars(); ++i) {
        if (p.lin(i) != 0) {
            auto e = zero;
            e[static_cast<size_t>(i)] = 1;
            coeffs[key(e)] = q_str(p.lin(i));
        }
        for (int j = i; j < p.nvars(); ++j) {
            if (p.quad(i, j) != 0) {
                auto e = zero;
                e[static_cast<size_t>(i)] += 1;
                e[static_cast<size_t>(j)] += 1;
                coeffs[key(e)] = q_str(p.quad(i, j));
            }
        }
    }
    return {{"nvars", p.nvars()}, {"coeffs", coeffs}};
}

json to_json(const AffineMap& m) { return {{"mat", m.mat}, {"off", m.off}}; }

json to_json(const GroupSpec& g) { return {{"free_rank", g.free_rank}, {"cyclic", g.cyclic}}; }

json to_json(const Cochain& c) {
    if (c.kind == Cochain::Kind::Poly) return {{"kind", "poly"}, {"arity", c.arity}, {"poly", to_json(c.poly)}};
    json vals = json::array();
    for (const auto& v : c.table) vals.push_back(q_str(v));
    return {{"kind", "table"}, {"arity", c.arity}, {"values", vals}};
}

json to_json(const PointedData& d) {
    json j{{"name", d.name},      {"group", to_json(d.group)}, {"assoc", to_json(d.assoc)},
           {"braid", to_json(d.braid)}, {"twist", to_json(d.twist)}, {"N", d.N},
           {"d", d.d}};
    if (d.twist_alt) j["twist_alt"] = to_json(*d.twist_alt);
    return j;
}

json to_json(const SumObject& x) {
    json j{{"base", x.base ? x.base->name : "?"}};
    if (x.domain.is_finite()) {
        j["domain"] = {{"kind", "finite"}, {"size", x.domain.size}};
        j["labels"] = x.labels;
    } else {
        j["domain"] = {{"kind", "lattice"}, {"rank", x.domain.rank}};
        j["label_map"] = to_json(x.label_map);
    }
    return j;
}

json to_json(const SumMorphism& m) {
    json j{{"source", to_json(m.source)}, {"target", to_json(m.target)}};
    if (m.is_zero_body()) {
        j["body"] = {{"kind", "zero"}};
    } else if (m.is_explicit()) {
        json rows = json::array();
        for (const auto& row : m.as_explicit().rows) {
            json r = json::array();
            for (const auto& c : row) r.push_back({{"target", c.ref}, {"scalar", to_json(c.scalar)}});
            rows.push_back(std::move(r));
        }
        j["body"] = {{"kind", "explicit"}, {"rows", rows}};
    } else {
        const auto& a = m.as_affine();
        j["body"] = {{"kind", "affine"},
                     {"index_map", to_json(a.tau)},
                     {"exponent", to_json(a.exp)},
                     {"coef", q_str(a.coef)}};
    }
    return j;
}

}  // namespace sumcat
