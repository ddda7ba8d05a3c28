#include "sumcat/pointed_base.hpp"

#include <sstream>

#include "sumcat/errors.hpp"

namespace sumcat {

namespace {

int64_t mod_pos(int64_t v, int64_t n) {
    int64_t r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

BaseLabel PointedData::canonical(const BaseLabel& l) const {
    if (static_cast<int>(l.size()) != group.dim()) throw ArityMismatch("label dimension");
    BaseLabel r = l;
    for (size_t i = 0; i < group.cyclic.size(); ++i) {
        auto& v = r[group.free_rank + i];
        v = mod_pos(v, group.cyclic[i]);
    }
    return r;
}

BaseLabel PointedData::add(const BaseLabel& a, const BaseLabel& b) const {
    BaseLabel r(group.dim());
    for (int i = 0; i < group.dim(); ++i) r[i] = a[i] + b[i];
    return canonical(r);
}

BaseLabel PointedData::neg(const BaseLabel& a) const {
    BaseLabel r(group.dim());
    for (int i = 0; i < group.dim(); ++i) r[i] = -a[i];
    return canonical(r);
}

QQ PointedData::eval_exponent(const Cochain& c, const std::vector<BaseLabel>& labels) const {
    if (static_cast<int>(labels.size()) != c.arity) throw ArityMismatch("cochain arity");
    std::vector<int64_t> flat;
    flat.reserve(static_cast<size_t>(c.arity) * group.dim());
    for (const auto& l : labels) {
        BaseLabel cl = canonical(l);
        flat.insert(flat.end(), cl.begin(), cl.end());
    }
    if (c.kind == Cochain::Kind::Poly) return c.poly.eval(flat);
    // table: mixed radix over canonical coordinates (finite groups only)
    size_t idx = 0;
    int dim = group.dim();
    for (int a = 0; a < c.arity; ++a)
        for (int i = 0; i < dim; ++i) idx = idx * group.cyclic[i] + flat[a * dim + i];
    return c.table[idx];
}

BasePtr heisenberg_data(int64_t N, int64_t d) {
    if (N < 1 || d < 1) throw std::invalid_argument("heisenberg_data: N, d >= 1");
    auto p = std::make_shared<PointedData>();
    p->name = "heisenberg";
    p->group.free_rank = 1;
    p->N = N;
    p->d = d;
    QQ grain = q_make(1, 2 * N * d * d);

    p->assoc = {Cochain::Kind::Poly, 3, ExpPoly(3), {}};
    Cochain braid{Cochain::Kind::Poly, 2, ExpPoly(2), {}};
    braid.poly.mut_quad(0, 1) = grain;
    p->braid = braid;
    Cochain twist{Cochain::Kind::Poly, 1, ExpPoly(1), {}};
    twist.poly.mut_quad(0, 0) = grain;
    p->twist = twist;
    return p;
}

BasePtr cyclic_data(int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclic_data: n >= 1");
    auto p = std::make_shared<PointedData>();
    p->name = "cyclic";
    p->group.cyclic = {n};
    p->N = n;

    p->assoc = {Cochain::Kind::Poly, 3, ExpPoly(3), {}};
    Cochain braid{Cochain::Kind::Poly, 2, ExpPoly(2), {}};
    braid.poly.mut_quad(0, 1) = q_make(2, n);
    p->braid = braid;
    Cochain twist{Cochain::Kind::Poly, 1, ExpPoly(1), {}};
    twist.poly.mut_quad(0, 0) = q_make(2, n);
    p->twist = twist;
    return p;
}

int64_t cocycle_k(int64_t N, int64_t a, int64_t b, int64_t d) {
    if (a < 0 || a >= 2 * N || b < 0 || b >= 2 * N) throw std::invalid_argument("cocycle_k: 0 <= a,b < 2N");
    return (a + b >= 2 * N) ? 2 * N * d : 0;
}

BasePtr lattice_reference_data(int64_t N) {
    if (N < 1) throw std::invalid_argument("lattice_reference_data: N >= 1");
    auto p = std::make_shared<PointedData>();
    p->name = "lattice_reference";
    p->group.cyclic = {2 * N};
    p->N = N;

    // Associator exponent x·k(y,z) = a·k_int(b,c)/(2N) with k_int ∈ {0, 2N}:
    // the overflow indicator is not polynomial in canonical representatives,
    // so this one cochain is tabulated.
    int64_t n = 2 * N;
    Cochain assoc{Cochain::Kind::Table, 3, ExpPoly(0), {}};
    assoc.table.resize(static_cast<size_t>(n) * n * n);
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b)
            for (int64_t c = 0; c < n; ++c)
                assoc.table[static_cast<size_t>((a * n + b) * n + c)] =
                    q_make(a * cocycle_k(N, b, c), 2 * N);
    p->assoc = assoc;

    Cochain braid{Cochain::Kind::Poly, 2, ExpPoly(2), {}};
    braid.poly.mut_quad(0, 1) = q_make(1, 2 * N);
    p->braid = braid;

    Cochain twist{Cochain::Kind::Poly, 1, ExpPoly(1), {}};  // e^{iπx²}
    twist.poly.mut_quad(0, 0) = q_make(1, 2 * N);
    p->twist = twist;

    Cochain twist41{Cochain::Kind::Poly, 1, ExpPoly(1), {}};  // e^{2πix²}
    twist41.poly.mut_quad(0, 0) = q_make(2, 2 * N);
    p->twist_alt = twist41;
    return p;
}

Phase cochain_scalar(const PointedData& data, CochainKind kind, const std::vector<BaseLabel>& labels) {
    const Cochain* c = nullptr;
    switch (kind) {
        case CochainKind::Assoc: c = &data.assoc; break;
        case CochainKind::Braid: c = &data.braid; break;
        case CochainKind::Twist: c = &data.twist; break;
        case CochainKind::TwistAlt:
            if (!data.twist_alt) throw ModeUnsupported("no alternate twist on this base");
            c = &*data.twist_alt;
            break;
    }
    return Phase::of(data.eval_exponent(*c, labels));
}

std::string Scope::str() const {
    if (full) return "full";
    std::ostringstream os;
    os << "window[-" << window << "," << window << "]";
    return os.str();
}

std::string axiom_name(BaseAxiom a) {
    switch (a) {
        case BaseAxiom::Pentagon: return "pentagon";
        case BaseAxiom::Hexagon: return "hexagon";
        case BaseAxiom::Balancing: return "balancing";
        case BaseAxiom::Triangle: return "triangle";
    }
    return "?";
}

namespace {

// Enumerate labels in scope: full group, or box [-w,w] per free coordinate
// (cyclic coordinates always run over the whole component).
std::vector<BaseLabel> scope_labels(const PointedData& data, const Scope& sc) {
    if (sc.full && !data.group.finite()) throw InfiniteScope();
    std::vector<BaseLabel> out;
    BaseLabel cur(data.group.dim(), 0);
    std::vector<int64_t> lo(data.group.dim()), hi(data.group.dim());
    for (int i = 0; i < data.group.free_rank; ++i) {
        lo[i] = -sc.window;
        hi[i] = sc.window;
    }
    for (size_t i = 0; i < data.group.cyclic.size(); ++i) {
        lo[data.group.free_rank + i] = 0;
        hi[data.group.free_rank + i] = data.group.cyclic[i] - 1;
    }
    cur = lo;
    while (true) {
        out.push_back(cur);
        int k = 0;
        for (; k < data.group.dim(); ++k) {
            if (++cur[k] <= hi[k]) break;
            cur[k] = lo[k];
        }
        if (k == data.group.dim()) break;
    }
    return out;
}

nlohmann::json label_json(const BaseLabel& l) { return nlohmann::json(l); }

}  // namespace

CheckReport check_base_coherence(const PointedData& data, BaseAxiom axiom, const Scope& scope) {
    CheckReport rep;
    rep.check = axiom_name(axiom);
    rep.mode = scope.str() + " on " + data.name;

    auto labels = scope_labels(data, scope);
    auto w = [&](const BaseLabel& g, const BaseLabel& h) { return data.add(g, h); };
    auto omega = [&](const BaseLabel& a, const BaseLabel& b, const BaseLabel& c) {
        return data.eval_exponent(data.assoc, {a, b, c});
    };
    auto sigma = [&](const BaseLabel& a, const BaseLabel& b) {
        return data.eval_exponent(data.braid, {a, b});
    };
    auto record = [&](std::initializer_list<BaseLabel> tup, const QQ& residue, const char* which) {
        nlohmann::json j;
        j["identity"] = which;
        j["labels"] = nlohmann::json::array();
        for (const auto& l : tup) j["labels"].push_back(label_json(l));
        j["residue_mod2"] = q_str(q_mod2(residue));
        rep.fail(std::move(j));
    };

    switch (axiom) {
        case BaseAxiom::Pentagon: {
            for (const auto& a : labels)
                for (const auto& b : labels)
                    for (const auto& c : labels)
                        for (const auto& e : labels) {
                            ++rep.tuples_checked;
                            QQ r = omega(b, c, e) - omega(w(a, b), c, e) + omega(a, w(b, c), e) -
                                   omega(a, b, w(c, e)) + omega(a, b, c);
                            if (q_mod2(r) != 0) record({a, b, c, e}, r, "3-cocycle");
                        }
            break;
        }
        case BaseAxiom::Hexagon: {
            for (const auto& g : labels)
                for (const auto& h : labels)
                    for (const auto& k : labels) {
                        ++rep.tuples_checked;
                        QQ h1 = omega(g, h, k) + sigma(g, w(h, k)) + omega(h, k, g) - sigma(g, h) -
                                omega(h, g, k) - sigma(g, k);
                        if (q_mod2(h1) != 0) record({g, h, k}, h1, "hexagon-1");
                        QQ h2 = -omega(g, h, k) + sigma(w(g, h), k) - omega(k, g, h) + omega(g, k, h) -
                                sigma(h, k) - sigma(g, k);
                        if (q_mod2(h2) != 0) record({g, h, k}, h2, "hexagon-2");
                    }
            break;
        }
        case BaseAxiom::Balancing: {
            auto run = [&](const Cochain& tw, const char* which, bool fatal) {
                uint64_t bad = 0;
                for (const auto& g : labels)
                    for (const auto& h : labels) {
                        if (fatal) ++rep.tuples_checked;
                        QQ r = data.eval_exponent(tw, {w(g, h)}) - data.eval_exponent(tw, {g}) -
                               data.eval_exponent(tw, {h}) - 2 * sigma(g, h);
                        if (q_mod2(r) != 0) {
                            ++bad;
                            if (fatal) record({g, h}, r, which);
                        }
                    }
                return bad;
            };
            run(data.twist, "balancing", true);
            if (data.twist_alt) {
                uint64_t bad = run(*data.twist_alt, "balancing-alt", false);
                std::ostringstream os;
                os << "alternate twist variant: " << bad << " of " << labels.size() * labels.size()
                   << " pairs violate balancing (informational)";
                rep.notes.push_back(os.str());
            }
            break;
        }
        case BaseAxiom::Triangle: {
            BaseLabel zero = data.zero_label();
            for (const auto& g : labels)
                for (const auto& h : labels) {
                    ++rep.tuples_checked;
                    for (const QQ& r : {omega(g, zero, h), omega(zero, g, h), omega(g, h, zero)})
                        if (q_mod2(r) != 0) record({g, h}, r, "unit-associator");
                    for (const QQ& r : {sigma(g, zero), sigma(zero, g)})
                        if (q_mod2(r) != 0) record({g, h}, r, "unit-braiding");
                }
            if (q_mod2(data.eval_exponent(data.twist, {zero})) != 0)
                record({zero}, data.eval_exponent(data.twist, {zero}), "unit-twist");
            break;
        }
    }
    return rep;
}

}  // namespace sumcat
