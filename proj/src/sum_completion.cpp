#include "sumcat/sum_completion.hpp"

#include <algorithm>
#include <sstream>

#include "sumcat/errors.hpp"

namespace sumcat {

BaseLabel SumObject::label_of_ref(const std::vector<int64_t>& ref) const {
    if (domain.is_finite()) {
        if (ref.size() != 1) throw std::invalid_argument("finite target ref must be a single position");
        return label_of_pos(ref[0]);
    }
    return base->canonical(label_of_point(ref));
}

bool obj_eq(const SumObject& a, const SumObject& b) {
    bool same_base = (a.base == b.base) || (a.base && b.base && *a.base == *b.base);
    if (!same_base || !(a.domain == b.domain)) return false;
    if (a.domain.is_finite()) return a.labels == b.labels;
    return a.label_map == b.label_map;
}

SumObject mk_finite_object(BasePtr base, std::vector<BaseLabel> labels) {
    SumObject x;
    x.base = std::move(base);
    x.domain = IndexDomain::finite(static_cast<int64_t>(labels.size()));
    for (auto& l : labels) l = x.base->canonical(l);
    x.labels = std::move(labels);
    return x;
}

SumObject mk_lattice_object(BasePtr base, AffineMap label_map) {
    if (!base->group.cyclic.empty())
        throw Unsupported("lattice-indexed objects require a free grading group");
    if (label_map.out_dim() != base->group.dim())
        throw std::invalid_argument("label map must land in the grading group");
    SumObject x;
    x.base = std::move(base);
    x.domain = IndexDomain::lattice(label_map.in_dim());
    x.label_map = std::move(label_map);
    return x;
}

SumObject include_object(BasePtr base, const BaseLabel& label) {
    return mk_finite_object(std::move(base), {label});
}

SumObject unit_object(BasePtr base) {
    BaseLabel z(base->group.dim(), 0);
    return include_object(std::move(base), z);
}

namespace {

void check_ref(const SumObject& tgt, const std::vector<int64_t>& ref) {
    if (tgt.domain.is_finite()) {
        if (ref.size() != 1 || ref[0] < 0 || ref[0] >= tgt.domain.size)
            throw std::invalid_argument("target reference out of range");
    } else if (static_cast<int>(ref.size()) != tgt.domain.rank) {
        throw std::invalid_argument("target reference rank mismatch");
    }
}

}  // namespace

SumMorphism mk_zero(SumObject src, SumObject tgt) {
    return {std::move(src), std::move(tgt), ZeroBody{}};
}

SumMorphism mk_explicit(SumObject src, SumObject tgt, std::vector<std::vector<ExpComp>> rows) {
    if (!src.domain.is_finite()) throw Unsupported("explicit bodies require a finite source domain");
    if (static_cast<int64_t>(rows.size()) != src.domain.size)
        throw std::invalid_argument("one row per source index required");
    bool any = false;
    for (int64_t s = 0; s < src.domain.size; ++s) {
        auto& row = rows[static_cast<size_t>(s)];
        // merge duplicate targets, drop formal zeros
        std::map<std::vector<int64_t>, CycNum> acc;
        for (auto& c : row) {
            check_ref(tgt, c.ref);
            if (c.scalar.is_formally_zero()) continue;
            auto it = acc.find(c.ref);
            if (it == acc.end()) acc.emplace(std::move(c.ref), std::move(c.scalar));
            else it->second = it->second.add(c.scalar);
        }
        row.clear();
        for (auto& [ref, sc] : acc) {
            if (sc.is_formally_zero()) continue;
            if (src.label_of_pos(s) != tgt.label_of_ref(ref))
                throw LabelMismatch();
            row.push_back({ref, std::move(sc)});
            any = true;
        }
    }
    if (!any) return mk_zero(std::move(src), std::move(tgt));
    return {std::move(src), std::move(tgt), ExplicitBody{std::move(rows)}};
}

SumMorphism mk_affine(SumObject src, SumObject tgt, AffineMap tau, ExpPoly exp, QQ coef) {
    if (src.domain.is_finite() || tgt.domain.is_finite())
        throw Unsupported("affine bodies require lattice domains");
    if (tau.in_dim() != src.domain.rank || tau.out_dim() != tgt.domain.rank)
        throw std::invalid_argument("index map dimensions");
    if (exp.nvars() != src.domain.rank) throw std::invalid_argument("exponent variable count");
    if (coef == 0) throw ZeroScalar("affine bodies carry nonzero coefficients");
    // label compatibility as an identity of affine maps
    if (!(tgt.label_map.after(tau) == src.label_map)) throw LabelMismatch("affine label identity fails");
    if (coef < 0) {
        coef = -coef;
        exp = exp.add_const(QQ(1));
    }
    // canonical exponent: every coefficient reduced mod 2
    ExpPoly canon(exp.nvars());
    canon.mut_const() = q_mod2(exp.const_term());
    for (int i = 0; i < exp.nvars(); ++i) {
        canon.mut_lin(i) = q_mod2(exp.lin(i));
        for (int j = i; j < exp.nvars(); ++j) canon.mut_quad(i, j) = q_mod2(exp.quad(i, j));
    }
    return {std::move(src), std::move(tgt), AffineBody{std::move(tau), std::move(canon), std::move(coef)}};
}

SumMorphism normalize(const SumMorphism& m) {
    if (!m.is_explicit()) return m;
    auto rows = m.as_explicit().rows;
    bool any = false;
    for (auto& row : rows) {
        std::vector<ExpComp> kept;
        for (auto& c : row)
            if (!c.scalar.is_zero()) kept.push_back(std::move(c));
        row = std::move(kept);
        any = any || !row.empty();
    }
    if (!any) return mk_zero(m.source, m.target);
    return {m.source, m.target, ExplicitBody{std::move(rows)}};
}

SumMorphism compose(const SumMorphism& g, const SumMorphism& f) {
    if (!obj_eq(f.target, g.source)) throw DomainMismatch("compose: f.target != g.source");
    if (f.is_zero_body() || g.is_zero_body()) return mk_zero(f.source, g.target);

    if (f.is_explicit() && g.is_explicit()) {
        const auto& fr = f.as_explicit().rows;
        const auto& gr = g.as_explicit().rows;
        std::vector<std::vector<ExpComp>> rows(fr.size());
        for (size_t s = 0; s < fr.size(); ++s) {
            std::map<std::vector<int64_t>, CycNum> acc;
            for (const auto& [tref, fc] : fr[s]) {
                for (const auto& [rref, gc] : gr[static_cast<size_t>(tref[0])]) {
                    CycNum prod = gc.mul(fc);
                    auto it = acc.find(rref);
                    if (it == acc.end()) acc.emplace(rref, std::move(prod));
                    else it->second = it->second.add(prod);
                }
            }
            for (auto& [ref, sc] : acc) rows[s].push_back({ref, std::move(sc)});
        }
        return normalize(mk_explicit(f.source, g.target, std::move(rows)));
    }
    if (f.is_affine() && g.is_affine()) {
        const auto& fa = f.as_affine();
        const auto& ga = g.as_affine();
        return mk_affine(f.source, g.target, ga.tau.after(fa.tau),
                         fa.exp.add(ga.exp.substitute(fa.tau)), fa.coef * ga.coef);
    }
    if (f.is_explicit() && g.is_affine()) {
        const auto& ga = g.as_affine();
        std::vector<std::vector<ExpComp>> rows(f.as_explicit().rows.size());
        for (size_t s = 0; s < rows.size(); ++s)
            for (const auto& [tref, fc] : f.as_explicit().rows[s]) {
                CycNum sc = fc.mul(CycNum::monomial(ga.coef, Phase::of(ga.exp.eval(tref))));
                rows[s].push_back({ga.tau.apply(tref), std::move(sc)});
            }
        return normalize(mk_explicit(f.source, g.target, std::move(rows)));
    }
    throw MixedFormUnsupported("compose: affine followed by explicit");
}

SumMorphism scale(const SumMorphism& f, const CycNum& lambda) {
    if (f.is_zero_body() || lambda.is_formally_zero()) return mk_zero(f.source, f.target);
    if (f.is_explicit()) {
        auto rows = f.as_explicit().rows;
        for (auto& row : rows)
            for (auto& c : row) c.scalar = c.scalar.mul(lambda);
        return normalize(mk_explicit(f.source, f.target, std::move(rows)));
    }
    const auto& fa = f.as_affine();
    if (!lambda.is_monomial())
        throw AffineAdditionUnsupported("scaling an affine body needs a monomial scalar");
    auto [r, p] = lambda.as_monomial();
    return mk_affine(f.source, f.target, fa.tau, fa.exp.add_const(p.exponent()), fa.coef * r);
}

SumMorphism add_scale(const SumMorphism& f, const SumMorphism& g, const CycNum& lambda) {
    if (!obj_eq(f.source, g.source) || !obj_eq(f.target, g.target))
        throw DomainMismatch("add_scale: domains differ");
    SumMorphism gs = scale(g, lambda);
    if (gs.is_zero_body()) return normalize(f);
    if (f.is_zero_body()) return gs;
    if (f.is_explicit() && gs.is_explicit()) {
        std::vector<std::vector<ExpComp>> rows = f.as_explicit().rows;
        const auto& add_rows = gs.as_explicit().rows;
        for (size_t s = 0; s < rows.size(); ++s)
            for (const auto& c : add_rows[s]) rows[s].push_back(c);
        return normalize(mk_explicit(f.source, f.target, std::move(rows)));
    }
    if (f.is_affine() && gs.is_affine()) {
        const auto& fa = f.as_affine();
        const auto& ga = gs.as_affine();
        if (!(fa.tau == ga.tau))
            throw AffineAdditionUnsupported("affine addition needs identical index maps");
        auto diff = ga.exp.sub(fa.exp).constant_mod2();
        if (!diff) throw AffineAdditionUnsupported("affine addition needs matching exponents mod 2");
        QQ coef;
        if (*diff == 0) coef = fa.coef + ga.coef;
        else if (*diff == 1) coef = fa.coef - ga.coef;
        else throw AffineAdditionUnsupported("affine addition would leave the monomial class");
        if (coef == 0) return mk_zero(f.source, f.target);
        return mk_affine(f.source, f.target, fa.tau, fa.exp, coef);
    }
    throw MixedFormUnsupported("add_scale: mixed bodies");
}

SumMorphism identity_of(const SumObject& x) {
    if (x.domain.is_finite()) {
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(x.domain.size));
        for (int64_t s = 0; s < x.domain.size; ++s) rows[static_cast<size_t>(s)].push_back({{s}, CycNum::one()});
        return mk_explicit(x, x, std::move(rows));
    }
    return mk_affine(x, x, AffineMap::identity(x.domain.rank), ExpPoly(x.domain.rank));
}

namespace {

std::map<std::vector<int64_t>, CycNum> row_map(const std::vector<ExpComp>& row) {
    std::map<std::vector<int64_t>, CycNum> m;
    for (const auto& c : row) m.emplace(c.ref, c.scalar);
    return m;
}

}  // namespace

bool eq_morphism(const SumMorphism& f0, const SumMorphism& g0) {
    if (!obj_eq(f0.source, g0.source) || !obj_eq(f0.target, g0.target))
        throw DomainMismatch("eq_morphism: domains differ");
    SumMorphism f = normalize(f0), g = normalize(g0);
    if (f.is_zero_body() && g.is_zero_body()) return true;
    if (f.is_zero_body() || g.is_zero_body()) return false;
    if (f.is_explicit() && g.is_explicit()) {
        const auto& fr = f.as_explicit().rows;
        const auto& gr = g.as_explicit().rows;
        for (size_t s = 0; s < fr.size(); ++s) {
            auto fm = row_map(fr[s]), gm = row_map(gr[s]);
            if (fm.size() != gm.size()) return false;
            for (const auto& [ref, sc] : fm) {
                auto it = gm.find(ref);
                if (it == gm.end() || !sc.eq(it->second)) return false;
            }
        }
        return true;
    }
    if (f.is_affine() && g.is_affine()) {
        const auto& fa = f.as_affine();
        const auto& ga = g.as_affine();
        return fa.tau == ga.tau && fa.coef == ga.coef && fa.exp.sub(ga.exp).is_zero_mod2();
    }
    throw MixedFormUnsupported("eq_morphism: explicit vs affine");
}

SumMorphism invert(const SumMorphism& m) {
    if (m.is_zero_body()) throw NotInvertible("zero morphism");
    if (m.is_affine()) {
        const auto& a = m.as_affine();
        AffineMap inv = a.tau.inverse();
        return mk_affine(m.target, m.source, inv, a.exp.substitute(inv).neg(), QQ(1) / a.coef);
    }
    if (!m.target.domain.is_finite()) throw NotInvertible("explicit inverse needs a finite target");
    const auto& rows = m.as_explicit().rows;
    if (m.source.domain.size != m.target.domain.size) throw NotInvertible("index counts differ");
    std::vector<std::vector<ExpComp>> inv_rows(static_cast<size_t>(m.target.domain.size));
    std::vector<bool> hit(static_cast<size_t>(m.target.domain.size), false);
    for (size_t s = 0; s < rows.size(); ++s) {
        if (rows[s].size() != 1) throw NotInvertible("not a permutation-with-scalars morphism");
        const auto& c = rows[s][0];
        size_t t = static_cast<size_t>(c.ref[0]);
        if (hit[t]) throw NotInvertible("index map not injective");
        hit[t] = true;
        inv_rows[t].push_back({{static_cast<int64_t>(s)}, c.scalar.inv_monomial()});
    }
    for (bool h : hit)
        if (!h) throw NotInvertible("index map not surjective");
    return mk_explicit(m.target, m.source, std::move(inv_rows));
}

DirectSumPair direct_sum_pair(const SumObject& x, const SumObject& y) {
    if (!x.domain.is_finite() || !y.domain.is_finite())
        throw Unsupported("direct_sum_pair needs finite domains; lattice pairs go through coproduct");
    if (!(x.base == y.base || *x.base == *y.base)) throw DomainMismatch("direct_sum_pair: different bases");
    std::vector<BaseLabel> labels = x.labels;
    labels.insert(labels.end(), y.labels.begin(), y.labels.end());
    SumObject sum = mk_finite_object(x.base, std::move(labels));
    int64_t nx = x.domain.size, ny = y.domain.size;

    std::vector<std::vector<ExpComp>> px(static_cast<size_t>(nx + ny)), py(static_cast<size_t>(nx + ny)),
        ix(static_cast<size_t>(nx)), iy(static_cast<size_t>(ny));
    for (int64_t a = 0; a < nx; ++a) {
        px[static_cast<size_t>(a)].push_back({{a}, CycNum::one()});
        ix[static_cast<size_t>(a)].push_back({{a}, CycNum::one()});
    }
    for (int64_t a = 0; a < ny; ++a) {
        py[static_cast<size_t>(nx + a)].push_back({{a}, CycNum::one()});
        iy[static_cast<size_t>(a)].push_back({{nx + a}, CycNum::one()});
    }
    DirectSumPair r{sum,
                    mk_explicit(sum, x, std::move(px)),
                    mk_explicit(sum, y, std::move(py)),
                    mk_explicit(x, sum, std::move(ix)),
                    mk_explicit(y, sum, std::move(iy))};
    return r;
}

Coproduct coproduct(const std::vector<SumObject>& family) {
    if (family.empty()) throw std::invalid_argument("coproduct: empty family");
    if (family.size() == 1) {
        Coproduct cp{family[0], {identity_of(family[0])}, {0}};
        return cp;
    }
    for (const auto& x : family)
        if (!x.domain.is_finite())
            throw Unsupported("coproducts of several lattice-indexed objects are outside the calculus");
    std::vector<BaseLabel> labels;
    std::vector<int64_t> offsets;
    for (const auto& x : family) {
        offsets.push_back(static_cast<int64_t>(labels.size()));
        labels.insert(labels.end(), x.labels.begin(), x.labels.end());
    }
    SumObject sum = mk_finite_object(family[0].base, std::move(labels));
    Coproduct cp{sum, {}, offsets};
    for (size_t i = 0; i < family.size(); ++i) {
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(family[i].domain.size));
        for (int64_t s = 0; s < family[i].domain.size; ++s)
            rows[static_cast<size_t>(s)].push_back({{offsets[i] + s}, CycNum::one()});
        cp.injections.push_back(mk_explicit(family[i], sum, std::move(rows)));
    }
    return cp;
}

SumMorphism assemble_from_components(const Coproduct& cp, const std::vector<SumMorphism>& parts) {
    if (parts.size() != cp.injections.size())
        throw DomainMismatch("assemble: one morphism per summand required");
    if (parts.empty()) throw std::invalid_argument("assemble: empty family");
    const SumObject& z = parts[0].target;
    std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(cp.sum.domain.size));
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!obj_eq(parts[i].source, cp.injections[i].source))
            throw DomainMismatch("assemble: part source is not the summand");
        if (!obj_eq(parts[i].target, z)) throw DomainMismatch("assemble: parts share one target");
        if (parts[i].is_zero_body()) continue;
        if (!parts[i].is_explicit()) throw MixedFormUnsupported("assemble: explicit parts only");
        const auto& pr = parts[i].as_explicit().rows;
        for (size_t s = 0; s < pr.size(); ++s)
            rows[static_cast<size_t>(cp.offsets[i]) + s] = pr[s];
    }
    return normalize(mk_explicit(cp.sum, z, std::move(rows)));
}

SumMorphism include_scalar(BasePtr base, const BaseLabel& label, const CycNum& scalar) {
    SumObject x = include_object(std::move(base), label);
    return normalize(mk_explicit(x, x, {{{{0}, scalar}}}));
}

WindowBox WindowBox::cube(int rank, int64_t w) {
    WindowBox b;
    b.dims.assign(static_cast<size_t>(rank), {-w, w});
    return b;
}

int64_t WindowBox::volume() const {
    int64_t v = 1;
    for (const auto& [lo, hi] : dims) v *= (hi - lo + 1);
    return v;
}

bool WindowBox::contains(const std::vector<int64_t>& p) const {
    for (size_t i = 0; i < dims.size(); ++i)
        if (p[i] < dims[i].first || p[i] > dims[i].second) return false;
    return true;
}

int64_t WindowBox::pos_of(const std::vector<int64_t>& p) const {
    int64_t pos = 0;
    for (size_t i = 0; i < dims.size(); ++i) pos = pos * (dims[i].second - dims[i].first + 1) + (p[i] - dims[i].first);
    return pos;
}

std::vector<int64_t> WindowBox::point_of(int64_t pos) const {
    std::vector<int64_t> p(dims.size());
    for (size_t i = dims.size(); i-- > 0;) {
        int64_t w = dims[i].second - dims[i].first + 1;
        p[i] = dims[i].first + pos % w;
        pos /= w;
    }
    return p;
}

std::string WindowBox::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) os << "x";
        os << "[" << dims[i].first << "," << dims[i].second << "]";
    }
    os << "]";
    return os.str();
}

WindowedObject restrict_object(const SumObject& x, const WindowBox& box) {
    if (x.domain.is_finite()) throw std::invalid_argument("restrict_object: already finite");
    if (static_cast<int>(box.dims.size()) != x.domain.rank)
        throw std::invalid_argument("restrict_object: box rank");
    std::vector<BaseLabel> labels;
    labels.reserve(static_cast<size_t>(box.volume()));
    for (int64_t pos = 0; pos < box.volume(); ++pos)
        labels.push_back(x.label_of_point(box.point_of(pos)));
    return {mk_finite_object(x.base, std::move(labels)), box};
}

WindowBox image_box(const AffineMap& tau, const WindowBox& box) {
    WindowBox out;
    for (int i = 0; i < tau.out_dim(); ++i) {
        int64_t lo = tau.off[i], hi = tau.off[i];
        for (int j = 0; j < tau.in_dim(); ++j) {
            int64_t c = tau.mat[i][j];
            if (c >= 0) {
                lo += c * box.dims[j].first;
                hi += c * box.dims[j].second;
            } else {
                lo += c * box.dims[j].second;
                hi += c * box.dims[j].first;
            }
        }
        out.dims.push_back({lo, hi});
    }
    return out;
}

WindowedMorphism restrict_to_window(const SumMorphism& m, const WindowBox& src_box, const WindowBox& tgt_box) {
    SumObject src = m.source.domain.is_finite() ? m.source : restrict_object(m.source, src_box).obj;
    SumObject tgt = m.target.domain.is_finite() ? m.target : restrict_object(m.target, tgt_box).obj;
    int64_t truncated = 0;
    std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(src.domain.size));

    if (m.is_zero_body()) {
        return {mk_zero(std::move(src), std::move(tgt)), 0, src_box, tgt_box};
    }
    if (m.is_affine()) {
        const auto& a = m.as_affine();
        for (int64_t pos = 0; pos < src_box.volume(); ++pos) {
            auto p = src_box.point_of(pos);
            auto t = a.tau.apply(p);
            if (!tgt_box.contains(t)) {
                ++truncated;
                continue;
            }
            rows[static_cast<size_t>(pos)].push_back(
                {{tgt_box.pos_of(t)}, CycNum::monomial(a.coef, Phase::of(a.exp.eval(p)))});
        }
        return {normalize(mk_explicit(std::move(src), std::move(tgt), std::move(rows))), truncated, src_box,
                tgt_box};
    }
    // explicit body: finite source, possibly lattice target
    const auto& er = m.as_explicit().rows;
    for (size_t s = 0; s < er.size(); ++s)
        for (const auto& c : er[s]) {
            if (m.target.domain.is_finite()) {
                rows[s].push_back(c);
            } else if (tgt_box.contains(c.ref)) {
                rows[s].push_back({{tgt_box.pos_of(c.ref)}, c.scalar});
            } else {
                ++truncated;
            }
        }
    return {normalize(mk_explicit(std::move(src), std::move(tgt), std::move(rows))), truncated, src_box,
            tgt_box};
}

WindowedMorphism restrict_to_window(const SumMorphism& m, const WindowBox& src_box) {
    if (m.is_affine()) return restrict_to_window(m, src_box, image_box(m.as_affine().tau, src_box));
    if (m.is_explicit() && !m.target.domain.is_finite()) {
        // fit the box around the explicit target references
        WindowBox tgt;
        tgt.dims.assign(static_cast<size_t>(m.target.domain.rank), {0, 0});
        bool first = true;
        for (const auto& row : m.as_explicit().rows)
            for (const auto& c : row) {
                for (size_t i = 0; i < tgt.dims.size(); ++i) {
                    if (first) tgt.dims[i] = {c.ref[i], c.ref[i]};
                    else {
                        tgt.dims[i].first = std::min(tgt.dims[i].first, c.ref[i]);
                        tgt.dims[i].second = std::max(tgt.dims[i].second, c.ref[i]);
                    }
                }
                first = false;
            }
        return restrict_to_window(m, src_box, tgt);
    }
    return restrict_to_window(m, src_box, src_box);
}

}  // namespace sumcat
