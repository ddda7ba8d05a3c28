#include "sumcat/monoidal.hpp"

#include <random>

#include "sumcat/errors.hpp"
#include "sumcat/json_io.hpp"

namespace sumcat {

namespace {

bool is_singleton(const SumObject& x) { return x.domain.is_finite() && x.domain.size == 1; }

void check_same_base(const SumObject& x, const SumObject& y) {
    if (!(x.base == y.base || *x.base == *y.base)) throw DomainMismatch("tensor: different bases");
}

// Affine map from the concatenated lattice coordinates of `factors` to the
// stacked label values (singleton factors contribute constants).
AffineMap stacked_labels(const std::vector<const SumObject*>& factors) {
    int in = 0;
    for (const auto* f : factors)
        if (!f->domain.is_finite()) in += f->domain.rank;
    AffineMap st;
    st.in = in;
    int col = 0;
    for (const auto* f : factors) {
        int dim = f->base->group.dim();
        if (f->domain.is_finite()) {
            const BaseLabel& l = f->label_of_pos(0);
            for (int i = 0; i < dim; ++i) {
                st.mat.emplace_back(in, 0);
                st.off.push_back(l[i]);
            }
        } else {
            for (int i = 0; i < dim; ++i) {
                std::vector<int64_t> row(in, 0);
                for (int j = 0; j < f->domain.rank; ++j) row[col + j] = f->label_map.mat[i][j];
                st.mat.push_back(std::move(row));
                st.off.push_back(f->label_map.off[i]);
            }
            col += f->domain.rank;
        }
    }
    return st;
}

// Tensor factors must be all-finite, or lattice with singleton finite
// factors absorbed.
bool all_finite(const std::vector<const SumObject*>& factors) {
    for (const auto* f : factors)
        if (!f->domain.is_finite()) return false;
    return true;
}

void check_tensorable(const std::vector<const SumObject*>& factors) {
    if (all_finite(factors)) return;
    for (const auto* f : factors)
        if (f->domain.is_finite() && f->domain.size != 1)
            throw Unsupported("tensor of a non-singleton finite domain with a lattice domain");
}

ExpPoly substituted_cochain(const Cochain& c,
                            const std::vector<const SumObject*>& factors) {
    if (c.kind != Cochain::Kind::Poly)
        throw Unsupported("symbolic structure morphisms need polynomial cochains");
    return c.poly.substitute(stacked_labels(factors));
}

}  // namespace

SumObject tensor_objects(const SumObject& x, const SumObject& y) {
    check_same_base(x, y);
    if (x.domain.is_finite() && y.domain.is_finite()) {
        std::vector<BaseLabel> labels;
        labels.reserve(static_cast<size_t>(x.domain.size * y.domain.size));
        for (int64_t i = 0; i < x.domain.size; ++i)
            for (int64_t j = 0; j < y.domain.size; ++j)
                labels.push_back(x.base->add(x.label_of_pos(i), y.label_of_pos(j)));
        return mk_finite_object(x.base, std::move(labels));
    }
    check_tensorable({&x, &y});
    if (!x.domain.is_finite() && !y.domain.is_finite()) {
        AffineMap lm = x.label_map;  // labels add: [mat_x | mat_y], off sums
        lm.in = x.domain.rank + y.domain.rank;
        for (int i = 0; i < lm.out_dim(); ++i) {
            lm.mat[i].resize(static_cast<size_t>(lm.in), 0);
            for (int j = 0; j < y.domain.rank; ++j) lm.mat[i][x.domain.rank + j] = y.label_map.mat[i][j];
            lm.off[i] += y.label_map.off[i];
        }
        return mk_lattice_object(x.base, std::move(lm));
    }
    // singleton absorption
    const SumObject& lat = x.domain.is_finite() ? y : x;
    const SumObject& sing = x.domain.is_finite() ? x : y;
    AffineMap lm = lat.label_map;
    const BaseLabel& l = sing.label_of_pos(0);
    for (int i = 0; i < lm.out_dim(); ++i) lm.off[i] += l[i];
    return mk_lattice_object(x.base, std::move(lm));
}

namespace {

std::vector<int64_t> combine_ref(const SumObject& ft, const SumObject& gt, const std::vector<int64_t>& t1,
                                 const std::vector<int64_t>& t2) {
    if (ft.domain.is_finite() && gt.domain.is_finite()) return {t1[0] * gt.domain.size + t2[0]};
    if (ft.domain.is_finite()) return t2;  // singleton absorbed
    if (gt.domain.is_finite()) return t1;
    std::vector<int64_t> r = t1;
    r.insert(r.end(), t2.begin(), t2.end());
    return r;
}

// Singleton-source explicit morphism with one monomial component, tensored
// against an affine morphism (either order). Covers ι ⊗ Id and Id ⊗ ι.
SumMorphism tensor_singleton_affine(const SumMorphism& e, const SumMorphism& a, bool e_left,
                                    const SumObject& src, const SumObject& tgt) {
    const auto& row = e.as_explicit().rows[0];
    if (e.as_explicit().rows.size() != 1 || row.size() != 1)
        throw MixedFormUnsupported("tensor: explicit factor must be a singleton monomial");
    const auto& comp = row[0];
    auto [r, ph] = comp.scalar.as_monomial();
    const auto& ab = a.as_affine();

    AffineMap tau;
    tau.in = ab.tau.in_dim();
    auto push_const = [&](const std::vector<int64_t>& ref, const SumObject& et) {
        if (et.domain.is_finite()) return;  // singleton target contributes no coordinates
        for (int64_t v : ref) {
            tau.mat.emplace_back(tau.in, 0);
            tau.off.push_back(v);
        }
    };
    if (e_left) {
        push_const(comp.ref, e.target);
        for (int i = 0; i < ab.tau.out_dim(); ++i) {
            tau.mat.push_back(ab.tau.mat[i]);
            tau.off.push_back(ab.tau.off[i]);
        }
    } else {
        for (int i = 0; i < ab.tau.out_dim(); ++i) {
            tau.mat.push_back(ab.tau.mat[i]);
            tau.off.push_back(ab.tau.off[i]);
        }
        push_const(comp.ref, e.target);
    }
    return mk_affine(src, tgt, std::move(tau), ab.exp.add_const(ph.exponent()), ab.coef * r);
}

}  // namespace

SumMorphism tensor_morphisms(const SumMorphism& f, const SumMorphism& g) {
    SumObject src = tensor_objects(f.source, g.source);
    SumObject tgt = tensor_objects(f.target, g.target);
    if (f.is_zero_body() || g.is_zero_body()) return mk_zero(std::move(src), std::move(tgt));

    if (f.is_explicit() && g.is_explicit()) {
        const auto& fr = f.as_explicit().rows;
        const auto& gr = g.as_explicit().rows;
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(src.domain.size));
        for (size_t s1 = 0; s1 < fr.size(); ++s1)
            for (size_t s2 = 0; s2 < gr.size(); ++s2) {
                auto& row = rows[s1 * gr.size() + s2];
                for (const auto& c1 : fr[s1])
                    for (const auto& c2 : gr[s2])
                        row.push_back({combine_ref(f.target, g.target, c1.ref, c2.ref),
                                       c1.scalar.mul(c2.scalar)});
            }
        return normalize(mk_explicit(std::move(src), std::move(tgt), std::move(rows)));
    }
    if (f.is_affine() && g.is_affine()) {
        const auto& fa = f.as_affine();
        const auto& ga = g.as_affine();
        int rf = fa.tau.in_dim(), rg = ga.tau.in_dim();
        AffineMap proj1, proj2;
        proj1.in = proj2.in = rf + rg;
        for (int i = 0; i < rf; ++i) {
            std::vector<int64_t> row(static_cast<size_t>(rf + rg), 0);
            row[static_cast<size_t>(i)] = 1;
            proj1.mat.push_back(std::move(row));
            proj1.off.push_back(0);
        }
        for (int i = 0; i < rg; ++i) {
            std::vector<int64_t> row(static_cast<size_t>(rf + rg), 0);
            row[static_cast<size_t>(rf + i)] = 1;
            proj2.mat.push_back(std::move(row));
            proj2.off.push_back(0);
        }
        return mk_affine(std::move(src), std::move(tgt), AffineMap::block(fa.tau, ga.tau),
                         fa.exp.substitute(proj1).add(ga.exp.substitute(proj2)), fa.coef * ga.coef);
    }
    if (f.is_explicit() && g.is_affine() && is_singleton(f.source))
        return tensor_singleton_affine(f, g, true, src, tgt);
    if (g.is_explicit() && f.is_affine() && is_singleton(g.source))
        return tensor_singleton_affine(g, f, false, src, tgt);
    throw MixedFormUnsupported("tensor_morphisms: bridge mixed forms through windows");
}

SumMorphism associator(const SumObject& x, const SumObject& y, const SumObject& z) {
    SumObject lhs = tensor_objects(tensor_objects(x, y), z);
    SumObject rhs = tensor_objects(x, tensor_objects(y, z));
    std::vector<const SumObject*> factors{&x, &y, &z};
    if (all_finite(factors)) {
        // re-bracketing is the positional identity: (i·ny+j)·nz+k = i·ny·nz+(j·nz+k)
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(lhs.domain.size));
        int64_t pos = 0;
        for (int64_t i = 0; i < x.domain.size; ++i)
            for (int64_t j = 0; j < y.domain.size; ++j)
                for (int64_t k = 0; k < z.domain.size; ++k, ++pos) {
                    Phase w = cochain_scalar(
                        *x.base, CochainKind::Assoc,
                        {x.label_of_pos(i), y.label_of_pos(j), z.label_of_pos(k)});
                    rows[static_cast<size_t>(pos)].push_back({{pos}, CycNum::from_phase(w)});
                }
        return mk_explicit(std::move(lhs), std::move(rhs), std::move(rows));
    }
    check_tensorable(factors);
    ExpPoly exp = substituted_cochain(x.base->assoc, factors);
    return mk_affine(std::move(lhs), std::move(rhs), AffineMap::identity(lhs.domain.rank), std::move(exp));
}

std::pair<SumMorphism, SumMorphism> unit_constraints(const SumObject& x) {
    SumObject u = unit_object(x.base);
    if (!obj_eq(tensor_objects(u, x), x) || !obj_eq(tensor_objects(x, u), x))
        throw std::logic_error("unit_constraints: strict unit violated");
    return {identity_of(x), identity_of(x)};
}

SumMorphism braiding(const SumObject& x, const SumObject& y) {
    SumObject src = tensor_objects(x, y);
    SumObject tgt = tensor_objects(y, x);
    if (x.domain.is_finite() && y.domain.is_finite()) {
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(src.domain.size));
        for (int64_t i = 0; i < x.domain.size; ++i)
            for (int64_t j = 0; j < y.domain.size; ++j) {
                Phase c = cochain_scalar(*x.base, CochainKind::Braid,
                                         {x.label_of_pos(i), y.label_of_pos(j)});
                rows[static_cast<size_t>(i * y.domain.size + j)].push_back(
                    {{j * x.domain.size + i}, CycNum::from_phase(c)});
            }
        return mk_explicit(std::move(src), std::move(tgt), std::move(rows));
    }
    check_tensorable({&x, &y});
    ExpPoly exp = substituted_cochain(x.base->braid, {&x, &y});
    int rx = x.domain.is_finite() ? 0 : x.domain.rank;
    int ry = y.domain.is_finite() ? 0 : y.domain.rank;
    return mk_affine(std::move(src), std::move(tgt), AffineMap::swap_blocks(rx, ry), std::move(exp));
}

SumMorphism twist_morphism(const SumObject& x) {
    if (x.domain.is_finite()) {
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(x.domain.size));
        for (int64_t i = 0; i < x.domain.size; ++i) {
            Phase t = cochain_scalar(*x.base, CochainKind::Twist, {x.label_of_pos(i)});
            rows[static_cast<size_t>(i)].push_back({{i}, CycNum::from_phase(t)});
        }
        return mk_explicit(x, x, std::move(rows));
    }
    ExpPoly exp = substituted_cochain(x.base->twist, {&x});
    return mk_affine(x, x, AffineMap::identity(x.domain.rank), std::move(exp));
}

std::string law_name(CompletionLaw law) {
    switch (law) {
        case CompletionLaw::CategoryLaws: return "category-laws";
        case CompletionLaw::Bilinearity: return "bilinearity";
        case CompletionLaw::VectorSpace: return "hom-vector-space";
        case CompletionLaw::DirectSum: return "direct-sum";
        case CompletionLaw::Coproduct: return "coproduct";
        case CompletionLaw::Include: return "include-functor";
        case CompletionLaw::Bifunctoriality: return "bifunctoriality";
        case CompletionLaw::Pentagon: return "pentagon";
        case CompletionLaw::Triangle: return "triangle";
        case CompletionLaw::Hexagon: return "hexagon";
        case CompletionLaw::Balancing: return "balancing";
        case CompletionLaw::BraidNaturality: return "braiding-naturality";
        case CompletionLaw::TwistNaturality: return "twist-naturality";
    }
    return "?";
}

std::vector<CompletionLaw> all_completion_laws() {
    return {CompletionLaw::CategoryLaws,    CompletionLaw::Bilinearity,
            CompletionLaw::VectorSpace,     CompletionLaw::DirectSum,
            CompletionLaw::Coproduct,       CompletionLaw::Include,
            CompletionLaw::Bifunctoriality, CompletionLaw::Pentagon,
            CompletionLaw::Triangle,        CompletionLaw::Hexagon,
            CompletionLaw::Balancing,       CompletionLaw::BraidNaturality,
            CompletionLaw::TwistNaturality};
}

namespace {

struct Gen {
    std::mt19937_64 rng;
    BasePtr base;
    int max_size;

    int64_t rnd(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
    }

    BaseLabel rnd_label() {
        BaseLabel l;
        for (int i = 0; i < base->group.free_rank; ++i) l.push_back(rnd(-6, 6));
        for (int64_t n : base->group.cyclic) l.push_back(rnd(0, n - 1));
        return l;
    }

    CycNum rnd_scalar() {
        static const long dens[] = {1, 2, 3, 4, 6, 8, 12, 24};
        CycNum v;
        int terms = static_cast<int>(rnd(1, 2));
        for (int i = 0; i < terms; ++i) {
            long den = dens[rnd(0, 7)];
            long num = 0;
            while (num == 0) num = static_cast<long>(rnd(-3, 3));
            v = v + CycNum::monomial(q_make(num, dens[rnd(0, 2)]), Phase::of(rnd(0, 2 * den - 1), den));
        }
        return v;
    }

    SumObject rnd_object(int cap = 0) {
        int64_t n = rnd(1, cap > 0 ? cap : max_size);
        std::vector<BaseLabel> labels;
        for (int64_t i = 0; i < n; ++i) labels.push_back(rnd_label());
        return mk_finite_object(base, std::move(labels));
    }

    SumMorphism rnd_morphism(const SumObject& x, const SumObject& y) {
        std::vector<std::vector<ExpComp>> rows(static_cast<size_t>(x.domain.size));
        for (int64_t s = 0; s < x.domain.size; ++s)
            for (int64_t t = 0; t < y.domain.size; ++t) {
                if (x.label_of_pos(s) != y.label_of_pos(t)) continue;
                if (rnd(0, 2) == 0) continue;
                rows[static_cast<size_t>(s)].push_back({{t}, rnd_scalar()});
            }
        return normalize(mk_explicit(x, y, std::move(rows)));
    }
};

nlohmann::json dump_inputs(std::initializer_list<const SumMorphism*> ms) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto* m : ms) j.push_back(to_json(*m));
    return j;
}

}  // namespace

CheckReport check_completion_coherence(CompletionLaw law, const BasePtr& base, int trials, int max_size,
                                       uint64_t seed) {
    CheckReport rep;
    rep.check = law_name(law);
    {
        std::ostringstream os;
        os << "randomized base=" << base->name << " N=" << base->N << " trials=" << trials
           << " max_size=" << max_size << " seed=" << seed;
        rep.mode = os.str();
    }
    Gen gen{std::mt19937_64(seed), base, max_size};

    for (int trial = 0; trial < trials; ++trial) {
        ++rep.tuples_checked;
        auto fail = [&](const char* what, nlohmann::json inputs) {
            rep.fail({{"trial", trial}, {"law", rep.check}, {"identity", what}, {"inputs", std::move(inputs)}});
        };
        switch (law) {
            case CompletionLaw::CategoryLaws: {
                auto x = gen.rnd_object(), y = gen.rnd_object(), z = gen.rnd_object(), w = gen.rnd_object();
                auto f = gen.rnd_morphism(x, y), g = gen.rnd_morphism(y, z), h = gen.rnd_morphism(z, w);
                if (!eq_morphism(compose(compose(h, g), f), compose(h, compose(g, f))))
                    fail("(h∘g)∘f = h∘(g∘f)", dump_inputs({&f, &g, &h}));
                if (!eq_morphism(compose(identity_of(y), f), f)) fail("id∘f = f", dump_inputs({&f}));
                if (!eq_morphism(compose(f, identity_of(x)), f)) fail("f∘id = f", dump_inputs({&f}));
                break;
            }
            case CompletionLaw::Bilinearity: {
                auto x = gen.rnd_object(), y = gen.rnd_object(), z = gen.rnd_object();
                auto f1 = gen.rnd_morphism(x, y), f2 = gen.rnd_morphism(x, y), g = gen.rnd_morphism(y, z);
                CycNum lam = gen.rnd_scalar();
                if (!eq_morphism(compose(g, add_scale(f1, f2, lam)),
                                 add_scale(compose(g, f1), compose(g, f2), lam)))
                    fail("g∘(f1+λf2) = g∘f1 + λ(g∘f2)", dump_inputs({&f1, &f2, &g}));
                auto g2 = gen.rnd_morphism(y, z);
                if (!eq_morphism(compose(add_scale(g, g2, lam), f1),
                                 add_scale(compose(g, f1), compose(g2, f1), lam)))
                    fail("(g+λg2)∘f = g∘f + λ(g2∘f)", dump_inputs({&f1, &g, &g2}));
                break;
            }
            case CompletionLaw::VectorSpace: {
                auto x = gen.rnd_object(), y = gen.rnd_object();
                auto f = gen.rnd_morphism(x, y), g = gen.rnd_morphism(x, y), h = gen.rnd_morphism(x, y);
                CycNum lam = gen.rnd_scalar(), mu = gen.rnd_scalar();
                if (!eq_morphism(add(add(f, g), h), add(f, add(g, h))))
                    fail("(f+g)+h = f+(g+h)", dump_inputs({&f, &g, &h}));
                if (!eq_morphism(add(f, g), add(g, f))) fail("f+g = g+f", dump_inputs({&f, &g}));
                if (!eq_morphism(add(f, zero_of(x, y)), f)) fail("f+0 = f", dump_inputs({&f}));
                if (!add_scale(f, f, CycNum::one().neg()).is_zero_body())
                    fail("f+(-1)f = 0", dump_inputs({&f}));
                if (!eq_morphism(scale(add(f, g), lam), add(scale(f, lam), scale(g, lam))))
                    fail("λ(f+g) = λf+λg", dump_inputs({&f, &g}));
                if (!eq_morphism(scale(scale(f, lam), mu), scale(f, lam.mul(mu))))
                    fail("μ(λf) = (μλ)f", dump_inputs({&f}));
                break;
            }
            case CompletionLaw::DirectSum: {
                auto x = gen.rnd_object(), y = gen.rnd_object();
                auto ds = direct_sum_pair(x, y);
                bool ok = eq_morphism(compose(ds.p_first, ds.i_first), identity_of(x)) &&
                          eq_morphism(compose(ds.p_second, ds.i_second), identity_of(y)) &&
                          eq_morphism(add(compose(ds.i_first, ds.p_first), compose(ds.i_second, ds.p_second)),
                                      identity_of(ds.sum)) &&
                          compose(ds.p_first, ds.i_second).is_zero_body();
                if (!ok) fail("p∘i = id, Σ i∘p = id", dump_inputs({&ds.p_first, &ds.i_first}));
                break;
            }
            case CompletionLaw::Coproduct: {
                std::vector<SumObject> family;
                int64_t k = gen.rnd(2, 4);
                for (int64_t i = 0; i < k; ++i) family.push_back(gen.rnd_object(4));
                auto cp = coproduct(family);
                auto z = gen.rnd_object();
                auto big = gen.rnd_morphism(cp.sum, z);
                std::vector<SumMorphism> parts;
                for (const auto& inj : cp.injections) parts.push_back(compose(big, inj));
                auto back = assemble_from_components(cp, parts);
                if (!eq_morphism(back, big)) fail("assemble∘restrict = id", dump_inputs({&big}));
                for (size_t i = 0; i < parts.size(); ++i)
                    if (!eq_morphism(compose(back, cp.injections[i]), parts[i]))
                        fail("restrict∘assemble = id", dump_inputs({&parts[i]}));
                auto w = gen.rnd_object();
                auto post = gen.rnd_morphism(z, w);
                std::vector<SumMorphism> comped;
                for (const auto& p : parts) comped.push_back(compose(post, p));
                if (!eq_morphism(assemble_from_components(cp, comped), compose(post, back)))
                    fail("assembly is functorial", dump_inputs({&big, &post}));
                break;
            }
            case CompletionLaw::Include: {
                BaseLabel g = gen.rnd_label(), h = gen.rnd_label();
                CycNum a = gen.rnd_scalar(), b = gen.rnd_scalar();
                auto ia = include_scalar(base, g, a);
                auto ib = include_scalar(base, g, b);
                if (!eq_morphism(compose(ia, ib), include_scalar(base, g, a.mul(b))))
                    fail("include respects composition", dump_inputs({&ia, &ib}));
                auto ih = include_scalar(base, h, b);
                auto both = tensor_morphisms(ia, ih);
                auto prod = include_scalar(base, base->add(g, h), a.mul(b));
                if (!eq_morphism(both, prod)) fail("include is monoidal on scalars", dump_inputs({&ia, &ih}));
                break;
            }
            case CompletionLaw::Bifunctoriality: {
                auto x = gen.rnd_object(3), x2 = gen.rnd_object(3), x3 = gen.rnd_object(3);
                auto y = gen.rnd_object(3), y2 = gen.rnd_object(3), y3 = gen.rnd_object(3);
                auto f = gen.rnd_morphism(x2, x3), fp = gen.rnd_morphism(x, x2);
                auto g = gen.rnd_morphism(y2, y3), gp = gen.rnd_morphism(y, y2);
                if (!eq_morphism(tensor_morphisms(compose(f, fp), compose(g, gp)),
                                 compose(tensor_morphisms(f, g), tensor_morphisms(fp, gp))))
                    fail("(f∘f')⊗(g∘g') = (f⊗g)∘(f'⊗g')", dump_inputs({&f, &fp, &g, &gp}));
                if (!eq_morphism(tensor_morphisms(identity_of(x), identity_of(y)),
                                 identity_of(tensor_objects(x, y))))
                    fail("id⊗id = id", dump_inputs({}));
                if (!tensor_morphisms(f, zero_of(y, y2)).is_zero_body())
                    fail("f⊗0 = 0", dump_inputs({&f}));
                break;
            }
            case CompletionLaw::Pentagon: {
                auto x = gen.rnd_object(3), y = gen.rnd_object(3), z = gen.rnd_object(3),
                     w = gen.rnd_object(3);
                auto lhs = compose(associator(x, y, tensor_objects(z, w)), associator(tensor_objects(x, y), z, w));
                auto rhs = compose(tensor_morphisms(identity_of(x), associator(y, z, w)),
                                   compose(associator(x, tensor_objects(y, z), w),
                                           tensor_morphisms(associator(x, y, z), identity_of(w))));
                if (!eq_morphism(lhs, rhs)) fail("pentagon", dump_inputs({&lhs, &rhs}));
                break;
            }
            case CompletionLaw::Triangle: {
                auto x = gen.rnd_object(), y = gen.rnd_object();
                auto u = unit_object(base);
                auto [l, r] = unit_constraints(y);
                auto [lx, rx] = unit_constraints(x);
                auto lhs = compose(tensor_morphisms(identity_of(x), l), associator(x, u, y));
                auto rhs = tensor_morphisms(rx, identity_of(y));
                if (!eq_morphism(lhs, rhs)) fail("triangle", dump_inputs({&lhs, &rhs}));
                break;
            }
            case CompletionLaw::Hexagon: {
                auto x = gen.rnd_object(3), y = gen.rnd_object(3), z = gen.rnd_object(3);
                auto h1l = compose(associator(y, z, x),
                                   compose(braiding(x, tensor_objects(y, z)), associator(x, y, z)));
                auto h1r = compose(tensor_morphisms(identity_of(y), braiding(x, z)),
                                   compose(associator(y, x, z),
                                           tensor_morphisms(braiding(x, y), identity_of(z))));
                if (!eq_morphism(h1l, h1r)) fail("hexagon-1", dump_inputs({&h1l, &h1r}));
                auto h2l = compose(invert(associator(z, x, y)),
                                   compose(braiding(tensor_objects(x, y), z), invert(associator(x, y, z))));
                auto h2r = compose(tensor_morphisms(braiding(x, z), identity_of(y)),
                                   compose(invert(associator(x, z, y)),
                                           tensor_morphisms(identity_of(x), braiding(y, z))));
                if (!eq_morphism(h2l, h2r)) fail("hexagon-2", dump_inputs({&h2l, &h2r}));
                break;
            }
            case CompletionLaw::Balancing: {
                auto x = gen.rnd_object(), y = gen.rnd_object();
                auto lhs = twist_morphism(tensor_objects(x, y));
                auto rhs = compose(braiding(y, x),
                                   compose(braiding(x, y),
                                           tensor_morphisms(twist_morphism(x), twist_morphism(y))));
                if (!eq_morphism(lhs, rhs)) fail("θ_{X⊗Y} = c∘c∘(θ⊗θ)", dump_inputs({&lhs, &rhs}));
                break;
            }
            case CompletionLaw::BraidNaturality: {
                auto x = gen.rnd_object(), x2 = gen.rnd_object(), y = gen.rnd_object(), y2 = gen.rnd_object();
                auto f = gen.rnd_morphism(x, x2), g = gen.rnd_morphism(y, y2);
                auto lhs = compose(braiding(x2, y2), tensor_morphisms(f, g));
                auto rhs = compose(tensor_morphisms(g, f), braiding(x, y));
                if (!eq_morphism(lhs, rhs)) fail("c natural", dump_inputs({&f, &g}));
                break;
            }
            case CompletionLaw::TwistNaturality: {
                auto x = gen.rnd_object(), y = gen.rnd_object();
                auto f = gen.rnd_morphism(x, y);
                if (!eq_morphism(compose(twist_morphism(y), f), compose(f, twist_morphism(x))))
                    fail("θ natural", dump_inputs({&f}));
                break;
            }
        }
    }
    return rep;
}

}  // namespace sumcat
