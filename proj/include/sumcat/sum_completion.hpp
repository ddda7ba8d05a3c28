#pragma once

/**
 * @file sum_completion.hpp
 * @brief The direct-sum completion of a skeletal pointed base: objects are
 *        formal set-indexed direct sums of base simples, morphisms are
 *        finite-target index correspondences with scalar components, taken
 *        modulo zero-padding.
 *
 * Index domains are either finite lists or rank-r integer lattices. A
 * morphism is stored in one of three bodies:
 *  - Zero: the zero morphism (Ω, ∅);
 *  - Explicit: per-source-index finite lists of (target index, scalar), the
 *    singleton set map the full correspondence is determined by;
 *  - Affine: a single-valued index map n ↦ A·n + b with scalar family
 *    coef·e^{iπ·p(n)}, p of total degree ≤ 2, the shape of every structure
 *    morphism the lattice pipeline needs.
 *
 * Explicit bodies require a finite source; Affine bodies require lattice
 * source and target over a free grading group. A window bridge converts
 * lattice data to finite data for brute-force comparison.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "sumcat/exact.hpp"
#include "sumcat/pointed_base.hpp"
#include "sumcat/poly.hpp"

namespace sumcat {

struct IndexDomain {
    enum class Kind { Finite, Lattice };
    Kind kind = Kind::Finite;
    int64_t size = 0;  // Finite
    int rank = 0;      // Lattice

    static IndexDomain finite(int64_t n) { return {Kind::Finite, n, 0}; }
    static IndexDomain lattice(int r) { return {Kind::Lattice, 0, r}; }
    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const IndexDomain& o) const = default;
};

/// A formal direct sum ⊕_{s∈S} X_{label(s)} over the base category.
struct SumObject {
    BasePtr base;
    IndexDomain domain;
    std::vector<BaseLabel> labels;  // Finite: one canonical label per index
    AffineMap label_map;            // Lattice: point ↦ label (free groups only)

    BaseLabel label_of_pos(int64_t pos) const { return labels.at(static_cast<size_t>(pos)); }
    BaseLabel label_of_point(const std::vector<int64_t>& p) const { return label_map.apply(p); }
    BaseLabel label_of_ref(const std::vector<int64_t>& ref) const;
};

bool obj_eq(const SumObject& a, const SumObject& b);

SumObject mk_finite_object(BasePtr base, std::vector<BaseLabel> labels);
SumObject mk_lattice_object(BasePtr base, AffineMap label_map);

/// Fully faithful inclusion of the base: a singleton-indexed object.
SumObject include_object(BasePtr base, const BaseLabel& label);
SumObject unit_object(BasePtr base);

/// One Explicit component: target index reference ({pos} for finite targets,
/// the lattice point otherwise) and its scalar.
struct ExpComp {
    std::vector<int64_t> ref;
    CycNum scalar;
};

struct ExplicitBody {
    std::vector<std::vector<ExpComp>> rows;  // indexed by source position
};

struct AffineBody {
    AffineMap tau;
    ExpPoly exp;  // e^{iπ·exp(n)}
    QQ coef;      // > 0 after canonicalization
};

struct ZeroBody {
    bool operator==(const ZeroBody&) const = default;
};

struct SumMorphism {
    SumObject source;
    SumObject target;
    std::variant<ZeroBody, ExplicitBody, AffineBody> body;

    bool is_zero_body() const { return std::holds_alternative<ZeroBody>(body); }
    bool is_explicit() const { return std::holds_alternative<ExplicitBody>(body); }
    bool is_affine() const { return std::holds_alternative<AffineBody>(body); }
    const ExplicitBody& as_explicit() const { return std::get<ExplicitBody>(body); }
    const AffineBody& as_affine() const { return std::get<AffineBody>(body); }
};

SumMorphism mk_zero(SumObject src, SumObject tgt);
SumMorphism mk_explicit(SumObject src, SumObject tgt, std::vector<std::vector<ExpComp>> rows);
SumMorphism mk_affine(SumObject src, SumObject tgt, AffineMap tau, ExpPoly exp, QQ coef = QQ(1));

/// Canonical representative of the zero-padding class: all zero components
/// removed (Explicit), empty bodies collapsed to Zero, Affine unchanged.
SumMorphism normalize(const SumMorphism& m);

SumMorphism compose(const SumMorphism& g, const SumMorphism& f);  // g ∘ f
SumMorphism scale(const SumMorphism& f, const CycNum& lambda);
/// f + λ·g.
SumMorphism add_scale(const SumMorphism& f, const SumMorphism& g, const CycNum& lambda);
inline SumMorphism add(const SumMorphism& f, const SumMorphism& g) { return add_scale(f, g, CycNum::one()); }

SumMorphism identity_of(const SumObject& x);
inline SumMorphism zero_of(const SumObject& x, const SumObject& y) { return mk_zero(x, y); }

bool eq_morphism(const SumMorphism& f, const SumMorphism& g);

/// Inverse of a structure morphism: unimodular Affine, or Explicit with one
/// monomial component per index forming a bijection.
SumMorphism invert(const SumMorphism& m);

struct DirectSumPair {
    SumObject sum;
    SumMorphism p_first, p_second, i_first, i_second;
};
DirectSumPair direct_sum_pair(const SumObject& x, const SumObject& y);

struct Coproduct {
    SumObject sum;
    std::vector<SumMorphism> injections;
    std::vector<int64_t> offsets;  // position of each summand inside `sum`
};
Coproduct coproduct(const std::vector<SumObject>& family);

/// The unique morphism F from a coproduct with F ∘ inj_i = parts[i].
SumMorphism assemble_from_components(const Coproduct& cp, const std::vector<SumMorphism>& parts);

/// Base morphism g → g (a scalar, by skeletality) as a singleton morphism.
SumMorphism include_scalar(BasePtr base, const BaseLabel& label, const CycNum& scalar);

/// Finite box per lattice coordinate, inclusive bounds.
struct WindowBox {
    std::vector<std::pair<int64_t, int64_t>> dims;

    static WindowBox cube(int rank, int64_t w);
    int64_t volume() const;
    bool contains(const std::vector<int64_t>& p) const;
    int64_t pos_of(const std::vector<int64_t>& p) const;
    std::vector<int64_t> point_of(int64_t pos) const;
    std::string str() const;
};

struct WindowedObject {
    SumObject obj;  // Finite, labels evaluated on box points
    WindowBox box;
};

WindowedObject restrict_object(const SumObject& x, const WindowBox& box);

struct WindowedMorphism {
    SumMorphism mor;  // Explicit, between windowed objects
    int64_t truncated = 0;  // components dropped because the image left the box
    WindowBox src_box, tgt_box;
};

/// Restriction with explicit source and target boxes; image points outside
/// the target box are dropped and counted.
WindowedMorphism restrict_to_window(const SumMorphism& m, const WindowBox& src_box, const WindowBox& tgt_box);
/// Restriction with the target box fitted to the affine image (no truncation).
WindowedMorphism restrict_to_window(const SumMorphism& m, const WindowBox& src_box);

/// Smallest box containing the image of `box` under the affine map.
WindowBox image_box(const AffineMap& tau, const WindowBox& box);

}  // namespace sumcat
