#pragma once

/**
 * @file algebra.hpp
 * @brief Algebra objects in the completion, their modules, the induction
 *        functor, monodromy and locality, and the induced-module tensor
 *        product through the multiplication-and-braid isomorphism.
 *
 * The central instance is the rank-1 even-lattice extension over the free
 * (heisenberg-style) base: A = ⊕_n X_{2Nd·n} with unit multiplication. Label
 * integers encode weights in grains of 1/(d√(2N)); the extension lattice is
 * 2Nd·Z and its dual is d·Z.
 *
 * Checks run in two modes. Symbolic mode proves identities of affine index
 * maps together with exponent-polynomial identities mod 2, exact over the
 * whole infinite object. Window mode brute-forces explicit restrictions on
 * finite boxes and compares components pointwise, with every object box big
 * enough that nothing truncates.
 */

#include <cstdint>
#include <optional>

#include "sumcat/monoidal.hpp"
#include "sumcat/report.hpp"
#include "sumcat/sum_completion.hpp"

namespace sumcat {

struct AlgebraObject {
    SumObject A;
    SumMorphism mu;    // A⊗A → A
    SumMorphism iota;  // 𝟙 → A
    int64_t N = 0;
    int64_t d = 1;

    int64_t lattice_step() const { return 2 * N * d; }  // extension lattice in label units
};

struct RepObject {
    SumObject V;
    SumMorphism action;  // A⊗V → V
    int64_t x_label = 0; // weight of the inducing simple, in label units
    std::optional<bool> local;
};

/// The even-lattice extension algebra: labels 2Nd·n, unit multiplication,
/// unit landing on the weight-0 summand.
AlgebraObject lattice_algebra(int64_t N, int64_t d = 1);

enum class CheckMode { Symbolic, Window };

CheckReport check_algebra_axioms(const AlgebraObject& alg, CheckMode mode, int64_t window = 5);

/// Commutativity constraint on the multiplication cocycle: the braiding phase
/// is trivial on pairs from the extension lattice.
CheckReport check_mu_cocycle_condition(int64_t N, int64_t d = 1, int64_t window = 5);

/// A ⊗ include(x) with action by left multiplication.
RepObject induce(const AlgebraObject& alg, int64_t x_label);

/// Functor on morphisms: a base scalar f at label x goes to Id_A ⊗ f.
SumMorphism induce_morphism(const AlgebraObject& alg, int64_t x_label, const CycNum& scalar);

CheckReport check_rep_axioms(const AlgebraObject& alg, const RepObject& m, CheckMode mode,
                             int64_t window = 4);

/// Double-braiding scalar of two base simples, computed by composing the two
/// braiding morphisms on the included singletons.
Phase monodromy_scalar(const PointedData& data, const BaseLabel& l1, const BaseLabel& l2);

/// Local ⇔ acting after the double braiding equals acting directly.
bool is_local(const AlgebraObject& alg, const RepObject& m, CheckMode mode = CheckMode::Symbolic,
              int64_t window = 4);

/// Index translation intertwining the actions of induce(x) and induce(x+ℓ),
/// ℓ from the extension lattice.
SumMorphism shift_iso(const AlgebraObject& alg, int64_t x_label, int64_t ell);

struct InducedTensor {
    RepObject module;      // induce(canonical rep of x+y)
    SumMorphism f_raw;     // V_x ⊗ V_y → induce(x+y), multiplication after braiding the middle pair
    SumMorphism f_tilde;   // shift-normalized: V_x ⊗ V_y → induce(x+y-k)
    int64_t k = 0;         // lattice element removed by the normalization
};

/// Tensor product over A of two induced local modules, presented through the
/// braid-and-multiply isomorphism onto the induced module at x+y, then shifted
/// onto the canonical representative.
InducedTensor tensor_over_A_induced(const AlgebraObject& alg, int64_t x_label, int64_t y_label);

/**
 * Verifies, on a window, that the two A-action routes on V_x ⊗ A ⊗ V_y match
 * their expected component scalars (left route braids and carries the phase
 * (λ1+x)·ℓ, right route is scalar 1), that the presentation map satisfies
 * the quotient well-definedness relation
 *   f_{(λ1,λ2)} · e^{iπ(λ̃1+x)(λ1−λ̃1)} = f_{(λ̃1,λ̃2)}  whenever λ1+λ2 = λ̃1+λ̃2,
 * and that it intertwines the A-actions. With `corrupt_exponent` the
 * presentation phase uses the first coordinate instead of the second, a
 * negative control; the corrupted map still satisfies the bare quotient
 * relation (both phases descend when x pairs integrally with the lattice)
 * but fails the intertwining.
 */
CheckReport check_quotient_identification(int64_t N, int64_t d, int64_t x_label, int64_t y_label,
                                          int64_t window, bool corrupt_exponent = false);

/// Window report on which induced modules are local; notes the discrepancy
/// between the composed monodromy and the closed form printed alongside it.
CheckReport locality_report(const AlgebraObject& alg, int64_t max_label, CheckMode mode = CheckMode::Symbolic);

}  // namespace sumcat
