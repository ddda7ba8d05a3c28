#pragma once

/**
 * @file monoidal.hpp
 * @brief Monoidal, braided and balanced structure on the completion: tensor
 *        product (index products with label addition), re-bracketing
 *        associators carrying base associator scalars, strict unit, index-swap
 *        braiding, and diagonal twist, plus the randomized law suite.
 *
 * Domain rules for the tensor product and the structure morphisms: Finite ⊗
 * Finite is a positional pair domain, Lattice ⊗ Lattice adds ranks, and a
 * singleton Finite factor is absorbed into a Lattice factor. A non-singleton
 * Finite factor against a Lattice factor has no representable product here.
 */

#include <cstdint>

#include "sumcat/report.hpp"
#include "sumcat/sum_completion.hpp"

namespace sumcat {

SumObject tensor_objects(const SumObject& x, const SumObject& y);
SumMorphism tensor_morphisms(const SumMorphism& f, const SumMorphism& g);

/// (X⊗Y)⊗Z → X⊗(Y⊗Z); component scalars from the base associator.
SumMorphism associator(const SumObject& x, const SumObject& y, const SumObject& z);

/// Left and right unit constraints 𝟙⊗X → X and X⊗𝟙 → X. The skeletal unit is
/// strict: both products are literally X and both constraints are identities.
std::pair<SumMorphism, SumMorphism> unit_constraints(const SumObject& x);

/// X⊗Y → Y⊗X; index swap with base braiding scalars.
SumMorphism braiding(const SumObject& x, const SumObject& y);

/// X → X; diagonal with base twist scalars.
SumMorphism twist_morphism(const SumObject& x);

enum class CompletionLaw {
    CategoryLaws,     // composition associativity, identity neutrality
    Bilinearity,      // composition distributes over add_scale on both sides
    VectorSpace,      // hom-space vector-space laws
    DirectSum,        // projection/inclusion identities
    Coproduct,        // assemble/restrict bijection and functoriality
    Include,          // inclusion functor is monoidal-functorial on scalars
    Bifunctoriality,  // interchange, identities, zero absorption
    Pentagon,
    Triangle,
    Hexagon,          // both orientations
    Balancing,
    BraidNaturality,
    TwistNaturality,
};

std::string law_name(CompletionLaw law);
std::vector<CompletionLaw> all_completion_laws();

/**
 * Runs `trials` randomized instances of one law over random finite objects
 * (≤ max_size indices, labels drawn from the base group) with random scalar
 * components, comparing composites with exact equality. Deterministic in
 * (base, law, trials, max_size, seed).
 */
CheckReport check_completion_coherence(CompletionLaw law, const BasePtr& base, int trials, int max_size,
                                       uint64_t seed);

}  // namespace sumcat
