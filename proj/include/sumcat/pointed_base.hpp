#pragma once

/**
 * @file pointed_base.hpp
 * @brief Skeletal pointed base categories as cochain data: one simple object
 *        per group element, tensor = group addition, and scalar-valued
 *        associator/braiding/twist exponent functions (values in Q mod 2,
 *        meaning e^{iπ·}).
 *
 * Three instances ship with the library:
 *  - heisenberg_data(N, d): free group Z; a label integer m encodes the Fock
 *    weight λ = m/(d·√(2N)). Trivial associator, braiding exponent
 *    m1·m2/(2N·d²), twist exponent m²/(2N·d²).
 *  - cyclic_data(n): Z/n with braiding 2ij/n and twist 2i²/n, a finite test
 *    instance for the completion property suites.
 *  - lattice_reference_data(N): Z/2N, the known module category of the rank-1
 *    even-lattice extension, with the coset-overflow associator sign and both
 *    published twist variants (they disagree; the quadratic e^{iπx²} form is
 *    primary, the e^{2πix²} form is carried for flagged comparison).
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sumcat/poly.hpp"
#include "sumcat/report.hpp"

namespace sumcat {

/// Abelian grading group: Z^free_rank × Π Z/cyclic[i].
struct GroupSpec {
    int free_rank = 0;
    std::vector<int64_t> cyclic;

    int dim() const { return free_rank + static_cast<int>(cyclic.size()); }
    bool finite() const { return free_rank == 0; }
    bool operator==(const GroupSpec& o) const = default;
};

using BaseLabel = std::vector<int64_t>;

/// Exponent function G^arity → Q mod 2: closed-form polynomial data in the
/// label coordinates, or an exact value table (finite groups only).
struct Cochain {
    enum class Kind { Poly, Table };
    Kind kind = Kind::Poly;
    int arity = 0;
    ExpPoly poly{0};          // in arity·dim variables, evaluated on canonical reps
    std::vector<QQ> table;    // mixed-radix over canonical tuples

    bool operator==(const Cochain& o) const = default;
};

struct PointedData {
    std::string name;
    GroupSpec group;
    Cochain assoc;                    // arity 3
    Cochain braid;                    // arity 2
    Cochain twist;                    // arity 1
    std::optional<Cochain> twist_alt; // flagged alternate twist, when published
    int64_t N = 0;                    // grain parameters when applicable
    int64_t d = 1;

    BaseLabel canonical(const BaseLabel& l) const;
    BaseLabel add(const BaseLabel& a, const BaseLabel& b) const;
    BaseLabel neg(const BaseLabel& a) const;
    BaseLabel zero_label() const { return BaseLabel(group.dim(), 0); }

    QQ eval_exponent(const Cochain& c, const std::vector<BaseLabel>& labels) const;

    bool operator==(const PointedData& o) const = default;
};

using BasePtr = std::shared_ptr<const PointedData>;

BasePtr heisenberg_data(int64_t N, int64_t d = 1);
BasePtr cyclic_data(int64_t n);
BasePtr lattice_reference_data(int64_t N);

/// Coset-overflow 2-cocycle in integer label units: 2Nd when the canonical
/// representatives overflow the fundamental domain, else 0.
int64_t cocycle_k(int64_t N, int64_t a, int64_t b, int64_t d = 1);

enum class CochainKind { Assoc, Braid, Twist, TwistAlt };

Phase cochain_scalar(const PointedData& data, CochainKind kind, const std::vector<BaseLabel>& labels);

enum class BaseAxiom { Pentagon, Hexagon, Balancing, Triangle };

/// Scope of a brute-force run over label tuples.
struct Scope {
    bool full = false;          // entire group; finite groups only
    int64_t window = 0;         // [-window, window] per free coordinate

    static Scope full_group() { return {true, 0}; }
    static Scope box(int64_t w) { return {false, w}; }
    std::string str() const;
};

/**
 * Evaluates the scalar identity implied by the axiom for every tuple in
 * scope. Pentagon: 3-cocycle condition on the associator exponent. Hexagon:
 * both orientations, with associator corrections. Balancing:
 * τ(g+h) ≡ τ(g) + τ(h) + 2σ(g,h). Triangle: exponents with a unit slot
 * vanish. When an alternate twist is present, balancing is also evaluated on
 * it and reported as a note (informational, never fatal).
 */
CheckReport check_base_coherence(const PointedData& data, BaseAxiom axiom, const Scope& scope);

std::string axiom_name(BaseAxiom a);

}  // namespace sumcat
