#pragma once

/**
 * @file poly.hpp
 * @brief Integer affine maps and rational exponent polynomials of total
 *        degree ≤ 2, the symbolic carriers of the affine morphism calculus.
 *
 * An ExpPoly p stands for the scalar family e^{iπ·p(n)} over integer points
 * n. Identities of such scalars are identities of p modulo 2, which is
 * decidable coefficientwise (see is_zero_mod2).
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcat/exact.hpp"
#include "sumcat/rational.hpp"

namespace sumcat {

/// n ↦ A·n + b from Z^in_dim to Z^out_dim.
struct AffineMap {
    int in = 0;
    std::vector<std::vector<int64_t>> mat;  // out_dim rows of `in` entries
    std::vector<int64_t> off;               // out_dim entries

    int in_dim() const { return in; }
    int out_dim() const { return static_cast<int>(off.size()); }

    static AffineMap identity(int dim);
    static AffineMap constant(std::vector<int64_t> value, int in_dim);
    /// Block map (f, g): Z^{a+b} -> Z^{c+d}.
    static AffineMap block(const AffineMap& f, const AffineMap& g);
    /// Coordinate swap Z^{a+b} -> Z^{b+a}.
    static AffineMap swap_blocks(int a, int b);

    std::vector<int64_t> apply(const std::vector<int64_t>& n) const;
    AffineMap after(const AffineMap& inner) const;  // this ∘ inner
    /// Inverse when the matrix is square and unimodular; throws otherwise.
    AffineMap inverse() const;

    bool operator==(const AffineMap& o) const { return in == o.in && mat == o.mat && off == o.off; }
};

/// Rational polynomial in `nvars` integer variables, total degree ≤ 2.
class ExpPoly {
public:
    explicit ExpPoly(int nvars = 0);
    static ExpPoly constant(const QQ& c, int nvars);
    static ExpPoly variable(int i, int nvars);

    int nvars() const { return nvars_; }
    const QQ& const_term() const { return c0_; }
    const QQ& lin(int i) const { return lin_[i]; }
    /// Coefficient of x_i·x_j (i ≤ j).
    const QQ& quad(int i, int j) const { return quad_[idx(i, j)]; }

    ExpPoly add(const ExpPoly& o) const;
    ExpPoly sub(const ExpPoly& o) const;
    ExpPoly neg() const;
    ExpPoly scale(const QQ& r) const;
    ExpPoly add_const(const QQ& r) const;
    /// Product, only when the result stays within degree ≤ 2.
    ExpPoly mul(const ExpPoly& o) const;

    QQ eval(const std::vector<int64_t>& n) const;
    /// p(A·m + b) as a polynomial in m.
    ExpPoly substitute(const AffineMap& inner) const;

    /// True iff p(n) ∈ 2Z for every integer point n. Exact: writing
    /// p = Σ a_i x_i² + Σ b_ij x_i x_j + Σ c_i x_i + e, this holds iff
    /// e ∈ 2Z, every b_ij ∈ 2Z, and every (a_i, c_i) is an integer pair
    /// with a_i + c_i even (x² ≡ x mod 2 on integers).
    bool is_zero_mod2() const;
    /// The common value mod 2 when p is constant mod 2 on Z^n, else nullopt.
    std::optional<QQ> constant_mod2() const;

    bool operator==(const ExpPoly& o) const = default;

    ExpPoly operator+(const ExpPoly& o) const { return add(o); }
    ExpPoly operator-(const ExpPoly& o) const { return sub(o); }

    QQ& mut_lin(int i) { return lin_[i]; }
    QQ& mut_quad(int i, int j) { return quad_[idx(i, j)]; }
    QQ& mut_const() { return c0_; }

private:
    size_t idx(int i, int j) const;
    int nvars_;
    QQ c0_;
    std::vector<QQ> lin_;    // nvars entries
    std::vector<QQ> quad_;   // upper triangle incl. diagonal, row-major
};

}  // namespace sumcat
