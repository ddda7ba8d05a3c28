#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic for phases e^{iπq} (q rational) and their finite
 *        rational combinations, with a decidable zero test.
 *
 * Every scalar handled by the category layers lives in the cyclotomic closure
 * of Q. A Phase is a single e^{iπq} with q canonical in [0,2); a CycNum is a
 * finite Q-linear combination of phases. Zero-ness of a CycNum is decided
 * exactly by rewriting all terms as powers of a common root of unity ζ_n and
 * reducing the coefficient polynomial modulo the cyclotomic polynomial Φ_n.
 */

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "sumcat/errors.hpp"
#include "sumcat/rational.hpp"

namespace sumcat {

/// The complex number e^{iπq}; exponent kept canonical in [0, 2).
class Phase {
public:
    Phase() : e_(0) {}
    static Phase of(const QQ& q) { return Phase(q_mod2(q)); }
    static Phase of(long num, long den) { return of(q_make(num, den)); }

    const QQ& exponent() const { return e_; }
    bool is_one() const { return e_ == 0; }

    Phase mul(const Phase& o) const { return of(e_ + o.e_); }
    Phase inv() const { return of(-e_); }
    Phase pow(long k) const { return of(e_ * k); }

    bool operator==(const Phase& o) const { return e_ == o.e_; }
    bool operator!=(const Phase& o) const { return e_ != o.e_; }
    bool operator<(const Phase& o) const { return e_ < o.e_; }

    /// Canonical "p/q" form of the exponent (e.g. "0", "1/2", "3/2").
    std::string str() const { return q_str(e_); }

    std::complex<double> approx() const;

private:
    explicit Phase(QQ e) : e_(std::move(e)) {}
    QQ e_;
};

inline Phase phase_make(const QQ& q) { return Phase::of(q); }

/**
 * A finite rational combination of phases. Terms are stored sign-folded:
 * exponents lie in [0,1) and e^{iπ(q+1)} = -e^{iπq} is absorbed into the
 * coefficient, so 1 + e^{iπ} cancels termwise. Stored coefficients are never
 * zero. Syntactic equality of stored forms is not complete (cyclotomic
 * relations such as 1 + ζ_3 + ζ_3² = 0 survive as nonempty term maps), which
 * is what is_zero() decides.
 */
class CycNum {
public:
    CycNum() = default;

    static CycNum zero() { return CycNum(); }
    static CycNum one() { return from_rational(1); }
    static CycNum from_rational(const QQ& r);
    static CycNum from_phase(const Phase& p) { return monomial(1, p); }
    static CycNum monomial(const QQ& coef, const Phase& p);

    bool is_formally_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    CycNum add(const CycNum& o) const;
    CycNum mul(const CycNum& o) const;
    CycNum neg() const;
    CycNum sub(const CycNum& o) const { return add(o.neg()); }

    /// Exact zero test via reduction modulo the cyclotomic polynomial Φ_n,
    /// n = lcm of the doubled exponent denominators.
    bool is_zero() const;
    bool eq(const CycNum& o) const { return sub(o).is_zero(); }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_rational() const;
    QQ rational_value() const;

    /// (coef, phase) of a single-term value; throws NotMonomial / ZeroScalar.
    std::pair<QQ, Phase> as_monomial() const;
    /// Inverse of a single-term value r·e^{iπq}; throws on non-monomials.
    CycNum inv_monomial() const;

    /// Floating-point evaluation; test oracle only.
    std::complex<double> approx() const;

    /// Terms as (exponent in [0,1), coefficient), sorted by exponent.
    const std::map<QQ, QQ>& terms() const { return terms_; }

    std::string str() const;

    CycNum operator+(const CycNum& o) const { return add(o); }
    CycNum operator-(const CycNum& o) const { return sub(o); }
    CycNum operator*(const CycNum& o) const { return mul(o); }
    CycNum operator-() const { return neg(); }

private:
    void insert_folded(const QQ& exponent_mod2, const QQ& coef);
    std::map<QQ, QQ> terms_;
};

inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a.add(b); }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a.mul(b); }
inline bool cyc_is_zero(const CycNum& a) { return a.is_zero(); }
inline CycNum cyc_inv_monomial(const CycNum& a) { return a.inv_monomial(); }

/// Φ_n as dense rational coefficients (degree φ(n)), via iterated exact
/// division of X^n - 1 by the cyclotomic polynomials of proper divisors.
std::vector<QQ> cyclotomic_polynomial(unsigned long n);

}  // namespace sumcat
