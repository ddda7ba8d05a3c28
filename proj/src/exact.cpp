#include "sumcat/exact.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sumcat {

std::complex<double> Phase::approx() const {
    double x = M_PI * mpq_get_d(e_.get_mpq_t());
    return {std::cos(x), std::sin(x)};
}

CycNum CycNum::from_rational(const QQ& r) {
    CycNum c;
    if (r != 0) c.terms_.emplace(QQ(0), r);
    return c;
}

CycNum CycNum::monomial(const QQ& coef, const Phase& p) {
    CycNum c;
    if (coef != 0) c.insert_folded(p.exponent(), coef);
    return c;
}

// exponent_mod2 must lie in [0,2); fold the half turn into the sign.
void CycNum::insert_folded(const QQ& exponent_mod2, const QQ& coef) {
    QQ e = exponent_mod2;
    QQ c = coef;
    if (e >= 1) {
        e -= 1;
        c = -c;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CycNum CycNum::add(const CycNum& o) const {
    CycNum r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_folded(e, c);
    return r;
}

CycNum CycNum::mul(const CycNum& o) const {
    CycNum r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.insert_folded(q_mod2(e1 + e2), c1 * c2);
    return r;
}

CycNum CycNum::neg() const {
    CycNum r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

bool CycNum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

QQ CycNum::rational_value() const {
    if (terms_.empty()) return QQ(0);
    if (!is_rational()) throw NotMonomial("rational_value: not a rational scalar");
    return terms_.begin()->second;
}

std::pair<QQ, Phase> CycNum::as_monomial() const {
    if (terms_.empty()) throw ZeroScalar();
    if (terms_.size() != 1) throw NotMonomial();
    const auto& [e, c] = *terms_.begin();
    if (c > 0) return {c, Phase::of(e)};
    return {-c, Phase::of(e + 1)};
}

CycNum CycNum::inv_monomial() const {
    auto [c, p] = as_monomial();
    return monomial(QQ(1) / c, p.inv());
}

std::complex<double> CycNum::approx() const {
    std::complex<double> v = 0;
    for (const auto& [e, c] : terms_) {
        double x = M_PI * mpq_get_d(e.get_mpq_t());
        v += mpq_get_d(c.get_mpq_t()) * std::complex<double>(std::cos(x), std::sin(x));
    }
    return v;
}

std::string CycNum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << q_str(c);
        if (e != 0) os << "*e(" << q_str(e) << ")";
    }
    return os.str();
}

namespace {

// Dense polynomials over Q, coefficient of X^k at index k.
using Poly = std::vector<QQ>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient p / d for monic d; asserts the remainder vanishes.
Poly poly_divexact_monic(Poly p, const Poly& d) {
    poly_trim(p);
    if (p.empty()) return {};
    if (p.size() < d.size()) throw std::logic_error("poly_divexact_monic: degree too small");
    Poly q(p.size() - d.size() + 1, QQ(0));
    for (size_t shift = q.size(); shift-- > 0;) {
        QQ c = p[shift + d.size() - 1];
        if (c == 0) continue;
        q[shift] = c;
        for (size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
    }
    poly_trim(p);
    if (!p.empty()) throw std::logic_error("poly_divexact_monic: nonzero remainder");
    return q;
}

// Remainder of p modulo monic d.
Poly poly_rem_monic(Poly p, const Poly& d) {
    while (true) {
        poly_trim(p);
        if (p.size() < d.size()) return p;
        QQ c = p.back();
        size_t shift = p.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
    }
}

std::map<unsigned long, Poly>& phi_cache() {
    static std::map<unsigned long, Poly> cache;
    return cache;
}
std::mutex phi_mutex;

}  // namespace

std::vector<QQ> cyclotomic_polynomial(unsigned long n) {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto& cache = phi_cache();
    // Iterative over divisors in increasing order so every proper divisor is
    // cached before it is needed.
    for (unsigned long m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        Poly f(m + 1, QQ(0));
        f[0] = -1;
        f[m] = 1;  // X^m - 1
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0) f = poly_divexact_monic(std::move(f), cache.at(d));
        cache.emplace(m, std::move(f));
    }
    return cache.at(n);
}

bool CycNum::is_zero() const {
    if (terms_.empty()) return true;
    if (terms_.size() == 1) return false;  // stored coefficients are nonzero
    // All exponents are e/den in [0,1); e^{iπ e/den} = ζ_n^{e·n/(2·den)} with
    // n = lcm of the doubled denominators.
    ZZ n(1);
    for (const auto& [e, c] : terms_) {
        (void)c;
        ZZ dd = 2 * e.get_den();
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), dd.get_mpz_t());
    }
    unsigned long nn = mpz_get_ui(n.get_mpz_t());
    Poly p(nn, QQ(0));
    for (const auto& [e, c] : terms_) {
        ZZ k = (e.get_num() * n) / (2 * e.get_den());
        p[mpz_get_ui(k.get_mpz_t())] += c;
    }
    poly_trim(p);
    if (p.empty()) return true;
    Poly r = poly_rem_monic(std::move(p), cyclotomic_polynomial(nn));
    return r.empty();
}

}  // namespace sumcat
