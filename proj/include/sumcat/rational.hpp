#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace sumcat {

using ZZ = mpz_class;
using QQ = mpq_class;

// mpq_class(n, d) does not canonicalize on its own; route all fraction
// construction through here.
inline QQ q_make(const ZZ& num, const ZZ& den) {
    QQ q(num, den);
    q.canonicalize();
    return q;
}

inline QQ q_make(long num, long den = 1) { return q_make(ZZ(num), ZZ(den)); }

inline ZZ q_floor(const QQ& q) {
    ZZ r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Canonical representative of q modulo 2, in [0, 2).
inline QQ q_mod2(const QQ& q) {
    QQ half = q / 2;
    return q - 2 * q_floor(half);
}

inline bool q_is_integer(const QQ& q) { return q.get_den() == 1; }

inline bool q_is_even_integer(const QQ& q) {
    return q_is_integer(q) && mpz_even_p(q.get_num_mpz_t());
}

// "p/q" (or just "p" when the denominator is 1), as GMP prints it.
inline std::string q_str(const QQ& q) { return q.get_str(); }

inline int64_t q_to_i64(const QQ& q) {
    if (!q_is_integer(q)) throw std::invalid_argument("q_to_i64: not an integer");
    return mpz_get_si(q.get_num_mpz_t());
}

}  // namespace sumcat
