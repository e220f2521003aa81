#pragma once

#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace qhyper {

// (n)_q = 1 + q + ... + q^(n-1)
inline LaurentZ qint(long n) {
    if (n < 0) throw std::invalid_argument("qint: n must be >= 0");
    LaurentZ r;
    for (long i = 0; i < n; ++i) r.add_term(i, 1);
    return r;
}

inline LaurentZ qfact(long n) {
    LaurentZ r(1);
    for (long i = 1; i <= n; ++i) r *= qint(i);
    return r;
}

// [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)
inline LaurentZ bal_int(long n) {
    if (n < 0) throw std::invalid_argument("bal_int: n must be >= 0");
    LaurentZ r;
    for (long i = 0; i < n; ++i) r.add_term(n - 1 - 2 * i, 1);
    return r;
}

inline LaurentZ bal_fact(long n) {
    LaurentZ r(1);
    for (long i = 1; i <= n; ++i) r *= bal_int(i);
    return r;
}

inline LaurentZ neg_gauss_binom(long n, long s);

// Gaussian binomial; s > n >= 0 gives 0, negative n routes to the
// (-n choose s)_q closed formula.
inline LaurentZ gauss_binom(long n, long s) {
    if (s < 0) throw std::invalid_argument("gauss_binom: s must be >= 0");
    if (n < 0) return neg_gauss_binom(-n, s);
    if (s > n) return LaurentZ();
    LaurentZ num(1), den(1);
    for (long i = 0; i < s; ++i) {
        num *= qint(n - i);
        den *= qint(i + 1);
    }
    return laurent_divexact(num, den);
}

// (-n choose s)_q = (-1)^s q^(-n*s - C(s,2)) (n-1+s choose s)_q
inline LaurentZ neg_gauss_binom(long n, long s) {
    if (n < 1 || s < 0) throw std::invalid_argument("neg_gauss_binom: need n >= 1, s >= 0");
    LaurentZ r = gauss_binom(n - 1 + s, s).shifted(-n * s - choose2(s));
    if (s % 2 != 0) r = -r;
    return r;
}

// (c choose k)_q for arbitrary integer c, i.e. prod_{s=1..k} (q^(c+1-s)-1)/(q^s-1)
inline LaurentZ gauss_binom_any(long c, long k) {
    return c >= 0 ? gauss_binom(c, k) : neg_gauss_binom(-c, k);
}

inline LaurentZ gauss_multinom(long n, const std::vector<long>& k) {
    long sum = 0;
    for (long ki : k) {
        if (ki < 0) throw std::invalid_argument("gauss_multinom: parts must be >= 0");
        sum += ki;
    }
    if (sum > n) throw std::invalid_argument("gauss_multinom: parts sum above n");
    LaurentZ den(1);
    for (long ki : k) den *= qfact(ki);
    return laurent_divexact(qfact(n), den);
}

// [n over s]_q as an exact quotient of balanced factorials
inline LaurentZ bal_binom(long n, long s) {
    if (s < 0 || n < 0 || s > n) throw std::invalid_argument("bal_binom: need 0 <= s <= n");
    return laurent_divexact(bal_fact(n), bal_fact(s) * bal_fact(n - s));
}

inline CycloZ specialize_eps(const LaurentZ& x, long ell) { return CycloZ::from_laurent(x, ell); }

inline Integer specialize_one(const LaurentZ& x) { return x.eval_one(); }

// substitute a rational value for q
inline RationalQ subst_q(const LaurentZ& x, const RationalQ& p) {
    RationalQ r;
    for (const auto& [e, c] : x.terms()) r += RationalQ(c) * p.pow(e);
    return r;
}

}  // namespace qhyper
