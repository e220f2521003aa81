#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qhyper {

using Integer = mpz_class;

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_binom(long n, long k) {
    if (k < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// exact quotient; caller guarantees divisibility
inline Integer int_divexact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long choose2(long m) { return m * (m - 1) / 2; }

inline std::string int_str(const Integer& a) { return a.get_str(); }

}  // namespace qhyper
