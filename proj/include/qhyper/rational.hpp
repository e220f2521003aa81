#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "laurent.hpp"
#include "polyz.hpp"

namespace qhyper {

// Element of Q(q) as a reduced fraction of integer polynomials.
// Canonical form: gcd(num, den) = 1 in Z[q] (polynomial part and content),
// den != 0 with positive leading coefficient, so equality is representational.
class RationalQ {
  public:
    RationalQ() : num_(), den_(1) {}
    RationalQ(long c) : num_(c), den_(1) {}
    RationalQ(const Integer& c) : num_(c), den_(1) {}
    RationalQ(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    RationalQ(const LaurentZ& x) {
        auto [p, s] = laurent_split(x);
        if (s >= 0) {
            num_ = PolyZ::monomial(1, static_cast<size_t>(s)) * p;
            den_ = PolyZ(1);
        } else {
            num_ = std::move(p);
            den_ = PolyZ::monomial(1, static_cast<size_t>(-s));
        }
        normalize();
    }

    static RationalQ q_power(long e) { return RationalQ(LaurentZ::q_power(e)); }

    const PolyZ& num() const { return num_; }
    const PolyZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
        PolyZ g = poly_gcd(a.den_, b.den_);
        PolyZ da = a.den_.divexact(g), db = b.den_.divexact(g);
        return RationalQ(a.num_ * db + b.num_ * da, da * b.den_);
    }
    friend RationalQ operator-(const RationalQ& a, const RationalQ& b) { return a + (-b); }
    RationalQ operator-() const {
        RationalQ r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
        if (a.is_zero() || b.is_zero()) return RationalQ();
        PolyZ g1 = poly_gcd(a.num_, b.den_);
        PolyZ g2 = poly_gcd(b.num_, a.den_);
        RationalQ r;
        r.num_ = a.num_.divexact(g1) * b.num_.divexact(g2);
        r.den_ = a.den_.divexact(g2) * b.den_.divexact(g1);
        r.fix_sign();
        return r;
    }
    friend RationalQ operator/(const RationalQ& a, const RationalQ& b) { return a * b.inverse(); }

    RationalQ& operator+=(const RationalQ& o) { *this = *this + o; return *this; }
    RationalQ& operator-=(const RationalQ& o) { *this = *this - o; return *this; }
    RationalQ& operator*=(const RationalQ& o) { *this = *this * o; return *this; }
    RationalQ& operator/=(const RationalQ& o) { *this = *this / o; return *this; }

    RationalQ inverse() const {
        if (is_zero()) throw std::domain_error("RationalQ: inverse of zero");
        RationalQ r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_sign();
        return r;
    }

    RationalQ pow(long m) const {
        if (m < 0) return inverse().pow(-m);
        RationalQ r(1), b = *this;
        unsigned long e = static_cast<unsigned long>(m);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const RationalQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalQ& o) const { return !(*this == o); }

    // defined exactly when the reduced denominator is a power of q
    std::optional<LaurentZ> to_laurent() const {
        if (is_zero()) return LaurentZ();
        size_t d = den_.degree();
        if (den_.coeff(d) != 1) return std::nullopt;
        for (size_t i = 0; i < d; ++i)
            if (den_.coeff(i) != 0) return std::nullopt;
        return num_.to_laurent().shifted(-static_cast<long>(d));
    }
    bool is_laurent() const { return to_laurent().has_value(); }

    std::string str() const {
        std::string s = num_.to_laurent().str();
        if (den_.is_one()) return s;
        bool wrap = num_.is_zero() ? false : num_.to_laurent().terms().size() > 1;
        std::string d = den_.to_laurent().str();
        bool wrapd = den_.to_laurent().terms().size() > 1 || den_.lc() < 0;
        std::string r = wrap ? "(" + s + ")" : s;
        r += "/";
        r += wrapd ? "(" + d + ")" : d;
        return r;
    }

  private:
    void fix_sign() {
        if (!den_.is_zero() && den_.lc() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
        if (num_.is_zero()) {
            den_ = PolyZ(1);
            return;
        }
        PolyZ g = poly_gcd(num_, den_);
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
        fix_sign();
    }

    PolyZ num_;
    PolyZ den_;
};

inline RationalQ operator*(const LaurentZ& a, const RationalQ& b) { return RationalQ(a) * b; }

}  // namespace qhyper
