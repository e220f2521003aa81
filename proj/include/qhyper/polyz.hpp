#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "intutil.hpp"
#include "laurent.hpp"

namespace qhyper {

// Dense polynomial over Z in q, ascending coefficients, no trailing zeros.
class PolyZ {
  public:
    PolyZ() = default;
    PolyZ(long c) { if (c != 0) c_.push_back(c); }
    PolyZ(const Integer& c) { if (c != 0) c_.push_back(c); }
    explicit PolyZ(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

    static PolyZ monomial(const Integer& c, size_t e) {
        PolyZ p;
        if (c == 0) return p;
        p.c_.assign(e + 1, Integer(0));
        p.c_[e] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    size_t degree() const {
        if (is_zero()) throw std::domain_error("PolyZ: degree of zero");
        return c_.size() - 1;
    }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lc() const {
        if (is_zero()) throw std::domain_error("PolyZ: lc of zero");
        return c_.back();
    }
    Integer coeff(size_t e) const { return e < c_.size() ? c_[e] : Integer(0); }

    friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
        PolyZ r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b) {
        PolyZ r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    PolyZ operator-() const {
        PolyZ r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
        if (a.is_zero() || b.is_zero()) return PolyZ();
        PolyZ r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend PolyZ operator*(const Integer& s, const PolyZ& a) {
        if (s == 0) return PolyZ();
        PolyZ r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    bool operator==(const PolyZ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyZ& o) const { return !(*this == o); }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : c_) {
            g = int_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    PolyZ divexact_scalar(const Integer& s) const {
        PolyZ r = *this;
        for (auto& c : r.c_) c = int_divexact(c, s);
        return r;
    }

    // quotient with remainder guaranteed zero by the caller
    PolyZ divexact(const PolyZ& d) const {
        PolyZ q, r;
        if (!divide(*this, d, q, r) || !r.is_zero())
            throw std::domain_error("PolyZ: inexact division");
        return q;
    }

    // classical division; returns false if some coefficient step is inexact over Z
    static bool divide(const PolyZ& a, const PolyZ& d, PolyZ& q, PolyZ& r) {
        if (d.is_zero()) throw std::domain_error("PolyZ: division by zero");
        r = a;
        q = PolyZ();
        if (a.is_zero()) return true;
        if (a.degree() < d.degree()) return true;
        q.c_.assign(a.degree() - d.degree() + 1, Integer(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            if (!mpz_divisible_p(r.lc().get_mpz_t(), d.lc().get_mpz_t())) return false;
            Integer f = int_divexact(r.lc(), d.lc());
            size_t sh = r.degree() - d.degree();
            q.c_[sh] = f;
            for (size_t i = 0; i < d.c_.size(); ++i) r.c_[i + sh] -= f * d.c_[i];
            r.trim();
        }
        return true;
    }

    Integer eval(const Integer& x) const {
        Integer v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    LaurentZ to_laurent() const {
        LaurentZ r;
        for (size_t i = 0; i < c_.size(); ++i) r.add_term(static_cast<long>(i), c_[i]);
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

// primitive pseudo-remainder sequence
inline PolyZ poly_gcd(PolyZ a, PolyZ b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Integer ca = a.content(), cb = b.content();
    a = a.divexact_scalar(ca);
    b = b.divexact_scalar(cb);
    while (!b.is_zero()) {
        if (a.is_zero()) { a = b; break; }
        if (a.degree() < b.degree()) std::swap(a, b);
        // pseudo-remainder of lc(b)^k * a by b
        size_t k = a.degree() - b.degree() + 1;
        PolyZ r = int_pow(b.lc(), static_cast<unsigned long>(k)) * a;
        PolyZ quo, rem;
        if (!PolyZ::divide(r, b, quo, rem))
            throw std::logic_error("poly_gcd: pseudo-division failed");
        a = b;
        b = rem;
        if (!b.is_zero()) b = b.divexact_scalar(b.content());
    }
    Integer cg = int_gcd(ca, cb);
    PolyZ g = a.divexact_scalar(a.content());
    if (g.lc() < 0) g = -g;
    return cg * g;
}

// split a Laurent polynomial as poly * q^shift with shift = min exponent
inline std::pair<PolyZ, long> laurent_split(const LaurentZ& x) {
    if (x.is_zero()) return {PolyZ(), 0};
    long m = x.min_exp();
    std::vector<Integer> c(static_cast<size_t>(x.max_exp() - m) + 1, Integer(0));
    for (const auto& [e, co] : x.terms()) c[static_cast<size_t>(e - m)] = co;
    return {PolyZ(std::move(c)), m};
}

// exact division in Z[q,q^-1]
inline LaurentZ laurent_divexact(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero()) return LaurentZ();
    auto [pa, sa] = laurent_split(a);
    auto [pb, sb] = laurent_split(b);
    return pa.divexact(pb).to_laurent().shifted(sa - sb);
}

}  // namespace qhyper
