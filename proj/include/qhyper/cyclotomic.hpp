#pragma once

#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "polyz.hpp"

namespace qhyper {

// l-th cyclotomic polynomial, by exact division of q^l - 1 by the
// cyclotomic polynomials of proper divisors.
inline PolyZ cyclotomic(long l) {
    if (l < 1) throw std::invalid_argument("cyclotomic: l must be positive");
    std::vector<Integer> xl(static_cast<size_t>(l) + 1, Integer(0));
    xl[0] = -1;
    xl[static_cast<size_t>(l)] = 1;
    PolyZ p{std::vector<Integer>(xl)};
    for (long d = 1; d < l; ++d)
        if (l % d == 0) p = p.divexact(cyclotomic(d));
    return p;
}

// Z_eps = Z[q]/(phi_l(q)), l odd >= 3; eps is the residue class of q.
class CycloZ {
  public:
    CycloZ() : ell_(0) {}
    explicit CycloZ(long ell, const Integer& c = 0) : ell_(check(ell)), res_(deg(ell), Integer(0)) {
        res_[0] = c;
    }
    CycloZ(long ell, std::vector<Integer> residue) : ell_(check(ell)), res_(std::move(residue)) {
        if (res_.size() != deg(ell_)) throw std::invalid_argument("CycloZ: residue length != deg phi_l");
    }

    long ell() const { return ell_; }
    const std::vector<Integer>& residue() const { return res_; }

    static CycloZ eps_power(long ell, long e) {
        // q^l = 1 in Z_eps, so reduce the exponent mod l first
        long r = e % ell;
        if (r < 0) r += ell;
        std::vector<Integer> v(static_cast<size_t>(r) + 1, Integer(0));
        v.back() = 1;
        CycloZ x(ell);
        x.res_ = reduce(ell, std::move(v));
        return x;
    }

    static CycloZ from_laurent(const LaurentZ& x, long ell) {
        CycloZ r(ell);
        for (const auto& [e, c] : x.terms()) r += c * eps_power(ell, e);
        return r;
    }

    bool is_zero() const {
        for (const auto& c : res_) if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (res_.empty() || res_[0] != 1) return false;
        for (size_t i = 1; i < res_.size(); ++i) if (res_[i] != 0) return false;
        return true;
    }

    CycloZ& operator+=(const CycloZ& o) {
        if (o.ell_ == 0) return *this;
        coerce(o);
        for (size_t i = 0; i < res_.size(); ++i) res_[i] += o.res_[i];
        return *this;
    }
    CycloZ& operator-=(const CycloZ& o) {
        if (o.ell_ == 0) return *this;
        coerce(o);
        for (size_t i = 0; i < res_.size(); ++i) res_[i] -= o.res_[i];
        return *this;
    }
    friend CycloZ operator+(CycloZ a, const CycloZ& b) { a += b; return a; }
    friend CycloZ operator-(CycloZ a, const CycloZ& b) { a -= b; return a; }
    CycloZ operator-() const {
        CycloZ r = *this;
        for (auto& c : r.res_) c = -c;
        return r;
    }
    friend CycloZ operator*(const CycloZ& a, const CycloZ& b) {
        if (a.ell_ == 0 || b.ell_ == 0) return CycloZ();
        a.match(b);
        std::vector<Integer> conv(2 * a.res_.size(), Integer(0));
        for (size_t i = 0; i < a.res_.size(); ++i) {
            if (a.res_[i] == 0) continue;
            for (size_t j = 0; j < b.res_.size(); ++j) conv[i + j] += a.res_[i] * b.res_[j];
        }
        CycloZ r(a.ell_);
        r.res_ = reduce(a.ell_, std::move(conv));
        return r;
    }
    CycloZ& operator*=(const CycloZ& o) { *this = *this * o; return *this; }
    friend CycloZ operator*(const Integer& s, const CycloZ& a) {
        CycloZ r = a;
        for (auto& c : r.res_) c *= s;
        return r;
    }

    bool operator==(const CycloZ& o) const {
        if (ell_ != o.ell_) return is_zero() && o.is_zero();
        return res_ == o.res_;
    }
    bool operator!=(const CycloZ& o) const { return !(*this == o); }

    CycloZ pow(unsigned long m) const {
        CycloZ r(ell_, 1), b = *this;
        while (m) {
            if (m & 1) r *= b;
            b *= b;
            m >>= 1;
        }
        return r;
    }

    // units of the form +/- eps^k only (all we ever need to invert)
    CycloZ unit_inverse() const {
        for (long k = 0; k < ell_; ++k) {
            CycloZ p = eps_power(ell_, k);
            if (*this == p) return eps_power(ell_, -k);
            if (*this == -p) return -eps_power(ell_, -k);
        }
        throw std::domain_error("CycloZ: not a monomial unit");
    }

    std::string str() const {
        LaurentZ l;
        for (size_t i = 0; i < res_.size(); ++i) l.add_term(static_cast<long>(i), res_[i]);
        std::string body = l.str();
        for (auto& ch : body) if (ch == 'q') ch = 'e';
        return body;
    }

  private:
    static long check(long ell) {
        if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("CycloZ: l must be odd and >= 3");
        return ell;
    }
    static size_t deg(long ell) { return cyclo(ell).degree(); }
    static const PolyZ& cyclo(long ell) {
        static std::map<long, PolyZ> cache;
        auto it = cache.find(ell);
        if (it == cache.end()) it = cache.emplace(ell, cyclotomic(ell)).first;
        return it->second;
    }
    static std::vector<Integer> reduce(long ell, std::vector<Integer> v) {
        const PolyZ& phi = cyclo(ell);
        size_t d = phi.degree();
        while (v.size() > d) {
            Integer top = v.back();
            size_t sh = v.size() - 1 - d;
            if (top != 0)
                for (size_t i = 0; i <= d; ++i) v[sh + i] -= top * phi.coeff(i);
            v.pop_back();
        }
        v.resize(d, Integer(0));
        return v;
    }
    void match(const CycloZ& o) const {
        if (ell_ != o.ell_) throw std::invalid_argument("CycloZ: mixed moduli");
    }
    // a default-constructed value is the zero of any modulus
    void coerce(const CycloZ& o) {
        if (ell_ == 0 && o.ell_ != 0) {
            ell_ = o.ell_;
            res_.assign(o.res_.size(), Integer(0));
        }
        match(o);
    }

    long ell_;
    std::vector<Integer> res_;
};

}  // namespace qhyper
