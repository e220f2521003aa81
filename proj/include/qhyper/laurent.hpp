#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "intutil.hpp"

namespace qhyper {

// Element of Z[q,q^-1]. Terms map exponent -> nonzero coefficient;
// the zero element is the empty map.
class LaurentZ {
  public:
    LaurentZ() = default;
    LaurentZ(long c) { if (c != 0) terms_[0] = c; }
    LaurentZ(const Integer& c) { if (c != 0) terms_[0] = c; }
    LaurentZ(const Integer& c, long e) { if (c != 0) terms_[e] = c; }

    static LaurentZ q_power(long e) { return LaurentZ(1, e); }

    const std::map<long, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    // single term +/- q^e
    bool is_unit_monomial() const {
        if (terms_.size() != 1) return false;
        const Integer& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    long min_exp() const { require_nonzero(); return terms_.begin()->first; }
    long max_exp() const { require_nonzero(); return terms_.rbegin()->first; }

    Integer coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(long e, const Integer& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentZ& operator+=(const LaurentZ& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentZ& operator-=(const LaurentZ& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { a += b; return a; }
    friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { a -= b; return a; }
    LaurentZ operator-() const {
        LaurentZ r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
        LaurentZ r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentZ& operator*=(const LaurentZ& o) { *this = *this * o; return *this; }

    LaurentZ shifted(long e) const {
        LaurentZ r;
        for (const auto& [ee, c] : terms_) r.terms_.emplace(ee + e, c);
        return r;
    }

    // inverse of a +/-q^e term
    LaurentZ unit_inverse() const {
        if (!is_unit_monomial()) throw std::domain_error("LaurentZ: not a unit");
        return LaurentZ(terms_.begin()->second, -terms_.begin()->first);
    }

    bool operator==(const LaurentZ& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentZ& o) const { return !(*this == o); }
    bool operator<(const LaurentZ& o) const { return terms_ < o.terms_; }

    // q |-> q^-1
    LaurentZ bar() const {
        LaurentZ r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // q |-> q^k, k >= 1
    LaurentZ inflate(long k) const {
        LaurentZ r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
        return r;
    }

    Integer eval_one() const {
        Integer s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    LaurentZ pow(unsigned long m) const {
        LaurentZ r(1);
        LaurentZ b = *this;
        while (m) {
            if (m & 1) r *= b;
            b *= b;
            m >>= 1;
        }
        return r;
    }

    // sum of c*q^e terms, exponents descending
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Integer c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            long e = it->first;
            if (e == 0) {
                os << c.get_str();
            } else {
                if (c != 1) os << c.get_str() << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("LaurentZ: zero has no exponent range");
    }

    std::map<long, Integer> terms_;
};

inline LaurentZ operator*(const Integer& c, const LaurentZ& a) { return LaurentZ(c) * a; }

}  // namespace qhyper
