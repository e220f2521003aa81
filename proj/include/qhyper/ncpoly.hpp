#pragma once

#include <map>
#include <string>

#include "word.hpp"

namespace qhyper {

// Polynomial in the free algebra over coefficient domain C.
// C needs: default ctor (zero), +=, *, unary -, is_zero, is_one, ==, str().
template <class C>
class NCPoly {
  public:
    using Terms = std::map<Word, C, DegLexLess>;

    NCPoly() = default;
    static NCPoly unit(const C& c) {
        NCPoly p;
        p.add(Word{}, c);
        return p;
    }
    static NCPoly monomial(const C& c, Word w) {
        NCPoly p;
        p.add(std::move(w), c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add(Word w, const C& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.t_) add(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
    NCPoly operator-() const {
        NCPoly r;
        for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
        return r;
    }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.t_)
            for (const auto& [wb, cb] : b.t_) r.add(word_concat(wa, wb), ca * cb);
        return r;
    }

    NCPoly scaled(const C& c) const {
        NCPoly r;
        if (c.is_zero()) return r;
        for (const auto& [w, co] : t_) r.add(w, co * c);
        return r;
    }

    // c * u . this . v
    NCPoly framed(const C& c, const Word& u, const Word& v) const {
        NCPoly r;
        for (const auto& [w, co] : t_) {
            Word nw = word_concat(word_concat(u, w), v);
            r.add(std::move(nw), co * c);
        }
        return r;
    }

    // u . this . v
    NCPoly framed(const Word& u, const Word& v) const {
        NCPoly r;
        for (const auto& [w, co] : t_) {
            Word nw = word_concat(word_concat(u, w), v);
            r.add(std::move(nw), co);
        }
        return r;
    }

    bool operator==(const NCPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    const std::pair<const Word, C>& leading() const {
        if (t_.empty()) throw std::domain_error("NCPoly: leading term of zero");
        return *t_.rbegin();
    }

    size_t degree() const {
        if (t_.empty()) throw std::domain_error("NCPoly: degree of zero");
        return t_.rbegin()->first.size();
    }

    template <class D, class F>
    NCPoly<D> map_coeffs(F f) const {
        NCPoly<D> r;
        for (const auto& [w, c] : t_) r.add(w, f(c));
        return r;
    }

    std::string str(const Alphabet& alpha) const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) s += " + ";
            first = false;
            s += "(" + it->second.str() + ")";
            if (!it->first.empty()) s += " " + alpha.word_str(it->first);
        }
        return s;
    }

  private:
    Terms t_;
};

}  // namespace qhyper
