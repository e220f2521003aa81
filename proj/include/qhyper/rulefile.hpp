#pragma once

#include <cctype>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "rewrite.hpp"

namespace qhyper {

// Rule-set files: one rule per line,
//   LHS_WORD -> coeff WORD (+ coeff WORD)*
// with bracketed letter identifiers and compact scalar tokens, e.g.
//   t[2,1] t[1,2] -> 1 t[1,2] t[2,1]
//   t[2,2] t[1,1] -> 1 t[1,1] t[2,2] + -q+q^-1 t[1,2] t[2,1]

namespace detail {

// compact scalar: integer-coefficient Laurent polynomial in q, optionally
// a quotient  poly/poly  or  (poly)/(poly), no embedded spaces
inline LaurentZ parse_compact_laurent(const std::string& s, size_t& pos, char stop) {
    LaurentZ out;
    long sign = 1;
    while (pos < s.size() && s[pos] != stop && s[pos] != ')') {
        char c = s[pos];
        if (c == '+') { sign = 1; ++pos; continue; }
        if (c == '-') { sign = -1; ++pos; continue; }
        Integer coef = 1;
        bool have_digits = false;
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            have_digits = true;
        }
        if (have_digits) coef = Integer(digits);
        long e = 0;
        if (pos < s.size() && s[pos] == '*') ++pos;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                long es = 1;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    if (s[pos] == '-') es = -1;
                    ++pos;
                }
                std::string ed;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ed += s[pos++];
                if (ed.empty()) throw std::invalid_argument("scalar: missing exponent");
                e = es * std::atol(ed.c_str());
            }
        } else if (!have_digits) {
            throw std::invalid_argument("scalar: unexpected character '" + std::string(1, c) + "'");
        }
        if (sign < 0) coef = -coef;
        out.add_term(e, coef);
        sign = 1;
    }
    return out;
}

inline RationalQ parse_compact_scalar(const std::string& tok) {
    size_t pos = 0;
    LaurentZ num, den;
    bool paren = !tok.empty() && tok[0] == '(';
    if (paren) {
        ++pos;
        num = parse_compact_laurent(tok, pos, ')');
        if (pos >= tok.size() || tok[pos] != ')') throw std::invalid_argument("scalar: missing )");
        ++pos;
    } else {
        num = parse_compact_laurent(tok, pos, '/');
    }
    if (pos == tok.size()) return RationalQ(num);
    if (tok[pos] != '/') throw std::invalid_argument("scalar: junk after numerator");
    ++pos;
    if (pos < tok.size() && tok[pos] == '(') {
        ++pos;
        den = parse_compact_laurent(tok, pos, ')');
        if (pos >= tok.size() || tok[pos] != ')') throw std::invalid_argument("scalar: missing )");
        ++pos;
    } else {
        den = parse_compact_laurent(tok, pos, '\0');
    }
    if (pos != tok.size()) throw std::invalid_argument("scalar: junk after denominator");
    return RationalQ(num) / RationalQ(den);
}

inline std::string compact_laurent(const LaurentZ& x) {
    std::string s = x.str();
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

inline std::string compact_scalar(const RationalQ& c) {
    std::string n = compact_laurent(c.num().to_laurent());
    if (c.den().is_one()) return n;
    std::string d = compact_laurent(c.den().to_laurent());
    bool wn = c.num().to_laurent().terms().size() > 1;
    bool wd = c.den().to_laurent().terms().size() > 1;
    return (wn ? "(" + n + ")" : n) + "/" + (wd ? "(" + d + ")" : d);
}

}  // namespace detail

inline void save_rules(std::ostream& os, const RewriteSystem<RationalQ>& sys) {
    const Alphabet& a = sys.alphabet();
    for (const auto& r : sys.rules()) {
        os << a.word_str(r.lhs) << " ->";
        if (r.rhs.is_zero()) {
            os << " 0";
        } else {
            bool first = true;
            for (auto it = r.rhs.terms().rbegin(); it != r.rhs.terms().rend(); ++it) {
                os << (first ? " " : " + ") << detail::compact_scalar(it->second);
                if (!it->first.empty()) os << " " << a.word_str(it->first);
                first = false;
            }
        }
        os << "\n";
    }
}

inline RewriteSystem<RationalQ> load_rules(std::istream& is, const Alphabet& alpha) {
    RewriteSystem<RationalQ> sys(alpha, RationalQ(1));
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        size_t arrow = toks.size();
        for (size_t i = 0; i < toks.size(); ++i)
            if (toks[i] == "->") { arrow = i; break; }
        if (arrow == toks.size() || arrow == 0)
            throw std::invalid_argument("rule file line " + std::to_string(lineno) + ": missing ->");
        Word lhs;
        for (size_t i = 0; i < arrow; ++i) lhs.push_back(alpha.index_of(toks[i]));
        NCPoly<RationalQ> rhs;
        size_t i = arrow + 1;
        if (i < toks.size() && toks[i] == "0" && i + 1 == toks.size()) {
            sys.add_rule(lhs, rhs);
            continue;
        }
        while (i < toks.size()) {
            RationalQ c = detail::parse_compact_scalar(toks[i]);
            ++i;
            Word w;
            while (i < toks.size() && toks[i] != "+") w.push_back(alpha.index_of(toks[i++]));
            if (i < toks.size() && toks[i] == "+") ++i;
            rhs.add(w, c);
        }
        sys.add_rule(lhs, rhs);
    }
    return sys;
}

}  // namespace qhyper
