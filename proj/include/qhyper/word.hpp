#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhyper {

using Letter = std::uint8_t;

// Word in the free monoid; letters are indices into an Alphabet, and the
// index order is the precedence used by the monomial order.
using Word = std::vector<Letter>;

struct Alphabet {
    std::vector<std::string> names;

    size_t size() const { return names.size(); }

    Letter index_of(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<Letter>(i);
        throw std::invalid_argument("Alphabet: unknown letter " + name);
    }

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += " ";
            s += names[w[i]];
        }
        return s;
    }
};

// degree-lexicographic: by length, ties broken left-to-right by precedence
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word word_concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// first position where `pat` occurs as a factor of `w`, or npos
inline size_t word_find(const Word& w, const Word& pat, size_t from = 0) {
    if (pat.empty() || pat.size() > w.size()) return std::string::npos;
    for (size_t i = from; i + pat.size() <= w.size(); ++i) {
        bool hit = true;
        for (size_t j = 0; j < pat.size(); ++j)
            if (w[i + j] != pat[j]) { hit = false; break; }
        if (hit) return i;
    }
    return std::string::npos;
}

}  // namespace qhyper
