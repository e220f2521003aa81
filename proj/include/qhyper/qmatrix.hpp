#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnum.hpp"
#include "rewrite.hpp"

namespace qhyper {

enum class AlgKind { M, GL, SL };

inline std::string alg_kind_name(AlgKind k) {
    switch (k) {
        case AlgKind::M: return "M";
        case AlgKind::GL: return "GL";
        case AlgKind::SL: return "SL";
    }
    return "?";
}

struct MatPos {
    int i, j;  // 1-based row, column
};

// Exponent matrix of an ordered monomial in the t_{i,j}, in the fixed factor
// order: upper triangle by lex (i,j), then the diagonal, then the lower
// triangle by lex.  Exponents are indexed by letter precedence.
class MatMonomial {
  public:
    MatMonomial() = default;
    explicit MatMonomial(size_t nletters) : e_(nletters, 0), deg_(0) {}

    static MatMonomial one(size_t nletters) { return MatMonomial(nletters); }

    long degree() const { return deg_; }
    const std::vector<unsigned>& exps() const { return e_; }
    unsigned exp(size_t letter) const { return e_[letter]; }
    bool is_one() const { return deg_ == 0; }

    void bump(size_t letter, unsigned by = 1) {
        e_[letter] += by;
        deg_ += by;
    }

    Word word() const {
        Word w;
        w.reserve(static_cast<size_t>(deg_));
        for (size_t l = 0; l < e_.size(); ++l)
            for (unsigned k = 0; k < e_[l]; ++k) w.push_back(static_cast<Letter>(l));
        return w;
    }

    static MatMonomial from_word(const Word& w, size_t nletters) {
        MatMonomial m(nletters);
        for (Letter l : w) m.bump(l);
        return m;
    }

    // deglex, consistent with DegLexLess on the canonical words
    bool operator<(const MatMonomial& o) const {
        if (deg_ != o.deg_) return deg_ < o.deg_;
        for (size_t l = 0; l < e_.size(); ++l)
            if (e_[l] != o.e_[l]) return e_[l] > o.e_[l];
        return false;
    }
    bool operator==(const MatMonomial& o) const { return e_ == o.e_; }
    bool operator!=(const MatMonomial& o) const { return !(*this == o); }

  private:
    std::vector<unsigned> e_;
    long deg_ = 0;
};

class QMatElem;

// The quantum matrix bialgebra F_q[M_n]: alphabet, Manin straightening rules,
// with the companion systems (root-of-unity and SL quotients) built on demand.
class MatAlgebra {
  public:
    static const MatAlgebra& get(int n) {
        static std::mutex mx;
        static std::map<int, std::unique_ptr<MatAlgebra>> cache;
        std::lock_guard<std::mutex> g(mx);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<MatAlgebra>(new MatAlgebra(n))).first;
        return *it->second;
    }

    int n() const { return n_; }
    size_t nletters() const { return pos_.size(); }
    const Alphabet& alphabet() const { return sys_.alphabet(); }
    const RewriteSystem<LaurentZ>& system() const { return sys_; }
    MatPos pos(Letter l) const { return pos_[l]; }
    Letter letter(int i, int j) const { return letter_of_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }

    // normal form of a single word, over Z[q,q^-1]
    NCPoly<LaurentZ> straighten(const Word& w) const { return sys_.reduce_word(w); }

    // quantum determinant as a straightened free-algebra polynomial
    const NCPoly<LaurentZ>& qdet_poly() const {
        std::lock_guard<std::mutex> g(det_mx_);
        if (!det_) {
            NCPoly<LaurentZ> d;
            std::vector<int> sigma(n_);
            std::iota(sigma.begin(), sigma.end(), 1);
            do {
                long inv = 0;
                for (int a = 0; a < n_; ++a)
                    for (int b = a + 1; b < n_; ++b)
                        if (sigma[a] > sigma[b]) ++inv;
                Word w;
                for (int r = 1; r <= n_; ++r) w.push_back(letter(r, sigma[r - 1]));
                LaurentZ c = LaurentZ::q_power(inv);
                if (inv % 2 != 0) c = -c;
                d += NCPoly<LaurentZ>::monomial(c, std::move(w));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            det_ = std::make_unique<NCPoly<LaurentZ>>(sys_.reduce(d));
        }
        return *det_;
    }

    // Manin rules plus D_q = 1, completed up to the degree bound; the normal
    // words are exactly B_{SL_n}
    const RewriteSystem<RationalQ>& sl_system(long bound) const {
        std::lock_guard<std::mutex> g(sl_mx_);
        auto it = sl_.find(bound);
        if (it == sl_.end()) {
            RewriteSystem<RationalQ> s =
                sys_.map_coeffs<RationalQ>([](const LaurentZ& c) { return RationalQ(c); });
            NCPoly<RationalQ> det = qdet_poly().map_coeffs<RationalQ>(
                [](const LaurentZ& c) { return RationalQ(c); });
            NCPoly<RationalQ> eq = det;
            eq.add(Word{}, RationalQ(-1));
            const auto& [lw, lc] = eq.leading();
            NCPoly<RationalQ> rest = eq;
            rest.add(lw, -lc);
            s.add_rule(lw, rest.scaled(-(lc.inverse())));
            s.complete(bound);
            it = sl_.emplace(bound, std::move(s)).first;
        }
        return it->second;
    }

  private:
    explicit MatAlgebra(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("MatAlgebra: n must be >= 1");
        Alphabet alpha;
        auto add = [&](int i, int j) {
            pos_.push_back({i, j});
            alpha.names.push_back("t[" + std::to_string(i) + "," + std::to_string(j) + "]");
        };
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) add(i, j);
        for (int k = 1; k <= n; ++k) add(k, k);
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) add(i, j);
        letter_of_.assign(static_cast<size_t>(n) * n, 0);
        for (size_t l = 0; l < pos_.size(); ++l)
            letter_of_[static_cast<size_t>(pos_[l].i - 1) * n + (pos_[l].j - 1)] =
                static_cast<Letter>(l);

        sys_ = RewriteSystem<LaurentZ>(alpha, LaurentZ(1));
        // one straightening rule per out-of-order pair of distinct letters
        for (Letter x = 0; x < pos_.size(); ++x) {
            for (Letter y = 0; y < x; ++y) {
                // rewrite x y (x after y in precedence) into y x + correction
                auto [a, b] = std::pair<int, int>{pos_[x].i, pos_[x].j};
                auto [c, d] = std::pair<int, int>{pos_[y].i, pos_[y].j};
                NCPoly<LaurentZ> rhs;
                Word yx{y, x};
                if (a == c) {
                    rhs.add(yx, LaurentZ::q_power(b < d ? 1 : -1));
                } else if (b == d) {
                    rhs.add(yx, LaurentZ::q_power(a < c ? 1 : -1));
                } else if ((a < c && d < b) || (c < a && b < d)) {
                    rhs.add(yx, LaurentZ(1));  // counter-diagonal pair commutes
                } else if (a < c && b < d) {
                    rhs.add(yx, LaurentZ(1));
                    Word corr{letter(a, d), letter(c, b)};
                    std::sort(corr.begin(), corr.end());
                    rhs.add(corr, LaurentZ::q_power(1) - LaurentZ::q_power(-1));
                } else {  // c < a && d < b
                    rhs.add(yx, LaurentZ(1));
                    Word corr{letter(c, b), letter(a, d)};
                    std::sort(corr.begin(), corr.end());
                    rhs.add(corr, -(LaurentZ::q_power(1) - LaurentZ::q_power(-1)));
                }
                sys_.add_rule(Word{x, y}, std::move(rhs));
            }
        }
        sys_.freeze();
    }

    int n_;
    std::vector<MatPos> pos_;
    std::vector<Letter> letter_of_;
    RewriteSystem<LaurentZ> sys_;

    mutable std::mutex det_mx_;
    mutable std::unique_ptr<NCPoly<LaurentZ>> det_;
    mutable std::mutex sl_mx_;
    mutable std::map<long, RewriteSystem<RationalQ>> sl_;
};

// the four Manin relation families for size n, as an order-compatible
// rewriting system whose normal words are exactly B_{M_n}
inline const RewriteSystem<LaurentZ>& manin_system(int n) { return MatAlgebra::get(n).system(); }

}  // namespace qhyper
