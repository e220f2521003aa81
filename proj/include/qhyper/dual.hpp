#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyper.hpp"

namespace qhyper {

// Exponent label of a PBW monomial of the enveloping-algebra side: upper
// root exponents, integer torus exponents, lower root exponents.
struct UMonomial {
    std::vector<long> e;  // indexed like the E letters, lex by (i,j)
    std::vector<long> z;  // torus, k = 1..n
    std::vector<long> f;  // indexed like the F letters, lex by (i,j)
};

// The dual quantum group H_q^g: quantum root vectors as alphabet letters,
// torus Laurent monomials, and the straightening rules completed up to a
// degree bound.  Letter precedence: E block (lex), torus, F block (lex).
class DualAlgebra {
  public:
    static const DualAlgebra& get(int n, long bound = 6) {
        static std::mutex mx;
        static std::map<std::pair<int, long>, std::unique_ptr<DualAlgebra>> cache;
        std::lock_guard<std::mutex> g(mx);
        auto key = std::make_pair(n, bound);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<DualAlgebra>(new DualAlgebra(n, bound))).first;
        return *it->second;
    }

    int n() const { return n_; }
    long bound() const { return bound_; }
    const RewriteSystem<RationalQ>& system() const { return sys_; }
    const Alphabet& alphabet() const { return sys_.alphabet(); }
    size_t root_count() const { return roots_.size(); }

    Letter e_letter(int i, int j) const { return static_cast<Letter>(root_index(i, j)); }
    Letter la_letter(int k, bool inverse) const {
        return static_cast<Letter>(roots_.size() + 2 * (k - 1) + (inverse ? 1 : 0));
    }
    Letter f_letter(int j, int i) const {
        return static_cast<Letter>(roots_.size() + 2 * n_ + root_index(i, j));
    }
    std::pair<int, int> root_of(size_t idx) const { return roots_[idx]; }

    NCPoly<RationalQ> reduce(const NCPoly<RationalQ>& p) const { return sys_.reduce(p); }

    // expected number of PBW monomials of total word length d
    Integer pbw_count(long d) const {
        size_t N = roots_.size();
        // torus: coefficient of x^w in ((1+x)/(1-x))^n
        std::vector<Integer> torus(d + 1, Integer(0));
        {
            std::vector<Integer> cur(d + 1, Integer(0));
            cur[0] = 1;
            for (int k = 0; k < n_; ++k) {
                std::vector<Integer> next(d + 1, Integer(0));
                for (long a = 0; a <= d; ++a) {
                    if (cur[a] == 0) continue;
                    for (long w = 0; a + w <= d; ++w) next[a + w] += cur[a] * (w == 0 ? 1 : 2);
                }
                cur = std::move(next);
            }
            torus = std::move(cur);
        }
        Integer total = 0;
        for (long j = 0; j <= d; ++j)
            total += int_binom(static_cast<long>(2 * N) + j - 1, j) * torus[d - j];
        return total;
    }

  private:
    size_t root_index(int i, int j) const {
        if (i < 1 || j > n_ || i >= j) throw std::out_of_range("root index (i,j) needs i<j in range");
        size_t idx = 0;
        for (int a = 1; a <= n_; ++a)
            for (int b = a + 1; b <= n_; ++b) {
                if (a == i && b == j) return idx;
                ++idx;
            }
        throw std::logic_error("unreachable");
    }

    DualAlgebra(int n, long bound) : n_(n), bound_(bound) {
        if (n < 2) throw std::invalid_argument("DualAlgebra: n must be >= 2");
        Alphabet a;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                roots_.emplace_back(i, j);
                a.names.push_back("E[" + std::to_string(i) + "," + std::to_string(j) + "]");
            }
        for (int k = 1; k <= n; ++k) {
            a.names.push_back("La[" + std::to_string(k) + "]");
            a.names.push_back("La[" + std::to_string(k) + "]^-1");
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                a.names.push_back("F[" + std::to_string(j) + "," + std::to_string(i) + "]");
        sys_ = RewriteSystem<RationalQ>(a, RationalQ(1));

        auto qp = [](long e) { return RationalQ::q_power(e); };
        auto mono = [](const RationalQ& c, Word w) { return NCPoly<RationalQ>::monomial(c, std::move(w)); };

        // torus inverses and sorting
        for (int k = 1; k <= n; ++k) {
            sys_.add_rule(Word{la_letter(k, false), la_letter(k, true)},
                          NCPoly<RationalQ>::unit(RationalQ(1)));
            sys_.add_rule(Word{la_letter(k, true), la_letter(k, false)},
                          NCPoly<RationalQ>::unit(RationalQ(1)));
        }
        for (int k1 = 1; k1 <= n; ++k1)
            for (bool s1 : {false, true})
                for (int k2 = 1; k2 <= n; ++k2)
                    for (bool s2 : {false, true}) {
                        Letter x = la_letter(k1, s1), y = la_letter(k2, s2);
                        if (x <= y || k1 == k2) continue;
                        sys_.add_rule(Word{x, y}, mono(RationalQ(1), Word{y, x}));
                    }
        // torus past root vectors: La_h E_{i,j} = q^{d_hi - d_hj} E_{i,j} La_h
        // and La_h F_{j,i} = q^{d_hi - d_hj} F_{j,i} La_h
        auto weight = [&](int h, int i, int j) { return (h == i ? 1 : 0) - (h == j ? 1 : 0); };
        for (int h = 1; h <= n; ++h)
            for (bool inv : {false, true})
                for (const auto& [i, j] : roots_) {
                    long w = weight(h, i, j);
                    long sg = inv ? -1 : 1;
                    sys_.add_rule(Word{la_letter(h, inv), e_letter(i, j)},
                                  mono(qp(sg * w), Word{e_letter(i, j), la_letter(h, inv)}));
                    sys_.add_rule(Word{f_letter(j, i), la_letter(h, inv)},
                                  mono(qp(-sg * w), Word{la_letter(h, inv), f_letter(j, i)}));
                }
        // E and F commute
        for (const auto& [i, j] : roots_)
            for (const auto& [a2, b2] : roots_)
                sys_.add_rule(Word{f_letter(b2, a2), e_letter(i, j)},
                              mono(RationalQ(1), Word{e_letter(i, j), f_letter(b2, a2)}));
        // Defining q-brackets introducing the composite root vectors:
        //   E_{i,j} = E_{i,k} E_{k,j} - q^-1 E_{k,j} E_{i,k}
        //   F_{j,i} = (-q)^-1 (F_{j,k} F_{k,i} - q^-1 F_{k,i} F_{j,k})
        // The (-q)^-1 rescaling per composition level on the F side is what
        // makes the embedding of the function algebra a morphism and sends
        // the quantum determinant to La_1 ... La_n.
        for (const auto& [i, j] : roots_) {
            if (j - i < 2) continue;
            int k = i + 1;
            NCPoly<RationalQ> rhs = mono(qp(1), Word{e_letter(i, k), e_letter(k, j)});
            rhs += mono(-qp(1), Word{e_letter(i, j)});
            sys_.add_rule(Word{e_letter(k, j), e_letter(i, k)}, rhs);
            NCPoly<RationalQ> rhsf = mono(qp(-1), Word{f_letter(k, i), f_letter(j, k)});
            rhsf += mono(-qp(1), Word{f_letter(j, i)});
            sys_.add_rule(Word{f_letter(j, k), f_letter(k, i)}, rhsf);
        }
        // distant simple roots commute; adjacent ones satisfy the Serre
        // relations; completion derives the rest of the straightening
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < i; ++j) {
                if (i - j <= 1) continue;
                sys_.add_rule(Word{e_letter(i, i + 1), e_letter(j, j + 1)},
                              mono(RationalQ(1), Word{e_letter(j, j + 1), e_letter(i, i + 1)}));
                sys_.add_rule(Word{f_letter(i + 1, i), f_letter(j + 1, j)},
                              mono(RationalQ(1), Word{f_letter(j + 1, j), f_letter(i + 1, i)}));
            }
        for (int i = 1; i + 1 < n; ++i) {
            // both Serre relations per adjacent pair, oriented by deglex
            Letter ei = e_letter(i, i + 1), ej = e_letter(i + 1, i + 2);
            NCPoly<RationalQ> r1 = mono(qp(1) + qp(-1), Word{ei, ej, ei});
            r1 += mono(RationalQ(-1), Word{ei, ei, ej});
            sys_.add_rule(Word{ej, ei, ei}, r1);
            NCPoly<RationalQ> r1b = mono(qp(1) + qp(-1), Word{ej, ei, ej});
            r1b += mono(RationalQ(-1), Word{ei, ej, ej});
            sys_.add_rule(Word{ej, ej, ei}, r1b);
            Letter fi = f_letter(i + 1, i), fj = f_letter(i + 2, i + 1);
            NCPoly<RationalQ> r2 = mono(qp(1) + qp(-1), Word{fi, fj, fi});
            r2 += mono(RationalQ(-1), Word{fi, fi, fj});
            sys_.add_rule(Word{fj, fi, fi}, r2);
            NCPoly<RationalQ> r2b = mono(qp(1) + qp(-1), Word{fj, fi, fj});
            r2b += mono(RationalQ(-1), Word{fi, fj, fj});
            sys_.add_rule(Word{fj, fj, fi}, r2b);
        }
        sys_.complete(bound);
    }

    int n_;
    long bound_;
    std::vector<std::pair<int, int>> roots_;
    RewriteSystem<RationalQ> sys_;

    mutable std::mutex xi_mx_;
    mutable std::map<MatMonomial, NCPoly<RationalQ>> xi_cache_;

    friend NCPoly<RationalQ> xi_monomial(const DualAlgebra&, const MatMonomial&);
};

// normal-form element of H_q^g
class DualElem {
  public:
    DualElem() : n_(2) {}
    DualElem(int n, NCPoly<RationalQ> p) : n_(n), p_(std::move(p)) {}

    static DualElem from_poly(const DualAlgebra& D, const NCPoly<RationalQ>& raw) {
        return DualElem(D.n(), D.reduce(raw));
    }

    int n() const { return n_; }
    const NCPoly<RationalQ>& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    friend DualElem operator+(const DualElem& a, const DualElem& b) {
        return DualElem(a.n_, a.p_ + b.p_);
    }
    friend DualElem operator-(const DualElem& a, const DualElem& b) {
        return DualElem(a.n_, a.p_ - b.p_);
    }
    DualElem scaled(const RationalQ& c) const { return DualElem(n_, p_.scaled(c)); }
    friend DualElem operator*(const DualElem& a, const DualElem& b) {
        const DualAlgebra& D = DualAlgebra::get(a.n_);
        return DualElem(a.n_, D.reduce(a.p_ * b.p_));
    }

    bool operator==(const DualElem& o) const { return n_ == o.n_ && p_ == o.p_; }
    bool operator!=(const DualElem& o) const { return !(*this == o); }

    std::string str() const {
        const DualAlgebra& D = DualAlgebra::get(n_);
        return p_.str(D.alphabet());
    }

  private:
    int n_;
    NCPoly<RationalQ> p_;
};

namespace detail {

// generator images of Proposition-style embedding, with
// Ebar = (q-q^-1) E and Fbar = (q-q^-1) F substituted
inline NCPoly<RationalQ> xi_generator(const DualAlgebra& D, int i, int j) {
    int n = D.n();
    auto qp = [](long e) { return RationalQ::q_power(e); };
    auto sgnq = [&](long e) {  // (-q)^e
        RationalQ v = qp(e);
        if (((e % 2) + 2) % 2 == 1) v = -v;
        return v;
    };
    RationalQ qmq = qp(1) - qp(-1);
    NCPoly<RationalQ> out;
    if (i < j) {
        out.add(Word{D.e_letter(i, j), D.la_letter(j, false)}, -sgnq(j - i - 1) * qmq);
        for (int k = j + 1; k <= n; ++k)
            out.add(Word{D.e_letter(i, k), D.la_letter(k, false), D.f_letter(k, j)},
                    -sgnq(j - i - 2) * qmq * qmq);
    } else if (i == j) {
        out.add(Word{D.la_letter(i, false)}, RationalQ(1));
        for (int k = i + 1; k <= n; ++k)
            out.add(Word{D.e_letter(i, k), D.la_letter(k, false), D.f_letter(k, i)},
                    -qp(-2) * qmq * qmq);
    } else {
        out.add(Word{D.la_letter(i, false), D.f_letter(i, j)}, sgnq(j - i - 1) * qmq);
        for (int k = i + 1; k <= n; ++k)
            out.add(Word{D.e_letter(i, k), D.la_letter(k, false), D.f_letter(k, j)},
                    -sgnq(j - i - 2) * qmq * qmq);
    }
    return out;
}

}  // namespace detail

// image of an arbitrary word in the t letters (order matters)
inline NCPoly<RationalQ> xi_word(const DualAlgebra& D, const Word& w) {
    const MatAlgebra& A = MatAlgebra::get(D.n());
    NCPoly<RationalQ> acc = NCPoly<RationalQ>::unit(RationalQ(1));
    for (Letter l : w) {
        MatPos p = A.pos(l);
        acc = D.reduce(acc * detail::xi_generator(D, p.i, p.j));
    }
    return acc;
}

// image of one ordered t-monomial, memoized per algebra
inline NCPoly<RationalQ> xi_monomial(const DualAlgebra& D, const MatMonomial& m) {
    {
        std::lock_guard<std::mutex> g(D.xi_mx_);
        auto it = D.xi_cache_.find(m);
        if (it != D.xi_cache_.end()) return it->second;
    }
    NCPoly<RationalQ> acc = xi_word(D, m.word());
    std::lock_guard<std::mutex> g(D.xi_mx_);
    return D.xi_cache_.emplace(m, std::move(acc)).first->second;
}

// the embedding on M- and GL-context elements; D_q^-1 |-> (La_1 ... La_n)^-1
inline DualElem xi(const QMatElem& a, long bound = 6) {
    if (a.kind() == AlgKind::SL) throw context_mismatch("xi: M or GL context expected");
    const DualAlgebra& D = DualAlgebra::get(a.n(), bound);
    NCPoly<RationalQ> acc;
    for (const auto& [m, c] : a.terms()) acc += xi_monomial(D, m).scaled(c);
    if (a.dqinv() > 0) {
        Word inv;
        for (int k = 1; k <= a.n(); ++k) inv.push_back(D.la_letter(k, true));
        NCPoly<RationalQ> invp = NCPoly<RationalQ>::monomial(RationalQ(1), inv);
        for (long t = 0; t < a.dqinv(); ++t) acc = D.reduce(acc * invp);
    }
    return DualElem::from_poly(D, acc);
}

// reduce(xi(D_q)) must be the single torus word La_1 ... La_n
inline bool xi_qdet_check(int n) {
    const DualAlgebra& D = DualAlgebra::get(n);
    DualElem img = xi(qdet(n));
    Word want;
    for (int k = 1; k <= n; ++k) want.push_back(D.la_letter(k, false));
    return img.poly() == NCPoly<RationalQ>::monomial(RationalQ(1), want);
}

// every Manin relation maps to zero under xi
inline bool xi_morphism_check(int n) {
    const DualAlgebra& D = DualAlgebra::get(n);
    const MatAlgebra& A = MatAlgebra::get(n);
    for (const auto& r : A.system().rules()) {
        NCPoly<RationalQ> diff = xi_word(D, r.lhs);
        for (const auto& [w, c] : r.rhs.terms()) diff -= xi_word(D, w).scaled(RationalQ(c));
        if (!D.reduce(diff).is_zero()) return false;
    }
    return true;
}

}  // namespace qhyper
