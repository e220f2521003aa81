#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qmatelem.hpp"

namespace qhyper {

// Element of the tensor square, as a finite mapping on monomial pairs.
// GL legs carry one uniform D_q^-1 power each.
class QTensor {
  public:
    using Key = std::pair<MatMonomial, MatMonomial>;
    using Terms = std::map<Key, RationalQ>;

    QTensor() : kind_(AlgKind::M), n_(1) {}
    QTensor(AlgKind kind, int n) : kind_(kind), n_(n) {}

    static QTensor one(AlgKind kind, int n) {
        QTensor t(kind, n);
        MatMonomial u(MatAlgebra::get(n).nletters());
        t.add({u, u}, RationalQ(1));
        return t;
    }

    AlgKind kind() const { return kind_; }
    int n() const { return n_; }
    long dqinv_left() const { return dql_; }
    long dqinv_right() const { return dqr_; }
    void set_dqinv(long l, long r) { dql_ = l; dqr_ = r; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Key& k, const RationalQ& c) {
        if (c.is_zero()) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    QTensor& operator+=(const QTensor& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    QTensor& operator-=(const QTensor& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend QTensor operator+(QTensor a, const QTensor& b) { a += b; return a; }
    friend QTensor operator-(QTensor a, const QTensor& b) { a -= b; return a; }

    QTensor scaled(const RationalQ& c) const {
        QTensor r(kind_, n_);
        r.dql_ = dql_;
        r.dqr_ = dqr_;
        if (c.is_zero()) return r;
        for (const auto& [k, co] : t_) r.t_.emplace(k, co * c);
        return r;
    }

    // legwise product through the Manin straightening
    friend QTensor operator*(const QTensor& a, const QTensor& b) {
        const MatAlgebra& A = MatAlgebra::get(a.n_);
        QTensor r(a.kind_, a.n_);
        r.dql_ = a.dql_ + b.dql_;
        r.dqr_ = a.dqr_ + b.dqr_;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) {
                NCPoly<LaurentZ> nfl = A.straighten(word_concat(ka.first.word(), kb.first.word()));
                NCPoly<LaurentZ> nfr = A.straighten(word_concat(ka.second.word(), kb.second.word()));
                RationalQ c = ca * cb;
                for (const auto& [wl, cl] : nfl.terms())
                    for (const auto& [wr, cr] : nfr.terms())
                        r.add({MatMonomial::from_word(wl, A.nletters()),
                               MatMonomial::from_word(wr, A.nletters())},
                              RationalQ(cl * cr) * c);
            }
        return r;
    }
    QTensor& operator*=(const QTensor& o) { *this = *this * o; return *this; }

    bool operator==(const QTensor& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && dql_ == o.dql_ && dqr_ == o.dqr_ && t_ == o.t_;
    }
    bool operator!=(const QTensor& o) const { return !(*this == o); }

    QTensor flipped() const {
        QTensor r(kind_, n_);
        r.dql_ = dqr_;
        r.dqr_ = dql_;
        for (const auto& [k, c] : t_) r.add({k.second, k.first}, c);
        return r;
    }

  private:
    AlgKind kind_;
    int n_;
    long dql_ = 0, dqr_ = 0;
    Terms t_;
};

namespace detail {

// Delta on one basis monomial of F_q[M_n], memoized per n
inline const QTensor& coproduct_monomial(int n, const MatMonomial& m) {
    static std::mutex mx;
    static std::map<int, std::map<MatMonomial, QTensor>> cache;
    std::lock_guard<std::mutex> g(mx);
    auto& percontext = cache[n];
    auto it = percontext.find(m);
    if (it != percontext.end()) return it->second;

    const MatAlgebra& A = MatAlgebra::get(n);
    QTensor t = QTensor::one(AlgKind::M, n);
    Word w = m.word();
    for (Letter l : w) {
        MatPos p = A.pos(l);
        QTensor dgen(AlgKind::M, n);
        for (int k = 1; k <= n; ++k) {
            MatMonomial left(A.nletters()), right(A.nletters());
            left.bump(A.letter(p.i, k));
            right.bump(A.letter(k, p.j));
            dgen.add({left, right}, RationalQ(1));
        }
        t *= dgen;
    }
    return percontext.emplace(m, std::move(t)).first->second;
}

}  // namespace detail

// Delta(a); GL sends D_q^-1 to D_q^-1 (x) D_q^-1, SL reduces both legs
inline QTensor coproduct(const QMatElem& a) {
    QTensor out(a.kind(), a.n());
    out.set_dqinv(a.dqinv(), a.dqinv());
    for (const auto& [m, c] : a.terms()) out += detail::coproduct_monomial(a.n(), m).scaled(c);
    if (a.kind() == AlgKind::SL) {
        const MatAlgebra& A = MatAlgebra::get(a.n());
        QTensor red(AlgKind::SL, a.n());
        for (const auto& [k, c] : out.terms()) {
            QMatElem l = QMatElem(AlgKind::M, a.n());
            l.add_term(k.first, RationalQ(1));
            QMatElem r = QMatElem(AlgKind::M, a.n());
            r.add_term(k.second, RationalQ(1));
            QMatElem ls = l.sl_reduced(), rs = r.sl_reduced();
            for (const auto& [ml, cl] : ls.terms())
                for (const auto& [mr, cr] : rs.terms()) red.add({ml, mr}, c * cl * cr);
        }
        (void)A;
        return red;
    }
    if (a.kind() == AlgKind::GL) {
        QTensor g(AlgKind::GL, a.n());
        g.set_dqinv(a.dqinv(), a.dqinv());
        for (const auto& [k, c] : out.terms()) g.add(k, c);
        return g;
    }
    return out;
}

// quantum minor: det_q of the submatrix on the given ascending index sets
inline QMatElem quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("quantum_minor: shape");
    const MatAlgebra& A = MatAlgebra::get(n);
    size_t m = rows.size();
    QMatElem e(AlgKind::M, n);
    if (m == 0) return QMatElem::one(AlgKind::M, n);
    std::vector<size_t> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        long inv = 0;
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (sigma[a] > sigma[b]) ++inv;
        Word w;
        for (size_t r = 0; r < m; ++r) w.push_back(A.letter(rows[r], cols[sigma[r]]));
        RationalQ c = RationalQ::q_power(inv);
        if (inv % 2 != 0) c = -c;
        NCPoly<LaurentZ> nf = A.straighten(w);
        for (const auto& [wz, cz] : nf.terms())
            e.add_term(MatMonomial::from_word(wz, A.nletters()), RationalQ(cz) * c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return e;
}

namespace detail {

struct AntipodeTable {
    std::vector<QMatElem> img;  // indexed by letter, GL context, dqinv 1 each
};

// Generator images solved from the antipode axiom:
//   S(t_{i,j}) = (-q)^{i-j} det_q(minor deleting row j, column i) D_q^{-1},
// verified against both composition orders before use.
inline const AntipodeTable& antipode_table(int n) {
    static std::mutex mx;
    static std::map<int, AntipodeTable> cache;
    std::lock_guard<std::mutex> g(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const MatAlgebra& A = MatAlgebra::get(n);
    AntipodeTable T;
    T.img.resize(A.nletters());
    for (size_t l = 0; l < A.nletters(); ++l) {
        MatPos p = A.pos(static_cast<Letter>(l));
        std::vector<int> rows, cols;
        for (int r = 1; r <= n; ++r)
            if (r != p.j) rows.push_back(r);
        for (int c = 1; c <= n; ++c)
            if (c != p.i) cols.push_back(c);
        RationalQ sign = RationalQ::q_power(p.i - p.j);
        if ((p.i - p.j) % 2 != 0) sign = -sign;
        T.img[l] = gl_extend(quantum_minor(n, rows, cols).scaled(sign)).times_dqinv();
    }
    // antipode axiom on all generators, both orders
    QMatElem D = qdet(n).with_kind(AlgKind::GL);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatElem lhs1(AlgKind::GL, n), lhs2(AlgKind::GL, n);
            for (int k = 1; k <= n; ++k) {
                lhs1 += T.img[A.letter(i, k)] * QMatElem::gen(AlgKind::GL, n, k, j);
                lhs2 += QMatElem::gen(AlgKind::GL, n, i, k) * T.img[A.letter(k, j)];
            }
            QMatElem want = i == j ? QMatElem::one(AlgKind::GL, n) : QMatElem::zero(AlgKind::GL, n);
            if (lhs1 != want || lhs2 != want)
                throw std::logic_error("antipode axiom failed on generators at n=" +
                                       std::to_string(n));
        }
    return cache.emplace(n, std::move(T)).first->second;
}

}  // namespace detail

// antipode of a GL or SL element (anti-homomorphism, S(D_q^-1) = D_q)
inline QMatElem antipode(const QMatElem& a) {
    if (a.kind() == AlgKind::M) throw context_mismatch("antipode needs the GL or SL context");
    int n = a.n();
    const MatAlgebra& A = MatAlgebra::get(n);
    const auto& tab = detail::antipode_table(n);
    QMatElem out(AlgKind::GL, n);
    for (const auto& [m, c] : a.terms()) {
        QMatElem term = QMatElem::one(AlgKind::GL, n);
        Word w = m.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) term *= tab.img[*it];
        out += term.scaled(c);
    }
    if (a.dqinv() > 0) out = out.times_qdet_num(a.dqinv());
    if (a.kind() == AlgKind::SL) return out.with_kind(AlgKind::M).sl_reduced();
    return out;
}

struct FrobRestrictedReport {
    int n = 0;
    long ell = 0;
    bool commutative = false;
    bool comultiplicative = false;
    std::vector<std::string> failures;
    bool pass() const { return commutative && comultiplicative; }
};

// The restricted quantum Frobenius for M_n: at q = eps the l-th powers of the
// generators commute pairwise and Delta(t_{i,j}^l) = sum_k t_{i,k}^l (x) t_{k,j}^l.
inline FrobRestrictedReport frobenius_restricted(int n, long ell) {
    const MatAlgebra& A = MatAlgebra::get(n);
    RewriteSystem<CycloZ> sysE = A.system().map_coeffs<CycloZ>(
        [&](const LaurentZ& c) { return specialize_eps(c, ell); });
    FrobRestrictedReport rep;
    rep.n = n;
    rep.ell = ell;
    rep.commutative = true;
    rep.comultiplicative = true;

    auto lpow = [&](Letter l) {
        return Word(static_cast<size_t>(ell), l);
    };
    for (Letter x = 0; x < A.nletters(); ++x)
        for (Letter y = 0; y < x; ++y) {
            NCPoly<CycloZ> d = sysE.reduce_word(word_concat(lpow(x), lpow(y))) -
                               sysE.reduce_word(word_concat(lpow(y), lpow(x)));
            if (!d.is_zero()) {
                rep.commutative = false;
                rep.failures.push_back("[" + A.alphabet().names[x] + "^l, " +
                                       A.alphabet().names[y] + "^l] != 0");
            }
        }

    using TKey = std::pair<Word, Word>;
    using TMap = std::map<TKey, CycloZ>;
    auto tadd = [](TMap& m, const TKey& k, const CycloZ& c) {
        if (c.is_zero()) return;
        auto it = m.find(k);
        if (it == m.end())
            m.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            TMap acc;
            tadd(acc, {Word{}, Word{}}, CycloZ(ell, 1));
            for (long step = 0; step < ell; ++step) {
                TMap next;
                for (const auto& [k, c] : acc)
                    for (int s = 1; s <= n; ++s) {
                        Word wl = k.first;
                        wl.push_back(A.letter(i, s));
                        Word wr = k.second;
                        wr.push_back(A.letter(s, j));
                        NCPoly<CycloZ> nl = sysE.reduce_word(wl);
                        NCPoly<CycloZ> nr = sysE.reduce_word(wr);
                        for (const auto& [w1, c1] : nl.terms())
                            for (const auto& [w2, c2] : nr.terms())
                                tadd(next, {w1, w2}, c1 * c2 * c);
                    }
                acc = std::move(next);
            }
            TMap want;
            for (int s = 1; s <= n; ++s) {
                NCPoly<CycloZ> nl = sysE.reduce_word(lpow(A.letter(i, s)));
                NCPoly<CycloZ> nr = sysE.reduce_word(lpow(A.letter(s, j)));
                for (const auto& [w1, c1] : nl.terms())
                    for (const auto& [w2, c2] : nr.terms()) tadd(want, {w1, w2}, c1 * c2);
            }
            if (acc != want) {
                rep.comultiplicative = false;
                rep.failures.push_back("Delta(t[" + std::to_string(i) + "," + std::to_string(j) +
                                       "]^l) mismatch");
            }
        }
    return rep;
}

}  // namespace qhyper
