#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qmatrix.hpp"

namespace qhyper {

struct context_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct degree_guard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long default_sl_bound(int n) { return n <= 2 ? 8 : 6; }

// Normal-form element of F_q[M_n], F_q[GL_n] or F_q[SL_n] over Q(q).
// GL elements are unreduced fractions: a numerator in B_{M_n} normal form
// and one uniform power of the central D_q^{-1}; equality goes through
// cross-multiplication by D_q.
class QMatElem {
  public:
    using Terms = std::map<MatMonomial, RationalQ>;

    QMatElem() : kind_(AlgKind::M), n_(1) {}
    QMatElem(AlgKind kind, int n) : kind_(kind), n_(n) {}

    static QMatElem zero(AlgKind kind, int n) { return QMatElem(kind, n); }
    static QMatElem one(AlgKind kind, int n) {
        QMatElem e(kind, n);
        e.add_term(MatMonomial(MatAlgebra::get(n).nletters()), RationalQ(1));
        return e;
    }
    static QMatElem scalar(AlgKind kind, int n, const RationalQ& c) {
        QMatElem e(kind, n);
        e.add_term(MatMonomial(MatAlgebra::get(n).nletters()), c);
        return e;
    }
    static QMatElem gen(AlgKind kind, int n, int i, int j) {
        const MatAlgebra& A = MatAlgebra::get(n);
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::out_of_range("t[i,j]: index out of range");
        MatMonomial m(A.nletters());
        m.bump(A.letter(i, j));
        QMatElem e(kind, n);
        e.add_term(m, RationalQ(1));
        if (kind == AlgKind::SL) e = e.sl_reduced();
        return e;
    }

    AlgKind kind() const { return kind_; }
    int n() const { return n_; }
    long dqinv() const { return dqinv_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long degree() const { return t_.empty() ? 0 : t_.rbegin()->first.degree(); }

    void add_term(const MatMonomial& m, const RationalQ& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    QMatElem& operator+=(const QMatElem& o) {
        match(o);
        if (kind_ == AlgKind::GL && dqinv_ != o.dqinv_) {
            // bring both on the common power of D_q^-1
            long d = std::max(dqinv_, o.dqinv_);
            QMatElem a = this->times_qdet_num(d - dqinv_);
            QMatElem b = o.times_qdet_num(d - o.dqinv_);
            a.dqinv_ = d;
            for (const auto& [m, c] : b.t_) a.add_term(m, c);
            *this = std::move(a);
            return *this;
        }
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    QMatElem& operator-=(const QMatElem& o) { return *this += -o; }
    friend QMatElem operator+(QMatElem a, const QMatElem& b) { a += b; return a; }
    friend QMatElem operator-(QMatElem a, const QMatElem& b) { a -= b; return a; }
    QMatElem operator-() const {
        QMatElem r(kind_, n_);
        r.dqinv_ = dqinv_;
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }

    friend QMatElem operator*(const QMatElem& a, const QMatElem& b) {
        a.match(b);
        const MatAlgebra& A = MatAlgebra::get(a.n_);
        QMatElem r(a.kind_, a.n_);
        r.dqinv_ = a.dqinv_ + b.dqinv_;
        if (a.kind_ == AlgKind::SL) {
            const auto& sys = A.sl_system(default_sl_bound(a.n_));
            long deg = a.degree() + b.degree();
            if (deg > sys.certificate_degree())
                throw degree_guard("SL product beyond certificate degree");
            for (const auto& [ma, ca] : a.t_)
                for (const auto& [mb, cb] : b.t_) {
                    NCPoly<RationalQ> nf = sys.reduce_word(word_concat(ma.word(), mb.word()));
                    RationalQ c = ca * cb;
                    for (const auto& [w, cz] : nf.terms())
                        r.add_term(MatMonomial::from_word(w, A.nletters()), cz * c);
                }
            return r;
        }
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                NCPoly<LaurentZ> nf = A.straighten(word_concat(ma.word(), mb.word()));
                RationalQ c = ca * cb;
                for (const auto& [w, cz] : nf.terms())
                    r.add_term(MatMonomial::from_word(w, A.nletters()), RationalQ(cz) * c);
            }
        return r;
    }
    QMatElem& operator*=(const QMatElem& o) { *this = *this * o; return *this; }

    QMatElem scaled(const RationalQ& c) const {
        QMatElem r(kind_, n_);
        r.dqinv_ = dqinv_;
        if (c.is_zero()) return r;
        for (const auto& [m, co] : t_) r.t_.emplace(m, co * c);
        return r;
    }

    QMatElem pow(long m) const {
        if (m < 0) throw std::invalid_argument("QMatElem: negative power");
        QMatElem r = one(kind_, n_);
        for (long i = 0; i < m; ++i) r *= *this;
        return r;
    }

    bool operator==(const QMatElem& o) const {
        if (kind_ != o.kind_ || n_ != o.n_) return false;
        if (kind_ == AlgKind::GL && dqinv_ != o.dqinv_)
            return times_qdet_num(o.dqinv_).t_ == o.times_qdet_num(dqinv_).t_;
        return t_ == o.t_;
    }
    bool operator!=(const QMatElem& o) const { return !(*this == o); }

    // multiply the numerator by D_q^k (GL bookkeeping; k >= 0)
    QMatElem times_qdet_num(long k) const;

    // adjoin one power of the central D_q^{-1}
    QMatElem times_dqinv(long k = 1) const {
        if (kind_ != AlgKind::GL) throw context_mismatch("D_q^-1 needs the GL context");
        QMatElem r = *this;
        r.dqinv_ += k;
        return r;
    }

    QMatElem with_kind(AlgKind k) const {
        QMatElem r = *this;
        r.kind_ = k;
        return r;
    }

    QMatElem sl_reduced() const;

    std::string str() const {
        if (t_.empty()) return "0";
        const MatAlgebra& A = MatAlgebra::get(n_);
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.str() << ")";
            const auto& e = it->first.exps();
            for (size_t l = 0; l < e.size(); ++l) {
                if (!e[l]) continue;
                os << " " << A.alphabet().names[l];
                if (e[l] > 1) os << "^" << e[l];
            }
        }
        if (dqinv_ > 0) os << "  * Dqinv^" << dqinv_;
        return os.str();
    }

  private:
    void match(const QMatElem& o) const {
        if (kind_ != o.kind_ || n_ != o.n_)
            throw context_mismatch("QMatElem: context mismatch (" + alg_kind_name(kind_) + "_" +
                                   std::to_string(n_) + " vs " + alg_kind_name(o.kind_) + "_" +
                                   std::to_string(o.n_) + ")");
    }

    AlgKind kind_;
    int n_;
    long dqinv_ = 0;
    Terms t_;
};

// D_q as a normal-form element of F_q[M_n]
inline QMatElem qdet(int n) {
    const MatAlgebra& A = MatAlgebra::get(n);
    QMatElem e(AlgKind::M, n);
    for (const auto& [w, c] : A.qdet_poly().terms())
        e.add_term(MatMonomial::from_word(w, A.nletters()), RationalQ(c));
    return e;
}

inline QMatElem QMatElem::times_qdet_num(long k) const {
    QMatElem r = *this;
    if (k == 0) return r;
    QMatElem d = qdet(n_).with_kind(kind_ == AlgKind::GL ? AlgKind::M : kind_);
    QMatElem num = r.with_kind(d.kind());
    long dq = r.dqinv_;
    for (long t = 0; t < k; ++t) num *= d;
    QMatElem out = num.with_kind(kind_);
    out.dqinv_ = dq;
    return out;
}

// image under F_q[M_n] ->> F_q[SL_n] (or from GL, dropping D_q^-1 = 1)
inline QMatElem QMatElem::sl_reduced() const {
    const MatAlgebra& A = MatAlgebra::get(n_);
    const auto& sys = A.sl_system(default_sl_bound(n_));
    if (degree() > sys.certificate_degree())
        throw degree_guard("SL reduction beyond certificate degree");
    QMatElem r(AlgKind::SL, n_);
    for (const auto& [m, c] : t_) {
        NCPoly<RationalQ> nf = sys.reduce_word(m.word());
        for (const auto& [w, cz] : nf.terms())
            r.add_term(MatMonomial::from_word(w, A.nletters()), cz * c);
    }
    return r;
}

inline QMatElem gl_extend(const QMatElem& a) {
    if (a.kind() == AlgKind::GL) return a;
    if (a.kind() != AlgKind::M) throw context_mismatch("gl_extend: expected M context");
    return a.with_kind(AlgKind::GL);
}

inline QMatElem sl_project(const QMatElem& a) {
    if (a.kind() == AlgKind::SL) return a;
    return a.sl_reduced();
}

// counit: the character t_{i,j} |-> delta_{ij}
inline RationalQ counit(const QMatElem& a) {
    const MatAlgebra& A = MatAlgebra::get(a.n());
    RationalQ s;
    for (const auto& [m, c] : a.terms()) {
        bool diag = true;
        for (size_t l = 0; l < A.nletters() && diag; ++l)
            if (m.exp(l) != 0 && A.pos(static_cast<Letter>(l)).i != A.pos(static_cast<Letter>(l)).j)
                diag = false;
        if (diag) s += c;
    }
    return s;
}

}  // namespace qhyper
