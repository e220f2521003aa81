#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopf.hpp"
#include "qmatelem.hpp"

namespace qhyper {

struct integrality_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Exponent matrix of a basis monomial M_tau: off-diagonal entries are
// divided-power orders of bt_{i,j} = (q-q^-1)^{-1} t_{i,j}, diagonal entries
// are binomial orders of (t_{k,k};0 choose -).  Same layout as MatMonomial.
using HyperMonomial = MatMonomial;

// ambient building blocks ---------------------------------------------------

// bt_{i,j}^{(h)} as an element of F_q[M_n]
inline QMatElem tb_power(int n, int i, int j, long h) {
    if (i == j) throw std::invalid_argument("tb[i,j]: needs i != j");
    RationalQ qmq = RationalQ::q_power(1) - RationalQ::q_power(-1);
    QMatElem t = QMatElem::gen(AlgKind::M, n, i, j).pow(h);
    return t.scaled(qmq.pow(h).inverse() * RationalQ(bal_fact(h)).inverse());
}

// (x ; c choose k) for an ambient element x
inline QMatElem qbinom_elem(const QMatElem& x, long c, long k) {
    QMatElem r = QMatElem::one(x.kind(), x.n());
    for (long s = 1; s <= k; ++s) {
        QMatElem f = x.scaled(RationalQ::q_power(c + 1 - s)) - QMatElem::one(x.kind(), x.n());
        r = r * f.scaled(RationalQ(LaurentZ::q_power(s) - LaurentZ(1)).inverse());
    }
    return r;
}

// (t_{k,k} ; c choose m)
inline QMatElem tbinom(int n, int k, long c, long m) {
    return qbinom_elem(QMatElem::gen(AlgKind::M, n, k, k), c, m);
}

// {x ; c over n, r} = sum_s q^C(s+1,2) (r choose s)_q (x;c+s choose n-r)
inline QMatElem braced_elem(const QMatElem& x, long c, long n, long r) {
    QMatElem acc = QMatElem::zero(x.kind(), x.n());
    for (long s = 0; s <= r; ++s) {
        RationalQ co = RationalQ::q_power(choose2(s + 1)) * RationalQ(gauss_binom(r, s));
        acc += qbinom_elem(x, c + s, n - r).scaled(co);
    }
    return acc;
}

// coordinates in the PBW-like basis B of the integral form -------------------

class HyperElem {
  public:
    using Coords = std::map<HyperMonomial, RationalQ>;

    HyperElem() : n_(1) {}
    explicit HyperElem(int n) : n_(n) {}

    int n() const { return n_; }
    const Coords& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? 0 : c_.rbegin()->first.degree(); }

    void add(const HyperMonomial& m, const RationalQ& c) {
        if (c.is_zero()) return;
        auto it = c_.find(m);
        if (it == c_.end()) {
            c_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    HyperElem& operator+=(const HyperElem& o) {
        for (const auto& [m, c] : o.c_) add(m, c);
        return *this;
    }
    HyperElem& operator-=(const HyperElem& o) {
        for (const auto& [m, c] : o.c_) add(m, -c);
        return *this;
    }
    friend HyperElem operator+(HyperElem a, const HyperElem& b) { a += b; return a; }
    friend HyperElem operator-(HyperElem a, const HyperElem& b) { a -= b; return a; }
    HyperElem scaled(const RationalQ& c) const {
        HyperElem r(n_);
        if (c.is_zero()) return r;
        for (const auto& [m, co] : c_) r.c_.emplace(m, co * c);
        return r;
    }

    bool operator==(const HyperElem& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const HyperElem& o) const { return !(*this == o); }

    // every coordinate in Z[q,q^-1]
    bool integral() const {
        for (const auto& [m, c] : c_)
            if (!c.is_laurent()) return false;
        return true;
    }

    std::string str() const;

  private:
    int n_;
    Coords c_;
};

// Expansion/contraction between B-coordinates and the t-monomial basis.
// Contraction runs by triangular elimination against the deglex-leading
// monomial t^tau of expand(M_tau), whose coefficient is an explicit unit.
class HyperContext {
  public:
    static const HyperContext& get(int n) {
        static std::mutex mx;
        static std::map<int, std::unique_ptr<HyperContext>> cache;
        std::lock_guard<std::mutex> g(mx);
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, std::unique_ptr<HyperContext>(new HyperContext(n))).first;
        return *it->second;
    }

    int n() const { return n_; }
    const MatAlgebra& alg() const { return alg_; }

    QMatElem expand(const HyperMonomial& m) const {
        {
            std::lock_guard<std::mutex> g(mx_);
            auto it = expand_.find(m);
            if (it != expand_.end()) return it->second;
        }
        QMatElem e = QMatElem::one(AlgKind::M, n_);
        for (size_t l = 0; l < alg_.nletters(); ++l) {
            unsigned k = m.exp(l);
            if (!k) continue;
            MatPos p = alg_.pos(static_cast<Letter>(l));
            if (p.i == p.j)
                e = e * tbinom(n_, p.i, 0, k);
            else
                e = e * tb_power(n_, p.i, p.j, k);
        }
        std::lock_guard<std::mutex> g(mx_);
        return expand_.emplace(m, std::move(e)).first->second;
    }

    // leading coefficient of expand(M_tau) on t^tau
    RationalQ leading_coeff(const HyperMonomial& m) const {
        RationalQ qmq = RationalQ::q_power(1) - RationalQ::q_power(-1);
        RationalQ r(1);
        for (size_t l = 0; l < alg_.nletters(); ++l) {
            long k = m.exp(l);
            if (!k) continue;
            MatPos p = alg_.pos(static_cast<Letter>(l));
            if (p.i == p.j) {
                // prod_{s=1..k} q^{1-s}/(q^s - 1)
                RationalQ den(1);
                for (long s = 1; s <= k; ++s)
                    den *= RationalQ(LaurentZ::q_power(s) - LaurentZ(1));
                r *= RationalQ::q_power(-choose2(k)) * den.inverse();
            } else {
                r *= qmq.pow(k).inverse() * RationalQ(bal_fact(k)).inverse();
            }
        }
        return r;
    }

    HyperElem contract(QMatElem a) const {
        if (a.kind() != AlgKind::M) throw context_mismatch("contract: expected M context");
        HyperElem out(n_);
        while (!a.is_zero()) {
            const auto& [m, c] = *a.terms().rbegin();
            RationalQ coord = c / leading_coeff(m);
            out.add(m, coord);
            a -= expand(m).scaled(coord);
        }
        return out;
    }

    QMatElem expand(const HyperElem& x) const {
        QMatElem e(AlgKind::M, n_);
        for (const auto& [m, c] : x.coords()) e += expand(m).scaled(c);
        return e;
    }

  private:
    explicit HyperContext(int n) : n_(n), alg_(MatAlgebra::get(n)) {}

    int n_;
    const MatAlgebra& alg_;
    mutable std::mutex mx_;
    mutable std::map<HyperMonomial, QMatElem> expand_;
};

inline std::string HyperElem::str() const {
    if (c_.empty()) return "0";
    const MatAlgebra& A = MatAlgebra::get(n_);
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        const auto& e = it->first.exps();
        for (size_t l = 0; l < e.size(); ++l) {
            if (!e[l]) continue;
            MatPos p = A.pos(static_cast<Letter>(l));
            if (p.i == p.j)
                os << " bin[" << p.i << "](0," << e[l] << ")";
            else
                os << " tb[" << p.i << "," << p.j << "]^(" << e[l] << ")";
        }
    }
    return os.str();
}

inline HyperElem hyper_unit(int n) {
    HyperElem e(n);
    e.add(HyperMonomial(MatAlgebra::get(n).nletters()), RationalQ(1));
    return e;
}

inline HyperElem hyper_gen_tb(int n, int i, int j, long h) {
    const MatAlgebra& A = MatAlgebra::get(n);
    HyperMonomial m(A.nletters());
    m.bump(A.letter(i, j), static_cast<unsigned>(h));
    HyperElem e(n);
    e.add(m, RationalQ(1));
    return e;
}

// bin[k](c,m): c != 0 is rewritten into c = 0 binomials at construction
inline HyperElem hyper_gen_bin(int n, int k, long c, long m) {
    const HyperContext& H = HyperContext::get(n);
    return H.contract(tbinom(n, k, c, m));
}

// expand, multiply in the ambient algebra, contract; integral inputs in the
// M context must produce an integral output, else the basis theorem broke
inline HyperElem hyper_multiply(const HyperElem& x, const HyperElem& y) {
    if (x.n() != y.n()) throw context_mismatch("hyper_multiply: size mismatch");
    const HyperContext& H = HyperContext::get(x.n());
    HyperElem r = H.contract(H.expand(x) * H.expand(y));
    if (x.integral() && y.integral() && !r.integral())
        throw integrality_violation("hyper_multiply: product of integral elements not integral");
    return r;
}

inline HyperElem hyper_pow(const HyperElem& x, long m) {
    HyperElem r = hyper_unit(x.n());
    for (long i = 0; i < m; ++i) r = hyper_multiply(r, x);
    return r;
}

// counit in B-coordinates: the coefficient of the empty monomial
inline RationalQ hyper_counit(const HyperElem& x) {
    const MatAlgebra& A = MatAlgebra::get(x.n());
    HyperMonomial one(A.nletters());
    auto it = x.coords().find(one);
    return it == x.coords().end() ? RationalQ() : it->second;
}

}  // namespace qhyper
