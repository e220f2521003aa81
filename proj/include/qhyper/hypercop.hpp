#pragma once

#include <functional>
#include <map>
#include <utility>

#include "hyper.hpp"

namespace qhyper {

// tensor-square coordinates in the basis B (x) B
using HyperTensor = std::map<std::pair<HyperMonomial, HyperMonomial>, RationalQ>;

inline void ht_add(HyperTensor& t, const std::pair<HyperMonomial, HyperMonomial>& k,
                   const RationalQ& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

inline bool hyper_tensor_integral(const HyperTensor& t) {
    for (const auto& [k, c] : t)
        if (!c.is_laurent()) return false;
    return true;
}

// contract both legs of an ambient tensor-square element
inline HyperTensor contract_tensor(int n, const QTensor& t) {
    const HyperContext& H = HyperContext::get(n);
    HyperTensor out;
    // group by right monomial, contract left legs, then contract right legs
    std::map<MatMonomial, QMatElem> by_right;
    for (const auto& [k, c] : t.terms()) {
        auto it = by_right.find(k.second);
        if (it == by_right.end()) it = by_right.emplace(k.second, QMatElem(AlgKind::M, n)).first;
        it->second.add_term(k.first, c);
    }
    std::map<HyperMonomial, QMatElem> by_tau1;
    for (const auto& [m2, left] : by_right) {
        HyperElem l = H.contract(left);
        for (const auto& [t1, c] : l.coords()) {
            auto it = by_tau1.find(t1);
            if (it == by_tau1.end()) it = by_tau1.emplace(t1, QMatElem(AlgKind::M, n)).first;
            it->second.add_term(m2, c);
        }
    }
    for (const auto& [t1, right] : by_tau1) {
        HyperElem r = H.contract(right);
        for (const auto& [t2, c] : r.coords()) ht_add(out, {t1, t2}, c);
    }
    return out;
}

// Delta in B-coordinates: expand, apply the ambient coproduct, contract legs
inline HyperTensor hyper_coproduct(const HyperElem& x) {
    const HyperContext& H = HyperContext::get(x.n());
    QTensor t(AlgKind::M, x.n());
    for (const auto& [m, c] : x.coords()) t += coproduct(H.expand(m)).scaled(c);
    return contract_tensor(x.n(), t);
}

namespace detail {

inline QTensor tensor_of(const QMatElem& a, const QMatElem& b) {
    QTensor t(AlgKind::M, a.n());
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) t.add({m1, m2}, c1 * c2);
    return t;
}

// honest (X ; c choose m) and {X ; c over m, r} for a tensor-square element
inline QTensor tensor_qbinom(const QTensor& X, long c, long m) {
    int n = X.n();
    QTensor h = QTensor::one(AlgKind::M, n);
    for (long s = 1; s <= m; ++s) {
        QTensor f = X.scaled(RationalQ::q_power(c + 1 - s));
        f -= QTensor::one(AlgKind::M, n);
        h = (h * f).scaled(RationalQ(LaurentZ::q_power(s) - LaurentZ(1)).inverse());
    }
    return h;
}

inline QTensor tensor_braced(const QTensor& X, long c, long m, long r) {
    QTensor acc(AlgKind::M, X.n());
    for (long s = 0; s <= r; ++s)
        acc += tensor_qbinom(X, c + s, m - r)
                   .scaled(RationalQ::q_power(choose2(s + 1)) * RationalQ(gauss_binom(r, s)));
    return acc;
}

inline void compositions(long total, size_t parts,
                         const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> cur;
    std::function<void(size_t, long)> rec = [&](size_t idx, long left) {
        if (idx == parts) {
            if (left == 0) f(cur);
            return;
        }
        cur.push_back(0);
        for (long v = 0; v <= left; ++v) {
            cur.back() = v;
            rec(idx + 1, left - v);
        }
        cur.pop_back();
    };
    rec(0, total);
}

}  // namespace detail

// Closed coproduct of bt_{i,j}^{(h)}: one sum over compositions of h across
// the row/column with inner binomial corrections of orders r, s.
inline HyperTensor coproduct_closed_form_offdiag(int n, int i, int j, long h) {
    using namespace detail;
    RationalQ qmq = RationalQ::q_power(1) - RationalQ::q_power(-1);
    QTensor out(AlgKind::M, n);
    compositions(h, static_cast<size_t>(n), [&](const std::vector<long>& e) {
        long ei = e[i - 1], ej = e[j - 1];
        long ex = -choose2(h);
        RationalQ fact(1);
        for (int k = 1; k <= n; ++k) {
            ex += choose2(e[k - 1]);
            if (k != i && k != j) fact *= RationalQ(bal_fact(e[k - 1]));
        }
        RationalQ base = RationalQ::q_power(ex) * qmq.pow(h - ei - ej) * fact;
        for (long r = 0; r <= ei; ++r)
            for (long s = 0; s <= ej; ++s) {
                RationalQ co = base * RationalQ::q_power(choose2(r) + choose2(s)) *
                               RationalQ(qfact(r) * qfact(s)) *
                               RationalQ(gauss_binom(ei, r) * gauss_binom(ej, s)) *
                               (RationalQ::q_power(1) - RationalQ(1)).pow(r + s);
                QMatElem left = QMatElem::one(AlgKind::M, n);
                for (int k = 1; k <= n; ++k)
                    left = left * (k == i ? tbinom(n, i, 0, r) : tb_power(n, i, k, e[k - 1]));
                QMatElem right = QMatElem::one(AlgKind::M, n);
                for (int k = 1; k <= n; ++k)
                    right = right * (k == j ? tbinom(n, j, 0, s) : tb_power(n, k, j, e[k - 1]));
                out += tensor_of(left, right).scaled(co);
            }
    });
    return contract_tensor(n, out);
}

// Closed coproduct of (t_{i,i};c choose k), assembled from the divided-power
// expansions of the two off-diagonal blocks around a central two-leg binomial.
inline HyperTensor coproduct_closed_form_diag(int n, int i, long c, long k) {
    using namespace detail;
    RationalQ qmq = RationalQ::q_power(1) - RationalQ::q_power(-1);
    QTensor X = tensor_of(QMatElem::gen(AlgKind::M, n, i, i), QMatElem::gen(AlgKind::M, n, i, i));
    std::vector<int> lows, highs;
    for (int l = 1; l < i; ++l) lows.push_back(l);
    for (int l = i + 1; l <= n; ++l) highs.push_back(l);
    QTensor out(AlgKind::M, n);
    for (long r = 0; r <= k; ++r)
        for (long s = 0; s <= r; ++s)
            for (long h = 0; h + r <= k; ++h) {
                RationalQ co =
                    RationalQ::q_power(r * (c - k) + choose2(s + 1) + h * (c - r + s - k)) *
                    qmq.pow(r + h) * RationalQ(gauss_binom(r, s));
                compositions(h, lows.size(), [&](const std::vector<long>& lo) {
                    QTensor vterm = QTensor::one(AlgKind::M, n);
                    RationalQ cl(1);
                    long ex = -choose2(h + 1);
                    for (size_t a = 0; a < lows.size(); ++a) {
                        ex += choose2(lo[a] + 1);
                        cl *= RationalQ(bal_fact(lo[a]));
                        vterm = vterm * tensor_of(tb_power(n, i, lows[a], lo[a]),
                                                  tb_power(n, lows[a], i, lo[a]));
                    }
                    cl *= RationalQ::q_power(ex);
                    compositions(r, highs.size(), [&](const std::vector<long>& hi) {
                        QTensor wterm = QTensor::one(AlgKind::M, n);
                        RationalQ cw(1);
                        long ex2 = -choose2(r + 1);
                        for (size_t a = 0; a < highs.size(); ++a) {
                            ex2 += choose2(hi[a] + 1);
                            cw *= RationalQ(bal_fact(hi[a]));
                            wterm = wterm * tensor_of(tb_power(n, i, highs[a], hi[a]),
                                                      tb_power(n, highs[a], i, hi[a]));
                        }
                        cw *= RationalQ::q_power(ex2);
                        QTensor mid = tensor_braced(X, c - 2 * r + s - 2 * h, k - r, h);
                        out += (vterm * mid * wterm).scaled(co * cl * cw);
                    });
                });
            }
    return contract_tensor(n, out);
}

// counit closed forms: eps((t;c ch k)) = (c ch k)_q, eps(bt^(h)) = 0 for h >= 1
inline RationalQ counit_closed_form_diag(long c, long k) { return RationalQ(gauss_binom_any(c, k)); }
inline RationalQ counit_closed_form_offdiag(long h) { return h == 0 ? RationalQ(1) : RationalQ(); }

// the four-term SL_2 relation: contracts to (D_q - 1)-multiple data in the
// M context and vanishes under sl_project
inline QMatElem sl2_relation_lhs() {
    int n = 2;
    RationalQ q1 = RationalQ::q_power(1);
    QMatElem r = tbinom(n, 1, 0, 1) + tbinom(n, 2, 0, 1) +
                 (tbinom(n, 1, 0, 1) * tbinom(n, 2, 0, 1)).scaled(q1 - RationalQ(1)) -
                 (tb_power(n, 1, 2, 1) * tb_power(n, 2, 1, 1))
                     .scaled((RationalQ(1) + q1) * (q1 - RationalQ::q_power(-1)));
    return r;
}

inline bool sl2_relation_check() {
    QMatElem r = sl2_relation_lhs();
    return sl_project(r).is_zero() && !r.is_zero();
}

}  // namespace qhyper
