#pragma once

#include <functional>
#include <vector>

#include "qnum.hpp"
#include "rewrite.hpp"

namespace qhyper {

enum class LemmaResult { pass, hypothesis_violation, fail };

inline bool lemma_ok(LemmaResult r) { return r == LemmaResult::pass; }

using QPoly = NCPoly<RationalQ>;
using QSys = RewriteSystem<RationalQ>;

inline QPoly qp_scalar(const RationalQ& c) { return QPoly::unit(c); }

inline QPoly qp_mul(const QSys& sys, const QPoly& a, const QPoly& b) { return sys.reduce(a * b); }

inline QPoly qp_pow(const QSys& sys, const QPoly& x, long m) {
    QPoly r = qp_scalar(RationalQ(1));
    for (long i = 0; i < m; ++i) r = qp_mul(sys, r, x);
    return r;
}

// X^(m) = X^m / [m]_q!
inline QPoly alg_divided_power(const QSys& sys, const QPoly& x, long m) {
    return qp_pow(sys, x, m).scaled(RationalQ(bal_fact(m)).inverse());
}

// (X;c choose k) = prod_{s=1..k} (q^{c+1-s} X - 1)/(q^s - 1)
inline QPoly alg_qbinom(const QSys& sys, const QPoly& x, long c, long k) {
    QPoly r = qp_scalar(RationalQ(1));
    for (long s = 1; s <= k; ++s) {
        QPoly f = x.scaled(RationalQ::q_power(c + 1 - s));
        f.add(Word{}, RationalQ(-1));
        f = f.scaled(RationalQ(LaurentZ::q_power(s) - LaurentZ(1)).inverse());
        r = qp_mul(sys, r, f);
    }
    return r;
}

// {X;c over n,r} = sum_s q^C(s+1,2) (r choose s)_q (X;c+s choose n-r)
inline QPoly alg_braced(const QSys& sys, const QPoly& x, long c, long n, long r) {
    QPoly acc;
    for (long s = 0; s <= r; ++s) {
        RationalQ co = RationalQ::q_power(choose2(s + 1)) * RationalQ(gauss_binom(r, s));
        acc += alg_qbinom(sys, x, c + s, n - r).scaled(co);
    }
    return sys.reduce(acc);
}

// x_i x_j = p x_j x_i for i < j  =>
// (sum x)^m = sum_{|k|=m} (m choose k)_{p^-1} x_1^{k_1} ... x_s^{k_s}
inline LemmaResult check_lemma_1_5a(const QSys& sys, const std::vector<QPoly>& xs,
                                    const RationalQ& p, long m) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            QPoly d = qp_mul(sys, xs[i], xs[j]) - qp_mul(sys, xs[j], xs[i]).scaled(p);
            if (!sys.reduce(d).is_zero()) return LemmaResult::hypothesis_violation;
        }
    QPoly total;
    for (const auto& x : xs) total += x;
    QPoly lhs = qp_pow(sys, total, m);
    QPoly rhs;
    RationalQ pinv = p.inverse();
    std::vector<long> k(xs.size(), 0);
    std::function<void(size_t, long)> walk = [&](size_t i, long left) {
        if (i + 1 == k.size()) {
            k[i] = left;
            RationalQ co = subst_q(gauss_multinom(m, k), pinv);
            QPoly term = qp_scalar(co);
            for (size_t t = 0; t < xs.size(); ++t) term = qp_mul(sys, term, qp_pow(sys, xs[t], k[t]));
            rhs += term;
            return;
        }
        for (long v = 0; v <= left; ++v) {
            k[i] = v;
            walk(i + 1, left - v);
        }
    };
    if (xs.empty()) return m == 0 ? LemmaResult::pass : LemmaResult::fail;
    walk(0, m);
    return sys.reduce(lhs - rhs).is_zero() ? LemmaResult::pass : LemmaResult::fail;
}

// y_i y_j = p^2 y_j y_i for i < j  =>
// (sum y)^(m) = sum_{|k|=m} p^{sum C(k_i+1,2) - C(m+1,2)} y_1^(k_1) ... y_s^(k_s)
inline LemmaResult check_lemma_1_5b(const QSys& sys, const std::vector<QPoly>& ys,
                                    const RationalQ& p, long m) {
    RationalQ p2 = p * p;
    for (size_t i = 0; i < ys.size(); ++i)
        for (size_t j = i + 1; j < ys.size(); ++j) {
            QPoly d = qp_mul(sys, ys[i], ys[j]) - qp_mul(sys, ys[j], ys[i]).scaled(p2);
            if (!sys.reduce(d).is_zero()) return LemmaResult::hypothesis_violation;
        }
    QPoly total;
    for (const auto& y : ys) total += y;
    // divided powers are balanced factorials in p
    auto dp = [&](const QPoly& x, long k) {
        return qp_pow(sys, x, k).scaled(subst_q(bal_fact(k), p).inverse());
    };
    QPoly lhs = dp(total, m);
    QPoly rhs;
    std::vector<long> k(ys.size(), 0);
    std::function<void(size_t, long)> walk = [&](size_t i, long left) {
        if (i + 1 == k.size()) {
            k[i] = left;
            long e = -choose2(m + 1);
            for (long ki : k) e += choose2(ki + 1);
            QPoly term = qp_scalar(p.pow(e));
            for (size_t t = 0; t < ys.size(); ++t) term = qp_mul(sys, term, dp(ys[t], k[t]));
            rhs += term;
            return;
        }
        for (long v = 0; v <= left; ++v) {
            k[i] = v;
            walk(i + 1, left - v);
        }
    };
    if (ys.empty()) return m == 0 ? LemmaResult::pass : LemmaResult::fail;
    walk(0, m);
    return sys.reduce(lhs - rhs).is_zero() ? LemmaResult::pass : LemmaResult::fail;
}

enum class Lemma16Variant { a1, a2, b, c1, c2, d };

// the six displayed binomial expansions for x + (q-q^-1)^2 w  resp.
// x + (q-q^-1)^2 y z, under the stated q-commutation hypotheses
inline LemmaResult check_lemma_1_6(const QSys& sys, Lemma16Variant variant, const QPoly& x,
                                   const QPoly& y, const QPoly& z, const QPoly& w, long m,
                                   long t) {
    RationalQ q1 = RationalQ::q_power(1), q2 = RationalQ::q_power(2);
    auto commutes_as = [&](const QPoly& a, const QPoly& b, const RationalQ& f) {
        return sys.reduce(qp_mul(sys, a, b) - qp_mul(sys, b, a).scaled(f)).is_zero();
    };
    bool hyp = true;
    switch (variant) {
        case Lemma16Variant::a1:
        case Lemma16Variant::a2:
            hyp = commutes_as(x, w, q2);
            break;
        case Lemma16Variant::b:
            hyp = commutes_as(x, y, q1) && commutes_as(x, z, q1) && commutes_as(y, z, RationalQ(1));
            break;
        case Lemma16Variant::c1:
        case Lemma16Variant::c2:
            hyp = commutes_as(w, x, q2);
            break;
        case Lemma16Variant::d:
            hyp = commutes_as(y, x, q1) && commutes_as(z, x, q1) && commutes_as(z, y, RationalQ(1));
            break;
    }
    if (!hyp) return LemmaResult::hypothesis_violation;

    RationalQ qmqi = q1 - RationalQ::q_power(-1);
    QPoly arg;
    if (variant == Lemma16Variant::b || variant == Lemma16Variant::d)
        arg = x + qp_mul(sys, y, z).scaled(qmqi * qmqi);
    else
        arg = x + w.scaled(qmqi * qmqi);
    QPoly lhs = alg_qbinom(sys, arg, t, m);

    QPoly rhs;
    for (long r = 0; r <= m; ++r) {
        RationalQ co = RationalQ::q_power(r * (t - m)) * qmqi.pow(r);
        QPoly term;
        switch (variant) {
            case Lemma16Variant::a1:
                term = qp_mul(sys, alg_divided_power(sys, w, r), alg_braced(sys, x, t, m, r));
                break;
            case Lemma16Variant::a2:
                term = qp_mul(sys, alg_braced(sys, x, t - 2 * r, m, r), alg_divided_power(sys, w, r));
                break;
            case Lemma16Variant::b:
                term = qp_mul(sys, qp_mul(sys, alg_divided_power(sys, y, r),
                                          alg_braced(sys, x, t - r, m, r)),
                              alg_divided_power(sys, z, r))
                           .scaled(RationalQ(bal_fact(r)));
                break;
            case Lemma16Variant::c1:
                term = qp_mul(sys, alg_braced(sys, x, t, m, r), alg_divided_power(sys, w, r));
                break;
            case Lemma16Variant::c2:
                term = qp_mul(sys, alg_divided_power(sys, w, r), alg_braced(sys, x, t - 2 * r, m, r));
                break;
            case Lemma16Variant::d:
                term = qp_mul(sys, qp_mul(sys, alg_divided_power(sys, z, r),
                                          alg_braced(sys, x, t - r, m, r)),
                              alg_divided_power(sys, y, r))
                           .scaled(RationalQ(bal_fact(r)));
                break;
        }
        rhs += term.scaled(co);
    }
    return sys.reduce(lhs - rhs).is_zero() ? LemmaResult::pass : LemmaResult::fail;
}

enum class Lemma17Mode { binomial, divided };

// in the specialization at a primitive l-th root of 1: x^l = 1 when
// (x;0 choose l) is integral, y^l = 0 when y^(l) is integral
inline bool check_lemma_1_7(const RewriteSystem<LaurentZ>& sys, const NCPoly<LaurentZ>& x,
                            Lemma17Mode mode, long ell) {
    NCPoly<LaurentZ> p = NCPoly<LaurentZ>::unit(LaurentZ(1));
    for (long i = 0; i < ell; ++i) p = sys.reduce(p * x);
    if (mode == Lemma17Mode::binomial) p.add(Word{}, LaurentZ(-1));
    for (const auto& [w, c] : p.terms())
        if (!specialize_eps(c, ell).is_zero()) return false;
    return true;
}

}  // namespace qhyper
