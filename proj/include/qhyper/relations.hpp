#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyper.hpp"

namespace qhyper {

// The thirteen relation families presenting the integral form.  Each check
// evaluates both sides in the ambient algebra and compares exactly.
enum class RelFamily { qDP, qBC, HV1, HV2, HV3, CD1, CD2, D1, D2, D3p, D3m, D4p, D4m };

inline const char* rel_family_name(RelFamily f) {
    switch (f) {
        case RelFamily::qDP: return "qDP";
        case RelFamily::qBC: return "qBC";
        case RelFamily::HV1: return "H-V.1";
        case RelFamily::HV2: return "H-V.2";
        case RelFamily::HV3: return "H-V.3";
        case RelFamily::CD1: return "CD.1";
        case RelFamily::CD2: return "CD.2";
        case RelFamily::D1: return "D.1";
        case RelFamily::D2: return "D.2";
        case RelFamily::D3p: return "D.3+";
        case RelFamily::D3m: return "D.3-";
        case RelFamily::D4p: return "D.4+";
        case RelFamily::D4m: return "D.4-";
    }
    return "?";
}

struct RelCase {
    RelFamily fam{};
    int sub = 0;          // family-specific selector (identity number, row/col, ...)
    int i = 0, j = 0, l = 0, k = 0;
    long h = 0, f = 0, r = 0, s = 0;
    long c1 = 0, c2 = 0;

    std::string str() const {
        std::ostringstream os;
        os << rel_family_name(fam) << " sub=" << sub << " idx=(" << i << "," << j << "," << l
           << "," << k << ")"
           << " exp=(" << h << "," << f << "," << r << "," << s << ")"
           << " c=(" << c1 << "," << c2 << ")";
        return os.str();
    }
};

namespace detail {

inline RationalQ qpow(long e) { return RationalQ::q_power(e); }
inline RationalQ qmq() { return qpow(1) - qpow(-1); }
inline RationalQ balf(long k) { return RationalQ(bal_fact(k)); }
inline RationalQ parf(long k) { return RationalQ(qfact(k)); }  // (k)_q!
inline RationalQ gbin(long n, long s) { return RationalQ(gauss_binom_any(n, s)); }
inline QMatElem diag_gen(int n, int k) { return QMatElem::gen(AlgKind::M, n, k, k); }

}  // namespace detail

inline bool relation_check(int n, const RelCase& rc) {
    using namespace detail;
    switch (rc.fam) {
        case RelFamily::qDP: {
            // X^(r) X^(s) = [r+s over s] X^(r+s), X^(0) = 1
            QMatElem lhs = tb_power(n, rc.i, rc.j, rc.r) * tb_power(n, rc.i, rc.j, rc.s);
            QMatElem rhs = tb_power(n, rc.i, rc.j, rc.r + rc.s).scaled(RationalQ(bal_binom(rc.r + rc.s, rc.s)));
            return lhs == rhs;
        }
        case RelFamily::qBC: {
            QMatElem X = diag_gen(n, rc.l);
            long c = rc.c1, cs = rc.c2, t = rc.r, s = rc.s;
            switch (rc.sub) {
                case 1:
                    return qbinom_elem(X, c, t) * qbinom_elem(X, c - t, s) ==
                           qbinom_elem(X, c, t + s).scaled(gbin(t + s, t));
                case 2:
                    return qbinom_elem(X, c + 1, t) - qbinom_elem(X, c, t).scaled(qpow(t)) ==
                           qbinom_elem(X, c, t - 1);
                case 3:
                    return qbinom_elem(X, c, t) * qbinom_elem(X, cs, s) ==
                           qbinom_elem(X, cs, s) * qbinom_elem(X, c, t);
                case 4: {
                    if (c < 0) return true;
                    QMatElem rhs = QMatElem::zero(AlgKind::M, n);
                    for (long p = 0; p <= std::min(c, t); ++p)
                        rhs += qbinom_elem(X, 0, t - p).scaled(qpow((c - p) * (t - p)) * gbin(c, p));
                    return qbinom_elem(X, c, t) == rhs;
                }
                case 5:
                    return qbinom_elem(X, c, 0) == QMatElem::one(AlgKind::M, n);
                case 6: {
                    if (c < 0) return true;
                    QMatElem rhs = QMatElem::zero(AlgKind::M, n);
                    for (long p = 0; p <= t; ++p) {
                        RationalQ co = qpow(-t * (c + p) + p * (p + 1) / 2) * gbin(p + c - 1, p);
                        if (p % 2 != 0) co = -co;
                        rhs += qbinom_elem(X, 0, t - p).scaled(co);
                    }
                    return qbinom_elem(X, -c, t) == rhs;
                }
                case 7: {
                    QMatElem corr = QMatElem::one(AlgKind::M, n) +
                                    qbinom_elem(X, 0, 1).scaled(qpow(1) - RationalQ(1));
                    return qbinom_elem(X, c + 1, t) - qbinom_elem(X, c, t) ==
                           (corr * qbinom_elem(X, c, t - 1)).scaled(qpow(c - t + 1));
                }
                default:
                    throw std::invalid_argument("qBC: bad identity selector");
            }
        }
        case RelFamily::HV1: {
            // same row (sub 0) or same column (sub 1); q^{hf} swap
            QMatElem a = rc.sub == 0 ? tb_power(n, rc.i, rc.j, rc.h) : tb_power(n, rc.j, rc.i, rc.h);
            QMatElem b = rc.sub == 0 ? tb_power(n, rc.i, rc.k, rc.f) : tb_power(n, rc.k, rc.i, rc.f);
            return a * b == (b * a).scaled(qpow(rc.h * rc.f));
        }
        case RelFamily::HV2: {
            // i < j: the binomial moves with c |-> c + h
            QMatElem g = rc.sub == 0 ? tb_power(n, rc.i, rc.j, rc.h) : tb_power(n, rc.j, rc.i, rc.h);
            QMatElem X = diag_gen(n, rc.i);
            return qbinom_elem(X, rc.c1, rc.r) * g == g * qbinom_elem(X, rc.c1 + rc.h, rc.r);
        }
        case RelFamily::HV3: {
            // i > j: the binomial moves with c |-> c - h
            QMatElem g = rc.sub == 0 ? tb_power(n, rc.i, rc.j, rc.h) : tb_power(n, rc.j, rc.i, rc.h);
            QMatElem X = diag_gen(n, rc.i);
            return qbinom_elem(X, rc.c1, rc.r) * g == g * qbinom_elem(X, rc.c1 - rc.h, rc.r);
        }
        case RelFamily::CD1: {
            QMatElem g = tb_power(n, rc.i, rc.j, rc.h);
            QMatElem B = qbinom_elem(diag_gen(n, rc.l), rc.c1, rc.r);
            return B * g == g * B;
        }
        case RelFamily::CD2: {
            QMatElem a = tb_power(n, rc.i, rc.j, rc.h);
            QMatElem b = tb_power(n, rc.l, rc.k, rc.f);
            return a * b == b * a;
        }
        case RelFamily::D1: {
            QMatElem lhs = tb_power(n, rc.l, rc.k, rc.f) * tb_power(n, rc.i, rc.j, rc.h);
            QMatElem rhs = QMatElem::zero(AlgKind::M, n);
            for (long s = 0; s <= std::min(rc.h, rc.f); ++s) {
                RationalQ co = qpow(choose2(s + 1) - s * (rc.h + rc.f - s)) * qmq().pow(s) * balf(s);
                if (s % 2 != 0) co = -co;
                rhs += (tb_power(n, rc.i, rc.j, rc.h - s) * tb_power(n, rc.i, rc.k, s) *
                        tb_power(n, rc.l, rc.j, s) * tb_power(n, rc.l, rc.k, rc.f - s))
                           .scaled(co);
            }
            return lhs == rhs;
        }
        case RelFamily::D2: {
            // (t_jj;c2 ch r)(t_ii;c1 ch s) straightening, i < j
            QMatElem lhs = qbinom_elem(diag_gen(n, rc.j), rc.c2, rc.r) *
                           qbinom_elem(diag_gen(n, rc.i), rc.c1, rc.s);
            QMatElem rhs = QMatElem::zero(AlgKind::M, n);
            for (long p = 0; p <= std::min(rc.r, rc.s); ++p) {
                RationalQ co = qpow(p * ((rc.c1 + rc.c2) - (rc.r + rc.s)) - choose2(p)) *
                               qmq().pow(p) * balf(p);
                if (p % 2 != 0) co = -co;
                rhs += (tb_power(n, rc.i, rc.j, p) *
                        braced_elem(diag_gen(n, rc.i), rc.c1 - p, rc.s, p) *
                        braced_elem(diag_gen(n, rc.j), rc.c2 - p, rc.r, p) *
                        tb_power(n, rc.j, rc.i, p))
                           .scaled(co);
            }
            return lhs == rhs;
        }
        case RelFamily::D3p:
        case RelFamily::D3m: {
            bool plus = rc.fam == RelFamily::D3p;
            // D.3+: i<j<k acting on (j,k),(i,j); D.3-: i<j<l acting on (l,j),(j,i)
            QMatElem lhs = plus ? tb_power(n, rc.j, rc.k, rc.f) * tb_power(n, rc.i, rc.j, rc.h)
                                : tb_power(n, rc.l, rc.j, rc.f) * tb_power(n, rc.j, rc.i, rc.h);
            QMatElem rhs1 = QMatElem::zero(AlgKind::M, n), rhs2 = rhs1;
            for (long r = 0; r <= std::min(rc.h, rc.f); ++r)
                for (long s = 0; s <= r; ++s) {
                    RationalQ co = qpow(choose2(r + 1) + choose2(s) - r * (rc.h + rc.f - r)) *
                                   (qpow(1) - RationalQ(1)).pow(s) * parf(s) * gbin(r, s);
                    if (r % 2 != 0) co = -co;
                    if (plus) {
                        rhs1 += (tb_power(n, rc.i, rc.j, rc.h - r) * tb_power(n, rc.i, rc.k, r) *
                                 tb_power(n, rc.j, rc.k, rc.f - r) *
                                 qbinom_elem(diag_gen(n, rc.j), rc.f - r, s))
                                    .scaled(co);
                        rhs2 += (tb_power(n, rc.i, rc.j, rc.h - r) * tb_power(n, rc.i, rc.k, r) *
                                 qbinom_elem(diag_gen(n, rc.j), 0, s) *
                                 tb_power(n, rc.j, rc.k, rc.f - r))
                                    .scaled(co);
                    } else {
                        rhs1 += (qbinom_elem(diag_gen(n, rc.j), rc.h - r, s) *
                                 tb_power(n, rc.j, rc.i, rc.h - r) * tb_power(n, rc.l, rc.i, r) *
                                 tb_power(n, rc.l, rc.j, rc.f - r))
                                    .scaled(co);
                        rhs2 += (tb_power(n, rc.j, rc.i, rc.h - r) *
                                 qbinom_elem(diag_gen(n, rc.j), 0, s) * tb_power(n, rc.l, rc.i, r) *
                                 tb_power(n, rc.l, rc.j, rc.f - r))
                                    .scaled(co);
                    }
                }
            return lhs == rhs1 && lhs == rhs2;
        }
        case RelFamily::D4p: {
            // tb_{l,j}^{(f)} (t_ii;c ch k) with i<l<j or i<j<l
            QMatElem lhs = tb_power(n, rc.l, rc.j, rc.f) * qbinom_elem(diag_gen(n, rc.i), rc.c1, rc.k);
            QMatElem rhs = QMatElem::zero(AlgKind::M, n);
            for (long s = 0; s <= std::min(rc.f, static_cast<long>(rc.k)); ++s) {
                RationalQ co = qpow(choose2(s + 1) - s * (rc.f + rc.k - rc.c1)) * qmq().pow(s) * balf(s);
                if (s % 2 != 0) co = -co;
                rhs += (braced_elem(diag_gen(n, rc.i), rc.c1 - 2 * s, rc.k, s) *
                        tb_power(n, rc.i, rc.j, s) * tb_power(n, rc.l, rc.i, s) *
                        tb_power(n, rc.l, rc.j, rc.f - s))
                           .scaled(co);
            }
            return lhs == rhs;
        }
        case RelFamily::D4m: {
            // (t_ll;c ch k) tb_{i,h}^{(f)} with i<h<l or h<i<l
            QMatElem lhs = qbinom_elem(diag_gen(n, rc.l), rc.c1, rc.k) * tb_power(n, rc.i, rc.j, rc.f);
            QMatElem rhs = QMatElem::zero(AlgKind::M, n);
            for (long s = 0; s <= std::min(rc.f, static_cast<long>(rc.k)); ++s) {
                RationalQ co = qpow(choose2(s + 1) - s * (rc.f + rc.k - rc.c1)) * qmq().pow(s) * balf(s);
                if (s % 2 != 0) co = -co;
                rhs += (tb_power(n, rc.i, rc.j, rc.f - s) * tb_power(n, rc.i, rc.l, s) *
                        tb_power(n, rc.l, rc.j, s) *
                        braced_elem(diag_gen(n, rc.l), rc.c1 - 2 * s, rc.k, s))
                           .scaled(co);
            }
            return lhs == rhs;
        }
    }
    return false;
}

// mechanical enumeration of every valid index pattern of one family
inline std::vector<RelCase> relation_cases(int n, long max_exp, long max_c, RelFamily fam) {
    std::vector<RelCase> out;
    auto offdiag = [&](auto fn) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) fn(i, j);
    };
    switch (fam) {
        case RelFamily::qDP:
            offdiag([&](int i, int j) {
                for (long r = 0; r <= max_exp; ++r)
                    for (long s = 0; s <= max_exp; ++s)
                        out.push_back({fam, 0, i, j, 0, 0, 0, 0, r, s, 0, 0});
            });
            break;
        case RelFamily::qBC:
            for (int l = 1; l <= n; ++l)
                for (int sub = 1; sub <= 7; ++sub)
                    for (long c = -max_c; c <= max_c; ++c)
                        for (long t = (sub == 2 || sub == 7) ? 1 : 0; t <= max_exp; ++t) {
                            if (sub == 1 || sub == 3) {
                                for (long s = 0; s <= max_exp; ++s) {
                                    long cs = sub == 3 ? -c : 0;
                                    out.push_back({fam, sub, 0, 0, l, 0, 0, 0, t, s, c, cs});
                                }
                            } else {
                                out.push_back({fam, sub, 0, 0, l, 0, 0, 0, t, 0, c, 0});
                            }
                        }
            break;
        case RelFamily::HV1:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k) {
                        if (j == i || k == i) continue;
                        for (long h = 0; h <= max_exp; ++h)
                            for (long f = 0; f <= max_exp; ++f) {
                                out.push_back({fam, 0, i, j, 0, k, h, f, 0, 0, 0, 0});
                                out.push_back({fam, 1, i, j, 0, k, h, f, 0, 0, 0, 0});
                            }
                    }
            break;
        case RelFamily::HV2:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int sub = 0; sub <= 1; ++sub)
                        for (long c = -max_c; c <= max_c; ++c)
                            for (long k = 0; k <= max_exp; ++k)
                                for (long h = 0; h <= max_exp; ++h)
                                    out.push_back({fam, sub, i, j, 0, 0, h, 0, k, 0, c, 0});
            break;
        case RelFamily::HV3:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j < i; ++j)
                    for (int sub = 0; sub <= 1; ++sub)
                        for (long c = -max_c; c <= max_c; ++c)
                            for (long k = 0; k <= max_exp; ++k)
                                for (long h = 0; h <= max_exp; ++h)
                                    out.push_back({fam, sub, i, j, 0, 0, h, 0, k, 0, c, 0});
            break;
        case RelFamily::CD1:
            offdiag([&](int i, int j) {
                for (int l = 1; l <= n; ++l) {
                    if (!((i < l && l < j) || (i > l && l > j))) continue;
                    for (long c = -max_c; c <= max_c; ++c)
                        for (long k = 0; k <= max_exp; ++k)
                            for (long h = 0; h <= max_exp; ++h)
                                out.push_back({fam, 0, i, j, l, 0, h, 0, k, 0, c, 0});
                }
            });
            break;
        case RelFamily::CD2:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int l = 1; l <= n; ++l)
                        for (int k = 1; k <= n; ++k) {
                            if (j == i || l == k) continue;
                            if (!(i < l && k < j)) continue;
                            for (long h = 0; h <= max_exp; ++h)
                                for (long f = 0; f <= max_exp; ++f)
                                    out.push_back({fam, 0, i, j, l, k, h, f, 0, 0, 0, 0});
                        }
            break;
        case RelFamily::D1:
            for (int i = 1; i <= n; ++i)
                for (int l = i + 1; l <= n; ++l)
                    for (int j = 1; j <= n; ++j)
                        for (int k = j + 1; k <= n; ++k) {
                            if (j == i || j == l || k == i || k == l) continue;
                            for (long h = 0; h <= max_exp; ++h)
                                for (long f = 0; f <= max_exp; ++f)
                                    out.push_back({fam, 0, i, j, l, k, h, f, 0, 0, 0, 0});
                        }
            break;
        case RelFamily::D2:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (long c1 = -max_c; c1 <= max_c; ++c1)
                        for (long c2 = -max_c; c2 <= max_c; ++c2)
                            for (long r = 0; r <= max_exp; ++r)
                                for (long s = 0; s <= max_exp; ++s)
                                    out.push_back({fam, 0, i, j, 0, 0, 0, 0, r, s, c1, c2});
            break;
        case RelFamily::D3p:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        for (long h = 0; h <= max_exp; ++h)
                            for (long f = 0; f <= max_exp; ++f)
                                out.push_back({fam, 0, i, j, 0, k, h, f, 0, 0, 0, 0});
            break;
        case RelFamily::D3m:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int l = j + 1; l <= n; ++l)
                        for (long h = 0; h <= max_exp; ++h)
                            for (long f = 0; f <= max_exp; ++f)
                                out.push_back({fam, 0, i, j, l, 0, h, f, 0, 0, 0, 0});
            break;
        case RelFamily::D4p:
            for (int i = 1; i <= n; ++i)
                for (int l = 1; l <= n; ++l)
                    for (int j = 1; j <= n; ++j) {
                        if (!((i < l && l < j) || (i < j && j < l))) continue;
                        for (long c = -max_c; c <= max_c; ++c)
                            for (long k = 0; k <= max_exp; ++k)
                                for (long f = 0; f <= max_exp; ++f)
                                    out.push_back({fam, 0, i, j, l, static_cast<int>(k), 0, f, 0, 0, c, 0});
                    }
            break;
        case RelFamily::D4m:
            for (int l = 1; l <= n; ++l)
                for (int i = 1; i <= n; ++i)
                    for (int h = 1; h <= n; ++h) {
                        if (!((i < h && h < l) || (h < i && i < l))) continue;
                        for (long c = -max_c; c <= max_c; ++c)
                            for (long k = 0; k <= max_exp; ++k)
                                for (long f = 0; f <= max_exp; ++f)
                                    out.push_back({fam, 0, i, h, l, static_cast<int>(k), 0, f, 0, 0, c, 0});
                    }
            break;
    }
    return out;
}

inline std::vector<RelCase> relation_cases(int n, long max_exp, long max_c) {
    std::vector<RelCase> all;
    for (RelFamily f : {RelFamily::qDP, RelFamily::qBC, RelFamily::HV1, RelFamily::HV2,
                        RelFamily::HV3, RelFamily::CD1, RelFamily::CD2, RelFamily::D1,
                        RelFamily::D2, RelFamily::D3p, RelFamily::D3m, RelFamily::D4p,
                        RelFamily::D4m}) {
        std::vector<RelCase> cs = relation_cases(n, max_exp, max_c, f);
        all.insert(all.end(), cs.begin(), cs.end());
    }
    return all;
}

}  // namespace qhyper
