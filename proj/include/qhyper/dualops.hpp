#pragma once

#include <cstdint>
#include <random>

#include "dual.hpp"
#include "lemmas.hpp"
#include "pool.hpp"

namespace qhyper {

// split a normal word into (upper exponents, torus exponents, lower exponents)
struct PBWShape {
    std::vector<long> e, z, f;
};

inline PBWShape word_shape(const DualAlgebra& D, const Word& w) {
    PBWShape s;
    s.e.assign(D.root_count(), 0);
    s.z.assign(static_cast<size_t>(D.n()), 0);
    s.f.assign(D.root_count(), 0);
    size_t nr = D.root_count();
    size_t nt = 2 * static_cast<size_t>(D.n());
    for (Letter l : w) {
        if (l < nr) {
            ++s.e[l];
        } else if (l < nr + nt) {
            size_t off = l - nr;
            s.z[off / 2] += (off % 2 == 0) ? 1 : -1;
        } else {
            ++s.f[l - nr - nt];
        }
    }
    return s;
}

// Evaluation pairing against a PBW monomial label of the enveloping side:
// diagonal on matched root exponents, q^(m.z) on the torus, and the explicit
// divided-power conversion factors [e]_q! [f]_q!.
inline RationalQ pairing(const DualElem& x, const UMonomial& u) {
    const DualAlgebra& D = DualAlgebra::get(x.n());
    RationalQ acc;
    for (const auto& [w, c] : x.poly().terms()) {
        PBWShape s = word_shape(D, w);
        if (s.e != u.e || s.f != u.f) continue;
        RationalQ v = c;
        long tor = 0;
        for (size_t k = 0; k < s.z.size(); ++k) tor += s.z[k] * u.z[k];
        v *= RationalQ::q_power(tor);
        long sign = 0, qexp = 0;
        for (size_t r = 0; r < D.root_count(); ++r) {
            auto [i, j] = D.root_of(r);
            sign += s.e[r];
            long d = (j - i - 1) * (s.f[r] - s.e[r]);
            qexp += d;
            if (((d % 2) + 2) % 2 == 1) sign += 1;  // sign of (-q)^d
            v *= RationalQ(bal_fact(s.e[r]) * bal_fact(s.f[r]));
        }
        v *= RationalQ::q_power(qexp);
        if (sign % 2 != 0) v = -v;
        acc += v;
    }
    return acc;
}

// closed forms for the embedding of the divided-power generators
enum class Lemma42Kind { upper, diagonal, lower };

inline DualElem lemma42_closed_form(int n, Lemma42Kind kind, int i, int j, long m, long c,
                                    long k) {
    const DualAlgebra& D = DualAlgebra::get(n);
    auto qp = [](long e) { return RationalQ::q_power(e); };
    RationalQ qmq = qp(1) - qp(-1);
    NCPoly<RationalQ> acc;
    auto epow = [&](int a, int b, long e) {
        // E_{a,b}^{(e)}
        NCPoly<RationalQ> p = NCPoly<RationalQ>::monomial(RationalQ(1), Word(e, D.e_letter(a, b)));
        return p.scaled(RationalQ(bal_fact(e)).inverse());
    };
    auto fpow = [&](int a, int b, long e) {
        NCPoly<RationalQ> p = NCPoly<RationalQ>::monomial(RationalQ(1), Word(e, D.f_letter(a, b)));
        return p.scaled(RationalQ(bal_fact(e)).inverse());
    };
    auto lapow = [&](int h, long e) {
        return NCPoly<RationalQ>::monomial(RationalQ(1), Word(e, D.la_letter(h, false)));
    };
    if (kind == Lemma42Kind::upper || kind == Lemma42Kind::lower) {
        bool up = kind == Lemma42Kind::upper;
        if (up && !(i < j)) throw std::invalid_argument("lemma42: upper needs i < j");
        if (!up && !(i > j)) throw std::invalid_argument("lemma42: lower needs i > j");
        int base = up ? j : i;  // columns run from base..n
        size_t parts = static_cast<size_t>(n - base) + 1;
        std::function<void(size_t, long, std::vector<long>&)> walk = [&](size_t idx, long left,
                                                                         std::vector<long>& es) {
            if (idx == parts) {
                if (left != 0) return;
                long q_extra = up ? es[0] : m * es[0];
                long ex = q_extra;
                RationalQ co(1);
                for (size_t t = 1; t < parts; ++t) {
                    ex += choose2(es[t]);
                    co *= RationalQ(bal_fact(es[t]));
                }
                co *= qp(ex) * qmq.pow(m - es[0]);
                if (up && es[0] % 2 != 0) co = -co;
                NCPoly<RationalQ> term = NCPoly<RationalQ>::unit(co);
                if (up) {
                    term = term * epow(i, j, es[0]);
                    for (size_t t = 1; t < parts; ++t) term = term * epow(i, base + static_cast<int>(t), es[t]);
                    for (size_t t = 0; t < parts; ++t) term = term * lapow(base + static_cast<int>(t), es[t]);
                    for (size_t t = 1; t < parts; ++t) term = term * fpow(base + static_cast<int>(t), j, es[t]);
                } else {
                    for (size_t t = 1; t < parts; ++t) term = term * epow(i, base + static_cast<int>(t), es[t]);
                    for (size_t t = 0; t < parts; ++t) term = term * lapow(base + static_cast<int>(t), es[t]);
                    term = term * fpow(i, j, es[0]);
                    for (size_t t = 1; t < parts; ++t) term = term * fpow(base + static_cast<int>(t), j, es[t]);
                }
                acc += term;
                return;
            }
            for (long v = 0; v <= left; ++v) {
                es.push_back(v);
                walk(idx + 1, left - v, es);
                es.pop_back();
            }
        };
        std::vector<long> es;
        walk(0, m, es);
        RationalQ outer = qp(m * (j - i - 2) - choose2(m));
        long se = m * (j - i + 1);
        if (((se % 2) + 2) % 2 == 1) outer = -outer;
        return DualElem::from_poly(D, acc.scaled(outer));
    }
    // diagonal: i is the index h
    int h = i;
    size_t parts = static_cast<size_t>(n - h);
    for (long r = 0; r <= k; ++r) {
        std::function<void(size_t, long, std::vector<long>&)> walk = [&](size_t idx, long left,
                                                                         std::vector<long>& es) {
            if (idx == parts) {
                if (left != 0) return;
                long ex = 0;
                RationalQ co(1);
                for (size_t t = 0; t < parts; ++t) {
                    ex += choose2(es[t]);
                    co *= RationalQ(bal_fact(es[t]));
                }
                co *= qp(ex + r * (c - k - 2) - choose2(r)) * qmq.pow(r);
                NCPoly<RationalQ> term = NCPoly<RationalQ>::unit(co);
                for (size_t t = 0; t < parts; ++t) term = term * epow(h, h + 1 + static_cast<int>(t), es[t]);
                NCPoly<RationalQ> la = NCPoly<RationalQ>::monomial(RationalQ(1), Word{D.la_letter(h, false)});
                term = term * alg_braced(D.system(), la, c - r, k, r);
                for (size_t t = 0; t < parts; ++t) term = term * lapow(h + 1 + static_cast<int>(t), es[t]);
                for (size_t t = 0; t < parts; ++t) term = term * fpow(h + 1 + static_cast<int>(t), h, es[t]);
                acc += term;
                return;
            }
            for (long v = 0; v <= left; ++v) {
                es.push_back(v);
                walk(idx + 1, left - v, es);
                es.pop_back();
            }
        };
        std::vector<long> es;
        walk(0, r, es);
    }
    return DualElem::from_poly(D, acc);
}

// direct image: xi(expand(generator)), for comparison with the closed form
inline DualElem lemma42_direct(int n, Lemma42Kind kind, int i, int j, long m, long c, long k) {
    if (kind == Lemma42Kind::diagonal) {
        const DualAlgebra& D = DualAlgebra::get(n);
        NCPoly<RationalQ> img = detail::xi_generator(D, i, i);
        return DualElem::from_poly(D, alg_qbinom(D.system(), img, c, k));
    }
    return xi(tb_power(n, i, j, m));
}

inline bool lemma42_check(int n, Lemma42Kind kind, int i, int j, long m, long c, long k) {
    return lemma42_closed_form(n, kind, i, j, m, c, k) == lemma42_direct(n, kind, i, j, m, c, k);
}

// pairing integrality sweep over the image of the basis monomials
struct ScanReport {
    long cases = 0;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

inline ScanReport integrality_scan(int n, long deg_bound, long z_range) {
    const DualAlgebra& D = DualAlgebra::get(n);
    const HyperContext& H = HyperContext::get(n);
    std::vector<HyperMonomial> basis;
    {
        const MatAlgebra& A = MatAlgebra::get(n);
        std::function<void(size_t, long, HyperMonomial&)> rec = [&](size_t l, long left,
                                                                    HyperMonomial& m) {
            if (l == A.nletters()) {
                basis.push_back(m);
                return;
            }
            for (long e = 0; e <= left; ++e) {
                HyperMonomial mm = m;
                if (e) mm.bump(l, static_cast<unsigned>(e));
                rec(l + 1, left - e, mm);
            }
        };
        HyperMonomial m(A.nletters());
        rec(0, deg_bound, m);
    }
    ScanReport rep;
    std::mutex mx;
    parallel_for(basis.size(), [&](size_t bi) {
        const HyperMonomial& tau = basis[bi];
        DualElem img = xi(H.expand(tau));
        // distinct root-exponent patterns occurring in the image
        std::vector<std::pair<std::vector<long>, std::vector<long>>> shapes;
        for (const auto& [w, c] : img.poly().terms()) {
            PBWShape s = word_shape(D, w);
            auto key = std::make_pair(s.e, s.f);
            bool seen = false;
            for (const auto& k2 : shapes)
                if (k2 == key) { seen = true; break; }
            if (!seen) shapes.push_back(key);
        }
        long local = 0;
        std::vector<std::string> bad;
        std::vector<long> z(static_cast<size_t>(n), -z_range);
        for (const auto& [e, f] : shapes) {
            for (;;) {
                UMonomial u{e, z, f};
                RationalQ v = pairing(img, u);
                ++local;
                if (!v.is_laurent()) {
                    std::ostringstream os;
                    os << "tau deg " << tau.degree() << " with z = (";
                    for (size_t t = 0; t < z.size(); ++t) os << (t ? "," : "") << z[t];
                    os << "): " << v.str();
                    bad.push_back(os.str());
                }
                size_t pos = 0;
                while (pos < z.size() && z[pos] == z_range) z[pos++] = -z_range;
                if (pos == z.size()) break;
                ++z[pos];
            }
        }
        std::lock_guard<std::mutex> g(mx);
        rep.cases += local;
        for (auto& b : bad) rep.violations.push_back(std::move(b));
    });
    return rep;
}

// is the torus word La_l ... La_n in the image of the span of t-monomials of
// degree <= deg_bound?  Exact linear solve over Q(q) on the image coordinates.
enum class PreimageResult { solved, inconclusive };

inline PreimageResult preimage_spot_check(int l, int n, long deg_bound) {
    const DualAlgebra& D = DualAlgebra::get(n);
    const MatAlgebra& A = MatAlgebra::get(n);
    std::vector<MatMonomial> cols;
    {
        std::function<void(size_t, long, MatMonomial&)> rec = [&](size_t le, long left,
                                                                  MatMonomial& m) {
            if (le == A.nletters()) {
                cols.push_back(m);
                return;
            }
            for (long e = 0; e <= left; ++e) {
                MatMonomial mm = m;
                if (e) mm.bump(le, static_cast<unsigned>(e));
                rec(le + 1, left - e, mm);
            }
        };
        MatMonomial m(A.nletters());
        rec(0, deg_bound, m);
    }
    std::map<Word, size_t> rows;
    std::vector<std::map<size_t, RationalQ>> colvals(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        NCPoly<RationalQ> img = xi_monomial(D, cols[c]);
        for (const auto& [w, v] : img.terms()) {
            auto it = rows.find(w);
            if (it == rows.end()) it = rows.emplace(w, rows.size()).first;
            colvals[c][it->second] = v;
        }
    }
    Word target;
    for (int k = l; k <= n; ++k) target.push_back(D.la_letter(k, false));
    auto trow = rows.find(target);
    if (trow == rows.end()) return PreimageResult::inconclusive;
    size_t R = rows.size(), C = cols.size();
    std::vector<std::vector<RationalQ>> M(R, std::vector<RationalQ>(C + 1));
    for (size_t c = 0; c < C; ++c)
        for (const auto& [r, v] : colvals[c]) M[r][c] = v;
    M[trow->second][C] = RationalQ(1);
    // gaussian elimination
    size_t rank = 0;
    for (size_t c = 0; c < C && rank < R; ++c) {
        size_t piv = rank;
        while (piv < R && M[piv][c].is_zero()) ++piv;
        if (piv == R) continue;
        std::swap(M[rank], M[piv]);
        RationalQ inv = M[rank][c].inverse();
        for (size_t cc = c; cc <= C; ++cc) M[rank][cc] = M[rank][cc] * inv;
        for (size_t r = 0; r < R; ++r) {
            if (r == rank || M[r][c].is_zero()) continue;
            RationalQ f = M[r][c];
            for (size_t cc = c; cc <= C; ++cc) M[r][cc] = M[r][cc] - f * M[rank][cc];
        }
        ++rank;
    }
    for (size_t r = 0; r < R; ++r) {
        bool allz = true;
        for (size_t c = 0; c < C; ++c)
            if (!M[r][c].is_zero()) { allz = false; break; }
        if (allz && !M[r][C].is_zero()) return PreimageResult::inconclusive;
    }
    return PreimageResult::solved;
}

// full column rank of xi on the degree-d monomial basis, certified by a
// modular evaluation (full rank at a specialization bounds the generic
// rank from below)
inline bool xi_injective_on_degree(int n, long d, std::uint64_t seed = 12345) {
    const DualAlgebra& D = DualAlgebra::get(n);
    const MatAlgebra& A = MatAlgebra::get(n);
    constexpr std::uint64_t P = 2305843009213693951ull;  // 2^61 - 1
    auto mulmod = [](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::uint64_t q0 = rng() % (P - 3) + 2;
        auto eval_laurent = [&](const LaurentZ& x) -> std::uint64_t {
            std::uint64_t acc = 0;
            for (const auto& [e, c] : x.terms()) {
                Integer cm = c % Integer(static_cast<unsigned long>(P));
                if (cm < 0) cm += Integer(static_cast<unsigned long>(P));
                std::uint64_t cv = cm.get_ui();
                std::uint64_t qe = e >= 0 ? powmod(q0, static_cast<std::uint64_t>(e))
                                          : powmod(powmod(q0, P - 2), static_cast<std::uint64_t>(-e));
                acc = (acc + mulmod(cv, qe)) % P;
            }
            return acc;
        };
        auto eval_rat = [&](const RationalQ& x) -> std::optional<std::uint64_t> {
            std::uint64_t num = eval_laurent(x.num().to_laurent());
            std::uint64_t den = eval_laurent(x.den().to_laurent());
            if (den == 0) return std::nullopt;
            return mulmod(num, powmod(den, P - 2));
        };
        // columns: degree-d monomials; rows: normal words
        std::vector<MatMonomial> cols;
        std::function<void(size_t, long, MatMonomial&)> rec = [&](size_t le, long left,
                                                                  MatMonomial& m) {
            if (le == A.nletters()) {
                if (left == 0) cols.push_back(m);
                return;
            }
            for (long e = 0; e <= left; ++e) {
                MatMonomial mm = m;
                if (e) mm.bump(le, static_cast<unsigned>(e));
                rec(le + 1, left - e, mm);
            }
        };
        MatMonomial m0(A.nletters());
        rec(0, d, m0);
        std::map<Word, size_t> rows;
        std::vector<std::vector<std::pair<size_t, std::uint64_t>>> mat(cols.size());
        bool bad = false;
        for (size_t c = 0; c < cols.size() && !bad; ++c) {
            NCPoly<RationalQ> img = xi_monomial(D, cols[c]);
            for (const auto& [w, v] : img.terms()) {
                auto ev = eval_rat(v);
                if (!ev) { bad = true; break; }
                if (*ev == 0) continue;
                auto it = rows.find(w);
                if (it == rows.end()) it = rows.emplace(w, rows.size()).first;
                mat[c].emplace_back(it->second, *ev);
            }
        }
        if (bad) continue;  // unlucky evaluation point
        // column-rank elimination
        std::vector<std::map<size_t, std::uint64_t>> reduced;
        size_t rank = 0;
        for (size_t c = 0; c < cols.size(); ++c) {
            std::map<size_t, std::uint64_t> col(mat[c].begin(), mat[c].end());
            for (const auto& pivotcol : reduced) {
                if (col.empty()) break;
                size_t prow = pivotcol.begin()->first;
                auto it = col.find(prow);
                if (it == col.end()) continue;
                std::uint64_t f = it->second;
                for (const auto& [r, v] : pivotcol) {
                    std::uint64_t sub = mulmod(f, v);
                    auto jt = col.find(r);
                    std::uint64_t cur = jt == col.end() ? 0 : jt->second;
                    std::uint64_t nv = (cur + P - sub) % P;
                    if (nv == 0) {
                        if (jt != col.end()) col.erase(jt);
                    } else {
                        col[r] = nv;
                    }
                }
            }
            if (col.empty()) return false;  // dependent column: not full rank at q0
            // normalize so the smallest row index has value 1
            std::uint64_t inv = powmod(col.begin()->second, P - 2);
            for (auto& [r, v] : col) v = mulmod(v, inv);
            reduced.push_back(std::move(col));
            ++rank;
        }
        return rank == cols.size();
    }
    return false;
}

}  // namespace qhyper
