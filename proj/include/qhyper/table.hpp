#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "hypercop.hpp"
#include "pool.hpp"

namespace qhyper {

namespace detail {

template <class C>
struct ring_val;
template <>
struct ring_val<LaurentZ> {
    static bool zero(const LaurentZ& c) { return c.is_zero(); }
    static LaurentZ at_one(const LaurentZ& c) { return c; }
};
template <>
struct ring_val<CycloZ> {
    static bool zero(const CycloZ& c) { return c.is_zero(); }
};
template <>
struct ring_val<Integer> {
    static bool zero(const Integer& c) { return c == 0; }
};

}  // namespace detail

// all basis exponent matrices of total degree <= d, in deglex order
inline std::vector<HyperMonomial> hyper_basis(int n, long d) {
    const MatAlgebra& A = MatAlgebra::get(n);
    std::vector<HyperMonomial> out;
    std::function<void(size_t, long, HyperMonomial&)> rec = [&](size_t l, long left,
                                                                HyperMonomial& m) {
        if (l == A.nletters()) {
            out.push_back(m);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            HyperMonomial mm = m;
            if (e) mm.bump(l, static_cast<unsigned>(e));
            rec(l + 1, left - e, mm);
        }
    };
    HyperMonomial m(A.nletters());
    rec(0, d, m);
    std::sort(out.begin(), out.end());
    return out;
}

// Structure constants of the integral form on the basis B up to one total
// degree bound: products of every in-range pair and coproducts of every
// basis monomial, with coefficients in C.
template <class C>
struct StructureTable {
    int n = 0;
    long d = 0;
    std::vector<HyperMonomial> basis;
    std::map<HyperMonomial, size_t> index;
    // mult[a][b] with |a|+|b| <= d: coordinates of basis[a] * basis[b]
    std::map<std::pair<size_t, size_t>, std::vector<std::pair<size_t, C>>> mult;
    // comult[a]: coordinates of Delta(basis[a]) in B (x) B
    std::map<size_t, std::vector<std::tuple<size_t, size_t, C>>> comult;

    size_t find(const HyperMonomial& m) const {
        auto it = index.find(m);
        if (it == index.end()) throw std::out_of_range("StructureTable: monomial out of range");
        return it->second;
    }

    using Coords = std::map<size_t, C>;

    Coords multiply(const Coords& x, const Coords& y) const {
        Coords out;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) {
                auto it = mult.find({a, b});
                if (it == mult.end())
                    throw std::out_of_range("StructureTable: product beyond degree bound");
                for (const auto& [t, c] : it->second) {
                    auto jt = out.find(t);
                    if (jt == out.end()) jt = out.emplace(t, C()).first;
                    jt->second += c * ca * cb;
                    if (detail::ring_val<C>::zero(jt->second)) out.erase(jt);
                }
            }
        return out;
    }
};

// generic table over Z[q,q^-1]; throws integrality_violation if any
// structure constant fails to be Laurent
inline StructureTable<LaurentZ> build_structure_table(int n, long d, bool with_comult = true) {
    StructureTable<LaurentZ> T;
    T.n = n;
    T.d = d;
    T.basis = hyper_basis(n, d);
    for (size_t i = 0; i < T.basis.size(); ++i) T.index.emplace(T.basis[i], i);

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < T.basis.size(); ++a)
        for (size_t b = 0; b < T.basis.size(); ++b)
            if (T.basis[a].degree() + T.basis[b].degree() <= d) pairs.emplace_back(a, b);

    std::vector<std::vector<std::pair<size_t, LaurentZ>>> rows(pairs.size());
    const HyperContext& H = HyperContext::get(n);
    parallel_for(pairs.size(), [&](size_t idx) {
        auto [a, b] = pairs[idx];
        QMatElem prod = H.expand(T.basis[a]) * H.expand(T.basis[b]);
        HyperElem co = H.contract(prod);
        std::vector<std::pair<size_t, LaurentZ>> row;
        for (const auto& [m, c] : co.coords()) {
            auto lc = c.to_laurent();
            if (!lc)
                throw integrality_violation("structure constant of basis pair not in Z[q,q^-1]");
            row.emplace_back(T.index.at(m), *lc);
        }
        rows[idx] = std::move(row);
    });
    for (size_t idx = 0; idx < pairs.size(); ++idx) T.mult.emplace(pairs[idx], std::move(rows[idx]));

    if (with_comult) {
        std::vector<std::vector<std::tuple<size_t, size_t, LaurentZ>>> crows(T.basis.size());
        parallel_for(T.basis.size(), [&](size_t a) {
            HyperElem x(n);
            x.add(T.basis[a], RationalQ(1));
            HyperTensor dt = hyper_coproduct(x);
            std::vector<std::tuple<size_t, size_t, LaurentZ>> row;
            for (const auto& [k, c] : dt) {
                auto lc = c.to_laurent();
                if (!lc) throw integrality_violation("coproduct constant not in Z[q,q^-1]");
                row.emplace_back(T.index.at(k.first), T.index.at(k.second), *lc);
            }
            crows[a] = std::move(row);
        });
        for (size_t a = 0; a < T.basis.size(); ++a) T.comult.emplace(a, std::move(crows[a]));
    }
    return T;
}

// coefficient-wise specializations of the generic table
inline StructureTable<Integer> specialize_table_one(const StructureTable<LaurentZ>& T) {
    StructureTable<Integer> S;
    S.n = T.n;
    S.d = T.d;
    S.basis = T.basis;
    S.index = T.index;
    for (const auto& [k, row] : T.mult) {
        auto& out = S.mult[k];
        for (const auto& [t, c] : row) {
            Integer v = specialize_one(c);
            if (v != 0) out.emplace_back(t, v);
        }
    }
    for (const auto& [a, row] : T.comult) {
        auto& out = S.comult[a];
        for (const auto& [t1, t2, c] : row) {
            Integer v = specialize_one(c);
            if (v != 0) out.emplace_back(t1, t2, v);
        }
    }
    return S;
}

inline StructureTable<CycloZ> specialize_table_eps(const StructureTable<LaurentZ>& T, long ell) {
    StructureTable<CycloZ> S;
    S.n = T.n;
    S.d = T.d;
    S.basis = T.basis;
    S.index = T.index;
    for (const auto& [k, row] : T.mult) {
        auto& out = S.mult[k];
        for (const auto& [t, c] : row) {
            CycloZ v = specialize_eps(c, ell);
            if (!v.is_zero()) out.emplace_back(t, v);
        }
    }
    for (const auto& [a, row] : T.comult) {
        auto& out = S.comult[a];
        for (const auto& [t1, t2, c] : row) {
            CycloZ v = specialize_eps(c, ell);
            if (!v.is_zero()) out.emplace_back(t1, t2, v);
        }
    }
    return S;
}

// the q = 1 table with scalars extended to Z_eps (the Frobenius target)
inline StructureTable<CycloZ> extend_table_eps(const StructureTable<Integer>& T, long ell) {
    StructureTable<CycloZ> S;
    S.n = T.n;
    S.d = T.d;
    S.basis = T.basis;
    S.index = T.index;
    for (const auto& [k, row] : T.mult) {
        auto& out = S.mult[k];
        for (const auto& [t, c] : row) out.emplace_back(t, CycloZ(ell, c));
    }
    for (const auto& [a, row] : T.comult) {
        auto& out = S.comult[a];
        for (const auto& [t1, t2, c] : row) out.emplace_back(t1, t2, CycloZ(ell, c));
    }
    return S;
}

// The quantum Frobenius on coordinates over Z_eps: a basis monomial maps to
// its entrywise quotient by l when l divides every entry, else to zero; the
// image lives in the q = 1 table.
template <class C>
std::map<size_t, C> frobenius_coords(const StructureTable<C>& table,
                                     const std::map<size_t, C>& coords, long ell) {
    std::map<size_t, C> out;
    const MatAlgebra& A = MatAlgebra::get(table.n);
    for (const auto& [a, c] : coords) {
        const HyperMonomial& m = table.basis[a];
        bool divisible = true;
        HyperMonomial img(A.nletters());
        for (size_t l = 0; l < A.nletters() && divisible; ++l) {
            unsigned e = m.exp(l);
            if (e % ell != 0)
                divisible = false;
            else if (e)
                img.bump(l, e / static_cast<unsigned>(ell));
        }
        if (!divisible) continue;
        size_t t = table.find(img);
        auto it = out.find(t);
        if (it == out.end()) it = out.emplace(t, C()).first;
        it->second += c;
        if (detail::ring_val<C>::zero(it->second)) out.erase(it);
    }
    return out;
}

}  // namespace qhyper
