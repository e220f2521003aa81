#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "coeffops.hpp"
#include "intutil.hpp"
#include "ncpoly.hpp"
#include "word.hpp"

namespace qhyper {

struct completion_ceiling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class C>
struct RewriteRule {
    Word lhs;       // implicit coefficient 1
    NCPoly<C> rhs;  // every word strictly below lhs in deglex
};

inline size_t completion_rule_ceiling() {
    if (const char* s = std::getenv("QHYPER_DEGREE_CEILING")) {
        long v = std::atol(s);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 4096;
}

// Order-compatible rewriting w.r.t. deglex over the alphabet precedence.
// Single-word reductions are memoized once the rule set is frozen; that is
// what makes repeated straightening of monomial products cheap.
template <class C>
class RewriteSystem {
  public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet alpha, C one) : alpha_(std::move(alpha)), one_(std::move(one)) {
        by_first_.assign(alpha_.size(), {});
    }

    // copies and moves drop the reduction memo
    RewriteSystem(const RewriteSystem& o)
        : alpha_(o.alpha_), one_(o.one_), rules_(o.rules_), by_first_(o.by_first_),
          cert_degree_(o.cert_degree_), frozen_(o.frozen_) {}
    RewriteSystem& operator=(const RewriteSystem& o) {
        if (this != &o) {
            alpha_ = o.alpha_;
            one_ = o.one_;
            rules_ = o.rules_;
            by_first_ = o.by_first_;
            cert_degree_ = o.cert_degree_;
            frozen_ = o.frozen_;
            clear_memo();
        }
        return *this;
    }

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<RewriteRule<C>>& rules() const { return rules_; }
    const C& one() const { return one_; }
    bool has_certificate() const { return cert_degree_ >= 0; }
    long certificate_degree() const { return cert_degree_; }

    void add_rule(Word lhs, NCPoly<C> rhs) {
        DegLexLess lt;
        if (lhs.empty()) throw std::invalid_argument("RewriteSystem: empty lhs");
        for (const auto& [w, c] : rhs.terms())
            if (!lt(w, lhs)) throw std::invalid_argument("RewriteSystem: rhs not below lhs");
        for (const auto& r : rules_)
            if (r.lhs == lhs) throw std::invalid_argument("RewriteSystem: duplicate lhs");
        rules_.push_back({std::move(lhs), std::move(rhs)});
        reindex();
        cert_degree_ = -1;
        frozen_ = false;
        clear_memo();
    }

    bool word_irreducible(const Word& w) const { return find_redex(w).first == npos; }

    NCPoly<C> reduce(const NCPoly<C>& p) const {
        NCPoly<C> out;
        for (const auto& [w, c] : p.terms()) {
            NCPoly<C> nf = reduce_word(w);
            for (const auto& [w2, c2] : nf.terms()) out.add(w2, c2 * c);
        }
        return out;
    }

    NCPoly<C> reduce_word(const Word& w) const {
        if (frozen_) {
            {
                std::lock_guard<std::mutex> g(memo_mx_);
                auto it = memo_.find(w);
                if (it != memo_.end()) return it->second;
            }
            NCPoly<C> nf = reduce_word_nocache(w);
            std::lock_guard<std::mutex> g(memo_mx_);
            return memo_.emplace(w, std::move(nf)).first->second;
        }
        return reduce_word_nocache(w);
    }

    void freeze() {
        frozen_ = true;
        clear_memo();
    }

    // Bounded diamond-lemma completion: resolve every overlap and inclusion
    // ambiguity of total degree <= degree_bound; nonzero resolutions become
    // new oriented rules until a pass finds none.  The certificate then
    // records confluence up to the bound.
    void complete(long degree_bound) {
        const size_t ceiling = completion_rule_ceiling();
        frozen_ = false;
        clear_memo();
        inter_reduce(ceiling);
        for (;;) {
            std::vector<NCPoly<C>> eqs = critical_differences(degree_bound);
            if (eqs.empty()) break;
            for (const auto& e : eqs) add_equation_retiring(e, ceiling);
        }
        cert_degree_ = degree_bound;
        freeze();
    }

    // all nonzero reduced differences of ambiguity resolutions up to the bound
    std::vector<NCPoly<C>> critical_differences(long bound) const {
        std::vector<NCPoly<C>> out;
        for (size_t i = 0; i < rules_.size(); ++i) {
            for (size_t j = 0; j < rules_.size(); ++j) {
                const Word& A = rules_[i].lhs;
                const Word& B = rules_[j].lhs;
                // overlap: proper suffix of A = proper prefix of B
                for (size_t k = 1; k < A.size() && k < B.size(); ++k) {
                    bool match = true;
                    for (size_t t = 0; t < k; ++t)
                        if (A[A.size() - k + t] != B[t]) { match = false; break; }
                    if (!match) continue;
                    Word w = A;
                    w.insert(w.end(), B.begin() + k, B.end());
                    if (static_cast<long>(w.size()) > bound) continue;
                    collect_difference(w, i, 0, j, A.size() - k, out);
                }
                // inclusion: B a proper factor of A
                if (i != j && B.size() < A.size()) {
                    if (static_cast<long>(A.size()) > bound) continue;
                    for (size_t p = 0; p + B.size() <= A.size(); ++p) {
                        bool match = true;
                        for (size_t t = 0; t < B.size(); ++t)
                            if (A[p + t] != B[t]) { match = false; break; }
                        if (match) collect_difference(A, i, 0, j, p, out);
                    }
                }
            }
        }
        return out;
    }

    // count words of given degree containing no rule lhs as a factor
    Integer count_irreducible(size_t deg) const {
        size_t m = 1;
        for (const auto& r : rules_) m = std::max(m, r.lhs.size());
        size_t ctx = m - 1;
        std::map<Word, Integer> cur;
        cur[Word{}] = 1;
        for (size_t step = 0; step < deg; ++step) {
            std::map<Word, Integer> next;
            for (const auto& [suf, cnt] : cur) {
                for (size_t ai = 0; ai < alpha_.size(); ++ai) {
                    Word w = suf;
                    w.push_back(static_cast<Letter>(ai));
                    bool bad = false;
                    for (const auto& r : rules_) {
                        if (r.lhs.size() > w.size()) continue;
                        bool match = true;
                        size_t off = w.size() - r.lhs.size();
                        for (size_t k = 0; k < r.lhs.size(); ++k)
                            if (w[off + k] != r.lhs[k]) { match = false; break; }
                        if (match) { bad = true; break; }
                    }
                    if (bad) continue;
                    if (w.size() > ctx) w.erase(w.begin(), w.begin() + (w.size() - ctx));
                    next[w] += cnt;
                }
            }
            cur = std::move(next);
        }
        Integer total = 0;
        for (const auto& [suf, cnt] : cur) total += cnt;
        return total;
    }

    template <class D, class F>
    RewriteSystem<D> map_coeffs(F f) const {
        RewriteSystem<D> out(alpha_, f(one_));
        for (const auto& r : rules_) out.add_rule(r.lhs, r.rhs.template map_coeffs<D>(f));
        out.cert_degree_ = cert_degree_;
        out.frozen_ = frozen_;
        return out;
    }

    template <class D>
    friend class RewriteSystem;

  private:
    static constexpr size_t npos = static_cast<size_t>(-1);

    std::pair<size_t, size_t> find_redex(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            for (size_t ri : by_first_[w[pos]]) {
                const Word& l = rules_[ri].lhs;
                if (pos + l.size() > w.size()) continue;
                bool match = true;
                for (size_t k = 1; k < l.size(); ++k)
                    if (w[pos + k] != l[k]) { match = false; break; }
                if (match) return {pos, ri};
            }
        }
        return {npos, npos};
    }

    NCPoly<C> reduce_word_nocache(const Word& w) const {
        auto [pos, ri] = find_redex(w);
        if (pos == npos) return NCPoly<C>::monomial(one_, w);
        const RewriteRule<C>& r = rules_[ri];
        Word u(w.begin(), w.begin() + pos);
        Word v(w.begin() + pos + r.lhs.size(), w.end());
        NCPoly<C> step = r.rhs.framed(u, v);
        NCPoly<C> out;
        for (const auto& [w2, c2] : step.terms()) {
            NCPoly<C> nf = reduce_word(w2);
            for (const auto& [w3, c3] : nf.terms()) out.add(w3, c3 * c2);
        }
        return out;
    }

    // one rewrite of word w by rule ri at position p
    NCPoly<C> one_step(const Word& w, size_t ri, size_t p) const {
        const RewriteRule<C>& r = rules_[ri];
        Word u(w.begin(), w.begin() + p);
        Word v(w.begin() + p + r.lhs.size(), w.end());
        return r.rhs.framed(u, v);
    }

    void collect_difference(const Word& w, size_t i, size_t pi, size_t j, size_t pj,
                            std::vector<NCPoly<C>>& out) const {
        if (i == j && pi == pj) return;
        NCPoly<C> d = reduce(one_step(w, i, pi) - one_step(w, j, pj));
        if (!d.is_zero()) out.push_back(std::move(d));
    }

    void add_equation_retiring(const NCPoly<C>& e, size_t ceiling) {
        NCPoly<C> d = reduce(e);
        if (d.is_zero()) return;
        if (rules_.size() + 1 > ceiling)
            throw completion_ceiling("completion: rule ceiling exceeded (" +
                                     std::to_string(ceiling) + ")");
        const auto& [lw, lc] = d.leading();
        auto inv = try_unit_inverse(lc);
        if (!inv) throw std::domain_error("completion: leading coefficient not invertible");
        NCPoly<C> rest = d;
        rest.add(lw, -lc);
        Word lhs = lw;
        NCPoly<C> rhs = rest.scaled(-(*inv));
        std::vector<NCPoly<C>> retired;
        for (size_t t = rules_.size(); t-- > 0;) {
            if (word_find(rules_[t].lhs, lhs) != std::string::npos) {
                NCPoly<C> eq = NCPoly<C>::monomial(one_, rules_[t].lhs);
                eq -= rules_[t].rhs;
                retired.push_back(std::move(eq));
                rules_.erase(rules_.begin() + t);
            }
        }
        rules_.push_back({std::move(lhs), std::move(rhs)});
        reindex();
        for (const auto& eq : retired) add_equation_retiring(eq, ceiling);
    }

    void inter_reduce(size_t ceiling) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < rules_.size() && !changed; ++i) {
                for (size_t j = 0; j < rules_.size() && !changed; ++j) {
                    if (i == j) continue;
                    if (word_find(rules_[i].lhs, rules_[j].lhs) != std::string::npos) {
                        NCPoly<C> eq = NCPoly<C>::monomial(one_, rules_[i].lhs);
                        eq -= rules_[i].rhs;
                        rules_.erase(rules_.begin() + i);
                        reindex();
                        add_equation_retiring(eq, ceiling);
                        changed = true;
                    }
                }
            }
        }
        for (auto& r : rules_) {
            NCPoly<C> rr = reduce(r.rhs);
            r.rhs = std::move(rr);
        }
    }

    void reindex() { by_first_.assign(alpha_.size(), {}); for (size_t i = 0; i < rules_.size(); ++i) by_first_[rules_[i].lhs[0]].push_back(i); }

    void clear_memo() const {
        std::lock_guard<std::mutex> g(memo_mx_);
        memo_.clear();
    }

    Alphabet alpha_;
    C one_;
    std::vector<RewriteRule<C>> rules_;
    std::vector<std::vector<size_t>> by_first_;
    long cert_degree_ = -1;
    bool frozen_ = false;

    mutable std::mutex memo_mx_;
    mutable std::map<Word, NCPoly<C>> memo_;
};

}  // namespace qhyper
