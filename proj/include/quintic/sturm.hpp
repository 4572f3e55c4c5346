/*
   Copyright 2026 The quintic-atlas authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/poly.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// A point of evaluation that may sit at either end of the real line.
class Bound {
   public:
    enum class Kind { neg_inf, finite, pos_inf };

    Bound(Rational x) : kind_(Kind::finite), value_(std::move(x)) {}  // NOLINT: implicit
    static Bound neg_inf() { return Bound(Kind::neg_inf); }
    static Bound pos_inf() { return Bound(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Rational& value() const { return value_; }

    std::string str() const {
        switch (kind_) {
            case Kind::neg_inf: return "-inf";
            case Kind::pos_inf: return "+inf";
            default: return value_.str();
        }
    }

   private:
    explicit Bound(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

// Sign of f at a bound; at the infinities the leading term decides.
inline int sign_at(const Poly& f, const Bound& b) {
    if (f.is_zero()) return 0;
    switch (b.kind()) {
        case Bound::Kind::finite: return f.evaluate(b.value()).sign();
        case Bound::Kind::pos_inf: return f.lead().sign();
        case Bound::Kind::neg_inf: return f.degree() % 2 == 0 ? f.lead().sign() : -f.lead().sign();
    }
    return 0;
}

// f, f', then negated Euclidean remainders down to the last nonzero member.
// Adjacent members satisfy members[i-1] = q * members[i] - members[i+1]
// exactly, with q the rational polynomial quotient.
struct SturmChain {
    std::vector<Poly> members;

    const Poly& f() const { return members.front(); }
};

inline SturmChain sturm_chain(const Poly& f) {
    if (f.degree() < 1) throw domain_error("sturm_chain: degree must be at least 1");
    SturmChain chain;
    chain.members.push_back(f);
    chain.members.push_back(f.derivative());
    while (true) {
        const auto& a = chain.members[chain.members.size() - 2];
        const auto& b = chain.members.back();
        Poly rem = a.divmod(b).remainder;
        if (rem.is_zero()) break;
        chain.members.push_back(-rem);
    }
    return chain;
}

// Sign changes across the chain at the given point, zeros dropped.
inline int variations_at(const SturmChain& chain, const Bound& at) {
    int count = 0, prev = 0;
    for (const Poly& g : chain.members) {
        const int s = sign_at(g, at);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

namespace detail {

inline int count_with_chain(const SturmChain& chain, const Bound& a, const Bound& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

}  // namespace detail

// Number of DISTINCT real roots of f in the open interval (a, b). Finite
// endpoints must not be roots of f.
inline int count_real_roots(const Poly& f, const Bound& a = Bound::neg_inf(),
                            const Bound& b = Bound::pos_inf()) {
    const SturmChain chain = sturm_chain(f);
    for (const Bound* e : {&a, &b})
        if (e->is_finite() && f.evaluate(e->value()).is_zero())
            throw domain_error("count_real_roots: endpoint " + e->value().str() +
                               " is a root of the polynomial");
    return detail::count_with_chain(chain, a, b);
}

// Contains exactly one distinct real root of the target polynomial;
// lo == hi means the root is the exact rational lo.
struct IsolatingInterval {
    Rational lo, hi;
    int multiplicity = 1;

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Every root magnitude is strictly below 1 + max|a_i| / |lead|.
inline Rational cauchy_root_bound(const Poly& f) {
    if (f.degree() < 1) throw domain_error("cauchy_root_bound: constant polynomial");
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, f.coeff(i).abs());
    return Rational(1) + m / f.lead().abs();
}

namespace detail {

// One square-free polynomial with its chain, bracketing one of its roots.
struct WorkInterval {
    Rational lo, hi;
    int multiplicity;
    const Poly* poly;
    const SturmChain* chain;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }

    // Halve towards the unique root; collapses to a point when the midpoint
    // lands on it.
    void refine() {
        const Rational mid = (lo + hi) / 2;
        if (poly->evaluate(mid).is_zero()) {
            lo = hi = mid;
            return;
        }
        if (variations_at(*chain, lo) - variations_at(*chain, Bound(mid)) == 1)
            hi = mid;
        else
            lo = mid;
    }
};

inline bool disjoint(const WorkInterval& a, const WorkInterval& b) {
    if (a.is_point() && b.is_point()) return !(a.lo == b.lo);
    // Open intervals may share an endpoint; a point root must fall strictly
    // outside the other bracket.
    if (a.is_point()) return a.lo <= b.lo || a.lo >= b.hi;
    if (b.is_point()) return b.lo <= a.lo || b.lo >= a.hi;
    return a.hi <= b.lo || b.hi <= a.lo;
}

// Isolate the roots of one square-free polynomial inside (lo, hi); endpoints
// must not be roots. Midpoint hits are recorded as points and the remaining
// roots re-isolated on the deflated polynomial.
inline void isolate_squarefree(const Poly& g, Rational lo, Rational hi, int multiplicity,
                               std::vector<WorkInterval>& out,
                               std::deque<std::pair<Poly, SturmChain>>& storage) {
    if (g.degree() < 1) return;
    storage.emplace_back(g, sturm_chain(g));
    const Poly* gp = &storage.back().first;
    const SturmChain* chain = &storage.back().second;
    if (g.degree() == 1) {  // linear factors have exact rational roots
        const Rational root = -g.constant_term() / g.lead();
        out.push_back({root, root, multiplicity, gp, chain});
        return;
    }
    std::vector<std::pair<Rational, Rational>> stack{{std::move(lo), std::move(hi)}};
    while (!stack.empty()) {
        auto [a, b] = std::move(stack.back());
        stack.pop_back();
        const int n = count_with_chain(*chain, Bound(a), Bound(b));
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({a, b, multiplicity, gp, chain});
            continue;
        }
        const Rational mid = (a + b) / 2;
        if (gp->evaluate(mid).is_zero()) {
            out.push_back({mid, mid, multiplicity, gp, chain});
            const Poly deflated = *gp->divide_exact(Poly::linear_root(mid));
            isolate_squarefree(deflated, a, b, multiplicity, out, storage);
            continue;
        }
        stack.push_back({a, mid});
        stack.push_back({mid, b});
    }
}

}  // namespace detail

// One interval per distinct real root of f, sorted left to right, pairwise
// disjoint; multiplicities come from the square-free decomposition.
inline std::vector<IsolatingInterval> isolate_real_roots(const Poly& f) {
    if (f.degree() < 1) throw domain_error("isolate_real_roots: degree must be at least 1");
    std::vector<detail::WorkInterval> work;
    std::deque<std::pair<Poly, SturmChain>> storage;  // deque: stable element addresses
    const auto decomposition = squarefree_decompose(f);
    for (const auto& [g, m] : decomposition.parts) {
        if (g.degree() < 1) continue;
        const Rational bound = cauchy_root_bound(g);
        detail::isolate_squarefree(g, -bound, bound, m, work, storage);
    }
    // Tighten brackets; dyadic midpoints often land on rational roots.
    const Rational max_width(1, 4);
    for (auto& w : work)
        while (!w.is_point() && w.width() > max_width) w.refine();
    // Refine until pairwise disjoint. Terminates: distinct reals separate.
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            for (std::size_t j = i + 1; j < work.size(); ++j) {
                while (!detail::disjoint(work[i], work[j])) {
                    if (work[i].is_point() && work[j].is_point())
                        throw internal_error("isolate_real_roots: duplicate exact root");
                    auto& wide = (work[i].width() >= work[j].width() && !work[i].is_point()) ||
                                         work[j].is_point()
                                     ? work[i]
                                     : work[j];
                    wide.refine();
                    again = true;
                }
            }
        }
    }
    std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<IsolatingInterval> out;
    out.reserve(work.size());
    for (auto& w : work) out.push_back({std::move(w.lo), std::move(w.hi), w.multiplicity});
    return out;
}

}  // namespace quintic
