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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quintic/detail/quintic_tables.hpp"
#include "quintic/errors.hpp"
#include "quintic/poly.hpp"
#include "quintic/rational.hpp"
#include "quintic/sturm.hpp"

namespace quintic {

// The monic quintic x^5 + p x^4 + q x^3 + r x^2 + s x + t.
struct QuinticCoeffs {
    Rational p, q, r, s, t;

    Poly to_poly() const { return Poly{t, s, r, q, p, 1}; }

    friend bool operator==(const QuinticCoeffs&, const QuinticCoeffs&) = default;
};

// Closed-form quantities attached to a quintic. The sign-factor fields follow
// the classical naming for this decision system:
//   D          discriminant of the quintic
//   L3, L2, L1 sign factors of the leading coefficients of the Sturm chain
//              remainders of degrees 3, 2, 1
//   D2         sign factor of the discriminant of the degree-2 remainder
//   M1         leading-coefficient factor of the linear member of the Sturm
//              subchain of the degree-3 remainder
//   D3         discriminant of the degree-3 remainder (verification only)
//   C0, C1     the double root is C0/C1 (and C1 == L1 identically)
//   C21, C20   linear/constant coefficient factors of the degree-2 remainder;
//              the triple root is C21/L2
//   C3         the single root next to two double roots is C3/L2
//   D22        sign factor of the discriminant of the quadratic left over
//              after shifting the triple root to the origin
//   C4         shifted single root in the quadruple-root case (needs L3 != 0)
//   C5         triple-vs-double ordering value (needs L3 != 0)
//   F1..F3     leftover-cubic ordering values (need C1 != 0)
//   F4..F7     leftover-quadratic ordering values (need L2 != 0)
struct QuinticInvariants {
    Rational D, L3, L2, L1, D2, M1, D3;
    Rational C0, C1, C21, C20, C3, D22;
    std::optional<Rational> C4, C5;
    std::optional<Rational> F1, F2, F3, F4, F5, F6, F7;
};

namespace detail {

inline Rational eval_table(std::span<const Term> table, const QuinticCoeffs& c) {
    // Power caches: exponents in the tables stay small.
    const auto powers = [](const Rational& x, int up) {
        std::vector<Rational> v(static_cast<std::size_t>(up) + 1, Rational(1));
        for (int i = 1; i <= up; ++i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)] * x;
        return v;
    };
    int mp = 0, mq = 0, mr = 0, ms = 0, mt = 0;
    for (const Term& tm : table) {
        mp = std::max(mp, static_cast<int>(tm.p));
        mq = std::max(mq, static_cast<int>(tm.q));
        mr = std::max(mr, static_cast<int>(tm.r));
        ms = std::max(ms, static_cast<int>(tm.s));
        mt = std::max(mt, static_cast<int>(tm.t));
    }
    const auto pp = powers(c.p, mp), qq = powers(c.q, mq), rr = powers(c.r, mr),
               ss = powers(c.s, ms), tt = powers(c.t, mt);
    Rational acc(0);
    for (const Term& tm : table)
        acc += Rational(tm.coeff) * pp[tm.p] * qq[tm.q] * rr[tm.r] * ss[tm.s] * tt[tm.t];
    return acc;
}

}  // namespace detail

// Exact evaluation of every closed-form quantity at the given coefficients.
// Optional fields are engaged exactly when their denominators are nonzero.
inline QuinticInvariants compute_invariants(const QuinticCoeffs& c) {
    using detail::eval_table;
    QuinticInvariants v;
    v.D = eval_table(detail::kD, c);
    v.L3 = eval_table(detail::kL3, c);
    v.L2 = eval_table(detail::kL2, c);
    v.L1 = eval_table(detail::kL1, c);
    v.D2 = eval_table(detail::kD2, c);
    v.M1 = eval_table(detail::kM1, c);
    v.D3 = eval_table(detail::kD3Scaled, c) / Rational(390625);
    v.C0 = eval_table(detail::kC0, c);
    v.C1 = eval_table(detail::kC1, c);
    v.C21 = eval_table(detail::kC21, c);
    v.C20 = eval_table(detail::kC20, c);
    v.C3 = eval_table(detail::kC3, c);
    const auto& [p, q, r, s, t] = c;
    v.D22 = (p * p - 4 * q) * v.L2 * v.L2 - 6 * p * v.C21 * v.L2 - 15 * v.C21 * v.C21;
    if (!v.L3.is_zero()) {
        v.C4 = -(4 * p.pow(3) - 15 * p * q + 25 * r) / (2 * v.L3);
        // Ordering value for the triple-plus-double configuration, from
        // shifting the triple root of the degree-3 remainder to the origin.
        const Rational a = p * q - 5 * r;
        const Rational b = p * r - 10 * s;
        const Rational e = p * s - 25 * t;
        const Rational num = -a.pow(3) + 2 * a * b * v.L3 - 2 * e * v.L3 * v.L3;
        v.C5 = Rational(27, 4) * num / v.L3.pow(3);
    }
    if (!v.C1.is_zero()) {
        // Coefficients of the cubic left after shifting the double root
        // C0/C1 to the origin: y^3 + (p+5d) y^2 + F1 y + F2.
        const Rational d = v.C0 / v.C1;
        v.F1 = q + 4 * p * d + 10 * d * d;
        v.F2 = r + 3 * q * d + 6 * p * d * d + 10 * d.pow(3);
        v.F3 = (p + 5 * d) * *v.F1 - 9 * *v.F2;
    }
    if (!v.L2.is_zero()) {
        // Monic quadratic with the two double roots, shifted by the single
        // root C3/L2: y^2 + F5 y + F4. F6/F7 are the leftover quadratic's
        // constant/linear coefficients after shifting the triple root.
        const Rational sr = v.C3 / v.L2;
        const Rational tr = v.C21 / v.L2;
        v.F4 = sr * sr + v.C20 / v.L2 - 2 * sr * tr;
        v.F5 = 2 * (sr - tr);
        v.F6 = q + 4 * p * tr + 10 * tr * tr;
        v.F7 = p + 5 * tr;
    }
    return v;
}

// The literal Sturm chain of the quintic at these coefficients. At generic
// points it has six members of degrees 5, 4, 3, 2, 1, 0 whose leading
// coefficients carry the signs of 1, 1, L3, L2, L1, and L2^2 D.
inline SturmChain quintic_sturm_chain(const QuinticCoeffs& c) { return sturm_chain(c.to_poly()); }

// Outcome of one identity check; checks whose preconditions fail at the
// point are reported as not applicable rather than pass/fail.
struct IdentityReport {
    struct Entry {
        std::string name;
        bool applicable = false;
        bool passed = false;
    };
    std::vector<Entry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (e.applicable && !e.passed) return false;
        return true;
    }
};

// Verifies, at one coefficient point, the identities tying the closed-form
// tables to the literal Sturm chain. Division-guarded identities are only
// checked where their denominators are nonzero.
inline IdentityReport verify_identities(const QuinticCoeffs& c) {
    const QuinticInvariants v = compute_invariants(c);
    const SturmChain chain = quintic_sturm_chain(c);
    const auto& [p, q, r, s, t] = c;
    IdentityReport report;
    const auto add = [&report](std::string name, bool applicable, bool passed) {
        report.entries.push_back({std::move(name), applicable, applicable && passed});
    };

    const Poly* deg3 = nullptr;
    const Poly* deg2 = nullptr;
    const Poly* deg1 = nullptr;
    const Poly* deg0 = nullptr;
    for (const Poly& g : chain.members) {
        if (g.degree() == 3 && &g != &chain.members[0]) deg3 = &g;
        if (g.degree() == 2) deg2 = &g;
        if (g.degree() == 1) deg1 = &g;
        if (g.degree() == 0) deg0 = &g;
    }

    // Degree-3 remainder, written out: (1/25)[2 L3 x^3 + 3(pq-5r) x^2
    //   + 2(pr-10s) x + (ps-25t)].
    {
        const bool applicable = chain.members.size() >= 3 && deg3 != nullptr;
        bool ok = false;
        if (applicable) {
            const Poly expect = Poly{(p * s - 25 * t) * Rational(1, 25),
                                     (p * r - 10 * s) * Rational(2, 25),
                                     (p * q - 5 * r) * Rational(3, 25), v.L3 * Rational(2, 25)};
            ok = *deg3 == expect;
        }
        add("deg3-remainder-closed-form", applicable, ok);
    }
    // Degree-2 remainder: 25/(4 L3^2) [L2 x^2 - 2 C21 x + C20].
    {
        const bool applicable = deg2 != nullptr && !v.L3.is_zero();
        bool ok = false;
        if (applicable) {
            const Rational k = Rational(25, 4) / (v.L3 * v.L3);
            ok = *deg2 == Poly{v.C20 * k, -2 * v.C21 * k, v.L2 * k};
        }
        add("deg2-remainder-closed-form", applicable, ok);
    }
    add("lead-sign-deg3-vs-L3", deg3 != nullptr, deg3 && deg3->lead().sign() == v.L3.sign());
    add("lead-sign-deg2-vs-L2", deg2 != nullptr && !v.L3.is_zero(),
        deg2 && deg2->lead().sign() == v.L2.sign());
    add("lead-sign-deg1-vs-L1",
        deg1 != nullptr && !v.L3.is_zero() && !v.L2.is_zero(),
        deg1 && deg1->lead().sign() == v.L1.sign());
    // Exact form of the discarded positive factor on the degree-1 member:
    // lead = (4/25) (L3/L2)^2 C1.
    {
        const bool applicable = deg1 != nullptr && !v.L3.is_zero() && !v.L2.is_zero();
        bool ok = false;
        if (applicable) {
            const Rational ratio = v.L3 / v.L2;
            ok = deg1->lead() == Rational(4, 25) * ratio * ratio * v.C1;
        }
        add("deg1-lead-closed-form", applicable, ok);
    }
    // The double root read off the degree-1 member equals C0/C1.
    {
        const bool applicable = deg1 != nullptr && !v.C1.is_zero();
        bool ok = false;
        if (applicable) ok = deg1->lead() * v.C0 == -deg1->constant_term() * v.C1;
        add("deg1-root-is-C0-over-C1", applicable, ok);
    }
    // Constant member times its positive denominator: g0 (2 C1 L3)^2 = 25 L2^2 D.
    {
        const bool applicable = deg0 != nullptr && chain.members.size() == 6 &&
                                !v.L3.is_zero() && !v.L2.is_zero() && !v.C1.is_zero();
        bool ok = false;
        if (applicable) {
            const Rational den = 2 * v.C1 * v.L3;
            ok = deg0->constant_term() * den * den == 25 * v.L2 * v.L2 * v.D;
        }
        add("deg0-numerator-25-L2sq-D", applicable, ok);
    }
    add("C1-equals-L1", true, v.C1 == v.L1);
    add("D2-quarter-discriminant", true, v.D2 == v.C21 * v.C21 - v.L2 * v.C20);
    // D3 against the cubic discriminant of the closed-form degree-3 member.
    {
        const bool applicable = !v.L3.is_zero();
        bool ok = false;
        if (applicable) {
            const Rational a3 = v.L3 * Rational(2, 25);
            const Rational b3 = (p * q - 5 * r) * Rational(3, 25);
            const Rational c3 = (p * r - 10 * s) * Rational(2, 25);
            const Rational d3 = (p * s - 25 * t) * Rational(1, 25);
            const Rational disc = 18 * a3 * b3 * c3 * d3 - 4 * b3.pow(3) * d3 +
                                  b3 * b3 * c3 * c3 - 4 * a3 * c3.pow(3) -
                                  27 * a3 * a3 * d3 * d3;
            ok = v.D3 == disc;
        }
        add("D3-discriminant-of-deg3", applicable, ok);
    }
    // Linear member of the subchain of the degree-3 remainder equals
    // -(M1 x + M0)/(75 L3).
    {
        bool applicable = !v.L3.is_zero();
        bool ok = false;
        if (applicable) {
            const Poly g3 = Poly{(p * s - 25 * t) * Rational(1, 25),
                                 (p * r - 10 * s) * Rational(2, 25),
                                 (p * q - 5 * r) * Rational(3, 25), v.L3 * Rational(2, 25)};
            const SturmChain sub = sturm_chain(g3);
            const Poly* lin = nullptr;
            for (const Poly& g : sub.members)
                if (g.degree() == 1) lin = &g;
            applicable = lin != nullptr && sub.members.size() >= 3 &&
                         sub.members[2].degree() == 1;
            if (applicable) {
                const Rational m0 = detail::eval_table(detail::kM0, c);
                const Rational k = Rational(-1) / (75 * v.L3);
                ok = *lin == Poly{m0 * k, v.M1 * k};
            }
        }
        add("subchain-linear-member-M1", applicable, ok);
    }
    // On the slice L3 = 0, L2 = 0: L1 = -64 (p^4 - 125 s)^3 / 390625.
    {
        const bool applicable = v.L3.is_zero() && v.L2.is_zero();
        bool ok = false;
        if (applicable)
            ok = v.L1 == Rational(-64) * (p.pow(4) - 125 * s).pow(3) / Rational(390625);
        add("slice-L3-L2-zero-L1-cube", applicable, ok);
    }
    // On the slice L2 = 0, L3 != 0: L1 = -(1/32) N^2 / L3^3 for the printed
    // 13-term N, hence L1 <= 0 whenever L3 > 0.
    {
        const bool applicable = v.L2.is_zero() && !v.L3.is_zero();
        bool ok = false;
        if (applicable) {
            const Rational n = detail::eval_table(detail::kSliceL2Num, c);
            ok = v.L1 == Rational(-1, 32) * n * n / v.L3.pow(3);
            if (v.L3.sign() > 0) ok = ok && v.L1.sign() <= 0;
        }
        add("slice-L2-zero-L1-square", applicable, ok);
    }
    // The ordering values as rational functions agree in sign with their
    // numerator-times-denominator polynomial forms.
    {
        bool applicable = false, ok = true;
        if (v.F1 && v.F2 && v.F3) {
            applicable = true;
            const Rational c1 = v.C1;
            const Rational f1n = q * c1 * c1 + 4 * p * v.C0 * c1 + 10 * v.C0 * v.C0;
            const Rational f2n = r * c1.pow(3) + 3 * q * v.C0 * c1 * c1 +
                                 6 * p * v.C0 * v.C0 * c1 + 10 * v.C0.pow(3);
            const Rational f3n = p * q * c1.pow(3) + 4 * p * p * c1 * c1 * v.C0 -
                                 24 * p * v.C0 * v.C0 * c1 - 22 * q * v.C0 * c1 * c1 -
                                 40 * v.C0.pow(3) - 9 * r * c1.pow(3);
            ok = ok && v.F1->sign() == (f1n * c1 * c1).sign();
            ok = ok && v.F2->sign() == (f2n * c1.pow(3)).sign();
            ok = ok && v.F3->sign() == (f3n * c1.pow(3)).sign();
        }
        if (v.F4 && v.F5 && v.F6 && v.F7) {
            applicable = true;
            const Rational l2 = v.L2;
            const Rational f4n = v.C3 * v.C3 + v.C20 * l2 - 2 * v.C3 * v.C21;
            const Rational f5n = 2 * (v.C3 - v.C21);
            const Rational f6n = q * l2 * l2 + 4 * p * v.C21 * l2 + 10 * v.C21 * v.C21;
            const Rational f7n = p * l2 + 5 * v.C21;
            ok = ok && v.F4->sign() == (f4n * l2 * l2).sign();
            ok = ok && v.F5->sign() == (f5n * l2).sign();
            ok = ok && v.F6->sign() == (f6n * l2 * l2).sign();
            ok = ok && v.F7->sign() == (f7n * l2).sign();
        }
        if (v.C4) {
            applicable = true;
            ok = ok && v.C4->sign() == (-(4 * p.pow(3) - 15 * p * q + 25 * r) * 2 * v.L3).sign();
        }
        add("rational-vs-product-sign-forms", applicable, ok);
    }
    return report;
}

}  // namespace quintic
