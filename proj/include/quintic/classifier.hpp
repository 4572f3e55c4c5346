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
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/invariants.hpp"
#include "quintic/poly.hpp"
#include "quintic/rational.hpp"
#include "quintic/sturm.hpp"

namespace quintic {

// The 22 real root configurations of a monic quintic: multiplicity multiset,
// realness, and the left-to-right order of the real roots.
enum class RealLeaf {
    r1,          // 5 distinct real roots
    r2,          // 3 distinct real, one conjugate pair
    r3,          // 1 real, two distinct conjugate pairs
    r4a, r4b, r4c, r4d,   // double + 3 singles, by position of the double
    r5a, r5b,             // double + single + pair, by order
    r6a, r6b, r6c,        // two doubles + single, by position of the single
    r7,                   // conjugate double pair + single real root
    r8a, r8b, r8c,        // triple + 2 singles, by position of the triple
    r9,                   // triple + conjugate pair
    r10a, r10b,           // quadruple + single, by order
    r11a, r11b,           // triple + double, by order
    r12,                  // quintuple root
};

inline constexpr RealLeaf kAllRealLeaves[] = {
    RealLeaf::r1,  RealLeaf::r2,  RealLeaf::r3,  RealLeaf::r4a, RealLeaf::r4b, RealLeaf::r4c,
    RealLeaf::r4d, RealLeaf::r5a, RealLeaf::r5b, RealLeaf::r6a, RealLeaf::r6b, RealLeaf::r6c,
    RealLeaf::r7,  RealLeaf::r8a, RealLeaf::r8b, RealLeaf::r8c, RealLeaf::r9,  RealLeaf::r10a,
    RealLeaf::r10b, RealLeaf::r11a, RealLeaf::r11b, RealLeaf::r12,
};

// Root multiplicity pattern over the complexes, order and realness erased.
enum class ComplexShape {
    five_distinct,
    double_and_three_singles,
    two_doubles_and_single,
    triple_and_two_singles,
    quadruple_and_single,
    triple_and_double,
    quintuple,
};

struct RealConfiguration {
    RealLeaf leaf;

    std::string_view id() const;
    std::string_view description() const;
    // Multiplicities of the real roots in left-to-right order.
    const std::vector<int>& ordering() const;
    int distinct_real_roots() const { return static_cast<int>(ordering().size()); }

    friend bool operator==(const RealConfiguration&, const RealConfiguration&) = default;
};

struct ComplexMultiplicity {
    ComplexShape shape;

    std::string_view description() const;
    // Multiplicities over the complexes, descending; sums to 5.
    const std::vector<int>& multiplicities() const;

    friend bool operator==(const ComplexMultiplicity&, const ComplexMultiplicity&) = default;
};

inline std::string_view RealConfiguration::id() const {
    switch (leaf) {
        case RealLeaf::r1: return "1";
        case RealLeaf::r2: return "2";
        case RealLeaf::r3: return "3";
        case RealLeaf::r4a: return "4a";
        case RealLeaf::r4b: return "4b";
        case RealLeaf::r4c: return "4c";
        case RealLeaf::r4d: return "4d";
        case RealLeaf::r5a: return "5a";
        case RealLeaf::r5b: return "5b";
        case RealLeaf::r6a: return "6a";
        case RealLeaf::r6b: return "6b";
        case RealLeaf::r6c: return "6c";
        case RealLeaf::r7: return "7";
        case RealLeaf::r8a: return "8a";
        case RealLeaf::r8b: return "8b";
        case RealLeaf::r8c: return "8c";
        case RealLeaf::r9: return "9";
        case RealLeaf::r10a: return "10a";
        case RealLeaf::r10b: return "10b";
        case RealLeaf::r11a: return "11a";
        case RealLeaf::r11b: return "11b";
        case RealLeaf::r12: return "12";
    }
    return "?";
}

inline std::string_view RealConfiguration::description() const {
    switch (leaf) {
        case RealLeaf::r1: return "5 distinct real roots";
        case RealLeaf::r2: return "3 distinct real roots and 2 complex conjugate roots";
        case RealLeaf::r3: return "1 real root and 4 distinct complex roots";
        case RealLeaf::r4a: return "1 double and 3 single real roots; single < double < single < single";
        case RealLeaf::r4b: return "1 double and 3 single real roots; double < single < single < single";
        case RealLeaf::r4c: return "1 double and 3 single real roots; single < single < single < double";
        case RealLeaf::r4d: return "1 double and 3 single real roots; single < single < double < single";
        case RealLeaf::r5a: return "1 double and 1 single real root and 2 complex conjugate roots; single < double";
        case RealLeaf::r5b: return "1 double and 1 single real root and 2 complex conjugate roots; double < single";
        case RealLeaf::r6a: return "2 double and 1 single real roots; single < double < double";
        case RealLeaf::r6b: return "2 double and 1 single real roots; double < single < double";
        case RealLeaf::r6c: return "2 double and 1 single real roots; double < double < single";
        case RealLeaf::r7: return "2 complex conjugate double roots and 1 single real root";
        case RealLeaf::r8a: return "1 triple and 2 single real roots; triple < single < single";
        case RealLeaf::r8b: return "1 triple and 2 single real roots; single < triple < single";
        case RealLeaf::r8c: return "1 triple and 2 single real roots; single < single < triple";
        case RealLeaf::r9: return "1 triple real root and 2 complex conjugate roots";
        case RealLeaf::r10a: return "1 quadruple and 1 single real root; quadruple < single";
        case RealLeaf::r10b: return "1 quadruple and 1 single real root; single < quadruple";
        case RealLeaf::r11a: return "1 triple and 1 double real root; triple < double";
        case RealLeaf::r11b: return "1 triple and 1 double real root; double < triple";
        case RealLeaf::r12: return "1 quintuple real root";
    }
    return "?";
}

inline const std::vector<int>& RealConfiguration::ordering() const {
    static const std::vector<int> k11111{1, 1, 1, 1, 1}, k111{1, 1, 1}, k1{1};
    static const std::vector<int> k1211{1, 2, 1, 1}, k2111{2, 1, 1, 1}, k1112{1, 1, 1, 2},
        k1121{1, 1, 2, 1};
    static const std::vector<int> k12{1, 2}, k21{2, 1};
    static const std::vector<int> k122{1, 2, 2}, k212{2, 1, 2}, k221{2, 2, 1};
    static const std::vector<int> k311{3, 1, 1}, k131{1, 3, 1}, k113{1, 1, 3}, k3{3};
    static const std::vector<int> k41{4, 1}, k14{1, 4}, k32{3, 2}, k23{2, 3}, k5{5};
    switch (leaf) {
        case RealLeaf::r1: return k11111;
        case RealLeaf::r2: return k111;
        case RealLeaf::r3: return k1;
        case RealLeaf::r4a: return k1211;
        case RealLeaf::r4b: return k2111;
        case RealLeaf::r4c: return k1112;
        case RealLeaf::r4d: return k1121;
        case RealLeaf::r5a: return k12;
        case RealLeaf::r5b: return k21;
        case RealLeaf::r6a: return k122;
        case RealLeaf::r6b: return k212;
        case RealLeaf::r6c: return k221;
        case RealLeaf::r7: return k1;
        case RealLeaf::r8a: return k311;
        case RealLeaf::r8b: return k131;
        case RealLeaf::r8c: return k113;
        case RealLeaf::r9: return k3;
        case RealLeaf::r10a: return k41;
        case RealLeaf::r10b: return k14;
        case RealLeaf::r11a: return k32;
        case RealLeaf::r11b: return k23;
        case RealLeaf::r12: return k5;
    }
    return k1;
}

inline std::string_view ComplexMultiplicity::description() const {
    switch (shape) {
        case ComplexShape::five_distinct: return "5 distinct roots";
        case ComplexShape::double_and_three_singles: return "1 double root and 3 single roots";
        case ComplexShape::two_doubles_and_single: return "2 double roots and 1 single root";
        case ComplexShape::triple_and_two_singles: return "1 triple root and 2 single roots";
        case ComplexShape::quadruple_and_single: return "1 quadruple root and 1 single root";
        case ComplexShape::triple_and_double: return "1 triple root and 1 double root";
        case ComplexShape::quintuple: return "1 quintuple root";
    }
    return "?";
}

inline const std::vector<int>& ComplexMultiplicity::multiplicities() const {
    static const std::vector<int> k11111{1, 1, 1, 1, 1}, k2111{2, 1, 1, 1}, k221{2, 2, 1},
        k311{3, 1, 1}, k41{4, 1}, k32{3, 2}, k5{5};
    switch (shape) {
        case ComplexShape::five_distinct: return k11111;
        case ComplexShape::double_and_three_singles: return k2111;
        case ComplexShape::two_doubles_and_single: return k221;
        case ComplexShape::triple_and_two_singles: return k311;
        case ComplexShape::quadruple_and_single: return k41;
        case ComplexShape::triple_and_double: return k32;
        case ComplexShape::quintuple: return k5;
    }
    return k5;
}

namespace detail {

inline int sign_of(const std::optional<Rational>& x, const char* what) {
    if (!x) throw internal_error(std::string("classifier: ") + what + " undefined on its branch");
    return x->sign();
}

}  // namespace detail

// Places the double root of the double-plus-three-singles configuration among
// the singles from the signs of the leftover-cubic values. F2 must be defined
// and nonzero there; anything else is a theory violation.
inline RealLeaf order_leaf4(const std::optional<Rational>& f1, const std::optional<Rational>& f2,
                            const std::optional<Rational>& f3) {
    const int s2 = detail::sign_of(f2, "F2");
    if (s2 == 0) throw internal_error("classifier: F2 = 0 on a double-root branch");
    // F3 is only consulted when the sign of F1 leaves the row undecided.
    if (s2 > 0)
        return detail::sign_of(f1, "F1") > 0 && detail::sign_of(f3, "F3") > 0 ? RealLeaf::r4c
                                                                              : RealLeaf::r4a;
    return detail::sign_of(f1, "F1") > 0 && detail::sign_of(f3, "F3") < 0 ? RealLeaf::r4b
                                                                          : RealLeaf::r4d;
}

// Classification by exact signs of the closed-form invariants alone. The
// branch order is sign(D), then sign(L1), then sign(L2)/D2, then L3/M1.
inline RealConfiguration classify_real(const QuinticInvariants& v) {
    const int sD = v.D.sign();
    if (sD < 0) return {RealLeaf::r2};
    if (sD > 0) {
        if (v.L3.sign() > 0 && v.L2.sign() > 0 && v.L1.sign() > 0) return {RealLeaf::r1};
        return {RealLeaf::r3};
    }
    const int sL1 = v.L1.sign();
    if (sL1 > 0) return {order_leaf4(v.F1, v.F2, v.F3)};
    if (sL1 < 0) {
        const int s2 = detail::sign_of(v.F2, "F2");
        if (s2 == 0) throw internal_error("classifier: F2 = 0 on a double-root branch");
        return {s2 > 0 ? RealLeaf::r5a : RealLeaf::r5b};
    }
    if (!v.L2.is_zero()) {
        const int sD2 = v.D2.sign();
        if (sD2 > 0) {
            const int s4 = detail::sign_of(v.F4, "F4");
            if (s4 < 0) return {RealLeaf::r6b};
            if (s4 == 0) throw internal_error("classifier: F4 = 0 with two real double roots");
            const int s5 = detail::sign_of(v.F5, "F5");
            if (s5 == 0) throw internal_error("classifier: F5 = 0 with F4 > 0");
            return {s5 < 0 ? RealLeaf::r6a : RealLeaf::r6c};
        }
        if (sD2 < 0) return {RealLeaf::r7};
        if (v.L2.sign() < 0) return {RealLeaf::r9};
        const int s6 = detail::sign_of(v.F6, "F6");
        if (s6 < 0) return {RealLeaf::r8b};
        if (s6 == 0) throw internal_error("classifier: F6 = 0 with a real triple root");
        const int s7 = detail::sign_of(v.F7, "F7");
        if (s7 == 0) throw internal_error("classifier: F7 = 0 with F6 > 0");
        return {s7 < 0 ? RealLeaf::r8a : RealLeaf::r8c};
    }
    if (v.L3.is_zero()) return {RealLeaf::r12};
    if (v.M1.is_zero()) {
        const int s4 = detail::sign_of(v.C4, "C4");
        if (s4 == 0) throw internal_error("classifier: C4 = 0 with a quadruple root");
        return {s4 > 0 ? RealLeaf::r10a : RealLeaf::r10b};
    }
    const int s5 = detail::sign_of(v.C5, "C5");
    if (s5 == 0) throw internal_error("classifier: C5 = 0 with a triple and a double root");
    return {s5 > 0 ? RealLeaf::r11a : RealLeaf::r11b};
}

inline RealConfiguration classify_real(const QuinticCoeffs& c) {
    return classify_real(compute_invariants(c));
}

// For the one-real-four-complex leaf: which of L3/L2/L1 ruled out five real
// roots. Diagnostic only.
inline std::vector<std::string_view> leaf3_nonpositive_factors(const QuinticInvariants& v) {
    std::vector<std::string_view> out;
    if (v.L3.sign() <= 0) out.push_back("L3");
    if (v.L2.sign() <= 0) out.push_back("L2");
    if (v.L1.sign() <= 0) out.push_back("L1");
    return out;
}

inline ComplexMultiplicity classify_complex(const QuinticInvariants& v) {
    if (!v.D.is_zero()) return {ComplexShape::five_distinct};
    if (!v.L1.is_zero()) return {ComplexShape::double_and_three_singles};
    if (!v.L2.is_zero()) {
        if (!v.D2.is_zero()) return {ComplexShape::two_doubles_and_single};
        return {ComplexShape::triple_and_two_singles};
    }
    if (v.L3.is_zero()) return {ComplexShape::quintuple};
    if (v.M1.is_zero()) return {ComplexShape::quadruple_and_single};
    return {ComplexShape::triple_and_double};
}

inline ComplexMultiplicity classify_complex(const QuinticCoeffs& c) {
    return classify_complex(compute_invariants(c));
}

// How many roots of the cubic y^3 + p3 y^2 + q3 y + r3 are positive; the
// cubic must actually be in the stated mode.
enum class CubicRootMode { three_real_roots, one_real_root };

struct CubicPositiveCount {
    int count = 0;
    CubicRootMode mode = CubicRootMode::three_real_roots;
};

inline CubicPositiveCount cubic_positive_count(const Rational& p3, const Rational& q3,
                                               const Rational& r3, CubicRootMode mode) {
    if (r3.is_zero())
        throw domain_error("cubic_positive_count: zero constant term (root at the origin)");
    if (mode == CubicRootMode::one_real_root) return {r3.sign() > 0 ? 0 : 1, mode};
    const Rational margin = p3 * q3 - 9 * r3;
    if (q3.sign() > 0 && r3.sign() > 0 && margin.sign() > 0) return {0, mode};
    if (q3.sign() > 0 && r3.sign() < 0 && margin.sign() < 0) return {3, mode};
    return {r3.sign() > 0 ? 2 : 1, mode};
}

// One recovered root of the quintic: exact when the closed forms (or exact
// deflation) give it, an isolating interval otherwise.
struct WitnessRoot {
    std::variant<Rational, IsolatingInterval> location;
    int multiplicity = 1;

    bool is_exact() const { return std::holds_alternative<Rational>(location); }
    const Rational& exact() const { return std::get<Rational>(location); }
    const IsolatingInterval& interval() const { return std::get<IsolatingInterval>(location); }
};

namespace detail {

// Multiplicity of the exact root v in f; 0 when v is not a root.
inline int exact_root_multiplicity(const Poly& f, const Rational& v) {
    int m = 0;
    Poly g = f;
    const Poly lin = Poly::linear_root(v);
    while (g.degree() >= 1) {
        auto q = g.divide_exact(lin);
        if (!q) break;
        ++m;
        g = std::move(*q);
    }
    return m;
}

}  // namespace detail

// Recovers the multiple real roots from the closed-form shift formulas (or
// exact gcd deflation where no formula exists) and brackets the simple ones.
// Requires a leaf with at least one multiple real root.
inline std::vector<WitnessRoot> witness_roots(const QuinticCoeffs& c,
                                              const RealConfiguration& config) {
    const QuinticInvariants v = compute_invariants(c);
    const Poly f = c.to_poly();

    // exact multiple roots, per leaf
    std::vector<std::pair<Rational, int>> exact;
    switch (config.leaf) {
        case RealLeaf::r4a: case RealLeaf::r4b: case RealLeaf::r4c: case RealLeaf::r4d:
        case RealLeaf::r5a: case RealLeaf::r5b: {
            if (v.C1.is_zero()) throw internal_error("witness_roots: C1 = 0 on a double-root leaf");
            exact.push_back({v.C0 / v.C1, 2});
            break;
        }
        case RealLeaf::r6a: case RealLeaf::r6b: case RealLeaf::r6c: {
            if (v.L2.is_zero()) throw internal_error("witness_roots: L2 = 0 on a two-double leaf");
            // Double roots solve L2 x^2 - 2 C21 x + C20; rational only when
            // D2 is a perfect square. Irrational doubles stay as intervals.
            if (const auto root = v.D2.sqrt_exact()) {
                exact.push_back({(v.C21 - *root) / v.L2, 2});
                exact.push_back({(v.C21 + *root) / v.L2, 2});
            }
            break;
        }
        case RealLeaf::r8a: case RealLeaf::r8b: case RealLeaf::r8c: case RealLeaf::r9: {
            if (v.L2.is_zero()) throw internal_error("witness_roots: L2 = 0 on a triple-root leaf");
            exact.push_back({v.C21 / v.L2, 3});
            break;
        }
        case RealLeaf::r10a: case RealLeaf::r10b: {
            if (v.L3.is_zero()) throw internal_error("witness_roots: L3 = 0 on a quadruple leaf");
            exact.push_back({(5 * c.r - c.p * c.q) / (2 * v.L3), 4});
            break;
        }
        case RealLeaf::r11a: case RealLeaf::r11b: {
            // No closed form here: the triple root is the double root of the
            // cubic gcd(f, f'), i.e. the root of gcd(g, g').
            const Poly g = gcd(f, f.derivative());
            if (g.degree() != 3)
                throw internal_error("witness_roots: gcd degree is not 3 on a 3+2 leaf");
            const Poly h = gcd(g, g.derivative());
            if (h.degree() != 1)
                throw internal_error("witness_roots: inner gcd degree is not 1 on a 3+2 leaf");
            const Rational triple = -h.constant_term() / h.lead();
            exact.push_back({triple, 3});
            const Poly quad = *f.divide_exact(Poly::linear_root(triple).pow(3));
            exact.push_back({-quad.coeff(1) / (2 * quad.coeff(2)), 2});
            break;
        }
        case RealLeaf::r12:
            exact.push_back({-c.p / 5, 5});
            break;
        default:
            throw domain_error("witness_roots: leaf " + std::string(config.id()) +
                               " has no multiple real root");
    }

    // Every claimed root must divide f with exactly the claimed multiplicity.
    for (const auto& [value, m] : exact)
        if (detail::exact_root_multiplicity(f, value) != m)
            throw internal_error("witness_roots: " + value.str() +
                                 " is not a root of multiplicity " + std::to_string(m));

    std::vector<WitnessRoot> out;
    std::size_t matched_count = 0;
    for (const IsolatingInterval& iv : isolate_real_roots(f)) {
        bool matched = false;
        for (const auto& [value, m] : exact) {
            if (iv.multiplicity == m && iv.contains(value)) {
                out.push_back({value, m});
                matched = true;
                ++matched_count;
                break;
            }
        }
        if (matched) continue;
        if (iv.is_point())  // isolation landed on the root exactly
            out.push_back({iv.lo, iv.multiplicity});
        else
            out.push_back({iv, iv.multiplicity});
    }
    // Exactly the multiple roots should have matched.
    if (matched_count != exact.size())
        throw internal_error("witness_roots: formula roots did not align with isolation");
    return out;
}

}  // namespace quintic
