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

#include <catch2/catch.hpp>

#include "quintic/classifier.hpp"
#include "quintic/oracle.hpp"
#include "test_support.hpp"

using namespace quintic;

namespace {

struct Example {
    RootSpec spec;
    QuinticCoeffs coeffs;  // frozen expansion
    RealLeaf leaf;
    ComplexShape shape;
};

// The nine reference points; coefficients frozen from the exact expansions
// the specs below reproduce.
std::vector<Example> examples() {
    return {
        {{{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, {}},
         {-15, 85, -225, 274, -120},
         RealLeaf::r1,
         ComplexShape::five_distinct},
        {{{{0, 2}, {1, 1}, {2, 1}, {3, 1}}, {}},
         {-6, 11, -6, 0, 0},
         RealLeaf::r4b,
         ComplexShape::double_and_three_singles},
        {{{{-1, 1}, {1, 2}, {2, 1}, {3, 1}}, {}},
         {-6, 10, 0, -11, 6},
         RealLeaf::r4a,
         ComplexShape::double_and_three_singles},
        {{{{-1, 1}, {0, 3}, {1, 1}}, {}},
         {0, -1, 0, 0, 0},
         RealLeaf::r8b,
         ComplexShape::triple_and_two_singles},
        {{{{1, 1}}, {{0, 1, 2}}},
         {-1, 2, -2, 1, -1},
         RealLeaf::r7,
         ComplexShape::two_doubles_and_single},
        {{{{0, 4}, {1, 1}}, {}},
         {-1, 0, 0, 0, 0},
         RealLeaf::r10a,
         ComplexShape::quadruple_and_single},
        {{{{0, 3}, {1, 2}}, {}},
         {-2, 1, 0, 0, 0},
         RealLeaf::r11a,
         ComplexShape::triple_and_double},
        {{{{1, 5}}, {}}, {-5, 10, -10, 5, -1}, RealLeaf::r12, ComplexShape::quintuple},
        {{{{1, 1}, {2, 1}, {3, 1}}, {{0, 1, 1}}},
         {-6, 12, -12, 11, -6},
         RealLeaf::r2,
         ComplexShape::five_distinct},
    };
}

}  // namespace

TEST_CASE("reference points classify to their constructed configurations") {
    for (const Example& ex : examples()) {
        const auto [built, forced] = build_quintic(ex.spec);
        INFO("point p=" << ex.coeffs.p << " q=" << ex.coeffs.q << " r=" << ex.coeffs.r
                        << " s=" << ex.coeffs.s << " t=" << ex.coeffs.t);
        CHECK(built == ex.coeffs);  // frozen expansion matches construction
        CHECK(forced.leaf == ex.leaf);
        CHECK(classify_real(ex.coeffs).leaf == ex.leaf);
        CHECK(classify_complex(ex.coeffs).shape == ex.shape);
    }
}

TEST_CASE("leaf ids, descriptions and orderings are consistent") {
    CHECK(RealConfiguration{RealLeaf::r4b}.id() == "4b");
    CHECK(RealConfiguration{RealLeaf::r4a}.ordering() == std::vector<int>{1, 2, 1, 1});
    CHECK(RealConfiguration{RealLeaf::r12}.ordering() == std::vector<int>{5});
    CHECK(RealConfiguration{RealLeaf::r7}.distinct_real_roots() == 1);
    for (const RealLeaf leaf : kAllRealLeaves) {
        const RealConfiguration cfg{leaf};
        int total = 0;
        for (int m : cfg.ordering()) total += m;
        CHECK(total <= 5);
        CHECK((5 - total) % 2 == 0);  // the rest pairs up
        CHECK_FALSE(cfg.id().empty());
        CHECK_FALSE(cfg.description().empty());
    }
    const ComplexMultiplicity cm{ComplexShape::two_doubles_and_single};
    CHECK(cm.multiplicities() == std::vector<int>{2, 2, 1});
}

TEST_CASE("order_leaf4 sign table") {
    const auto R = [](long v) { return std::optional<Rational>(Rational(v)); };
    CHECK(order_leaf4(R(1), R(1), R(1)) == RealLeaf::r4c);
    CHECK(order_leaf4(R(-1), R(1), R(1)) == RealLeaf::r4a);
    CHECK(order_leaf4(R(1), R(1), R(-1)) == RealLeaf::r4a);
    CHECK(order_leaf4(R(1), R(-1), R(-1)) == RealLeaf::r4b);
    CHECK(order_leaf4(R(-1), R(-1), R(-1)) == RealLeaf::r4d);
    CHECK(order_leaf4(R(1), R(-1), R(1)) == RealLeaf::r4d);
    CHECK(order_leaf4(R(0), R(1), R(0)) == RealLeaf::r4a);   // boundary closure
    CHECK(order_leaf4(R(0), R(-1), R(0)) == RealLeaf::r4d);  // boundary closure
    // the sign of F3 is irrelevant once F1 <= 0
    CHECK(order_leaf4(R(-1), R(1), std::nullopt) == RealLeaf::r4a);
    CHECK_THROWS_AS(order_leaf4(R(1), R(0), R(1)), internal_error);
    CHECK_THROWS_AS(order_leaf4(R(1), std::nullopt, R(1)), internal_error);
}

TEST_CASE("cubic_positive_count") {
    // roots {1,2,3}: all three positive
    CHECK(cubic_positive_count(-6, 11, -6, CubicRootMode::three_real_roots).count == 3);
    // roots {-1,-2,-3}: none positive
    CHECK(cubic_positive_count(6, 11, 6, CubicRootMode::three_real_roots).count == 0);
    // roots {-1,1,2}: two positive
    CHECK(cubic_positive_count(-2, -1, 2, CubicRootMode::three_real_roots).count == 2);
    // roots {-2,1,3}: y^3 - 2y^2 - 5y + 6, two positive
    CHECK(cubic_positive_count(-2, -5, 6, CubicRootMode::three_real_roots).count == 2);
    CHECK(cubic_positive_count(1, 1, 5, CubicRootMode::one_real_root).count == 0);
    CHECK(cubic_positive_count(1, 1, -5, CubicRootMode::one_real_root).count == 1);
    CHECK_THROWS_AS(cubic_positive_count(1, 1, 0, CubicRootMode::three_real_roots), domain_error);
}

TEST_CASE("cubic_positive_count agrees with order_leaf4 on double-root instances") {
    TrialRng rng(41, 0);
    for (int i = 0; i < 60; ++i) {
        // four distinct values, one doubled
        std::vector<Rational> vals;
        while (vals.size() < 4) {
            const Rational v = testing::random_rational(rng, 8, 3);
            bool fresh = true;
            for (const auto& u : vals) fresh = fresh && !(u == v);
            if (fresh) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        const int doubled = static_cast<int>(rng.range(0, 3));
        RootSpec spec;
        for (int k = 0; k < 4; ++k)
            spec.real_roots.push_back({vals[static_cast<std::size_t>(k)], k == doubled ? 2 : 1});
        const auto [c, forced] = build_quintic(spec);
        const QuinticInvariants v = compute_invariants(c);
        const RealLeaf leaf = order_leaf4(v.F1, v.F2, v.F3);
        CHECK(leaf == forced.leaf);
        // positives of the shifted cubic determine the same leaf
        REQUIRE(v.F1.has_value());
        const Rational shift = v.C0 / v.C1;
        const auto count =
            cubic_positive_count(c.p + 5 * shift, *v.F1, *v.F2, CubicRootMode::three_real_roots);
        const RealLeaf by_count = count.count == 0   ? RealLeaf::r4c
                                  : count.count == 3 ? RealLeaf::r4b
                                  : count.count == 2 ? RealLeaf::r4a
                                                     : RealLeaf::r4d;
        CHECK(by_count == leaf);
    }
}

TEST_CASE("witness roots for the reference points") {
    {
        const QuinticCoeffs c{-6, 11, -6, 0, 0};
        const auto roots = witness_roots(c, classify_real(c));
        REQUIRE(roots.size() == 4);
        REQUIRE(roots[0].is_exact());
        CHECK(roots[0].exact() == 0);
        CHECK(roots[0].multiplicity == 2);
        const Rational singles[] = {1, 2, 3};
        for (int k = 1; k <= 3; ++k) {
            CHECK(roots[static_cast<std::size_t>(k)].multiplicity == 1);
            if (roots[static_cast<std::size_t>(k)].is_exact())
                CHECK(roots[static_cast<std::size_t>(k)].exact() == singles[k - 1]);
            else
                CHECK(roots[static_cast<std::size_t>(k)].interval().contains(singles[k - 1]));
        }
    }
    {
        const QuinticCoeffs c{-1, 0, 0, 0, 0};  // x^4 (x - 1)
        const auto roots = witness_roots(c, classify_real(c));
        REQUIRE(roots.size() == 2);
        REQUIRE(roots[0].is_exact());
        CHECK(roots[0].exact() == 0);
        CHECK(roots[0].multiplicity == 4);
        CHECK(roots[1].multiplicity == 1);
    }
    {
        const QuinticCoeffs c{-5, 10, -10, 5, -1};  // (x - 1)^5
        const auto roots = witness_roots(c, classify_real(c));
        REQUIRE(roots.size() == 1);
        REQUIRE(roots[0].is_exact());
        CHECK(roots[0].exact() == 1);
        CHECK(roots[0].multiplicity == 5);
    }
    {
        const QuinticCoeffs c{-2, 1, 0, 0, 0};  // x^3 (x - 1)^2
        const auto roots = witness_roots(c, classify_real(c));
        REQUIRE(roots.size() == 2);
        REQUIRE(roots[0].is_exact());
        REQUIRE(roots[1].is_exact());
        CHECK(roots[0].exact() == 0);
        CHECK(roots[0].multiplicity == 3);
        CHECK(roots[1].exact() == 1);
        CHECK(roots[1].multiplicity == 2);
    }
    // no multiple real root: precondition violation
    const QuinticCoeffs simple{-6, 12, -12, 11, -6};
    CHECK_THROWS_AS(witness_roots(simple, classify_real(simple)), domain_error);
}

TEST_CASE("double-root ordering handles a vanishing cubic middle coefficient") {
    // x^2 (x^3 - 3x^2 + 1): the shifted cubic has zero linear coefficient
    // (F1 = 0), the boundary the table's closure rules cover
    const QuinticCoeffs c{-3, 0, 1, 0, 0};
    const QuinticInvariants v = compute_invariants(c);
    REQUIRE(v.F1.has_value());
    CHECK(v.F1->is_zero());
    CHECK(v.F2->sign() > 0);
    CHECK(classify_real(v).leaf == RealLeaf::r4a);
    CHECK(independent_classify(c).leaf == RealLeaf::r4a);
}

TEST_CASE("witness roots on a triple root with a conjugate pair") {
    // x^3 (x^2 + 1): triple root 0 with no real singles
    const auto [c, forced] = build_quintic({{{0, 3}}, {{0, 1, 1}}});
    REQUIRE(forced.leaf == RealLeaf::r9);
    const auto roots = witness_roots(c, forced);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0].is_exact());
    CHECK(roots[0].exact() == 0);
    CHECK(roots[0].multiplicity == 3);
}

TEST_CASE("witness roots on a two-double leaf") {
    // rational doubles: (x-1)^2 (x-2)^2 (x-5)
    const auto [c, forced] = build_quintic({{{1, 2}, {2, 2}, {5, 1}}, {}});
    REQUIRE(forced.leaf == RealLeaf::r6c);
    const auto roots = witness_roots(c, forced);
    REQUIRE(roots.size() == 3);
    REQUIRE(roots[0].is_exact());
    REQUIRE(roots[1].is_exact());
    CHECK(roots[0].exact() == 1);
    CHECK(roots[1].exact() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].multiplicity == 2);

    // irrational doubles: (x^2 - 2)^2 (x - 3)
    const QuinticCoeffs ir{-3, -4, 12, 4, -12};
    const RealConfiguration cfg = classify_real(ir);
    CHECK(cfg.leaf == RealLeaf::r6c);
    const auto wr = witness_roots(ir, cfg);
    REQUIRE(wr.size() == 3);
    CHECK_FALSE(wr[0].is_exact());
    CHECK_FALSE(wr[1].is_exact());
    CHECK(wr[0].multiplicity == 2);
    CHECK(wr[1].multiplicity == 2);
    CHECK(wr[2].multiplicity == 1);
}

TEST_CASE("classification is invariant under positive root scaling") {
    for (int i = 0; i < 44; ++i) {
        TrialRng gen(99, static_cast<std::uint64_t>(i));
        const RealLeaf leaf = kAllRealLeaves[i % std::size(kAllRealLeaves)];
        const auto [point, forced] = build_quintic(detail::spec_for_leaf(leaf, gen));
        const RealLeaf got = classify_real(point).leaf;
        CHECK(got == forced.leaf);
        for (long lambda : {2L, 3L}) {
            const Rational l(lambda);
            // coefficients of lambda^-5 f(lambda x): roots scale by 1/lambda
            const QuinticCoeffs scaled{point.p / l, point.q / l.pow(2), point.r / l.pow(3),
                                       point.s / l.pow(4), point.t / l.pow(5)};
            CHECK(classify_real(scaled).leaf == got);
        }
    }
}

TEST_CASE("complex classification erases the real one") {
    TrialRng rng(43, 0);
    for (int i = 0; i < 66; ++i) {
        TrialRng gen(1234, static_cast<std::uint64_t>(i));
        const RealLeaf leaf = kAllRealLeaves[i % std::size(kAllRealLeaves)];
        const auto [c, forced] = build_quintic(detail::spec_for_leaf(leaf, gen));
        CHECK(classify_complex(c) == independent_classify_complex(c));
    }
}

TEST_CASE("leaf-3 diagnostics name a nonpositive factor") {
    const QuinticCoeffs c{0, 0, 0, 0, -1};  // x^5 - 1
    const QuinticInvariants v = compute_invariants(c);
    REQUIRE(classify_real(v).leaf == RealLeaf::r3);
    const auto blame = leaf3_nonpositive_factors(v);
    CHECK_FALSE(blame.empty());
}
