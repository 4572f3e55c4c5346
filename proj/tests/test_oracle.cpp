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

#include <sstream>

#include <catch2/catch.hpp>

#include "quintic/oracle.hpp"
#include "test_support.hpp"

using namespace quintic;

TEST_CASE("build_quintic expands exactly") {
    {
        const auto [c, cfg] = build_quintic({{{0, 2}, {1, 1}, {2, 1}, {3, 1}}, {}});
        CHECK(c == QuinticCoeffs{-6, 11, -6, 0, 0});
        CHECK(cfg.leaf == RealLeaf::r4b);
    }
    {
        const auto [c, cfg] = build_quintic({{{1, 5}}, {}});
        CHECK(c == QuinticCoeffs{-5, 10, -10, 5, -1});
        CHECK(cfg.leaf == RealLeaf::r12);
    }
    {
        const auto [c, cfg] = build_quintic({{{1, 1}}, {{0, 1, 2}}});
        CHECK(c == QuinticCoeffs{-1, 2, -2, 1, -1});
        CHECK(cfg.leaf == RealLeaf::r7);
    }
}

TEST_CASE("root specs are validated") {
    CHECK_THROWS_AS(build_quintic({{{0, 2}, {1, 1}}, {}}), domain_error);         // sums to 3
    CHECK_THROWS_AS(build_quintic({{{1, 3}, {0, 2}}, {}}), domain_error);         // not increasing
    CHECK_THROWS_AS(build_quintic({{{0, 3}}, {{1, 0, 1}}}), domain_error);        // im = 0
    CHECK_THROWS_AS(build_quintic({{{0, 1}}, {{1, 2, 1}, {1, 2, 1}}}), domain_error);  // dup pair
    CHECK_THROWS_AS(build_quintic({{{0, 0}}, {}}), domain_error);                 // zero mult
}

TEST_CASE("conjugate pairs sharing a real part are distinct") {
    // (x^2 + 1)(x^2 + 4)(x - 1): both pairs sit on the imaginary axis
    const auto [c, cfg] = build_quintic({{{1, 1}}, {{0, 1, 1}, {0, 2, 1}}});
    CHECK(cfg.leaf == RealLeaf::r3);
    CHECK(classify_real(c).leaf == RealLeaf::r3);
    CHECK(independent_classify(c).leaf == RealLeaf::r3);
}

TEST_CASE("independent classification by decomposition and isolation") {
    CHECK(independent_classify({-6, 11, -6, 0, 0}).leaf == RealLeaf::r4b);
    CHECK(independent_classify({-5, 10, -10, 5, -1}).leaf == RealLeaf::r12);
    CHECK(independent_classify({0, 0, 0, 0, -1}).leaf == RealLeaf::r3);  // x^5 - 1
    CHECK(independent_classify_complex({-1, 2, -2, 1, -1}).shape ==
          ComplexShape::two_doubles_and_single);
}

TEST_CASE("round trip through construction") {
    for (int i = 0; i < 44; ++i) {
        TrialRng gen(555, static_cast<std::uint64_t>(i));
        const RealLeaf leaf = kAllRealLeaves[i % std::size(kAllRealLeaves)];
        const auto [c, forced] = build_quintic(detail::spec_for_leaf(leaf, gen));
        CHECK(forced.leaf == leaf);
        CHECK(independent_classify(c).leaf == leaf);
        CHECK(classify_real(c).leaf == leaf);
    }
}

TEST_CASE("cross_check leaves mode is clean and deterministic") {
    CrossCheckOptions options;
    options.trials = 66;
    options.seed = 1;
    std::ostringstream log1, log2;
    const CrossCheckReport r1 = cross_check(options, &log1);
    const CrossCheckReport r2 = cross_check(options, &log2);
    CHECK(r1.trials == 66);
    CHECK(r1.agreements == 66);
    CHECK(r1.clean());
    CHECK(r1.agreements + static_cast<long>(r1.failures.size()) == r1.trials);
    const std::string lines = log1.str();
    CHECK(lines == log2.str());
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 66);
}

TEST_CASE("cross_check rejects an empty run") {
    CrossCheckOptions options;
    options.trials = 0;
    CHECK_THROWS_AS(cross_check(options), domain_error);
}

TEST_CASE("cross_check random mode agrees and logs parseable lines") {
    CrossCheckOptions options;
    options.trials = 400;
    options.mode = FuzzMode::random;
    options.bound = 10;
    options.seed = 7;
    std::ostringstream log;
    const CrossCheckReport report = cross_check(options, &log);
    CHECK(report.clean());
    CHECK(report.trials == 400);

    // every line: "p,q,r,s,t expected=X got=Y ok"; nonzero discriminant
    // forces one of the three square-free leaves
    std::istringstream in(log.str());
    std::string line;
    int parsed = 0;
    while (std::getline(in, line)) {
        const auto space = line.find(' ');
        REQUIRE(space != std::string::npos);
        std::vector<Rational> parts;
        std::string coeffs = line.substr(0, space);
        std::size_t start = 0;
        while (true) {
            const auto comma = coeffs.find(',', start);
            parts.push_back(Rational::from_string(
                                coeffs.substr(start, comma == std::string::npos ? comma
                                                                                : comma - start))
                                .value());
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        REQUIRE(parts.size() == 5);
        const QuinticCoeffs c{parts[0], parts[1], parts[2], parts[3], parts[4]};
        CHECK(line.find("ok") != std::string::npos);
        const std::string expected = line.substr(line.find("expected=") + 9,
                                                 line.find(" got=") - line.find("expected=") - 9);
        if (!compute_invariants(c).D.is_zero())
            CHECK((expected == "1" || expected == "2" || expected == "3"));
        ++parsed;
    }
    CHECK(parsed == 400);
}
