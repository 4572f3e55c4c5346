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
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quintic/classifier.hpp"
#include "quintic/errors.hpp"
#include "quintic/invariants.hpp"
#include "quintic/poly.hpp"
#include "quintic/rational.hpp"
#include "quintic/sturm.hpp"

namespace quintic {

// Ground-truth description of a quintic's roots: real roots strictly
// increasing, conjugate pairs pairwise distinct with im > 0, multiplicities
// summing to 5 (a pair counts twice).
struct RootSpec {
    struct Real {
        Rational value;
        int multiplicity = 1;
    };
    struct Pair {
        Rational re;
        Rational im;  // > 0
        int multiplicity = 1;
    };
    std::vector<Real> real_roots;
    std::vector<Pair> conjugate_pairs;

    void validate() const {
        int total = 0;
        for (std::size_t i = 0; i < real_roots.size(); ++i) {
            if (real_roots[i].multiplicity < 1)
                throw domain_error("RootSpec: multiplicity must be positive");
            if (i > 0 && !(real_roots[i - 1].value < real_roots[i].value))
                throw domain_error("RootSpec: real roots must be strictly increasing");
            total += real_roots[i].multiplicity;
        }
        for (std::size_t i = 0; i < conjugate_pairs.size(); ++i) {
            const auto& hp = conjugate_pairs[i];
            if (hp.multiplicity < 1)
                throw domain_error("RootSpec: multiplicity must be positive");
            if (hp.im.sign() <= 0)
                throw domain_error("RootSpec: conjugate pair needs positive imaginary part");
            for (std::size_t j = 0; j < i; ++j)
                if (conjugate_pairs[j].re == hp.re && conjugate_pairs[j].im == hp.im)
                    throw domain_error("RootSpec: duplicate conjugate pair");
            total += 2 * hp.multiplicity;
        }
        if (total != 5) throw domain_error("RootSpec: multiplicities must sum to 5");
    }
};

namespace detail {

// (ordered real multiplicity pattern, sorted pair multiplicities) -> leaf.
inline RealLeaf leaf_of_shape(const std::vector<int>& real_pattern,
                              std::vector<int> pair_mults) {
    std::sort(pair_mults.begin(), pair_mults.end());
    static const std::map<std::pair<std::vector<int>, std::vector<int>>, RealLeaf> kTable = {
        {{{1, 1, 1, 1, 1}, {}}, RealLeaf::r1},
        {{{1, 1, 1}, {1}}, RealLeaf::r2},
        {{{1}, {1, 1}}, RealLeaf::r3},
        {{{1, 2, 1, 1}, {}}, RealLeaf::r4a},
        {{{2, 1, 1, 1}, {}}, RealLeaf::r4b},
        {{{1, 1, 1, 2}, {}}, RealLeaf::r4c},
        {{{1, 1, 2, 1}, {}}, RealLeaf::r4d},
        {{{1, 2}, {1}}, RealLeaf::r5a},
        {{{2, 1}, {1}}, RealLeaf::r5b},
        {{{1, 2, 2}, {}}, RealLeaf::r6a},
        {{{2, 1, 2}, {}}, RealLeaf::r6b},
        {{{2, 2, 1}, {}}, RealLeaf::r6c},
        {{{1}, {2}}, RealLeaf::r7},
        {{{3, 1, 1}, {}}, RealLeaf::r8a},
        {{{1, 3, 1}, {}}, RealLeaf::r8b},
        {{{1, 1, 3}, {}}, RealLeaf::r8c},
        {{{3}, {1}}, RealLeaf::r9},
        {{{4, 1}, {}}, RealLeaf::r10a},
        {{{1, 4}, {}}, RealLeaf::r10b},
        {{{3, 2}, {}}, RealLeaf::r11a},
        {{{2, 3}, {}}, RealLeaf::r11b},
        {{{5}, {}}, RealLeaf::r12},
    };
    const auto it = kTable.find({real_pattern, pair_mults});
    if (it == kTable.end())
        throw domain_error("leaf_of_shape: multiplicities do not describe a quintic");
    return it->second;
}

inline ComplexShape complex_of_multiset(std::vector<int> mults) {
    std::sort(mults.begin(), mults.end(), std::greater<>());
    if (mults == std::vector<int>{1, 1, 1, 1, 1}) return ComplexShape::five_distinct;
    if (mults == std::vector<int>{2, 1, 1, 1}) return ComplexShape::double_and_three_singles;
    if (mults == std::vector<int>{2, 2, 1}) return ComplexShape::two_doubles_and_single;
    if (mults == std::vector<int>{3, 1, 1}) return ComplexShape::triple_and_two_singles;
    if (mults == std::vector<int>{4, 1}) return ComplexShape::quadruple_and_single;
    if (mults == std::vector<int>{3, 2}) return ComplexShape::triple_and_double;
    if (mults == std::vector<int>{5}) return ComplexShape::quintuple;
    throw domain_error("complex_of_multiset: multiplicities do not sum to 5");
}

}  // namespace detail

// Expands the spec into monic coefficients; the returned configuration is the
// one the spec forces by construction.
inline std::pair<QuinticCoeffs, RealConfiguration> build_quintic(const RootSpec& spec) {
    spec.validate();
    Poly f = Poly::constant(1);
    std::vector<int> pattern;
    std::vector<int> pair_mults;
    for (const auto& root : spec.real_roots) {
        f *= Poly::linear_root(root.value).pow(static_cast<unsigned>(root.multiplicity));
        pattern.push_back(root.multiplicity);
    }
    for (const auto& hp : spec.conjugate_pairs) {
        const Poly quad{hp.re * hp.re + hp.im * hp.im, -2 * hp.re, 1};
        f *= quad.pow(static_cast<unsigned>(hp.multiplicity));
        pair_mults.push_back(hp.multiplicity);
    }
    const QuinticCoeffs c{f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
    return {c, RealConfiguration{detail::leaf_of_shape(pattern, std::move(pair_mults))}};
}

// Brute-force classification: square-free decomposition, Sturm isolation, and
// per-factor complex counts. Never touches the closed-form invariants.
inline RealConfiguration independent_classify(const QuinticCoeffs& c) {
    const Poly f = c.to_poly();
    std::vector<int> pattern;
    for (const IsolatingInterval& iv : isolate_real_roots(f)) pattern.push_back(iv.multiplicity);
    std::vector<int> pair_mults;
    for (const auto& [g, m] : squarefree_decompose(f).parts) {
        const int real = count_real_roots(g);
        for (int k = 0; k < (g.degree() - real) / 2; ++k) pair_mults.push_back(m);
    }
    return {detail::leaf_of_shape(pattern, std::move(pair_mults))};
}

// Complex multiplicity structure by the same brute-force route. Each
// conjugate pair contributes two roots of the factor's multiplicity.
inline ComplexMultiplicity independent_classify_complex(const QuinticCoeffs& c) {
    std::vector<int> mults;
    for (const auto& [g, m] : squarefree_decompose(c.to_poly()).parts) {
        const int real = count_real_roots(g);
        for (int k = 0; k < real; ++k) mults.push_back(m);
        for (int k = 0; k < g.degree() - real; ++k) mults.push_back(m);
    }
    return {detail::complex_of_multiset(std::move(mults))};
}

// splitmix64; the per-trial stream depends only on (seed, trial index) so a
// run is reproducible no matter how trials are scheduled.
class TrialRng {
   public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(seed ^ (trial * 0x9e3779b97f4a7c15ULL) ^ 0xd1b54a32d192ed03ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

   private:
    std::uint64_t state_;
};

enum class FuzzMode {
    leaves,  // RootSpec instances cycling through all 22 leaves
    random,  // integer coefficients in [-bound, bound]
};

struct CrossCheckOptions {
    long trials = 1000;
    FuzzMode mode = FuzzMode::leaves;
    long bound = 10;  // random mode only
    std::uint64_t seed = 1;
};

struct CrossCheckReport {
    struct Failure {
        QuinticCoeffs coeffs;
        std::string expected;
        std::string got;
    };
    long trials = 0;
    long agreements = 0;
    std::vector<Failure> failures;
    std::chrono::duration<double> elapsed{};

    bool clean() const { return failures.empty(); }
};

namespace detail {

inline Rational grid_rational(TrialRng& rng) {
    return Rational(rng.range(-20, 20), rng.range(1, 5));
}

inline std::vector<Rational> distinct_grid_values(TrialRng& rng, int n) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
        Rational v = grid_rational(rng);
        bool fresh = true;
        for (const auto& u : out) fresh = fresh && !(u == v);
        if (fresh) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline RootSpec spec_for_leaf(RealLeaf leaf, TrialRng& rng) {
    const RealConfiguration cfg{leaf};
    const std::vector<int>& pattern = cfg.ordering();
    RootSpec spec;
    const auto values = distinct_grid_values(rng, static_cast<int>(pattern.size()));
    for (std::size_t i = 0; i < pattern.size(); ++i)
        spec.real_roots.push_back({values[i], pattern[i]});
    int used = 0;
    for (int m : pattern) used += m;
    // remaining multiplicity goes to conjugate pairs
    std::vector<Rational> seen_re;
    while (used < 5) {
        const int pair_mult = (5 - used) >= 4 && leaf == RealLeaf::r7 ? 2 : 1;
        Rational re = grid_rational(rng);
        Rational im = Rational(rng.range(1, 20), rng.range(1, 5));
        bool fresh = true;
        for (const auto& u : seen_re) fresh = fresh && !(u == re);
        if (!fresh) continue;
        seen_re.push_back(re);
        spec.conjugate_pairs.push_back({std::move(re), std::move(im), pair_mult});
        used += 2 * pair_mult;
    }
    return spec;
}

inline void log_trial(std::ostream* log, const QuinticCoeffs& c, const std::string& expected,
                      const std::string& got) {
    if (log == nullptr) return;
    *log << c.p.str() << ',' << c.q.str() << ',' << c.r.str() << ',' << c.s.str() << ','
         << c.t.str() << ' ' << "expected=" << expected << ' ' << "got=" << got << ' '
         << (expected == got ? "ok" : "mismatch") << '\n';
}

}  // namespace detail

// Runs construction-vs-formula (leaves mode) or formula-vs-brute-force
// (random mode) comparisons. Mismatches land in the report, one line per
// trial goes to trial_log when given. Deterministic for a fixed seed.
inline CrossCheckReport cross_check(const CrossCheckOptions& options,
                                    std::ostream* trial_log = nullptr) {
    if (options.trials < 1) throw domain_error("cross_check: need at least one trial");
    const auto t0 = std::chrono::steady_clock::now();
    CrossCheckReport report;
    constexpr int kLeafCount = static_cast<int>(std::size(kAllRealLeaves));
    for (long trial = 0; trial < options.trials; ++trial) {
        TrialRng rng(options.seed, static_cast<std::uint64_t>(trial));
        QuinticCoeffs c;
        std::string expected, got;
        if (options.mode == FuzzMode::leaves) {
            const RealLeaf leaf = kAllRealLeaves[trial % kLeafCount];
            const auto [coeffs, forced] = build_quintic(detail::spec_for_leaf(leaf, rng));
            c = coeffs;
            const RealConfiguration direct = classify_real(c);
            const RealConfiguration brute = independent_classify(c);
            expected = std::string(forced.id());
            got = std::string(direct.id());
            if (!(direct == brute)) got += "/brute=" + std::string(brute.id());
        } else {
            c = QuinticCoeffs{Rational(rng.range(-options.bound, options.bound)),
                              Rational(rng.range(-options.bound, options.bound)),
                              Rational(rng.range(-options.bound, options.bound)),
                              Rational(rng.range(-options.bound, options.bound)),
                              Rational(rng.range(-options.bound, options.bound))};
            const QuinticInvariants v = compute_invariants(c);
            const RealConfiguration brute = independent_classify(c);
            const RealConfiguration direct = classify_real(v);
            expected = std::string(brute.id());
            got = std::string(direct.id());
            if (!(classify_complex(v) == independent_classify_complex(c)))
                got += "/complex-mismatch";
        }
        detail::log_trial(trial_log, c, expected, got);
        ++report.trials;
        if (expected == got)
            ++report.agreements;
        else
            report.failures.push_back({c, expected, got});
    }
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace quintic
