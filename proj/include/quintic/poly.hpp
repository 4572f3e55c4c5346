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
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// Dense univariate polynomial over Rational. coeff(i) is the coefficient of
// x^i. Canonical storage: no trailing zeros, so the zero polynomial is the
// empty vector and degree() == -1 for it.
class Poly {
   public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

    static Poly from_coeffs(std::vector<Rational> ascending) {
        Poly f;
        f.c_ = std::move(ascending);
        f.trim();
        return f;
    }
    static Poly constant(Rational c) { return from_coeffs({std::move(c)}); }
    static Poly monomial(Rational c, int degree) {
        std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
        v.back() = std::move(c);
        return from_coeffs(std::move(v));
    }
    static Poly x() { return Poly{0, 1}; }
    // x - root
    static Poly linear_root(const Rational& root) { return Poly{-root, 1}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    const Rational& coeff(int i) const {
        static const Rational kZero(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)]
                                                           : kZero;
    }
    const Rational& lead() const {
        if (c_.empty()) throw domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }
    const Rational& constant_term() const { return coeff(0); }
    std::span<const Rational> coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return from_coeffs(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Rational& k) {
        if (k.is_zero()) return {};
        Poly out = a;
        for (auto& c : out.c_) c *= k;
        return out;
    }
    friend Poly operator*(const Rational& k, const Poly& a) { return a * k; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return from_coeffs(std::move(v));
    }

    struct DivMod;
    DivMod divmod(const Poly& d) const;

    // Quotient when the division is exact, nullopt otherwise.
    std::optional<Poly> divide_exact(const Poly& d) const;

    Poly monic() const {
        if (is_zero()) throw domain_error("Poly: monic of zero polynomial");
        return *this * lead().inverse();
    }

    Poly pow(unsigned e) const {
        Poly acc = constant(1), base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1u) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    // Renders like "x^5 - 6x^4 + 11/2x^2 - 3"; parseable by parse_polynomial.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.str(); }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

struct Poly::DivMod {
    Poly quotient, remainder;
};

inline Poly::DivMod Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw domain_error("Poly: division by zero polynomial");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {{}, std::move(rem)};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, Rational(0));
    const Rational inv_lead = d.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const int k = rem.degree() - d.degree();
        const Rational factor = rem.lead() * inv_lead;
        q[static_cast<std::size_t>(k)] = factor;
        for (int i = 0; i <= d.degree(); ++i)
            rem.c_[static_cast<std::size_t>(k + i)] -= factor * d.coeff(i);
        rem.trim();
    }
    return {from_coeffs(std::move(q)), std::move(rem)};
}

inline std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

inline std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const Rational a = c.abs();
        if (!first) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        if (i == 0) {
            out += a.str();
        } else {
            if (!(a == Rational(1))) out += a.str();
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Monic greatest common divisor via a primitive pseudo-remainder sequence on
// integer coefficients, which keeps intermediate growth in check.
namespace detail {

inline std::vector<mpz_class> to_primitive_integers(const Poly& f) {
    mpz_class common_den(1);
    for (const Rational& c : f.coeffs()) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs()) v.push_back(c.num() * (common_den / c.den()));
    mpz_class content(0);
    for (const auto& z : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content > 1)
        for (auto& z : v) z /= content;
    return v;
}

inline void trim_z(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b (lead(b)^(dega-degb+1) * a mod b), made primitive.
inline std::vector<mpz_class> primitive_prem(std::vector<mpz_class> a,
                                             const std::vector<mpz_class>& b) {
    const auto degb = b.size() - 1;
    while (a.size() >= b.size()) {
        const auto dega = a.size() - 1;
        const mpz_class top = a.back();
        for (auto& z : a) z *= b.back();
        for (std::size_t i = 0; i <= degb; ++i) a[dega - degb + i] -= top * b[i];
        trim_z(a);
        if (a.empty()) break;
        mpz_class content(0);
        for (const auto& z : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        if (content > 1)
            for (auto& z : a) z /= content;
    }
    return a;
}

}  // namespace detail

inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw domain_error("gcd: both polynomials are zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto u = detail::to_primitive_integers(a);
    auto v = detail::to_primitive_integers(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        auto r = detail::primitive_prem(std::move(u), v);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (auto& z : u) out.emplace_back(std::move(z));
    return Poly::from_coeffs(std::move(out)).monic();
}

// f = prod factor_i ^ multiplicity_i with square-free pairwise-coprime
// factors and strictly increasing multiplicities.
struct SquareFreeDecomposition {
    struct Part {
        Poly factor;
        int multiplicity = 0;
    };
    std::vector<Part> parts;

    Poly expand() const {
        Poly acc = Poly::constant(1);
        for (const auto& [g, m] : parts) acc *= g.pow(static_cast<unsigned>(m));
        return acc;
    }
};

// Yun's algorithm over the rationals; factors come out monic.
inline SquareFreeDecomposition squarefree_decompose(const Poly& f) {
    if (f.degree() < 1) throw domain_error("squarefree_decompose: constant polynomial");
    SquareFreeDecomposition out;
    const Poly fm = f.monic();
    const Poly fp = fm.derivative();
    Poly g = gcd(fm, fp);
    if (g.degree() < 1) {
        out.parts.push_back({fm, 1});
        return out;
    }
    Poly c = *fm.divide_exact(g);
    Poly d = *fp.divide_exact(g) - c.derivative();
    for (int i = 1; c.degree() >= 1; ++i) {
        Poly a = gcd(c, d);
        if (a.degree() >= 1) out.parts.push_back({a, i});
        c = *c.divide_exact(a);
        d = *d.divide_exact(a) - c.derivative();
    }
    return out;
}

// Product of the distinct irreducible factors, monic.
inline Poly squarefree_part(const Poly& f) {
    if (f.degree() < 1) throw domain_error("squarefree_part: constant polynomial");
    const Poly g = gcd(f, f.derivative());
    if (g.degree() < 1) return f.monic();
    return f.divide_exact(g)->monic();
}

}  // namespace quintic
