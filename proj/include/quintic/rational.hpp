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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "quintic/errors.hpp"

namespace quintic {

// Exact rational scalar. Always canonical: positive denominator, reduced.
class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 3 == Rational(3)
    Rational(long num, long den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "123", "-4/7", "+9/3" (canonicalized). Rejects anything else.
    static std::optional<Rational> from_string(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned e) const {
        Rational base = *this, acc = 1;
        for (; e != 0; e >>= 1) {
            if (e & 1u) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    Rational inverse() const {
        if (is_zero()) throw domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // If *this is the square of a rational, returns it (non-negative root).
    std::optional<Rational> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        if (mpz_perfect_square_p(num().get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(den().get_mpz_t()) == 0) return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(std::move(n), std::move(d));
    }

    // "n" when integral, otherwise "n/d".
    std::string str() const {
        return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

   private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);  // mpz_set_str rejects '+'
        return std::string(s);
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text, true)) return std::nullopt;
        return Rational(mpz_class(strip_plus(text), 10));
    }
    const auto numpart = text.substr(0, slash);
    const auto denpart = text.substr(slash + 1);
    if (!is_int(numpart, true) || !is_int(denpart, false)) return std::nullopt;
    mpz_class den(std::string(denpart), 10);
    if (den == 0) return std::nullopt;
    return Rational(mpz_class(strip_plus(numpart), 10), std::move(den));
}

inline int sign(const Rational& x) { return x.sign(); }
inline Rational abs(const Rational& x) { return x.abs(); }

}  // namespace quintic
