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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/poly.hpp"
#include "quintic/rational.hpp"

namespace quintic {

// Syntax failure with the byte offset of the offending character.
class parse_error : public domain_error {
   public:
    parse_error(const std::string& what, std::size_t offset)
        : domain_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

   private:
    std::size_t offset_;
};

// Parses expressions like "x^5 - 6x^4 + 11/2x^2 - 3" or "1/2 x^2 + x^2".
//
//   expr  := term (('+'|'-') term)*
//   term  := coeff | coeff? 'x' ('^' nonneg-int)?
//   coeff := int | int '/' posint
//
// Whitespace is insignificant, repeated powers accumulate, and the first term
// may carry its sign. Exponents above the cap are rejected.
inline Poly parse_polynomial(std::string_view text, int exponent_cap = 64) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                                   text[i] == '\r'))
            ++i;
    };
    const auto at_digit = [&] { return i < text.size() && text[i] >= '0' && text[i] <= '9'; };
    const auto read_uint = [&]() -> std::string {
        std::string digits;
        while (at_digit()) digits += text[i++];
        return digits;
    };

    std::vector<Rational> coeffs;
    const auto add_term = [&](const Rational& c, int power) {
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[static_cast<std::size_t>(power)] += c;
    };

    skip_ws();
    if (i == text.size()) throw parse_error("empty polynomial", i);

    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) throw parse_error("expected a term", i);
            break;
        }
        int term_sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            term_sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw parse_error("expected '+' or '-'", i);
        }

        Rational coeff(1);
        bool saw_coeff = false;
        if (at_digit()) {
            saw_coeff = true;
            const std::string numerator = read_uint();
            mpz_class num(numerator, 10);
            mpz_class den(1);
            skip_ws();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip_ws();
                if (!at_digit()) throw parse_error("expected a denominator", i);
                const std::size_t den_at = i;
                den = mpz_class(read_uint(), 10);
                if (den == 0) throw parse_error("zero denominator", den_at);
            }
            coeff = Rational(std::move(num), std::move(den));
        }
        skip_ws();

        int power = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            power = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (!at_digit()) throw parse_error("expected an exponent", i);
                const std::size_t exp_at = i;
                const std::string digits = read_uint();
                if (digits.size() > 9) throw parse_error("exponent too large", exp_at);
                power = std::stoi(digits);
                if (power > exponent_cap) throw parse_error("exponent too large", exp_at);
            }
        } else if (!saw_coeff) {
            throw parse_error("expected a term", i);
        }

        add_term(term_sign < 0 ? -coeff : coeff, power);
        first = false;
    }
    return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace quintic
