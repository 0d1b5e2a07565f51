/*
 * Copyright 2026 The debruijn-lfsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace debruijn {

/// Raised for malformed input: unparsable polynomials, invalid factor sets,
/// length mismatches and the like.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest polynomial degree representable (coefficients packed in 64 bits).
inline constexpr int kMaxPolyDegree = 63;

/// Polynomial over GF(2). Bit i of the packed word is the coefficient of x^i.
class BinaryPolynomial {
public:
    constexpr BinaryPolynomial() = default;
    constexpr explicit BinaryPolynomial(std::uint64_t bits) : bits_(bits) {}

    /// Parses the highest-degree-first coefficient notation, e.g. "1011" is
    /// x^3 + x + 1. Embedded whitespace is ignored.
    static BinaryPolynomial parse(std::string_view text);

    static constexpr BinaryPolynomial x() { return BinaryPolynomial{2}; }
    static constexpr BinaryPolynomial one() { return BinaryPolynomial{1}; }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const;
    constexpr bool coeff(int i) const { return (bits_ >> i) & 1U; }

    /// Coefficient string, highest degree first ("0" for zero).
    std::string to_string() const;
    /// Human form such as "x^4+x+1".
    std::string to_algebraic() const;

    friend constexpr bool operator==(BinaryPolynomial, BinaryPolynomial) = default;
    friend constexpr auto operator<=>(BinaryPolynomial a, BinaryPolynomial b) { return a.bits_ <=> b.bits_; }

    friend constexpr BinaryPolynomial operator+(BinaryPolynomial a, BinaryPolynomial b) {
        return BinaryPolynomial{a.bits_ ^ b.bits_};
    }
    /// Throws Error when the product would exceed kMaxPolyDegree.
    friend BinaryPolynomial operator*(BinaryPolynomial a, BinaryPolynomial b);
    /// Throws Error on division by the zero polynomial.
    friend BinaryPolynomial operator%(BinaryPolynomial a, BinaryPolynomial b);
    friend BinaryPolynomial operator/(BinaryPolynomial a, BinaryPolynomial b);

private:
    std::uint64_t bits_ = 0;
};

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

/// a * b mod m, with a and b already reduced modulo m.
BinaryPolynomial mulmod(BinaryPolynomial a, BinaryPolynomial b, BinaryPolynomial m);
/// base^exp mod m.
BinaryPolynomial powmod(BinaryPolynomial base, std::uint64_t exp, BinaryPolynomial m);

/// Distinct prime divisors of `value`, ascending (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t value);

/// Irreducibility over GF(2) via x^(2^d) = x (mod p) plus the subfield
/// gcd checks for every maximal proper divisor of d.
bool is_irreducible(BinaryPolynomial p);

/// Multiplicative order of x modulo an irreducible p, i.e. the period of the
/// nonzero sequences p generates. Throws Error when p is reducible or p = x.
std::uint64_t poly_order(BinaryPolynomial p);

/// Irreducible with order 2^deg - 1.
bool is_primitive(BinaryPolynomial p);

/// Evaluates g at `point`, an element of GF(2)[x]/(m).
BinaryPolynomial evaluate_at(BinaryPolynomial g, BinaryPolynomial point, BinaryPolynomial m);

/// A primitive q of the same degree as the irreducible g such that, with
/// alpha a root of q, alpha^t is a root of g where t = (2^n - 1)/order(g).
/// Candidates are scanned in ascending coefficient order, so the result is
/// reproducible. Returns g itself when g is primitive.
BinaryPolynomial find_associated_primitive(BinaryPolynomial g);

}  // namespace debruijn
