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

#include "debruijn/polynomial.hpp"

#include <bit>
#include <cctype>

namespace debruijn {

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
    std::uint64_t bits = 0;
    int digits = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch != '0' && ch != '1')
            throw Error("invalid polynomial '" + std::string(text) + "': expected only 0/1 digits");
        if (bits >> 63)
            throw Error("polynomial '" + std::string(text) + "' exceeds degree " +
                        std::to_string(kMaxPolyDegree));
        bits = (bits << 1) | static_cast<std::uint64_t>(ch - '0');
        ++digits;
    }
    if (digits == 0) throw Error("empty polynomial string");
    return BinaryPolynomial{bits};
}

int BinaryPolynomial::degree() const {
    return static_cast<int>(std::bit_width(bits_)) - 1;
}

std::string BinaryPolynomial::to_string() const {
    if (bits_ == 0) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) out.push_back(coeff(i) ? '1' : '0');
    return out;
}

std::string BinaryPolynomial::to_algebraic() const {
    if (bits_ == 0) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

BinaryPolynomial operator*(BinaryPolynomial a, BinaryPolynomial b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.degree() + b.degree() > kMaxPolyDegree)
        throw Error("polynomial product exceeds degree " + std::to_string(kMaxPolyDegree));
    std::uint64_t acc = 0;
    std::uint64_t x = a.bits();
    for (std::uint64_t y = b.bits(); y != 0; y >>= 1, x <<= 1)
        if (y & 1U) acc ^= x;
    return BinaryPolynomial{acc};
}

namespace {

void divmod(BinaryPolynomial a, BinaryPolynomial b, BinaryPolynomial& quot, BinaryPolynomial& rem) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const int db = b.degree();
    std::uint64_t r = a.bits();
    std::uint64_t q = 0;
    for (int dr = a.degree(); dr >= db; dr = static_cast<int>(std::bit_width(r)) - 1) {
        const int shift = dr - db;
        q |= std::uint64_t{1} << shift;
        r ^= b.bits() << shift;
    }
    quot = BinaryPolynomial{q};
    rem = BinaryPolynomial{r};
}

}  // namespace

BinaryPolynomial operator%(BinaryPolynomial a, BinaryPolynomial b) {
    BinaryPolynomial q, r;
    divmod(a, b, q, r);
    return r;
}

BinaryPolynomial operator/(BinaryPolynomial a, BinaryPolynomial b) {
    BinaryPolynomial q, r;
    divmod(a, b, q, r);
    return q;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
    while (!b.is_zero()) {
        BinaryPolynomial r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BinaryPolynomial mulmod(BinaryPolynomial a, BinaryPolynomial b, BinaryPolynomial m) {
    const int dm = m.degree();
    if (dm < 1) throw Error("mulmod: modulus must have degree >= 1");
    const std::uint64_t top = std::uint64_t{1} << dm;
    const std::uint64_t low = m.bits() ^ top;
    std::uint64_t acc = 0;
    std::uint64_t x = a.bits();
    for (std::uint64_t y = b.bits(); y != 0; y >>= 1) {
        if (y & 1U) acc ^= x;
        x <<= 1;
        if (x & top) x ^= top | low;
    }
    return BinaryPolynomial{acc};
}

BinaryPolynomial powmod(BinaryPolynomial base, std::uint64_t exp, BinaryPolynomial m) {
    BinaryPolynomial result = BinaryPolynomial::one() % m;
    base = base % m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t value) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d <= value / d; d += (d == 2 ? 1 : 2)) {
        if (value % d != 0) continue;
        primes.push_back(d);
        while (value % d == 0) value /= d;
    }
    if (value > 1) primes.push_back(value);
    return primes;
}

namespace {

// x^(2^k) mod p by k repeated squarings.
BinaryPolynomial frobenius_power(int k, BinaryPolynomial p) {
    BinaryPolynomial r = BinaryPolynomial::x() % p;
    for (int i = 0; i < k; ++i) r = mulmod(r, r, p);
    return r;
}

}  // namespace

bool is_irreducible(BinaryPolynomial p) {
    const int d = p.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (!p.coeff(0)) return false;
    const BinaryPolynomial x = BinaryPolynomial::x();
    if (frobenius_power(d, p) != x % p) return false;
    for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(d))) {
        const BinaryPolynomial h = frobenius_power(d / static_cast<int>(r), p) + x;
        if (gcd(p, h).degree() != 0) return false;
    }
    return true;
}

std::uint64_t poly_order(BinaryPolynomial p) {
    if (!is_irreducible(p) || p == BinaryPolynomial::x())
        throw Error("order requested for non-irreducible polynomial " + p.to_string());
    const int n = p.degree();
    std::uint64_t order = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const BinaryPolynomial x = BinaryPolynomial::x();
    const BinaryPolynomial one = BinaryPolynomial::one() % p;
    for (std::uint64_t prime : prime_divisors(order)) {
        while (order % prime == 0 && powmod(x, order / prime, p) == one) order /= prime;
    }
    return order;
}

bool is_primitive(BinaryPolynomial p) {
    if (!is_irreducible(p) || p == BinaryPolynomial::x()) return false;
    const int n = p.degree();
    return poly_order(p) == (std::uint64_t{1} << n) - 1;
}

BinaryPolynomial evaluate_at(BinaryPolynomial g, BinaryPolynomial point, BinaryPolynomial m) {
    BinaryPolynomial acc;
    point = point % m;
    for (int i = g.degree(); i >= 0; --i) {
        acc = mulmod(acc, point, m);
        if (g.coeff(i)) acc = acc + BinaryPolynomial::one() % m;
    }
    return acc;
}

BinaryPolynomial find_associated_primitive(BinaryPolynomial g) {
    const std::uint64_t e = poly_order(g);
    const int n = g.degree();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t t = full / e;
    if (t == 1) return g;
    const std::uint64_t top = std::uint64_t{1} << n;
    // Middle coefficients enumerated ascending; constant term fixed to 1.
    for (std::uint64_t middle = 0; middle < (std::uint64_t{1} << (n - 1)); ++middle) {
        const BinaryPolynomial q{top | (middle << 1) | 1U};
        if (!is_primitive(q)) continue;
        const BinaryPolynomial beta = powmod(BinaryPolynomial::x(), t, q);
        if (evaluate_at(g, beta, q).is_zero()) return q;
    }
    throw Error("no associated primitive polynomial found for " + g.to_string());
}

}  // namespace debruijn
