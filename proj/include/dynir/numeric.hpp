/*
   Copyright 2026 The dynir Authors

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

#ifndef DYNIR_NUMERIC_HPP
#define DYNIR_NUMERIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace dynir {

using BigInt = boost::multiprecision::cpp_int;
using Coeff = std::uint64_t;

/// Deterministic trial division; characteristics are below 2^32.
inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f != 0) continue;
        unsigned e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto [q, e] : factor_integer(n)) out.push_back(q);
    return out;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// Inverse of a modulo m (m > 0, gcd(a, m) = 1), returned in [0, m).
inline BigInt big_mod_inverse(const BigInt& a, const BigInt& m) {
    if (m == 1) return 0;
    BigInt r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    BigInt s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        BigInt s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0 != 1) fail(Errc::InvalidArgument, "modular inverse does not exist");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Coeff mod_inverse(Coeff a, Coeff p) {
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) fail(Errc::DivisionByZero, "inverse of zero");
    if (s0 < 0) s0 += static_cast<std::int64_t>(p);
    return static_cast<Coeff>(s0);
}

}  // namespace dynir

#endif
