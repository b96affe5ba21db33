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

#ifndef DYNIR_RESIDUE_HPP
#define DYNIR_RESIDUE_HPP

#include <optional>
#include <utility>

#include "field.hpp"
#include "galois.hpp"

namespace dynir {

struct ResidueVerdict {
    Elem value;
    std::uint64_t r = 0;
    bool is_rth_power = false;
    std::optional<Elem> witness;
};

namespace detail {

/// Lexicographically smallest element of F that is not an l-th power (l | |F| - 1).
inline Elem smallest_non_power(const Field& F, std::uint64_t l) {
    const BigInt e = (F.order() - 1) / l;
    for (std::uint64_t i = 1;; ++i) {
        Elem n = F.element_at(i);
        if (!n.pow(e).is_one()) return n;
    }
}

/// Some x with x^(l^e) = b, where l is prime, l | |F| - 1 and b is an (l^e)-th power.
/// The l-Sylow part is solved by a digit-by-digit discrete log against a generator of the l-Sylow
/// subgroup; the complementary part by inverting l^e modulo its order.
inline Elem prime_power_root(const Elem& b, std::uint64_t l, unsigned e) {
    const Field& F = b.field();
    const BigInt N = F.order() - 1;
    BigInt s = N;
    unsigned t = 0;
    while (s % l == 0) {
        s /= l;
        ++t;
    }
    const BigInt lt = big_pow(l, t);
    const BigInt le = big_pow(l, e);
    // b = b_l * b_s with b_l = b^(s*u), b_s = b^(lt*v), s*u + lt*v = 1
    const BigInt u = big_mod_inverse(s, lt);
    const BigInt v = (1 - s * u) / lt;
    const Elem b_l = b.pow(s * u);
    const Elem b_s = b.pow(((lt * v) % N + N) % N);
    const Elem y_s = s == 1 ? F.one() : b_s.pow(big_mod_inverse(le % s, s));

    Elem y_l = F.one();
    if (!b_l.is_one()) {
        if (e >= t) fail(Errc::InvalidArgument, "element is not the required power");
        const Elem z = smallest_non_power(F, l).pow(s);  // generates the l-Sylow subgroup
        const Elem zeta = z.pow(big_pow(l, t - 1));      // order l
        BigInt k = 0;
        BigInt lpow = 1;
        const Elem z_inv = z.inverse();
        for (unsigned i = 0; i < t; ++i) {
            const Elem h = (b_l * z_inv.pow(k)).pow(big_pow(l, t - 1 - i));
            std::uint64_t digit = 0;
            Elem acc = F.one();
            while (!(acc == h)) {
                acc *= zeta;
                if (++digit >= l) fail(Errc::InvalidArgument, "discrete log digit not found");
            }
            k += lpow * digit;
            lpow *= l;
        }
        if (k % le != 0) fail(Errc::InvalidArgument, "element is not the required power");
        y_l = z.pow(k / le);
    }
    return y_l * y_s;
}

}  // namespace detail

/// Decides whether a is an r-th power in its field and extracts a root when it is.
/// 0 counts as an r-th power with witness 0.
inline ResidueVerdict is_rth_power(const Elem& a, std::uint64_t r) {
    if (r == 0) fail(Errc::InvalidArgument, "exponent must be positive");
    const Field& F = a.field();
    if (r % F.characteristic() == 0) fail(Errc::ExponentSharesCharacteristic, "p divides r");
    ResidueVerdict out{a, r, true, std::nullopt};
    if (a.is_zero()) {
        out.witness = F.zero();
        return out;
    }
    const BigInt N = F.order() - 1;
    const BigInt g = big_gcd(BigInt(r), N);
    if (g == 1) {
        out.witness = a.pow(big_mod_inverse(BigInt(r), N));
        return out;
    }
    if (!a.pow(N / g).is_one()) {
        out.is_rth_power = false;
        return out;
    }
    // r = g*u with gcd(u, N/g) = 1; take w in the g-th powers with w^u = a, then x^g = w.
    const BigInt u = BigInt(r) / g;
    const BigInt H = N / g;
    Elem x = H == 1 ? a : a.pow(big_mod_inverse(u % H, H));
    for (auto [l, e] : factor_integer(static_cast<std::uint64_t>(g))) x = detail::prime_power_root(x, l, e);
    out.witness = x;
    return out;
}

namespace detail {

/// Lowest level B with [F : B] odd.
inline Field odd_base(const Field& F) {
    Field B = F;
    while (B.level() > 0 && B.relative_degree() % 2 == 1) B = B.parent();
    return B;
}

/// Tonelli-Shanks with the smallest quadratic nonresidue; a must be a nonzero square.
inline Elem tonelli_shanks(const Elem& a) {
    const Field& F = a.field();
    BigInt s = F.order() - 1;
    unsigned t = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++t;
    }
    Elem c = smallest_non_power(F, 2).pow(s);
    Elem x = a.pow((s + 1) / 2);
    Elem b = a.pow(s);
    unsigned m = t;
    while (!b.is_one()) {
        unsigned i = 0;
        Elem bb = b;
        while (!bb.is_one()) {
            bb *= bb;
            ++i;
        }
        Elem g = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) g *= g;
        x *= g;
        c = g * g;
        b *= c;
        m = i;
    }
    return x;
}

}  // namespace detail

/// Canonical square root (the lexicographically smaller of the pair), or nothing.
/// When F has odd degree m over a level B, a root is a^((T+1)/2) / sqrt(N(a)) with T = (|F|-1)/(|B|-1) odd,
/// so only a square root in B and O(log m) Frobenius applications are needed.
inline std::optional<Elem> sqrt(const Elem& a) {
    const Field& F = a.field();
    if (F.characteristic() == 2) fail(Errc::EvenCharacteristic, "square roots need odd characteristic");
    if (a.is_zero()) return F.zero();
    const Field B = detail::odd_base(F);
    Elem x;
    if (B.level() == F.level()) {
        if (!a.pow((F.order() - 1) / 2).is_one()) return std::nullopt;
        x = detail::tonelli_shanks(a);
    } else {
        const auto s = sqrt(norm(a, B));
        if (!s) return std::nullopt;
        const std::uint64_t m = F.degree() / B.degree();
        FrobeniusPowers frob(F, B);
        const Elem b = a.pow((B.order() + 1) / 2);
        // acc = prod_{j < t} sigma^(2j)(b), t = (m - 1)/2, built along the binary expansion of t
        const std::uint64_t t = (m - 1) / 2;
        Elem acc = F.one();
        std::uint64_t k = 0;
        for (int bit = 63; bit >= 0; --bit) {
            if (k > 0) {
                acc = acc * frob.apply(2 * k, acc);
                k *= 2;
            }
            if ((t >> bit) & 1u) {
                acc = b * frob.apply(2, acc);
                k += 1;
            }
        }
        x = a * frob.apply(1, acc) / *s;
        if (!(x * x == a)) fail(Errc::InvalidArgument, "odd-degree square root failed to verify");
    }
    Elem y = -x;
    return canonical_less(y, x) ? y : x;
}

struct SqrtMinus3 {
    Field field;  ///< F itself when -3 is a square, else F[x]/(x^2 + 3)
    Elem root;
    bool extended = false;
};

inline SqrtMinus3 adjoin_sqrt_minus3(const Field& F) {
    const Coeff p = F.characteristic();
    if (p == 2) fail(Errc::EvenCharacteristic, "needs odd characteristic");
    if (p == 3) fail(Errc::CharacteristicThree, "-3 vanishes in characteristic 3");
    if (auto r = sqrt(F.from_int(-3))) return {F, *r, false};
    Field E = F.extend_unchecked({F.from_int(3), F.zero(), F.one()});
    return {E, E.generator(), true};
}

}  // namespace dynir

#endif
