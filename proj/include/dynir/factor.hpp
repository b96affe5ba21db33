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

/**
 * @file factor.hpp
 * @brief Irreducibility testing, factorization and root finding over a tower level, plus field construction.
 */

#ifndef DYNIR_FACTOR_HPP
#define DYNIR_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace dynir {

namespace detail {

/// The Q-power Frobenius on F[x]/(g) as a matrix: row i holds x^(iQ) mod g, Q = |F|.
/// Since coefficients are fixed by the Q-power map, a(x)^Q = sum a_i x^(iQ).
class FrobeniusMap {
   public:
    explicit FrobeniusMap(const Poly& g) : g_(g), d_(static_cast<std::size_t>(g.degree())) {
        const Field& F = g.field();
        const std::size_t w = F.degree();
        rows_.assign(d_ * d_ * w, 0);
        const Poly xq = powmod(Poly::x(F), F.order(), g);
        Poly row = Poly::constant(F.one());
        for (std::size_t i = 0; i < d_; ++i) {
            std::copy(row.raw().begin(), row.raw().end(), rows_.begin() + static_cast<std::ptrdiff_t>(i * d_ * w));
            if (i + 1 < d_) row = (row * xq) % g;
        }
    }

    const Poly& modulus() const noexcept { return g_; }

    /// a^Q mod g for a already reduced mod g.
    Poly apply(const Poly& a) const {
        const Field& F = g_.field();
        const std::size_t w = F.degree();
        const Coeff p = F.characteristic();
        const auto& ar = a.raw();
        const std::size_t na = std::min(a.size(), d_);
        std::vector<Coeff> out(d_ * w, 0);
        if (w == 1) {
            const bool narrow = static_cast<double>(p) * static_cast<double>(p) * static_cast<double>(d_) < 1.8e19;
            if (narrow) {
                std::vector<std::uint64_t> acc(d_, 0);
                for (std::size_t i = 0; i < na; ++i) {
                    const Coeff ai = ar[i];
                    if (ai == 0) continue;
                    const Coeff* row = rows_.data() + i * d_;
                    for (std::size_t j = 0; j < d_; ++j) acc[j] += ai * row[j];
                }
                for (std::size_t j = 0; j < d_; ++j) out[j] = acc[j] % p;
            } else {
                std::vector<unsigned __int128> acc(d_, 0);
                for (std::size_t i = 0; i < na; ++i) {
                    const Coeff ai = ar[i];
                    if (ai == 0) continue;
                    const Coeff* row = rows_.data() + i * d_;
                    for (std::size_t j = 0; j < d_; ++j) acc[j] += ai * row[j];
                }
                for (std::size_t j = 0; j < d_; ++j) out[j] = static_cast<Coeff>(acc[j] % p);
            }
            return Poly::from_raw(F, std::move(out));
        }
        std::vector<Coeff> tmp(w);
        for (std::size_t i = 0; i < na; ++i) {
            CSpan ai(ar.data() + i * w, w);
            if (all_zero(ai)) continue;
            for (std::size_t j = 0; j < d_; ++j) {
                CSpan rij(rows_.data() + (i * d_ + j) * w, w);
                if (all_zero(rij)) continue;
                mul(F.data(), ai, rij, tmp);
                add_to(p, tmp, MSpan(out.data() + j * w, w));
            }
        }
        return Poly::from_raw(F, std::move(out));
    }

   private:
    Poly g_;
    std::size_t d_;
    std::vector<Coeff> rows_;
};

/// Polynomial whose p-th power is f; requires f' = 0. Coefficient roots are a^(Q/p).
inline Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    const Coeff p = F.characteristic();
    const BigInt e = F.order() / p;
    std::vector<Elem> cs;
    for (std::size_t i = 0; i < f.size(); i += p) cs.push_back(e == 1 ? f.coeff(i) : f.coeff(i).pow(e));
    return Poly(F, cs);
}

inline Poly random_below(const Field& F, std::size_t n, std::mt19937_64& rng) {
    std::vector<Elem> cs;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(F.random(rng));
    return Poly(F, cs);
}

inline void equal_degree_split(const Poly& f, std::size_t k, std::mt19937_64& rng, std::vector<Poly>& out) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (n == k) {
        out.push_back(f);
        return;
    }
    const Field& F = f.field();
    const Poly one = Poly::constant(F.one());
    while (true) {
        const Poly a = random_below(F, n, rng);
        if (a.degree() < 1) continue;
        Poly b;
        if (F.characteristic() == 2) {
            // absolute trace polynomial a + a^2 + ... + a^(2^(mk-1)), Q = 2^m
            const std::size_t steps = F.degree() * k;
            Poly t = a % f, s = t;
            for (std::size_t i = 1; i < steps; ++i) {
                t = (t * t) % f;
                s = s + t;
            }
            b = s;
        } else {
            const BigInt e = (boost::multiprecision::pow(F.order(), static_cast<unsigned>(k)) - 1) / 2;
            b = powmod(a, e, f) - one;
        }
        const Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, k, rng, out);
            equal_degree_split(f / g, k, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Rabin's test: x^(Q^d) = x mod f and gcd(x^(Q^(d/r)) - x, f) = 1 for every prime r | d.
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) fail(Errc::ConstantPolynomial, "irreducibility of a constant");
    const int d = f.degree();
    if (d == 1) return true;
    const Poly g = f.monic();
    const Poly dg = g.derivative();
    if (dg.is_zero() || gcd(g, dg).degree() > 0) return false;
    const Poly x = Poly::x(g.field());
    std::vector<std::size_t> checkpoints;
    for (auto r : prime_divisors(static_cast<std::uint64_t>(d))) checkpoints.push_back(static_cast<std::size_t>(d / static_cast<int>(r)));
    const detail::FrobeniusMap frob(g);
    Poly h = x % g;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(d); ++k) {
        h = frob.apply(h);
        if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end() && gcd(g, h - x).degree() > 0)
            return false;
    }
    return h == x;
}

struct FactorList {
    Elem unit;
    std::vector<std::pair<Poly, unsigned>> factors;  ///< monic irreducible, ordered by degree then canonically
    std::uint64_t seed = 0;

    std::size_t count() const {
        std::size_t n = 0;
        for (const auto& [g, m] : factors) n += m;
        return n;
    }
};

inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eedf00dULL;

/// Monic squarefree decomposition: pairs (s_i, i) with f = lc * prod s_i^i, characteristic-aware.
inline std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly one = Poly::constant(f.field().one());
    const Poly m = f.monic();
    if (m.degree() < 1) return out;
    Poly c = gcd(m, m.derivative());
    Poly w = m / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        const unsigned p = static_cast<unsigned>(f.field().characteristic());
        for (auto& [g, k] : squarefree_decomposition(detail::pth_root(c.monic()))) out.emplace_back(g, k * p);
    }
    return out;
}

/// Distinct-degree factorization of a monic squarefree f: pairs (product of all degree-k factors, k).
inline std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    Poly rest = f;
    const Poly x = Poly::x(f.field());
    const detail::FrobeniusMap frob(f);
    Poly h = x % f;
    for (std::size_t k = 1; static_cast<std::size_t>(rest.degree()) >= 2 * k; ++k) {
        h = frob.apply(h);
        Poly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            rest = rest / g;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
    return out;
}

/// Complete factorization: squarefree, distinct-degree, then Cantor-Zassenhaus equal-degree splitting.
inline FactorList factor(const Poly& f, std::uint64_t seed = kDefaultSplitSeed) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "factor of the zero polynomial");
    FactorList out{f.leading(), {}, seed};
    std::mt19937_64 rng(seed);
    for (const auto& [s, mult] : squarefree_decomposition(f)) {
        for (const auto& [g, k] : distinct_degree(s)) {
            std::vector<Poly> parts;
            detail::equal_degree_split(g, k, rng, parts);
            for (auto& q : parts) out.factors.emplace_back(q.monic(), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

/// All roots in the coefficient field, with multiplicity, in canonical order.
inline std::vector<Elem> roots_in_field(const Poly& f, std::uint64_t seed = kDefaultSplitSeed) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    const Field& F = f.field();
    const Poly m = f.monic();
    const Poly x = Poly::x(F);
    const Poly split = gcd(m, powmod(x, F.order(), m) - x);
    if (split.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    std::vector<Poly> lin;
    detail::equal_degree_split(split, 1, rng, lin);
    for (const auto& l : lin) {
        const Elem r = -l.monic().coeff(0);
        const Poly xr = x - r;
        Poly rest = m;
        while (true) {
            auto [q, rem] = divrem(rest, xr);
            if (!rem.is_zero()) break;
            out.push_back(r);
            rest = q;
        }
    }
    std::sort(out.begin(), out.end(), [](const Elem& a, const Elem& b) { return canonical_less(a, b); });
    return out;
}

/// Adjoins a root of the irreducible polynomial m (made monic). Throws ReducibleModulus otherwise.
inline Field extend_field(const Field& F, const Poly& m) {
    if (!(m.field() == F)) fail(Errc::FieldMismatch, "modulus must have coefficients at the level being extended");
    if (m.degree() < 1) fail(Errc::DegreeZero, "modulus must have positive degree");
    if (!is_irreducible(m)) fail(Errc::ReducibleModulus, m.to_string() + " is reducible");
    return F.extend_unchecked(m.monic().coefficients());
}

/// Lexicographically first monic irreducible of degree d over F: the coefficient tuple (c_0, ..., c_{d-1}) is
/// scanned with c_0 most significant and each entry in canonical element order.
inline Poly smallest_irreducible(const Field& F, std::size_t d) {
    if (d < 1) fail(Errc::DegreeZero, "degree must be positive");
    const Coeff p = F.characteristic();
    const std::size_t w = F.degree();
    // digits over F_p: c_0 block first, each block most significant coordinate first
    std::vector<Coeff> digits(d * w, 0);
    while (true) {
        std::vector<Coeff> raw((d + 1) * w, 0);
        for (std::size_t i = 0; i < d; ++i) std::copy_n(digits.begin() + static_cast<std::ptrdiff_t>(i * w), w, raw.begin() + static_cast<std::ptrdiff_t>(i * w));
        raw[d * w] = 1;
        Poly cand = Poly::from_raw(F, std::move(raw));
        if (is_irreducible(cand)) return cand;
        std::size_t pos = digits.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) fail(Errc::TowerBuildFailure, "no irreducible polynomial found");
        }
    }
}

/// A tower over F_p with one level per entry of `degrees` greater than 1, each modulus the first irreducible
/// in the order of smallest_irreducible. An entry of 1 adds no level.
inline Field build_field(std::uint64_t p, const std::vector<std::size_t>& degrees) {
    Field F = Field::prime(p);
    if (degrees.empty()) fail(Errc::DegreeZero, "at least one degree is required");
    for (auto d : degrees) {
        if (d < 1) fail(Errc::DegreeZero, "degree must be positive");
        if (d == 1) continue;
        F = F.extend_unchecked(smallest_irreducible(F, d).coefficients());
    }
    return F;
}

/// Result of comparing both sides of Capelli's lemma for g(f(x)).
struct CapelliCheck {
    bool composite_irreducible = false;  ///< g(f(x)) over the base field
    bool fiber_irreducible = false;      ///< f(x) - beta over F[beta], beta a root of g
    bool consistent() const noexcept { return composite_irreducible == fiber_irreducible; }
};

/// Both sides of Capelli's lemma; g must be irreducible (ReducibleG otherwise).
inline CapelliCheck capelli_sides(const Poly& g, const Poly& f) {
    if (g.degree() < 1 || !is_irreducible(g)) fail(Errc::ReducibleG, "g must be irreducible");
    if (f.degree() < 1) fail(Errc::ConstantPolynomial, "f must be nonconstant");
    CapelliCheck out;
    out.composite_irreducible = is_irreducible(compose(g, f));
    if (g.degree() == 1) {
        const Elem beta = -g.monic().coeff(0);
        out.fiber_irreducible = is_irreducible(f - beta);
        return out;
    }
    const Field E = g.field().extend_unchecked(g.monic().coefficients());
    out.fiber_irreducible = is_irreducible(f.lift(E) - E.generator());
    return out;
}

inline bool capelli_consistency(const Poly& g, const Poly& f) { return capelli_sides(g, f).consistent(); }

}  // namespace dynir

#endif
