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
 * @file unicritical.hpp
 * @brief Decision procedure for polynomials with a single affine critical point.
 *
 * A unicritical f of degree d with critical point gamma and lead coefficient a is conjugate to the centered
 * form h(x) = f(x + gamma) - gamma = a x^d + c, and f is dynamically irreducible exactly when the pair (h, -gamma)
 * is. For q = 1 mod r (every prime r | d, and q = 1 mod 4 when 4 | d) the pair (h, beta) is decided by the
 * power-residue content of finitely many values along the orbit of 0 under h.
 */

#ifndef DYNIR_UNICRITICAL_HPP
#define DYNIR_UNICRITICAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "residue.hpp"
#include "verdict.hpp"

namespace dynir {

struct UnicriticalForm {
    Poly original;
    unsigned d = 0;
    Elem gamma;
    Elem a;
    Poly centered;  ///< a x^d + c
    Elem c;
    Elem beta;  ///< target of the pair; -gamma when testing the original polynomial
};

/// Forward orbit split as tail then cycle; the orbit is tail followed by the cycle repeated forever.
struct Orbit {
    Elem seed;
    std::vector<Elem> tail;
    std::vector<Elem> cycle;

    std::size_t size() const noexcept { return tail.size() + cycle.size(); }
    /// n-th point of the orbit (0 is the seed).
    const Elem& at(std::size_t n) const {
        if (n < tail.size()) return tail[n];
        return cycle[(n - tail.size()) % cycle.size()];
    }
};

inline Orbit forward_orbit(const Poly& f, const Elem& seed) {
    Orbit out{seed, {}, {}};
    std::map<std::vector<Coeff>, std::size_t> seen;
    std::vector<Elem> pts;
    Elem x = seed.lift(f.field().contains(seed.field()) ? f.field() : seed.field());
    while (true) {
        auto [it, fresh] = seen.emplace(x.coeffs(), pts.size());
        if (!fresh) {
            out.tail.assign(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(it->second));
            out.cycle.assign(pts.begin() + static_cast<std::ptrdiff_t>(it->second), pts.end());
            return out;
        }
        pts.push_back(x);
        x = f(x);
    }
}

struct AdjustedValue {
    unsigned n = 0;  ///< first iterate at which the value is tested
    Elem value;
    std::vector<ResidueVerdict> tests;  ///< each carries the quantity actually tested

    bool any_power() const {
        return std::any_of(tests.begin(), tests.end(), [](const ResidueVerdict& t) { return t.is_rth_power; });
    }
};

struct OrbitReport {
    Orbit orbit;
    std::vector<AdjustedValue> adjusted;
    Verdict verdict;

    /// Distinct adjusted values in canonical order.
    std::vector<Elem> value_set() const {
        std::vector<Elem> out;
        for (const auto& v : adjusted)
            if (std::none_of(out.begin(), out.end(), [&](const Elem& e) { return e == v.value; })) out.push_back(v.value);
        std::sort(out.begin(), out.end(), [](const Elem& x, const Elem& y) { return canonical_less(x, y); });
        return out;
    }
};

struct HypothesisReport {
    bool ok = true;
    std::vector<std::uint64_t> fails;  ///< offending r (4 stands for the 4 | d condition)
};

/// Exponents whose power residues decide the pair: the primes dividing d, then 4 when 4 | d.
inline std::vector<std::uint64_t> residue_exponents(unsigned d) {
    std::vector<std::uint64_t> out = prime_divisors(d);
    if (d % 4 == 0) out.push_back(4);
    return out;
}

inline HypothesisReport hypothesis_check(unsigned d, const Field& F) {
    HypothesisReport out;
    const BigInt q = F.order();
    for (auto r : residue_exponents(d)) {
        if ((q - 1) % r != 0) {
            out.ok = false;
            out.fails.push_back(r);
        }
    }
    return out;
}

/// Extracts the centered form when f' = d a (x - gamma)^(d-1); nothing when f has several critical points.
inline std::optional<UnicriticalForm> detect_unicritical(const Poly& f) {
    const int deg = f.degree();
    if (deg < 2) fail(Errc::InvalidArgument, "unicritical detection needs degree at least 2");
    const Field& F = f.field();
    const Coeff p = F.characteristic();
    const auto d = static_cast<unsigned>(deg);
    if (d % p == 0) fail(Errc::CharacteristicDividesDegree, "characteristic divides the degree");
    const Elem a = f.leading();
    const Elem da = a * F.from_int(static_cast<std::int64_t>(d % p));
    std::vector<Elem> candidates;
    if ((d - 1) % p != 0) {
        // the x^(d-2) coefficient of f' is (d-1) a_{d-1} = -d a (d-1) gamma
        candidates.push_back(-f.coeff(d - 1) / da);
    } else {
        candidates = roots_in_field(f.derivative());
    }
    const Poly x = Poly::x(F);
    for (const auto& g : candidates) {
        Poly expect = Poly::constant(da);
        for (unsigned i = 0; i + 1 < d; ++i) expect = expect * (x - g);
        if (!(expect == f.derivative())) continue;
        // f' only pins f down modulo polynomials in x^p, so check the centered form itself
        const Poly centered = compose(f, x + g) - g;
        bool pure = true;
        for (unsigned i = 1; i < d && pure; ++i) pure = centered.coeff(i).is_zero();
        if (!pure) continue;
        UnicriticalForm u;
        u.original = f;
        u.d = d;
        u.gamma = g;
        u.a = a;
        u.centered = centered;
        u.c = u.centered.coeff(0);
        u.beta = -g;
        return u;
    }
    return std::nullopt;
}

inline bool is_centered(const Poly& h) {
    if (h.degree() < 2) return false;
    for (int i = 1; i < h.degree(); ++i)
        if (!h.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
    return true;
}

namespace detail {

inline ResidueVerdict power_test(const Elem& v, std::uint64_t r) { return is_rth_power(v, r); }

// Adjusted values of the pair (a x^d + c, beta) along the orbit of 0, first occurrences only.
// Values are tested in iterate order so the first hit is the least reducible iterate.
inline std::vector<AdjustedValue> pair_values(const Poly& h, const Elem& beta, Verdict& verdict) {
    const unsigned d = static_cast<unsigned>(h.degree());
    const Elem a = h.leading();
    const Elem c = h.coeff(0);
    const Field& F = h.field();
    const auto exps = residue_exponents(d);
    std::vector<AdjustedValue> out;

    AdjustedValue first{1, -(c - beta) / a, {}};
    for (auto r : exps) {
        if (r == 4)
            first.tests.push_back(power_test((c - beta) / (F.from_int(4) * a), 4));
        else
            first.tests.push_back(power_test(first.value, r));
    }
    out.push_back(first);
    if (first.any_power()) {
        verdict = Verdict::reducible_at(1, "rth_power", "value " + first.value.to_string() + " at iterate 1");
        return out;
    }
    std::map<std::vector<Coeff>, unsigned> seen;
    Elem x = h(c);  // h^2(0)
    for (unsigned n = 2;; ++n) {
        if (!seen.emplace(x.coeffs(), n).second) break;
        AdjustedValue v{n, (x - beta) / a, {}};
        for (auto r : exps) v.tests.push_back(power_test(v.value, r));
        out.push_back(v);
        if (v.any_power()) {
            verdict = Verdict::reducible_at(n, "rth_power", "value " + v.value.to_string() + " at iterate " + std::to_string(n));
            return out;
        }
        x = h(x);
    }
    verdict = Verdict::proved("unicritical_criterion", "no adjusted value is a power");
    return out;
}

}  // namespace detail

/// Complete decision for the pair (h, beta) with h = a x^d + c.
inline OrbitReport pair_test(const Poly& h, const Elem& beta) {
    if (!is_centered(h)) fail(Errc::NotCentered, "pair test needs a x^d + c");
    const unsigned d = static_cast<unsigned>(h.degree());
    if (d % h.field().characteristic() == 0) fail(Errc::CharacteristicDividesDegree, "characteristic divides the degree");
    const auto hyp = hypothesis_check(d, h.field());
    if (!hyp.ok) fail(Errc::HypothesisFailure, "q is not 1 modulo " + std::to_string(hyp.fails.front()));
    OrbitReport out;
    out.orbit = forward_orbit(h, h.field().zero());
    out.adjusted = detail::pair_values(h, beta, out.verdict);
    return out;
}

/// Adjusted critical orbit of a unicritical polynomial: {-f(gamma)/a} and {f^n(gamma)/a : n > 1}.
inline OrbitReport adjusted_critical_orbit(const UnicriticalForm& u) {
    const auto hyp = hypothesis_check(u.d, u.original.field());
    if (!hyp.ok) fail(Errc::HypothesisFailure, "q is not 1 modulo " + std::to_string(hyp.fails.front()));
    OrbitReport out;
    out.orbit = forward_orbit(u.original, u.gamma);
    out.adjusted = detail::pair_values(u.centered, u.beta, out.verdict);
    return out;
}

/// Whether g(h^n) is irreducible, given that g(h^(n-1)) is; decided by power residues of g(h^(n-1)(c)).
inline bool step_test(const Poly& g, const Poly& h, unsigned n) {
    if (n < 1) fail(Errc::InvalidArgument, "n must be positive");
    if (!is_centered(h)) fail(Errc::NotCentered, "h must be a x^d + c");
    const unsigned d = static_cast<unsigned>(h.degree());
    const Field& F = h.field();
    if (d % F.characteristic() == 0) fail(Errc::CharacteristicDividesDegree, "characteristic divides the degree");
    const auto hyp = hypothesis_check(d, F);
    if (!hyp.ok) fail(Errc::HypothesisFailure, "q is not 1 modulo " + std::to_string(hyp.fails.front()));
    if (g.degree() < 1) fail(Errc::ConstantPolynomial, "g must be nonconstant");
    if (!is_irreducible(compose(g, iterate(h, n - 1)))) fail(Errc::PreviousIterateReducible, "g(h^(n-1)) is reducible");
    const Elem a = h.leading();
    const Elem c = h.coeff(0);
    const auto k = static_cast<std::int64_t>(g.degree());
    Elem x = c;
    for (unsigned i = 1; i < n; ++i) x = h(x);
    const Elem value = g(x);
    const Elem lg = g.leading();
    const Elem C = (n == 1 ? (-a).pow(k) : a.pow(k)) * lg;
    const Elem D = (n == 1 ? (F.from_int(4) * a).pow(k) : a.pow(k)) * lg;
    for (auto r : residue_exponents(d)) {
        const Elem q = value / (r == 4 ? D : C);
        if (is_rth_power(q, r).is_rth_power) return false;
    }
    return true;
}

/// Verdict for a unicritical polynomial, with the hypothesis failure mapped to reducibility at iterate 1.
inline OrbitReport unicritical_verdict(const UnicriticalForm& u) {
    const auto hyp = hypothesis_check(u.d, u.original.field());
    if (!hyp.ok) {
        OrbitReport out;
        out.orbit = forward_orbit(u.original, u.gamma);
        out.verdict = Verdict::reducible_at(1, "hypothesis_failure",
                                            "q is not 1 modulo " + std::to_string(hyp.fails.front()) +
                                                ", so the first iterate factors");
        return out;
    }
    return adjusted_critical_orbit(u);
}

}  // namespace dynir

#endif
