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
 * @file linearized.hpp
 * @brief Shifted linearized polynomials a_p x^p - a_1 x - a_0 in characteristic p.
 *
 * Irreducibility follows Cohen's criterion: x^p - c1 x - c0 is irreducible over F_q iff c1 = A^(p-1) for some
 * A in F_q and Tr_{F_q/F_p}(c0 / A^p) != 0. No such polynomial is dynamically irreducible: the second iterate
 * factors for p >= 3, the third for p = 2.
 */

#ifndef DYNIR_LINEARIZED_HPP
#define DYNIR_LINEARIZED_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "factor.hpp"
#include "verdict.hpp"

namespace dynir {

struct ShiftedLinearized {
    Elem ap, a1, a0;  ///< f = ap x^p - a1 x - a0

    const Field& field() const { return ap.field(); }
    Coeff p() const { return field().characteristic(); }
    Poly poly() const {
        const Field& F = field();
        std::vector<Elem> c(p() + 1, F.zero());
        c[0] = -a0;
        c[1] = -a1;
        c[p()] = ap;
        return Poly(F, c);
    }
    /// x^p - (a1/ap) x - (a0/ap)
    Poly monic_form() const { return poly().monic(); }
};

/// Reads f as a_p x^p - a_1 x - a_0; anything else is MalformedShape.
inline ShiftedLinearized as_shifted_linearized(const Poly& f) {
    const Field& F = f.field();
    const Coeff p = F.characteristic();
    if (f.degree() != static_cast<int>(p)) fail(Errc::MalformedShape, "degree must equal the characteristic");
    for (std::size_t i = 2; i < p; ++i)
        if (!f.coeff(i).is_zero()) fail(Errc::MalformedShape, "only x^p, x and 1 may appear");
    if (f.coeff(1).is_zero()) fail(Errc::MalformedShape, "the x coefficient must be nonzero");
    return {f.coeff(p), -f.coeff(1), -f.coeff(0)};
}

inline bool is_shifted_linearized(const Poly& f) {
    const Coeff p = f.field().characteristic();
    if (f.degree() != static_cast<int>(p) || f.coeff(1).is_zero()) return false;
    for (std::size_t i = 2; i < p; ++i)
        if (!f.coeff(i).is_zero()) return false;
    return true;
}

struct CohenWitness {
    std::optional<Elem> A;  ///< A^(p-1) = a1/ap
    std::optional<Elem> trace_value;  ///< Tr_{F_q/F_p}((a0/ap) / A^p)
};

struct CohenResult {
    bool irreducible = false;
    CohenWitness witness;
};

inline CohenResult cohen_test(const ShiftedLinearized& f) {
    const Field& F = f.field();
    const Coeff p = f.p();
    const Elem c1 = f.a1 / f.ap, c0 = f.a0 / f.ap;
    CohenResult out;
    if (!c1.pow((F.order() - 1) / (p - 1)).is_one()) return out;
    // roots of x^(p-1) - c1 in F_q; the smallest one is used
    const auto roots = roots_in_field(Poly::monomial(F.one(), p - 1) - c1);
    if (roots.empty()) fail(Errc::NoWitnessA, "power test and root search disagree");
    Elem A = roots.front();
    for (const auto& r : roots)
        if (canonical_less(r, A)) A = r;
    out.witness.A = A;
    out.witness.trace_value = trace(c0 / A.pow(static_cast<std::int64_t>(p)), F.prime_field());
    out.irreducible = !out.witness.trace_value->is_zero();
    return out;
}

/// The iterate that is always reducible: 2 for p >= 3, 3 for p = 2.
inline unsigned linearized_reducible_iterate(Coeff p) { return p == 2 ? 3 : 2; }

/// Verdict with the least reducible iterate, found by the oracle at or below that iterate.
inline Verdict linearized_verdict(const ShiftedLinearized& f) {
    const unsigned bound = linearized_reducible_iterate(f.p());
    if (!cohen_test(f).irreducible) return Verdict::reducible_at(1, "cohen_reducible");
    const Poly g = f.poly();
    Poly it = g;
    for (unsigned n = 2; n < bound; ++n) {
        it = compose(g, it);
        if (!is_irreducible(it)) return Verdict::reducible_at(n, "oracle_factor");
    }
    return Verdict::reducible_at(bound, "linearized_iterate");
}

struct LinearizedSweep {
    std::string field;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t total = 0;
    std::uint64_t reducible_at_2 = 0;
    std::optional<std::uint64_t> reducible_at_3;  ///< counted for p = 2
    std::vector<Poly> irreducible_at_2;  ///< p = 2 polynomials whose second iterate stays irreducible
    std::vector<Poly> counterexamples;
};

inline constexpr std::uint64_t kLinearizedExhaustiveLimit = 100000;
inline constexpr std::uint64_t kLinearizedSamples = 10000;

/// Checks that bound on every triple (ap, a1, a0) with ap a1 != 0, or on a seeded sample when there are too many.
inline LinearizedSweep verify_theorem52(const Field& F, std::uint64_t seed = kDefaultSplitSeed) {
    const Coeff p = F.characteristic();
    const BigInt q = F.order();
    LinearizedSweep out;
    out.seed = seed;
    out.field = "F_" + std::to_string(p) + "^" + std::to_string(F.degree());
    out.exhaustive = (q - 1) * (q - 1) * q <= kLinearizedExhaustiveLimit;
    if (p == 2) out.reducible_at_3 = 0;

    auto check = [&](const Elem& ap, const Elem& a1, const Elem& a0) {
        const ShiftedLinearized f{ap, a1, a0};
        const Poly g = f.poly();
        const Poly g2 = compose(g, g);
        ++out.total;
        const bool red2 = !is_irreducible(g2);
        if (red2) ++out.reducible_at_2;
        if (p == 2) {
            if (!red2) out.irreducible_at_2.push_back(g);
            const bool red3 = red2 || !is_irreducible(compose(g, g2));
            if (red3) ++*out.reducible_at_3;
            else out.counterexamples.push_back(g);
        } else if (!red2) {
            out.counterexamples.push_back(g);
        }
    };

    if (out.exhaustive) {
        const auto els = F.elements();
        for (const auto& ap : els) {
            if (ap.is_zero()) continue;
            for (const auto& a1 : els) {
                if (a1.is_zero()) continue;
                for (const auto& a0 : els) check(ap, a1, a0);
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        auto nonzero = [&] {
            while (true) {
                Elem e = F.random(rng);
                if (!e.is_zero()) return e;
            }
        };
        for (std::uint64_t i = 0; i < kLinearizedSamples; ++i) {
            const Elem ap = nonzero(), a1 = nonzero(), a0 = F.random(rng);
            check(ap, a1, a0);
        }
    }
    return out;
}

struct TraceObstruction {
    Field extension;  ///< F(gamma) for p >= 3, F(gamma') with gamma' a root of f^2 for p = 2
    Elem gamma;
    Elem A;
    Elem relative_trace;  ///< down to F_q
    Elem trace;           ///< down to F_p
};

/// Tr(gamma / (ap A^p)) for a root gamma of f (of f^2 when p = 2). Irreducibility of the next iterate would
/// force this to be nonzero, while the vanishing x^(p-1) coefficient of the minimal polynomial forces zero.
inline TraceObstruction trace_obstruction(const ShiftedLinearized& f) {
    const Field& F = f.field();
    const Coeff p = f.p();
    const CohenResult c = cohen_test(f);
    if (!c.irreducible) fail(Errc::ReducibleInput, "f is reducible");
    if (!c.witness.A) fail(Errc::NoWitnessA, "no A with A^(p-1) = a1/ap");
    Poly m = f.poly();
    if (p == 2) {
        m = compose(m, m);
        if (!is_irreducible(m)) fail(Errc::ReducibleInput, "f^2 is reducible");
    }
    TraceObstruction out;
    out.extension = F.extend_unchecked(m.monic().coefficients());
    out.gamma = out.extension.generator();
    out.A = *c.witness.A;
    const Elem x = out.gamma / (f.ap * out.A.pow(static_cast<std::int64_t>(p))).lift(out.extension);
    out.relative_trace = trace(x, F);
    out.trace = trace(x, F.prime_field());
    return out;
}

}  // namespace dynir

#endif
