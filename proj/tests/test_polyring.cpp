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

#include <gtest/gtest.h>

#include <dynir/factor.hpp>

#include "gen.hpp"
#include "oracle.hpp"

using namespace dynir;

namespace {

Poly P(const Field& F, std::vector<std::int64_t> low_first) { return Poly::from_ints(F, low_first); }

/// Determinant over the oracle field by elimination.
int det(const oracle::GF& F, std::vector<oracle::P> M) {
    const int n = static_cast<int>(M.size());
    int d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (M[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            d = F.neg(d);
        }
        d = F.mul(d, M[c][c]);
        const int iv = F.inv(M[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (!M[r][c]) continue;
            const int f = F.mul(M[r][c], iv);
            for (int j = c; j < n; ++j) M[r][j] = F.sub(M[r][j], F.mul(f, M[c][j]));
        }
    }
    return d;
}

/// Res(f, g) as the Sylvester determinant.
int sylvester(const oracle::GF& F, const oracle::P& f, const oracle::P& g) {
    const int m = oracle::deg(f), n = oracle::deg(g);
    const int N = m + n;
    if (N == 0) return 1;
    std::vector<oracle::P> M(N, oracle::P(N, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = g[n - j];
    return det(F, M);
}

/// Every polynomial of degree d (leading coefficient nonzero) over a prime field, or only the monic ones.
std::vector<Poly> all_of_degree(const Field& F, int d, bool monic) {
    std::vector<Poly> out;
    const auto p = static_cast<std::int64_t>(F.characteristic());
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::int64_t lead = 1; lead < (monic ? 2 : p); ++lead)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::vector<std::int64_t> c;
            std::int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                c.push_back(t % p);
                t /= p;
            }
            c.push_back(lead);
            out.push_back(P(F, c));
        }
    return out;
}

Poly expand(const FactorList& fl) {
    Poly acc = Poly::constant(fl.unit);
    for (const auto& [g, m] : fl.factors)
        for (unsigned i = 0; i < m; ++i) acc = acc * g;
    return acc;
}

}  // namespace

TEST(Compose, Examples) {
    const Field F = Field::prime(7);
    const Poly f = P(F, {3, 0, 0, 1});
    EXPECT_EQ(iterate(f, 2)(F.zero()), F.from_int(2));
    EXPECT_EQ(compose(f, Poly::x(F)), f);
    EXPECT_EQ(iterate(P(F, {2, 6, 0, 1}), 2).degree(), 9);
    EXPECT_EQ(iterate(f, 0), Poly::x(F));
}

TEST(Compose, DegreeMultiplies) {
    gen::Rng rng(10);
    for (const Field& F : {Field::prime(5), build_field(3, {2}), build_field(2, {3})}) {
        for (int i = 0; i < 100; ++i) {
            const Poly g = rng.poly(F, 1 + rng.below(4)), f = rng.poly(F, 1 + rng.below(4));
            EXPECT_EQ(compose(g, f).degree(), g.degree() * f.degree());
        }
    }
}

TEST(Compose, IterateEvaluatesAsRepeatedEvaluation) {
    gen::Rng rng(11);
    const Field F = build_field(5, {2});
    for (int i = 0; i < 50; ++i) {
        const Poly f = rng.poly(F, 2 + rng.below(2));
        const Elem x = rng.elem(F);
        Elem y = x;
        for (int n = 1; n <= 3; ++n) {
            y = f(y);
            EXPECT_EQ(iterate(f, n)(x), y);
        }
    }
}

TEST(Ring, Axioms) {
    gen::Rng rng(12);
    for (const Field& F : {Field::prime(7), build_field(3, {2, 2}), build_field(2, {4})}) {
        for (int i = 0; i < 100; ++i) {
            const Poly f = rng.poly(F, rng.below(6)), g = rng.poly(F, rng.below(6)), h = rng.poly(F, rng.below(6));
            EXPECT_EQ((f * g) * h, f * (g * h));
            EXPECT_EQ(f * (g + h), f * g + f * h);
            EXPECT_EQ(f * g, g * f);
            EXPECT_EQ(f + g - g, f);
            const auto [q, r] = divrem(f * g + h, g);
            EXPECT_EQ(q * g + r, f * g + h);
            EXPECT_LT(r.degree(), g.degree());
        }
    }
}

TEST(AffineConjugate, QuadraticShift) {
    const Field F = Field::prime(11);
    for (int a = 1; a < 11; ++a)
        for (int b = 0; b < 11; ++b)
            for (int c = 0; c < 11; c += 3) {
                const Elem A = F.from_int(a), B = F.from_int(b), C = F.from_int(c);
                const Poly f(F, {C, B, A});
                const Elem s = B / (F.from_int(2) * A);
                const Poly h = affine_conjugate(f, F.one(), s);
                EXPECT_EQ(h, Poly(F, {-(B * B) / (F.from_int(4) * A) + C + s, F.zero(), A}));
            }
}

TEST(AffineConjugate, Identity) {
    gen::Rng rng(13);
    const Field F = build_field(3, {2});
    for (int i = 0; i < 20; ++i) {
        const Poly f = rng.poly(F, 3);
        EXPECT_EQ(affine_conjugate(f, F.one(), F.zero()), f);
    }
}

TEST(AffineConjugate, CubicShiftKillsQuadraticTerm) {
    const Field F = Field::prime(7);
    for (const auto& f : all_of_degree(F, 3, false)) {
        const Elem s = f.coeff(2) / (F.from_int(3) * f.coeff(3));
        const Poly h = affine_conjugate(f, F.one(), s);
        EXPECT_TRUE(h.coeff(2).is_zero()) << f.to_string();
        EXPECT_EQ(h.coeff(3), f.coeff(3));
    }
}

TEST(AffineConjugate, ZeroScale) {
    const Field F = Field::prime(5);
    EXPECT_THROW(affine_conjugate(P(F, {1, 0, 1}), F.zero(), F.one()), Error);
}

TEST(AffineConjugate, IterateIrreducibilityInvariant) {
    // (phi f phi^-1)^n(x) - alpha = c f^n((x - alpha)/c)
    gen::Rng rng(14);
    for (const Field& F : {Field::prime(7), Field::prime(11)}) {
        for (int i = 0; i < 40; ++i) {
            const Poly f = rng.poly(F, 2 + rng.below(2));
            const Elem c = rng.nonzero(F), alpha = rng.elem(F);
            const Poly g = affine_conjugate(f, c, alpha);
            for (unsigned n = 1; n <= 3; ++n) {
                const Poly fn = iterate(f, n);
                if (fn.degree() > 30) break;
                EXPECT_EQ(is_irreducible(fn), is_irreducible(iterate(g, n) - alpha)) << f.to_string();
            }
        }
    }
}

TEST(Resultant, Examples) {
    const Field F = Field::prime(19);
    const Poly f = P(F, {1, 1, 0, 1});
    EXPECT_EQ(-resultant(f, P(F, {1, 0, 3})), F.from_int(7));
    const Elem u = F.from_int(5);
    EXPECT_EQ(resultant(f, Poly::constant(u)), u.pow(3));
    for (int v = 0; v < 19; ++v) {
        const Elem x = F.from_int(v);
        EXPECT_EQ(resultant(Poly::x(F) - x, f), f(x));
    }
}

TEST(Resultant, MatchesSylvesterAndSwaps) {
    gen::Rng rng(15);
    for (const Field& F : {Field::prime(7), Field::prime(13), build_field(3, {2}), build_field(2, {3})}) {
        const oracle::GF O = oracle::matching(F);
        for (int i = 0; i < 150; ++i) {
            const Poly f = rng.poly(F, 1 + rng.below(6)), g = rng.poly(F, 1 + rng.below(6));
            const Elem r = resultant(f, g);
            EXPECT_EQ(oracle::from_lib(O, r), sylvester(O, oracle::from_lib(O, f), oracle::from_lib(O, g)));
            const int mn = f.degree() * g.degree();
            EXPECT_EQ(r, (mn % 2 ? -F.one() : F.one()) * resultant(g, f));
        }
    }
}

TEST(Discriminant, Examples) {
    const Field F7 = Field::prime(7), F19 = Field::prime(19);
    EXPECT_EQ(discriminant(P(F7, {2, 6, 0, 1})), F7.from_int(1));
    EXPECT_EQ(discriminant(P(F7, {-1, 0, 1})), F7.from_int(4));
    EXPECT_EQ(discriminant(P(F19, {1, 1, 0, 1})), F19.from_int(7));
}

TEST(Discriminant, DepressedCubicFormulaExhaustive) {
    const Field F = Field::prime(7);
    for (int a1 = 0; a1 < 7; ++a1)
        for (int a0 = 0; a0 < 7; ++a0) {
            const Elem A1 = F.from_int(a1), A0 = F.from_int(a0);
            EXPECT_EQ(discriminant(Poly(F, {A0, A1, F.zero(), F.one()})),
                      -(F.from_int(4) * A1 * A1 * A1) - F.from_int(27) * A0 * A0);
        }
}

TEST(Discriminant, SquareClassDecidesRootCountParity) {
    // over F_p, p odd: a squarefree cubic has Disc a square iff it has 0 or 3 roots
    for (int p : {5, 7, 11, 13}) {
        const Field F = Field::prime(p);
        for (const auto& f : all_of_degree(F, 3, true)) {
            const Elem d = discriminant(f);
            if (d.is_zero()) continue;
            const auto n = roots_in_field(f).size();
            EXPECT_EQ(d.pow((p - 1) / 2).is_one(), n != 1) << f.to_string();
        }
    }
}

TEST(Irreducible, Examples) {
    const Field F7 = Field::prime(7), F19 = Field::prime(19);
    EXPECT_TRUE(is_irreducible(P(F7, {2, 6, 0, 1})));
    EXPECT_FALSE(is_irreducible(P(F7, {1, 0, 0, 1})));
    EXPECT_FALSE(is_irreducible(iterate(P(F19, {1, 1, 0, 1}), 3)));
    EXPECT_TRUE(is_irreducible(iterate(P(F19, {1, 1, 0, 1}), 2)));
}

TEST(Irreducible, AgreesWithFactorOnMonicCubics) {
    for (int p : {5, 7}) {
        const Field F = Field::prime(p);
        const oracle::GF O = oracle::GF::prime(p);
        int irreducible = 0;
        for (const auto& f : all_of_degree(F, 3, true)) {
            const FactorList fl = factor(f);
            const bool single = fl.factors.size() == 1 && fl.factors[0].second == 1 && fl.factors[0].first.degree() == 3;
            EXPECT_EQ(is_irreducible(f), single) << f.to_string();
            EXPECT_EQ(is_irreducible(f), oracle::irreducible(O, oracle::from_lib(O, f))) << f.to_string();
            irreducible += single;
        }
        EXPECT_EQ(irreducible, (p * p * p - p) / 3);  // Gauss count
    }
}

TEST(Irreducible, AgreesWithBerlekampOracle) {
    gen::Rng rng(16);
    for (const Field& F : {Field::prime(2), Field::prime(3), Field::prime(7), build_field(2, {2}), build_field(3, {2}),
                           build_field(5, {2}), build_field(2, {3})}) {
        const oracle::GF O = oracle::matching(F);
        for (int i = 0; i < 300; ++i) {
            const Poly f = rng.poly(F, 1 + rng.below(12));
            EXPECT_EQ(is_irreducible(f), oracle::irreducible(O, oracle::from_lib(O, f))) << f.to_string();
        }
    }
}

TEST(Irreducible, IteratesAgreeWithBerlekampOracle) {
    const Field F = Field::prime(7);
    const oracle::GF O = oracle::GF::prime(7);
    for (const auto& f : {P(F, {2, 6, 0, 1}), P(F, {3, 0, 0, 1}), P(F, {1, 4, 0, 1}), P(F, {1, 2, 0, 1})})
        for (unsigned n = 1; n <= 4; ++n) {
            const Poly it = iterate(f, n);
            EXPECT_EQ(is_irreducible(it), oracle::irreducible(O, oracle::from_lib(O, it))) << f.to_string() << " n=" << n;
        }
}

TEST(Factor, Examples) {
    const Field F = Field::prime(7);
    // x^2 - x + 1 has discriminant -3 = 2^2 over F_7, so x^3 + 1 = (x + 1)(x + 2)(x + 4)
    const FactorList fl = factor(P(F, {1, 0, 0, 1}));
    EXPECT_TRUE(fl.unit.is_one());
    ASSERT_EQ(fl.factors.size(), 3u);
    EXPECT_EQ(fl.factors[0].first, P(F, {1, 1}));
    EXPECT_EQ(fl.factors[1].first, P(F, {2, 1}));
    EXPECT_EQ(fl.factors[2].first, P(F, {4, 1}));
        EXPECT_EQ(fl.factors[0].first * fl.factors[1].first * fl.factors[2].first, P(F, {1, 0, 0, 1}));
    const FactorList one = factor(P(F, {2, 6, 0, 1}));
    ASSERT_EQ(one.factors.size(), 1u);
    EXPECT_EQ(one.factors[0].second, 1u);
    EXPECT_GE(factor(iterate(P(Field::prime(3), {1, 2, 0, 1}), 2)).count(), 2u);
}

TEST(Factor, ProductReconstructsInput) {
    gen::Rng rng(17);
    for (const Field& F : {Field::prime(3), Field::prime(5), build_field(2, {2}), build_field(3, {2}), build_field(2, {2, 2})}) {
        for (int i = 0; i < 100; ++i) {
            Poly f = rng.poly(F, 1 + rng.below(10));
            if (rng.below(3) == 0) f = f * f * rng.poly(F, 1);  // repeated factors
            const FactorList fl = factor(f, rng.next());
            EXPECT_EQ(expand(fl), f);
            for (std::size_t a = 0; a < fl.factors.size(); ++a) {
                EXPECT_TRUE(fl.factors[a].first.is_monic());
                EXPECT_TRUE(is_irreducible(fl.factors[a].first));
                for (std::size_t b = a + 1; b < fl.factors.size(); ++b) EXPECT_FALSE(fl.factors[a].first == fl.factors[b].first);
            }
        }
    }
}

TEST(Factor, SeedDoesNotChangeResult) {
    const Field F = Field::prime(5);
    const Poly f = iterate(P(F, {2, 1, 0, 1}), 3);
    const FactorList a = factor(f, 1), b = factor(f, 99);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].first, b.factors[i].first);
}

TEST(Roots, Examples) {
    const Field F7 = Field::prime(7);
    EXPECT_TRUE(roots_in_field(P(F7, {-5, 0, 1})).empty());
    const auto r = roots_in_field(P(F7, {-4, 1}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0], F7.from_int(4));
    const Field F = build_field(7, {3});
    const auto three = roots_in_field(P(F7, {2, 6, 0, 1}).lift(F));
    EXPECT_EQ(three.size(), 3u);
}

TEST(Roots, MatchEnumeration) {
    gen::Rng rng(18);
    for (const Field& F : {Field::prime(11), build_field(3, {2}), build_field(2, {4})}) {
        const oracle::GF O = oracle::matching(F);
        for (int i = 0; i < 100; ++i) {
            const Poly f = rng.poly(F, 1 + rng.below(6));
            std::vector<int> got;
            for (const auto& r : roots_in_field(f)) got.push_back(oracle::from_lib(O, r));
            std::sort(got.begin(), got.end());
            // expected: each root repeated by its multiplicity
            std::vector<int> want;
            for (int r : oracle::roots(O, oracle::from_lib(O, f))) {
                oracle::P rest = oracle::from_lib(O, f);
                const oracle::P lin{O.neg(r), 1};
                while (!rest.empty() && oracle::prem(O, rest, lin).empty()) {
                    want.push_back(r);
                    // rest /= (x - r) by synthetic division
                    oracle::P q(rest.size() - 1);
                    int carry = 0;
                    for (std::size_t k = rest.size(); k-- > 1;) {
                        carry = O.add(rest[k], O.mul(carry, r));
                        q[k - 1] = carry;
                    }
                    rest = q;
                }
            }
            std::sort(want.begin(), want.end());
            EXPECT_EQ(got, want);
        }
    }
}

TEST(Capelli, Examples) {
    const Field F7 = Field::prime(7), F19 = Field::prime(19);
    const Poly h = P(F7, {2, 6, 0, 1});
    const CapelliCheck c = capelli_sides(h, h);
    EXPECT_TRUE(c.consistent());
    EXPECT_TRUE(c.composite_irreducible);
    EXPECT_TRUE(capelli_consistency(P(F7, {-3, 1}), h));
    const Poly g = P(F19, {1, 1, 0, 1});
    const CapelliCheck d = capelli_sides(iterate(g, 2), g);
    EXPECT_TRUE(d.consistent());
    EXPECT_FALSE(d.composite_irreducible);
    EXPECT_FALSE(d.fiber_irreducible);
}

TEST(Capelli, ReducibleG) {
    const Field F = Field::prime(5);
    EXPECT_THROW(capelli_sides(P(F, {0, 0, 1}), P(F, {1, 1, 1})), Error);
}

TEST(Capelli, ExhaustiveOverF5) {
    const Field F = Field::prime(5);
    std::vector<Poly> gs;
    for (int d : {2, 3})
        for (const auto& g : all_of_degree(F, d, true))
            if (is_irreducible(g)) gs.push_back(g);
    ASSERT_EQ(gs.size(), 10u + 40u);
    int both_true = 0;
    for (const auto& g : gs)
        for (const auto& f : all_of_degree(F, 3, false)) {
            const CapelliCheck c = capelli_sides(g, f);
            ASSERT_TRUE(c.consistent()) << g.to_string() << " o " << f.to_string();
            both_true += c.composite_irreducible;
        }
    EXPECT_GT(both_true, 0);
}
