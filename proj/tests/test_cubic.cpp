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

#include <dynir/cubic.hpp>

#include "gen.hpp"
#include "oracle.hpp"

using namespace dynir;

namespace {

Poly P(const Field& F, std::vector<std::int64_t> low_first) { return Poly::from_ints(F, low_first); }

std::vector<std::string> strs(const std::vector<Elem>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

/// Irreducibility of iterate(f, n) - beta for n = 1..n_max by the Berlekamp oracle.
std::vector<bool> oracle_flags(const Poly& f, const Elem& beta, unsigned n_max) {
    const oracle::GF O = oracle::matching(f.field());
    std::vector<bool> out;
    const oracle::P g = oracle::from_lib(O, f);
    oracle::P it{0, 1};
    for (unsigned n = 1; n <= n_max; ++n) {
        it = oracle::pcompose(O, g, it);
        out.push_back(oracle::irreducible(O, oracle::psub(O, it, oracle::P{oracle::from_lib(O, beta)})));
    }
    return out;
}

std::optional<unsigned> least_reducible(const std::vector<bool>& flags) {
    for (unsigned n = 1; n <= flags.size(); ++n)
        if (!flags[n - 1]) return n;
    return std::nullopt;
}

/// Every monic x^3 + b1 x + b0 other than x^3.
std::vector<Poly> monic_depressed(const Field& F) {
    std::vector<Poly> out;
    for (const auto& b1 : F.elements())
        for (const auto& b0 : F.elements())
            if (!(b1.is_zero() && b0.is_zero())) out.emplace_back(F, std::vector<Elem>{b0, b1, F.zero(), F.one()});
    return out;
}

CubicOptions options(unsigned n_max, unsigned oracle_max) {
    CubicOptions o;
    o.n_max = n_max;
    o.oracle_max = oracle_max;
    return o;
}

/// The recursive verdict must name exactly the least reducible iterate among those the oracle covers.
::testing::AssertionResult consistent(const Verdict& v, const std::vector<bool>& flags) {
    const auto first = least_reducible(flags);
    if (v.reducible()) {
        if (*v.iterate <= flags.size() && first != v.iterate)
            return ::testing::AssertionFailure() << v.to_string() << " vs oracle " << (first ? std::to_string(*first) : "none");
        if (*v.iterate > flags.size() && first) return ::testing::AssertionFailure() << v.to_string() << " vs oracle " << *first;
        return ::testing::AssertionSuccess();
    }
    const unsigned through = v.iterate.value_or(static_cast<unsigned>(flags.size()));
    if (first && *first <= through) return ::testing::AssertionFailure() << v.to_string() << " but iterate " << *first << " factors";
    return ::testing::AssertionSuccess();
}

}  // namespace

TEST(Depress, AlreadyDepressed) {
    const Field F = Field::prime(7);
    const DepressedCubic h = depress(P(F, {2, 6, 0, 1}));
    EXPECT_EQ(h.poly(), P(F, {2, 6, 0, 1}));
    EXPECT_TRUE(h.beta0.is_zero());
}

TEST(Depress, ChuFormAlphaOne) {
    // f = x^3 + 3x^2 + 4: f(x - 1) + 1 = x^3 - 3x + 0, beta0 = 3/3 = 1
    const Field F = Field::prime(7);
    const DepressedCubic h = depress(P(F, {4, 0, 3, 1}));
    EXPECT_EQ(h.b1, F.from_int(-3));
    EXPECT_TRUE(h.b0.is_zero());
    EXPECT_EQ(h.beta0, F.one());
    EXPECT_EQ(compose(P(F, {4, 0, 3, 1}), P(F, {-1, 1})) + F.one(), h.poly());
}

TEST(Depress, LeadingCoefficientKept) {
    const Field F = Field::prime(7);
    EXPECT_EQ(depress(P(F, {1, 2, 3, 2})).b3, F.from_int(2));
}

TEST(Depress, IdentityExhaustiveOverF5) {
    const Field F = Field::prime(5);
    const Elem three = F.from_int(3);
    for (int a3 = 1; a3 <= 2; ++a3)
        for (const auto& a2 : F.elements())
            for (const auto& a1 : F.elements())
                for (const auto& a0 : F.elements()) {
                    const Poly f(F, {a0, a1, a2, F.from_int(a3)});
                    const DepressedCubic h = depress(f);
                    const Elem A3 = F.from_int(a3);
                    EXPECT_TRUE(h.poly().coeff(2).is_zero());
                    EXPECT_EQ(h.b3, A3);
                    EXPECT_EQ(h.b1, a1 - a2 * a2 / (three * A3));
                    EXPECT_EQ(h.beta0, a2 / (three * A3));
                    // expand back: f(x) = h(x + beta0) - beta0
                    EXPECT_EQ(compose(h.poly(), Poly::x(F) + h.beta0) - h.beta0, f);
                    ASSERT_TRUE(h.source.has_value());
                    EXPECT_EQ(*h.source, f);
                }
}

TEST(Depress, Errors) {
    EXPECT_THROW(depress(P(Field::prime(3), {1, 2, 0, 1})), Error);
    EXPECT_THROW(depress(P(Field::prime(7), {1, 2, 1})), Error);
}

TEST(Dickson, F7Example) {
    const Field F = Field::prime(7);
    const DicksonResult d = dickson_test(F.from_int(6), F.from_int(2));
    EXPECT_EQ(d.disc, F.one());
    EXPECT_TRUE(d.disc_nonzero_square);
    EXPECT_EQ(strs(d.mu), (std::vector<std::string>{"3", "4"}));
    EXPECT_EQ(strs(d.values), (std::vector<std::string>{"2", "3"}));
    for (const auto& t : d.cube_tests) EXPECT_FALSE(t.is_rth_power);
    EXPECT_TRUE(d.irreducible);
}

TEST(Dickson, F19Example) {
    const Field F = Field::prime(19);
    const DicksonResult d = dickson_test(F.one(), F.one());
    EXPECT_EQ(d.disc, F.from_int(7));
    EXPECT_EQ(strs(d.mu), (std::vector<std::string>{"16", "3"}));
    EXPECT_EQ(strs(d.values), (std::vector<std::string>{"15", "3"}));
    EXPECT_TRUE(d.irreducible);
}

TEST(Dickson, PureCube) {
    const Field F = Field::prime(7);
    const DicksonResult d = dickson_test(F.zero(), F.from_int(-3));
    ASSERT_EQ(d.values.size(), 1u);
    EXPECT_EQ(d.values[0], F.from_int(3));
    EXPECT_TRUE(d.irreducible);
    EXPECT_TRUE(is_irreducible(P(F, {-3, 0, 0, 1})));
}

TEST(Dickson, BothZero) {
    const Field F = Field::prime(7);
    EXPECT_THROW(dickson_test(F.zero(), F.zero()), Error);
}

TEST(Dickson, AgreesWithOracleExhaustive) {
    for (int p : {7, 13, 19, 5, 11, 17}) {
        const Field F = Field::prime(p);
        const oracle::GF O = oracle::GF::prime(p);
        for (const auto& h : monic_depressed(F)) {
            const DicksonResult d = dickson_test(h.coeff(1), h.coeff(0));
            EXPECT_EQ(d.irreducible, oracle::irreducible(O, oracle::from_lib(O, h))) << h.to_string() << " over F_" << p;
            // both branches agree
            for (const auto& t : d.cube_tests) EXPECT_EQ(t.is_rth_power, d.cube_tests.front().is_rth_power);
        }
    }
}

TEST(Dickson, AgreesWithOracleOverExtensions) {
    for (auto [p, s] : std::vector<std::pair<int, std::size_t>>{{5, 2}, {7, 2}}) {
        const Field F = build_field(p, {s});
        const oracle::GF O = oracle::matching(F);
        for (const auto& h : monic_depressed(F))
            EXPECT_EQ(dickson_test(h.coeff(1), h.coeff(0)).irreducible, oracle::irreducible(O, oracle::from_lib(O, h)))
                << h.to_string();
    }
}

TEST(Condition1, F7Example) {
    const Field F = Field::prime(7);
    const Condition1Result c = condition1_sequence(depress(P(F, {2, 6, 0, 1})), 10);
    EXPECT_EQ(strs(std::vector<Elem>(c.values.begin(), c.values.begin() + 3)), (std::vector<std::string>{"1", "2", "4"}));
    EXPECT_EQ(c.values[0], F.from_int(4));
    EXPECT_EQ(c.values[1], F.from_int(2));
    EXPECT_EQ(c.values[2], F.from_int(1));
    EXPECT_TRUE(c.all_square);
    EXPECT_TRUE(c.decided);
    ASSERT_TRUE(c.cycle.has_value());
    const std::vector<int> expect{4, 2, 1, 2, 1, 2, 1, 2, 1, 2};
    for (unsigned k = 1; k <= expect.size(); ++k) EXPECT_EQ(*c.value_at(k), F.from_int(expect[k - 1])) << k;
}

TEST(Condition1, F19Example) {
    const Field F = Field::prime(19);
    const Condition1Result c = condition1_sequence(depress(P(F, {1, 1, 0, 1})), 10);
    ASSERT_EQ(c.values.size(), 3u);
    EXPECT_EQ(c.values[0], F.from_int(5));
    EXPECT_EQ(c.values[1], F.from_int(1));
    EXPECT_EQ(c.values[2], F.from_int(8));
    EXPECT_FALSE(c.all_square);
    EXPECT_EQ(c.first_failure, 3u);
}

TEST(Condition1, ZeroValueFails) {
    // h = x^3 - 3x + 3 has critical points 1, -1 and fixes 1; with beta0 = h(1) = 1 the first value vanishes
    const Field F = Field::prime(7);
    const DepressedCubic h = make_depressed(P(F, {3, -3, 0, 1}), F.one());
    const Condition1Result c = condition1_sequence(h, 5);
    ASSERT_FALSE(c.values.empty());
    EXPECT_TRUE(c.values[0].is_zero());
    EXPECT_EQ(c.first_failure, 1u);
    const CubicReport r = recursive_test(h, options(5, 2));
    EXPECT_EQ(r.verdict.reason, "condition1_zero");
    EXPECT_EQ(r.verdict.iterate, 1u);
}

TEST(Condition1, MatchesCriticalValuesDirectly) {
    // -3 (h^k(g1) - beta)(h^k(g2) - beta) computed with explicit critical points in F_q^2
    gen::Rng rng(30);
    for (int p : {7, 11, 13}) {
        const Field F = Field::prime(p);
        for (int i = 0; i < 30; ++i) {
            const Poly h(F, {rng.elem(F), rng.nonzero(F), F.zero(), rng.nonzero(F)});
            const DepressedCubic d = make_depressed(h, rng.elem(F));
            const Poly dh = h.derivative();
            std::vector<Elem> crit = roots_in_field(dh);
            Field E = F;
            if (crit.empty()) {
                E = extend_field(F, dh.monic());
                crit = {E.generator(), frobenius(E.generator(), F)};
            }
            ASSERT_EQ(crit.size(), 2u);
            const Poly hE = h.lift(E);
            const Condition1Result c = condition1_sequence(d, 6);
            Elem u1 = crit[0], u2 = crit[1];
            for (std::size_t k = 1; k <= c.values.size(); ++k) {
                u1 = hE(u1);
                u2 = hE(u2);
                const Elem b = d.beta0.lift(E);
                EXPECT_EQ(c.values[k - 1].lift(E), E.from_int(-3) * (u1 - b) * (u2 - b)) << h.to_string() << " k=" << k;
            }
        }
    }
}

TEST(Condition2, F7Norms) {
    const Field F = Field::prime(7);
    CubicTower t(depress(P(F, {2, 6, 0, 1})));
    EXPECT_FALSE(t.base_extended());
    const std::vector<int> canonical{2, 4, 2, 2, 1}, alternate{3, 5, 3, 3, 6};
    for (unsigned n = 0; n <= 4; ++n) {
        const Condition2Result c = condition2_check(t, n);
        EXPECT_EQ(c.norm, F.from_int(canonical[n])) << n;
        EXPECT_EQ(c.alt_norm, F.from_int(alternate[n])) << n;
        EXPECT_EQ(c.cube, c.alt_cube) << n;
        EXPECT_EQ(c.passes(), n < 4);
        EXPECT_EQ(F.from_int(81) * c.mu * c.mu, c.disc);
        EXPECT_EQ(t.level(n).order(), boost::multiprecision::pow(BigInt(7), static_cast<unsigned>(std::pow(3, n))));
    }
    // n = 1: 4 on this branch and 5 on the other, both non-cubes
    const Condition2Result one = condition2_check(t, 1);
    EXPECT_EQ(strs({one.norm, one.alt_norm}), (std::vector<std::string>{"4", "5"}));
}

TEST(Condition2, F19LevelZero) {
    const Field F = Field::prime(19);
    CubicTower t(depress(P(F, {1, 1, 0, 1})));
    const Condition2Result c = condition2_check(t, 0);
    EXPECT_TRUE(c.passes());
    EXPECT_EQ(strs({c.value, c.alt_value}), (std::vector<std::string>{"15", "3"}));
}

TEST(Condition2, ExtendedBaseWhenMinusThreeIsNotASquare) {
    const Field F = Field::prime(5);
    CubicTower t(make_depressed(P(F, {1, 1, 0, 1}), F.zero()));
    EXPECT_TRUE(t.base_extended());
    EXPECT_EQ(t.base().order(), 25);
    EXPECT_EQ(t.sqrt_minus3() * t.sqrt_minus3(), t.base().from_int(-3));
}

TEST(Recursive, F7Example) {
    const Field F = Field::prime(7);
    const CubicReport r = recursive_test(depress(P(F, {2, 6, 0, 1})), options(10, 5));
    EXPECT_TRUE(r.verdict.reducible());
    EXPECT_EQ(r.verdict.iterate, 5u);
    EXPECT_EQ(r.verdict.reason, "condition2_cube");
    ASSERT_EQ(r.oracle.size(), 5u);
    for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(r.oracle[k - 1], std::make_pair(k, k < 5));
}

TEST(Recursive, F19Example) {
    const Field F = Field::prime(19);
    const CubicReport r = recursive_test(depress(P(F, {1, 1, 0, 1})), options(10, 3));
    EXPECT_EQ(r.verdict.to_string(), "ReducibleAtIterate(3)");
    EXPECT_EQ(r.verdict.reason, "condition1_nonsquare");
}

TEST(Recursive, F7SecondExample) {
    const Field F = Field::prime(7);
    const Poly h = P(F, {1, 2, 0, 1});
    EXPECT_EQ(discriminant(h), F.from_int(4));
    const CubicReport r = recursive_test(depress(h), options(3, 4));
    EXPECT_TRUE(consistent(r.verdict, oracle_flags(h, F.zero(), 4)));
}

TEST(Recursive, AgreesWithOracleExhaustive) {
    // every level through n = 2 (iterates up to 3) on all monic depressed cubics, and over several fields
    for (auto [p, s] : std::vector<std::pair<int, std::size_t>>{{7, 1}, {11, 1}, {13, 1}, {5, 1}, {5, 2}}) {
        const Field F = build_field(p, {s});
        for (const auto& h : monic_depressed(F)) {
            const CubicReport r = recursive_test(make_depressed(h, F.zero()), options(2, 0));
            EXPECT_TRUE(consistent(r.verdict, oracle_flags(h, F.zero(), 3))) << h.to_string() << " over " << p << "^" << s;
        }
    }
}

TEST(Recursive, GeneralCubicsAgreeWithOracle) {
    gen::Rng rng(31);
    for (int p : {7, 11, 13, 17}) {
        const Field F = Field::prime(p);
        for (int i = 0; i < 60; ++i) {
            const Poly f = rng.poly(F, 3);
            const CubicReport r = cubic_verdict(f, options(2, 3));
            EXPECT_TRUE(consistent(r.verdict, oracle_flags(f, F.zero(), 3))) << f.to_string();
        }
    }
}

TEST(Recursive, BranchIndependenceOnPassingLevels) {
    // every level reached on every cubic over F_7 and F_13, up to level 5
    for (int p : {7, 13}) {
        const Field F = Field::prime(p);
        for (const auto& h : monic_depressed(F)) {
            CubicOptions o = options(5, 0);
            const CubicReport r = recursive_test(make_depressed(h, F.zero()), o);
            for (const auto& l : r.levels) {
                if (!l.cond2) continue;
                EXPECT_FALSE(l.cond2->value.is_zero());
                if (h.coeff(1).is_zero()) {
                    // b1 = 0: one branch degenerates to 0 and only -A carries information
                    EXPECT_TRUE(l.cond2->alt_value.is_zero());
                    continue;
                }
                // the branch values are the roots of x^2 + A x - B^3/27, swapped by either sign choice
                EXPECT_EQ(l.cond2->cube, l.cond2->alt_cube) << h.to_string() << " level " << l.n;
            }
        }
    }
}

TEST(Recursive, TowerBudget) {
    const Field F = Field::prime(7);
    CubicOptions o = options(10, 2);
    o.max_tower_degree = 27;
    const CubicReport r = recursive_test(depress(P(F, {1, 4, 0, 1})), o);
    EXPECT_EQ(r.verdict.kind, VerdictKind::IrreducibleThrough);
    EXPECT_EQ(r.verdict.reason, "tower_budget");
    EXPECT_EQ(r.verdict.iterate, 4u);
}

TEST(Recursive, Condition1ExactnessAgainstTowerDiscriminant) {
    // at level n, -4 B^3 - 27 A^2 in F_q(beta_n) normed to F_q has the square class of the sequence value
    for (int p : {7, 13, 19}) {
        const Field F = Field::prime(p);
        for (const auto& h : monic_depressed(F)) {
            const DepressedCubic d = make_depressed(h, F.zero());
            const Condition1Result c1 = condition1_sequence(d, 8);
            const auto flags = oracle_flags(h, F.zero(), 3);
            CubicTower t(d);
            for (unsigned n = 0; n <= 3; ++n) {
                if (n > 0 && !flags[n - 1]) break;  // level n needs iterate n irreducible
                const Field& L = t.level(n);
                const Elem B = d.b1.lift(L) / d.b3.lift(L);
                const Elem A = (d.b0.lift(L) - t.beta(n)) / d.b3.lift(L);
                const Elem disc = -(L.from_int(4) * B * B * B) - L.from_int(27) * A * A;
                const auto v = c1.value_at(n + 1);
                if (!v) break;
                EXPECT_EQ(nonzero_square(norm(disc, F)), nonzero_square(*v)) << h.to_string() << " n=" << n;
            }
        }
    }
}

TEST(Gnos, Examples) {
    const Field F19 = Field::prime(19), F7 = Field::prime(7);
    const GnosResult a = gnos_check(P(F19, {1, 1, 0, 1}), 10);
    EXPECT_FALSE(a.pass);
    EXPECT_EQ(a.first_violation, 3u);
    const GnosResult b = gnos_check(P(F7, {2, 6, 0, 1}), 10);
    EXPECT_TRUE(b.pass);
    EXPECT_EQ(b.quantities.size(), 10u);
    for (const auto& f : monic_depressed(F7)) {
        if (discriminant(f).is_zero() || nonzero_square(discriminant(f))) continue;
        EXPECT_EQ(gnos_check(f, 4).first_violation, 1u) << f.to_string();
    }
}

TEST(Gnos, NeverContradictsTheOracle) {
    for (int p : {7, 11}) {
        const Field F = Field::prime(p);
        for (const auto& f : monic_depressed(F)) {
            const auto flags = oracle_flags(f, F.zero(), 3);
            const GnosResult g = gnos_check(f, 3);
            if (g.first_violation) {
                const auto first = least_reducible(flags);
                ASSERT_TRUE(first.has_value()) << f.to_string();
                EXPECT_LE(*first, *g.first_violation) << f.to_string();
            }
        }
    }
}

TEST(Gnos, EvenDegreeAgainstOracle) {
    const Field F = Field::prime(7);
    for (const auto& b : F.elements())
        for (const auto& c : F.elements()) {
            const Poly f(F, {c, b, F.one()});
            const auto flags = oracle_flags(f, F.zero(), 4);
            const GnosResult g = gnos_check(f, 4);
            if (g.first_violation) {
                const auto first = least_reducible(flags);
                ASSERT_TRUE(first.has_value()) << f.to_string();
                EXPECT_LE(*first, *g.first_violation);
            }
        }
}

TEST(Chu, Examples) {
    const Field F = Field::prime(7);
    EXPECT_EQ(chu_polynomial(F.one()), P(F, {4, 0, 3, 1}));
    EXPECT_TRUE(chu_test(F.one()).proved_irreducible());
    const Verdict two = chu_test(F.from_int(2));
    EXPECT_EQ(two.to_string(), "ReducibleAtIterate(1)");
    EXPECT_EQ(two.reason, "chu_excluded");
    EXPECT_TRUE(chu_polynomial(F.from_int(2))(F.zero()).is_zero());
    std::vector<std::string> survivors;
    for (const auto& a : F.elements())
        if (chu_test(a).proved_irreducible()) survivors.push_back(a.to_string());
    EXPECT_EQ(survivors, (std::vector<std::string>{"1", "6"}));
}

TEST(Chu, Detect) {
    const Field F = Field::prime(13);
    for (const auto& a : F.elements()) EXPECT_EQ(*detect_chu(chu_polynomial(a)), a);
    EXPECT_FALSE(detect_chu(P(F, {2, 6, 0, 1})).has_value());
}

TEST(Chu, ProofsHoldUnderTheOracle) {
    for (int p : {7, 13}) {
        const Field F = Field::prime(p);
        for (const auto& a : F.elements()) {
            const Verdict v = chu_test(a);
            const auto flags = oracle_flags(chu_polynomial(a), F.zero(), 4);
            if (v.proved_irreducible()) {
                for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(flags[n - 1]) << a.to_string() << " n=" << n;
            } else {
                EXPECT_FALSE(flags[0]) << a.to_string();
            }
        }
    }
}

TEST(Chu, SequenceExamples) {
    const Field F = Field::prime(7);
    const ChuSequence s = chu_sequence(P(F, {-1, 1}), 3);
    ASSERT_EQ(s.polys.size(), 4u);
    const std::vector<int> degs{1, 3, 9, 27};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(s.polys[k].degree(), degs[k]);
        EXPECT_TRUE(s.irreducible[k]);
    }
    EXPECT_TRUE(s.criterion.holds);
    try {
        chu_sequence(P(F, {-2, 1}), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ExcludedG);
    }
    const ChuSequence t = chu_sequence(P(F, {-3, 1}), 3);
    const bool all = std::all_of(t.irreducible.begin(), t.irreducible.end(), [](bool b) { return b; });
    EXPECT_EQ(t.criterion.holds, all);
}

TEST(Chu, SequenceCriterionMatchesOracle) {
    // irreducible g of degree 1 and 2 over F_7 and F_13
    for (int p : {7, 13}) {
        const Field F = Field::prime(p);
        const oracle::GF O = oracle::GF::prime(p);
        std::vector<Poly> gs;
        for (const auto& b : F.elements()) {
            if (b == F.from_int(2) || b == F.from_int(-2)) continue;
            gs.push_back(Poly::x(F) - b);
        }
        for (const auto& b : F.elements())
            for (const auto& c : F.elements()) {
                const Poly g(F, {c, b, F.one()});
                if (is_irreducible(g)) gs.push_back(g);
            }
        for (const auto& g : gs) {
            const ChuSequence s = chu_sequence(g, 2);
            bool all = true;
            for (std::size_t k = 0; k < s.polys.size(); ++k) {
                EXPECT_EQ(s.irreducible[k], oracle::irreducible(O, oracle::from_lib(O, s.polys[k])));
                all = all && s.irreducible[k];
            }
            if (s.criterion.holds) EXPECT_TRUE(all) << g.to_string();
            if (g.degree() == 1) EXPECT_EQ(s.criterion.holds, all) << g.to_string();
        }
    }
}
