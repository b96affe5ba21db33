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
 * @file cubic.hpp
 * @brief Cubics: depressed form, Dickson's criterion, the two-condition recursive iterate test, the
 * square-class necessary condition on critical orbits, and the x^3 - 3x family.
 *
 * For h = b3 x^3 + b1 x + b0 and a target beta0, iterate n + 1 of the pair (h, beta0) is irreducible given
 * iterate n is, exactly when h(x) - beta_n is irreducible over F_q(beta_n), beta_n a root of h^n(x) - beta0.
 * Dickson's criterion splits this into a square condition, which reduces to F_q values along the two critical
 * orbits, and a cube condition in F_q(sqrt(-3), beta_n), which is decided through a norm.
 */

#ifndef DYNIR_CUBIC_HPP
#define DYNIR_CUBIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "residue.hpp"
#include "verdict.hpp"

namespace dynir {

/// h = b3 x^3 + b1 x + b0 with target beta0.
struct DepressedCubic {
    Elem b3, b1, b0;
    Elem beta0;
    std::optional<Poly> source;  ///< general cubic this came from

    const Field& field() const { return b3.field(); }
    Poly poly() const { return Poly(field(), {b0, b1, field().zero(), b3}); }
};

inline void require_char_above_3(const Field& F) {
    if (F.characteristic() <= 3) fail(Errc::CharacteristicLEQ3, "cubic criteria need characteristic above 3");
}

/// The pair (h, beta0) for an already depressed h.
inline DepressedCubic make_depressed(const Poly& h, const Elem& beta0) {
    if (h.degree() != 3) fail(Errc::InvalidArgument, "expected a cubic");
    require_char_above_3(h.field());
    if (!h.coeff(2).is_zero()) fail(Errc::InvalidArgument, "quadratic coefficient must vanish");
    return {h.coeff(3), h.coeff(1), h.coeff(0), beta0.lift(h.field()), std::nullopt};
}

/// h(x) = f(x - beta0) + beta0 with beta0 = a2/(3 a3); f^n is irreducible iff h^n(x) - beta0 is.
inline DepressedCubic depress(const Poly& f) {
    if (f.degree() != 3) fail(Errc::InvalidArgument, "expected a cubic");
    const Field& F = f.field();
    require_char_above_3(F);
    const Elem beta0 = f.coeff(2) / (F.from_int(3) * f.coeff(3));
    const Poly h = compose(f, Poly::x(F) - beta0) + beta0;
    DepressedCubic out = make_depressed(h, beta0);
    out.source = f;
    return out;
}

struct DicksonResult {
    Elem disc;  ///< -4 a1^3 - 27 a0^2
    bool disc_nonzero_square = false;
    std::vector<Elem> mu;  ///< both roots of 81 mu^2 = disc, canonical first
    std::optional<Elem> sqrt_minus3;
    std::vector<Elem> values;  ///< the cube-test quantity for each mu branch
    std::vector<ResidueVerdict> cube_tests;
    bool irreducible = false;
};

/// Dickson's criterion for x^3 + a1 x + a0. When a1 = 0 the quantity is taken as -a0.
inline DicksonResult dickson_test(const Elem& a1, const Elem& a0) {
    const Field F = a1.field().contains(a0.field()) ? a1.field() : a0.field();
    require_char_above_3(F);
    const Elem A1 = a1.lift(F), A0 = a0.lift(F);
    if (A1.is_zero() && A0.is_zero()) fail(Errc::BothCoefficientsZero, "x^3 is not irreducible");
    DicksonResult out;
    out.disc = -(F.from_int(4) * A1 * A1 * A1) - F.from_int(27) * A0 * A0;
    const auto mu = out.disc.is_zero() ? std::nullopt : sqrt(out.disc / F.from_int(81));
    out.disc_nonzero_square = mu.has_value();
    if (!mu) return out;
    out.mu = {*mu, -*mu};
    const SqrtMinus3 s = adjoin_sqrt_minus3(F);
    out.sqrt_minus3 = s.root;
    const Elem half = s.field.from_int(2).inverse();
    if (A1.is_zero()) {
        out.values = {-A0.lift(s.field)};
    } else {
        for (const auto& m : out.mu) out.values.push_back((-A0 + m * s.root) * half);
    }
    for (const auto& v : out.values) out.cube_tests.push_back(is_rth_power(v, 3));
    out.irreducible = !out.cube_tests.front().is_rth_power;
    return out;
}

/// -3 (h^k(g1) - beta0)(h^k(g2) - beta0) for k = 1, 2, ... over the critical points g1, g2.
/// The pair orbit is tracked through s = u1 + u2 and t = u1 u2, which stay in F_q even when the critical
/// points do not.
struct Condition1Result {
    std::vector<Elem> values;  ///< values[k - 1] belongs to iterate k
    bool all_square = true;
    std::optional<unsigned> first_failure;
    bool decided = false;  ///< the whole sequence is known: a failure was found or the orbit closed
    std::optional<std::size_t> tail, cycle;  ///< periodic certificate in terms of values

    /// Value for iterate k, replaying the cycle past the computed prefix.
    std::optional<Elem> value_at(unsigned k) const {
        if (k == 0) return std::nullopt;
        if (k <= values.size()) return values[k - 1];
        if (!cycle) return std::nullopt;
        return values[*tail + (k - 1 - *tail) % *cycle];
    }
};

inline bool nonzero_square(const Elem& v) { return !v.is_zero() && is_rth_power(v, 2).is_rth_power; }

inline Condition1Result condition1_sequence(const DepressedCubic& h, unsigned n_max, std::size_t step_cap = 1u << 16) {
    const Field& F = h.field();
    require_char_above_3(F);
    const Elem three = F.from_int(3), two = F.from_int(2);
    const Elem &b3 = h.b3, &b1 = h.b1, &b0 = h.b0, &beta = h.beta0;
    Elem s = F.zero();
    Elem t = b1 / (three * b3);
    Condition1Result out;
    std::map<std::pair<std::vector<Coeff>, std::vector<Coeff>>, std::size_t> seen;
    const std::size_t limit = std::max<std::size_t>(n_max + 1, step_cap);
    for (std::size_t k = 1; k <= limit; ++k) {
        const Elem s3 = s * s * s - three * s * t;  // u1^3 + u2^3
        const Elem t_next = b3 * b3 * t * t * t + b3 * b1 * t * (s * s - two * t) + b3 * b0 * s3 + b1 * b1 * t +
                            b1 * b0 * s + b0 * b0;
        s = b3 * s3 + b1 * s + two * b0;
        t = t_next;
        auto [it, fresh] = seen.emplace(std::make_pair(s.coeffs(), t.coeffs()), k - 1);
        if (!fresh) {
            out.tail = it->second;
            out.cycle = (k - 1) - it->second;
            out.decided = true;
            return out;
        }
        const Elem v = -three * (t - beta * s + beta * beta);
        out.values.push_back(v);
        if (!nonzero_square(v)) {
            out.all_square = false;
            out.first_failure = static_cast<unsigned>(k);
            out.decided = true;
            return out;
        }
    }
    return out;
}

/// Fields F_q(sqrt(-3), beta_n). sqrt(-3) sits at the bottom when it is not in F_q, so that every beta level
/// has odd degree over the base and the cube test reduces to a norm into the base.
class CubicTower {
   public:
    explicit CubicTower(const DepressedCubic& h) : h_(h) {
        require_char_above_3(h.field());
        const SqrtMinus3 s = adjoin_sqrt_minus3(h.field());
        base_ = s.field;
        sqrtm3_ = s.root;
        levels_.push_back(base_);
    }

    const DepressedCubic& cubic() const noexcept { return h_; }
    const Field& base() const noexcept { return base_; }
    const Elem& sqrt_minus3() const noexcept { return sqrtm3_; }
    bool base_extended() const noexcept { return !(base_ == h_.field()); }

    /// Degree of level n over the base, 3^n.
    static BigInt relative_degree(unsigned n) { return big_pow(3, n); }

    /// Level n; the modulus of level k + 1 is x^3 + (b1/b3) x + (b0 - beta_k)/b3, irreducible as long as
    /// iterate k + 1 is, which the recursive test establishes before asking for the level.
    const Field& level(unsigned n) {
        while (levels_.size() <= n) {
            const Field& L = levels_.back();
            const Elem b3 = h_.b3.lift(L);
            const Elem A = (h_.b0.lift(L) - beta(static_cast<unsigned>(levels_.size() - 1))) / b3;
            levels_.push_back(L.extend_unchecked({A, h_.b1.lift(L) / b3, L.zero(), L.one()}));
        }
        return levels_[n];
    }

    Elem beta(unsigned n) {
        if (n == 0) return h_.beta0.lift(base_);
        return level(n).generator();
    }

   private:
    DepressedCubic h_;
    Field base_;
    Elem sqrtm3_;
    std::vector<Field> levels_;
};

struct Condition2Result {
    unsigned n = 0;
    Elem disc;  ///< -4 (b1/b3)^3 - 27 ((b0 - beta_n)/b3)^2
    Elem mu;    ///< canonical root of 81 mu^2 = disc
    Elem value, alt_value;  ///< (-(b0 - beta_n)/b3 +- mu sqrt(-3)) / 2
    Elem norm, alt_norm;    ///< norms into the tower base
    bool cube = false, alt_cube = false;
    bool passes() const noexcept { return !cube; }
};

/// The cube condition at level n. The value is a cube in F_q(sqrt(-3), beta_n) iff its norm is a cube in the
/// base, since the base contains sqrt(-3) and so has order 1 mod 3.
inline Condition2Result condition2_check(CubicTower& tower, unsigned n) {
    const Field& L = tower.level(n);
    const DepressedCubic& h = tower.cubic();
    const Elem b3 = h.b3.lift(L);
    const Elem B = h.b1.lift(L) / b3;
    const Elem A = (h.b0.lift(L) - tower.beta(n)) / b3;
    Condition2Result out;
    out.n = n;
    out.disc = -(L.from_int(4) * B * B * B) - L.from_int(27) * A * A;
    if (out.disc.is_zero()) fail(Errc::SquareRootMissing, "level discriminant vanishes");
    const auto mu = sqrt(out.disc / L.from_int(81));
    if (!mu) fail(Errc::SquareRootMissing, "level discriminant is not a square");
    out.mu = *mu;
    const Elem half = L.from_int(2).inverse();
    const Elem s = tower.sqrt_minus3().lift(L);
    out.value = (-A + out.mu * s) * half;
    out.alt_value = (-A - out.mu * s) * half;
    // b1 = 0 makes one branch vanish; the criterion takes the other one, -A
    if (out.value.is_zero()) std::swap(out.value, out.alt_value);
    out.norm = norm(out.value, tower.base());
    out.alt_norm = norm(out.alt_value, tower.base());
    out.cube = is_rth_power(out.norm, 3).is_rth_power;
    out.alt_cube = is_rth_power(out.alt_norm, 3).is_rth_power;
    return out;
}

struct CubicOptions {
    unsigned n_max = 10;     ///< highest level tested; iterates up to n_max + 1 are covered
    unsigned oracle_max = 5;  ///< iterates up to this index are also factored directly
    BigInt max_tower_degree = 6561;  ///< largest [F_q(sqrt(-3), beta_n) : base] attempted
};

struct CubicLevelRecord {
    unsigned n = 0;
    Elem cond1_value;
    bool cond1_square = false;
    std::optional<Condition2Result> cond2;
};

struct CubicReport {
    DepressedCubic h;
    Condition1Result cond1;
    std::vector<CubicLevelRecord> levels;
    std::vector<std::pair<unsigned, bool>> oracle;  ///< (iterate, irreducible)
    bool base_extended = false;
    Verdict verdict;
};

/// Level-by-level test of the pair (h, beta0). Reducibility is exact; irreducibility is only established up to
/// the bound, because the cube condition has no periodicity certificate.
inline CubicReport recursive_test(const DepressedCubic& h, const CubicOptions& opt = {}) {
    require_char_above_3(h.field());
    if (opt.n_max < 1) fail(Errc::InvalidArgument, "n_max must be at least 1");
    CubicReport out;
    out.h = h;
    out.cond1 = condition1_sequence(h, opt.n_max);
    CubicTower tower(h);
    out.base_extended = tower.base_extended();
    const Poly hp = h.poly();
    Poly hk = Poly::x(h.field());

    auto oracle = [&](unsigned k, bool expect_irreducible) {
        if (k > opt.oracle_max) return;
        while (static_cast<unsigned>(std::max(0, hk.degree())) < big_pow(3, k)) hk = compose(hp, hk);
        const bool irr = is_irreducible(hk - h.beta0);
        out.oracle.emplace_back(k, irr);
        if (irr != expect_irreducible)
            fail(Errc::OracleMismatch, "criterion and factorization disagree at iterate " + std::to_string(k));
    };

    for (unsigned n = 0; n <= opt.n_max; ++n) {
        const unsigned k = n + 1;
        CubicLevelRecord rec;
        rec.n = n;
        const auto v = out.cond1.value_at(k);
        if (!v) {
            out.verdict = Verdict::irreducible_through(n, "bound_reached", "condition 1 sequence not resolved");
            return out;
        }
        rec.cond1_value = *v;
        rec.cond1_square = nonzero_square(*v);
        if (!rec.cond1_square) {
            out.levels.push_back(rec);
            out.verdict = Verdict::reducible_at(k, v->is_zero() ? "condition1_zero" : "condition1_nonsquare",
                                                "value " + v->to_string() + " at iterate " + std::to_string(k));
            oracle(k, false);
            return out;
        }
        if (CubicTower::relative_degree(n) > opt.max_tower_degree) {
            out.levels.push_back(rec);
            out.verdict = Verdict::irreducible_through(
                n, "tower_budget", "level " + std::to_string(n) + " exceeds the tower degree budget");
            return out;
        }
        rec.cond2 = condition2_check(tower, n);
        out.levels.push_back(rec);
        if (!rec.cond2->passes()) {
            out.verdict = Verdict::reducible_at(k, "condition2_cube",
                                                "norm " + rec.cond2->norm.to_string() + " at level " + std::to_string(n));
            oracle(k, false);
            return out;
        }
        oracle(k, true);
    }
    out.verdict = Verdict::irreducible_through(opt.n_max + 1, "bound_reached");
    return out;
}

/// Verdict for a general cubic through its depressed pair.
inline CubicReport cubic_verdict(const Poly& f, const CubicOptions& opt = {}) { return recursive_test(depress(f), opt); }

struct GnosResult {
    bool pass = true;
    std::optional<unsigned> first_violation;
    std::vector<Elem> quantities;  ///< quantities[n - 1] for iterate n
};

/// Necessary condition on the square class of Disc(f) and of a_d-scaled Res(f^n, f'). A violation at n means
/// some iterate up to n is reducible; passing proves nothing.
inline GnosResult gnos_check(const Poly& f, unsigned n_max) {
    const Field& F = f.field();
    if (F.characteristic() == 2) fail(Errc::EvenCharacteristic, "needs odd characteristic");
    const int d = f.degree();
    if (d < 2) fail(Errc::InvalidArgument, "degree must be at least 2");
    const Poly df = f.derivative();
    if (df.degree() < 1) fail(Errc::ConstantDerivative, "derivative is constant");
    const int k = df.degree();
    const Elem ad = f.leading();
    const Elem lc = df.leading();
    const bool odd = d % 2 == 1;
    GnosResult out;
    // r = f^n mod f', so Res(f', f^n) = lc(f')^(d^n - deg r) Res(f', r)
    Poly r = f % df;
    for (unsigned n = 1; n <= n_max; ++n) {
        Elem qn;
        if (n == 1) {
            qn = discriminant(f);
        } else {
            r = compose(f, r) % df;
            const BigInt dn = big_pow(static_cast<std::uint64_t>(d), n);
            Elem res = r.is_zero() ? F.zero() : lc.pow(dn - std::max(0, r.degree())) * resultant(df, r);
            if (((dn * k) & 1) != 0) res = -res;  // Res(f^n, f') = (-1)^(d^n k) Res(f', f^n)
            if (odd) {
                qn = ad.pow(static_cast<std::int64_t>((n - 1) * k + 1)) * res;
                if (((d - 1) / 2) % 2 == 1) qn = -qn;
            } else {
                qn = ad.pow(static_cast<std::int64_t>(k)) * res;
            }
        }
        out.quantities.push_back(qn);
        const bool ok = !qn.is_zero() && is_rth_power(qn, 2).is_rth_power == odd;
        if (!ok) {
            out.pass = false;
            out.first_violation = n;
            return out;
        }
    }
    return out;
}

/// x^3 + 3a x^2 + (3a^2 - 3) x + (a^3 - 4a), the conjugate of x^3 - 3x moving the target a to 0.
inline Poly chu_polynomial(const Elem& alpha) {
    const Field& F = alpha.field();
    const Elem three = F.from_int(3);
    return Poly(F, {alpha * alpha * alpha - F.from_int(4) * alpha, three * alpha * alpha - three, three * alpha, F.one()});
}

/// The alpha of a polynomial of that shape, if it is one.
inline std::optional<Elem> detect_chu(const Poly& f) {
    if (f.degree() != 3 || !f.is_monic() || f.field().characteristic() <= 3) return std::nullopt;
    const Elem alpha = f.coeff(2) / f.field().from_int(3);
    if (chu_polynomial(alpha) == f) return alpha;
    return std::nullopt;
}

struct ChuCriterion {
    Elem disc;  ///< -3 (a^2 - 4)
    bool disc_nonzero_square = false;
    std::vector<Elem> roots;  ///< roots of x^2 - a x + 1 in F(sqrt(-3))
    std::vector<bool> cubes;
    bool holds = false;
};

/// -3(a^2 - 4) is a nonzero square in the field of a, and the roots of x^2 - a x + 1 are not cubes after
/// adjoining sqrt(-3).
inline ChuCriterion chu_criterion(const Elem& alpha) {
    const Field& F = alpha.field();
    require_char_above_3(F);
    ChuCriterion out;
    const Elem four = F.from_int(4);
    out.disc = -F.from_int(3) * (alpha * alpha - four);
    const auto r = out.disc.is_zero() ? std::nullopt : sqrt(out.disc);
    out.disc_nonzero_square = r.has_value();
    if (!r) return out;
    const SqrtMinus3 s = adjoin_sqrt_minus3(F);
    const Elem root_disc = r->lift(s.field) / s.root;  // sqrt(a^2 - 4)
    const Elem half = s.field.from_int(2).inverse();
    const Elem a = alpha.lift(s.field);
    out.roots = {(a + root_disc) * half, (a - root_disc) * half};
    for (const auto& x : out.roots) out.cubes.push_back(is_rth_power(x, 3).is_rth_power);
    out.holds = !out.cubes[0] && !out.cubes[1];
    return out;
}

/// Complete decision for chu_polynomial(alpha). Failure of the criterion already makes the first iterate
/// reducible: x^3 - 3x - alpha passes Dickson's test exactly when the criterion holds.
inline Verdict chu_test(const Elem& alpha) {
    const Field& F = alpha.field();
    require_char_above_3(F);
    const Elem two = F.from_int(2);
    if (alpha == two || alpha == -two)
        return Verdict::reducible_at(1, "chu_excluded", "alpha = +-2 gives x^3 +- 6x^2 + 9x, divisible by x");
    const ChuCriterion c = chu_criterion(alpha);
    if (!c.disc_nonzero_square)
        return Verdict::reducible_at(1, "chu_criterion", "-3(a^2 - 4) = " + c.disc.to_string() + " is not a nonzero square");
    if (!c.holds) return Verdict::reducible_at(1, "chu_criterion", "a root of x^2 - a x + 1 is a cube");
    return Verdict::proved("chu_criterion");
}

struct ChuSequence {
    std::vector<Poly> polys;  ///< f_0 = g, f_(k+1) = f_k(x^3 - 3x)
    std::vector<bool> irreducible;
    ChuCriterion criterion;  ///< evaluated at a root of g
};

inline ChuSequence chu_sequence(const Poly& g, unsigned k_max) {
    const Field& F = g.field();
    require_char_above_3(F);
    if (g.degree() < 1) fail(Errc::ConstantPolynomial, "g must be nonconstant");
    if (!is_irreducible(g)) fail(Errc::ReducibleG, "g must be irreducible");
    const Poly x = Poly::x(F);
    const Poly gm = g.monic();
    if (gm == x - F.from_int(2) || gm == x + F.from_int(2)) fail(Errc::ExcludedG, "g = x +- 2 is excluded");
    ChuSequence out;
    const Elem alpha = g.degree() == 1 ? -gm.coeff(0) : extend_field(F, gm).generator();
    out.criterion = chu_criterion(alpha);
    const Poly t = Poly::from_ints(F, {0, -3, 0, 1});
    Poly cur = g;
    for (unsigned k = 0; k <= k_max; ++k) {
        if (k > 0) cur = compose(cur, t);
        out.polys.push_back(cur);
        out.irreducible.push_back(is_irreducible(cur));
    }
    return out;
}

}  // namespace dynir

#endif
