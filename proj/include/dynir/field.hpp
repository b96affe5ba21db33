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
 * @file field.hpp
 * @brief Finite fields presented as towers over a prime field.
 *
 * A tower is a chain F_p = L_0 ⊂ L_1 ⊂ ... ⊂ L_k where L_i = L_{i-1}[x]/(m_i) for a monic irreducible m_i over
 * L_{i-1}. A Field handle names one level of such a chain; extending a level produces a new handle that shares the
 * lower levels, so elements of a subfield remain valid operands in every extension above it.
 *
 * Elements are stored as flat coefficient vectors over F_p. An element of L_i is a vector of rel_degree(i) blocks,
 * each block an element of L_{i-1}. Consequently an element of L_j (j < i) embeds into L_i by zero padding, and the
 * subfield L_j is exactly the set of vectors that vanish beyond the first width(j) entries.
 */

#ifndef DYNIR_FIELD_HPP
#define DYNIR_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"

namespace dynir {

class Field;
class Elem;

namespace detail {

struct Level {
    Coeff p = 0;
    std::shared_ptr<const Level> parent;
    std::size_t index = 0;
    std::size_t rel_degree = 1;
    std::size_t width = 1;
    // monic, rel_degree + 1 blocks of parent width; empty at the prime level
    std::vector<Coeff> modulus;
    // per modulus block: 0 zero, 1 lies in F_p, 2 general
    std::vector<std::uint8_t> modulus_kind;
    BigInt order;
};

using CSpan = std::span<const Coeff>;
using MSpan = std::span<Coeff>;

inline bool all_zero(CSpan a) noexcept {
    return std::all_of(a.begin(), a.end(), [](Coeff c) { return c == 0; });
}

inline bool is_scalar(CSpan a) noexcept { return a.size() <= 1 || all_zero(a.subspan(1)); }

inline void add_to(Coeff p, CSpan a, MSpan acc) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) {
        Coeff s = acc[i] + a[i];
        acc[i] = s >= p ? s - p : s;
    }
}

inline void sub_from(Coeff p, CSpan a, MSpan acc) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] = acc[i] >= a[i] ? acc[i] - a[i] : acc[i] + p - a[i];
}

// acc += s * a
inline void axpy(Coeff p, Coeff s, CSpan a, MSpan acc) noexcept {
    if (s == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        acc[i] = (acc[i] + s * a[i]) % p;
    }
}

inline void scale(Coeff p, Coeff s, CSpan a, MSpan out) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] % p;
}

inline bool same_level(const Level* a, const Level* b) noexcept {
    while (true) {
        if (a == b) return true;
        if (a == nullptr || b == nullptr) return false;
        if (a->p != b->p || a->index != b->index || a->modulus != b->modulus) return false;
        a = a->parent.get();
        b = b->parent.get();
    }
}

inline void reduce(const Level& L, MSpan prod, std::size_t blocks);

inline void mul(const Level& L, CSpan a, CSpan b, MSpan out);

// Six parent products for a product of two degree-2 polynomials over the parent level; prod gets 5 blocks.
inline void karatsuba3(const Level& P, CSpan a, CSpan b, MSpan prod) {
    const Coeff p = P.p;
    const std::size_t w = P.width;
    auto A = [&](std::size_t i) { return a.subspan(i * w, w); };
    auto B = [&](std::size_t i) { return b.subspan(i * w, w); };
    std::vector<Coeff> m0(w), m1(w), m2(w), s(w), t(w), m(w);
    mul(P, A(0), B(0), m0);
    mul(P, A(1), B(1), m1);
    mul(P, A(2), B(2), m2);
    auto cross = [&](std::size_t i, std::size_t j, std::size_t k) {
        // prod[k] += (a_i + a_j)(b_i + b_j) - m_i - m_j
        std::copy(A(i).begin(), A(i).end(), s.begin());
        add_to(p, A(j), s);
        std::copy(B(i).begin(), B(i).end(), t.begin());
        add_to(p, B(j), t);
        mul(P, s, t, m);
        MSpan dst = prod.subspan(k * w, w);
        add_to(p, m, dst);
        sub_from(p, i == 0 ? m0 : m1, dst);
        sub_from(p, j == 1 ? m1 : m2, dst);
    };
    cross(0, 1, 1);
    cross(0, 2, 2);
    cross(1, 2, 3);
    add_to(p, m0, prod.subspan(0, w));
    add_to(p, m1, prod.subspan(2 * w, w));
    add_to(p, m2, prod.subspan(4 * w, w));
}

/// out = a * b at level L. out may alias a or b.
inline void mul(const Level& L, CSpan a, CSpan b, MSpan out) {
    const Coeff p = L.p;
    if (L.index == 0) {
        out[0] = a[0] * b[0] % p;
        return;
    }
    if (is_scalar(a)) {
        const Coeff s = a[0];
        scale(p, s, b, out);
        return;
    }
    if (is_scalar(b)) {
        const Coeff s = b[0];
        scale(p, s, a, out);
        return;
    }
    const Level& P = *L.parent;
    const std::size_t w = P.width, d = L.rel_degree;
    std::vector<Coeff> prod((2 * d - 1) * w, 0), tmp(w);
    if (d == 3 && w > 1) {
        karatsuba3(P, a, b, prod);
        reduce(L, prod, 5);
        std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(3 * w), out.begin());
        return;
    }
    for (std::size_t i = 0; i < d; ++i) {
        CSpan ai = a.subspan(i * w, w);
        if (all_zero(ai)) continue;
        const bool as = is_scalar(ai);
        for (std::size_t j = 0; j < d; ++j) {
            CSpan bj = b.subspan(j * w, w);
            if (all_zero(bj)) continue;
            MSpan dst(prod.data() + (i + j) * w, w);
            if (as) {
                axpy(p, ai[0], bj, dst);
            } else if (is_scalar(bj)) {
                axpy(p, bj[0], ai, dst);
            } else {
                mul(P, ai, bj, tmp);
                add_to(p, tmp, dst);
            }
        }
    }
    reduce(L, prod, 2 * d - 1);
    std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d * w), out.begin());
}

/// Reduces a polynomial of `blocks` coefficient blocks (over the parent of L) modulo L's modulus, in place.
inline void reduce(const Level& L, MSpan prod, std::size_t blocks) {
    const Coeff p = L.p;
    const Level& P = *L.parent;
    const std::size_t w = P.width, d = L.rel_degree;
    std::vector<Coeff> tmp(w);
    for (std::size_t k = blocks; k-- > d;) {
        MSpan c(prod.data() + k * w, w);
        if (all_zero(c)) continue;
        const bool cs = is_scalar(c);
        for (std::size_t j = 0; j < d; ++j) {
            const std::uint8_t kind = L.modulus_kind[j];
            if (kind == 0) continue;
            CSpan mj(L.modulus.data() + j * w, w);
            MSpan dst(prod.data() + (k - d + j) * w, w);
            if (kind == 1) {
                axpy(p, p - mj[0], c, dst);
            } else if (cs) {
                axpy(p, p - c[0], mj, dst);
            } else {
                mul(P, c, mj, tmp);
                sub_from(p, tmp, dst);
            }
        }
        std::fill(c.begin(), c.end(), Coeff{0});
    }
}

/// Matrix (row-major, d*d blocks of parent width) of multiplication by a on L as a vector space over its parent.
inline std::vector<Coeff> mult_matrix(const Level& L, CSpan a) {
    const Level& P = *L.parent;
    const std::size_t w = P.width, d = L.rel_degree;
    std::vector<Coeff> M(d * d * w);
    std::vector<Coeff> col(a.begin(), a.end()), top(w), tmp(w);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            std::copy_n(col.begin() + static_cast<std::ptrdiff_t>(i * w), w,
                        M.begin() + static_cast<std::ptrdiff_t>((i * d + j) * w));
        if (j + 1 == d) break;
        // col <- col * x mod modulus
        std::copy_n(col.begin() + static_cast<std::ptrdiff_t>((d - 1) * w), w, top.begin());
        for (std::size_t i = d - 1; i > 0; --i)
            std::copy_n(col.begin() + static_cast<std::ptrdiff_t>((i - 1) * w), w,
                        col.begin() + static_cast<std::ptrdiff_t>(i * w));
        std::fill_n(col.begin(), w, Coeff{0});
        if (all_zero(top)) continue;
        for (std::size_t i = 0; i < d; ++i) {
            if (L.modulus_kind[i] == 0) continue;
            CSpan mi(L.modulus.data() + i * w, w);
            mul(P, top, mi, tmp);
            sub_from(L.p, tmp, MSpan(col.data() + i * w, w));
        }
    }
    return M;
}

inline void inv(const Level& L, CSpan a, MSpan out);

/// Gaussian elimination over the parent of L on a d x d block matrix. Returns the determinant; when rhs is
/// non-empty it is overwritten with the solution of M u = rhs (M must then be invertible).
inline std::vector<Coeff> eliminate(const Level& P, std::size_t d, std::vector<Coeff> M, std::vector<Coeff>* rhs) {
    const std::size_t w = P.width;
    const Coeff p = P.p;
    auto blk = [&](std::vector<Coeff>& v, std::size_t i, std::size_t j) { return MSpan(v.data() + (i * d + j) * w, w); };
    std::vector<Coeff> det(w, 0);
    det[0] = 1;
    std::vector<Coeff> pinv(w), f(w), tmp(w);
    bool negate = false;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && all_zero(blk(M, piv, c))) ++piv;
        if (piv == d) return std::vector<Coeff>(w, 0);
        if (piv != c) {
            negate = !negate;
            for (std::size_t j = 0; j < d; ++j) std::swap_ranges(blk(M, piv, j).begin(), blk(M, piv, j).end(), blk(M, c, j).begin());
            if (rhs) std::swap_ranges(rhs->begin() + static_cast<std::ptrdiff_t>(piv * w), rhs->begin() + static_cast<std::ptrdiff_t>((piv + 1) * w),
                                      rhs->begin() + static_cast<std::ptrdiff_t>(c * w));
        }
        mul(P, det, blk(M, c, c), det);
        inv(P, blk(M, c, c), pinv);
        // normalize the pivot row so later steps can eliminate with the raw entries
        for (std::size_t j = c; j < d; ++j) {
            if (all_zero(blk(M, c, j))) continue;
            mul(P, blk(M, c, j), pinv, blk(M, c, j));
        }
        if (rhs) {
            MSpan rc(rhs->data() + c * w, w);
            mul(P, rc, pinv, rc);
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c) continue;
            if (!rhs && r < c) continue;
            if (all_zero(blk(M, r, c))) continue;
            std::copy(blk(M, r, c).begin(), blk(M, r, c).end(), f.begin());
            for (std::size_t j = c; j < d; ++j) {
                if (all_zero(blk(M, c, j))) continue;
                mul(P, f, blk(M, c, j), tmp);
                sub_from(p, tmp, blk(M, r, j));
            }
            if (rhs) {
                mul(P, f, CSpan(rhs->data() + c * w, w), tmp);
                sub_from(p, tmp, MSpan(rhs->data() + r * w, w));
            }
        }
    }
    if (negate) {
        for (auto& x : det) x = x == 0 ? 0 : p - x;
    }
    return det;
}

inline void inv(const Level& L, CSpan a, MSpan out) {
    if (all_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
    if (L.index == 0) {
        out[0] = mod_inverse(a[0], L.p);
        return;
    }
    if (is_scalar(a)) {
        const Coeff s = mod_inverse(a[0], L.p);
        std::fill(out.begin(), out.end(), Coeff{0});
        out[0] = s;
        return;
    }
    const Level& P = *L.parent;
    const std::size_t w = P.width, d = L.rel_degree;
    std::vector<Coeff> rhs(d * w, 0);
    rhs[0] = 1;
    eliminate(P, d, mult_matrix(L, a), &rhs);
    std::copy(rhs.begin(), rhs.end(), out.begin());
}

inline std::vector<Coeff> relative_norm(const Level& L, CSpan a) {
    const Level& P = *L.parent;
    const std::size_t d = L.rel_degree, w = P.width;
    if (d == 1) return std::vector<Coeff>(a.begin(), a.end());
    if (d > 3) return eliminate(P, d, mult_matrix(L, a), nullptr);
    // small determinants by cofactor expansion, no inverses at the parent level
    const auto M = mult_matrix(L, a);
    auto m = [&](std::size_t i, std::size_t j) { return CSpan(M.data() + (i * d + j) * w, w); };
    std::vector<Coeff> det(w, 0), t1(w), t2(w);
    auto minor2 = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1, MSpan out) {
        mul(P, m(i0, j0), m(i1, j1), out);
        mul(P, m(i0, j1), m(i1, j0), t2);
        sub_from(P.p, t2, out);
    };
    if (d == 2) {
        minor2(0, 0, 1, 1, det);
        return det;
    }
    for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t ja = j == 0 ? 1 : 0, jb = j == 2 ? 1 : 2;
        std::vector<Coeff> mn(w);
        minor2(1, ja, 2, jb, mn);
        mul(P, m(0, j), mn, t1);
        if (j == 1)
            sub_from(P.p, t1, det);
        else
            add_to(P.p, t1, det);
    }
    return det;
}

inline std::vector<Coeff> relative_trace(const Level& L, CSpan a) {
    const Level& P = *L.parent;
    const std::size_t w = P.width, d = L.rel_degree;
    const auto M = mult_matrix(L, a);
    std::vector<Coeff> t(w, 0);
    for (std::size_t i = 0; i < d; ++i) add_to(L.p, CSpan(M.data() + (i * d + i) * w, w), t);
    return t;
}

inline void pow_into(const Level& L, CSpan a, const BigInt& e, MSpan out) {
    const std::size_t w = L.width;
    std::vector<Coeff> acc(w, 0), base(a.begin(), a.end());
    acc[0] = 1;
    if (e > 0) {
        const std::size_t top = boost::multiprecision::msb(e);
        for (std::size_t b = top + 1; b-- > 0;) {
            mul(L, acc, acc, acc);
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(b))) mul(L, acc, base, acc);
        }
    }
    std::copy(acc.begin(), acc.end(), out.begin());
}

}  // namespace detail

/// Handle to one level of a finite-field tower.
class Field {
   public:
    Field() = default;

    /// The prime field F_p. Throws CompositeCharacteristic unless p is prime.
    static Field prime(std::uint64_t p) {
        if (!is_prime(p)) fail(Errc::CompositeCharacteristic, std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 32)) fail(Errc::InvalidArgument, "characteristic must be below 2^32");
        auto L = std::make_shared<detail::Level>();
        L->p = p;
        L->order = p;
        return Field(std::move(L));
    }

    bool valid() const noexcept { return static_cast<bool>(d_); }
    Coeff characteristic() const noexcept { return d_->p; }
    std::size_t level() const noexcept { return d_->index; }
    /// Absolute degree over F_p.
    std::size_t degree() const noexcept { return d_->width; }
    std::size_t relative_degree() const noexcept { return d_->rel_degree; }
    const BigInt& order() const noexcept { return d_->order; }
    const detail::Level& data() const noexcept { return *d_; }

    Field parent() const {
        if (!d_->parent) fail(Errc::InvalidArgument, "prime field has no parent");
        return Field(d_->parent);
    }

    Field at_level(std::size_t k) const {
        if (k > level()) fail(Errc::FieldMismatch, "level above the field");
        auto cur = d_;
        while (cur->index > k) cur = cur->parent;
        return Field(cur);
    }

    Field prime_field() const { return at_level(0); }

    /// True when `sub` is this level or one beneath it in the same tower.
    bool contains(const Field& sub) const noexcept {
        if (!d_ || !sub.d_ || sub.level() > level()) return false;
        const detail::Level* cur = d_.get();
        while (cur->index > sub.level()) cur = cur->parent.get();
        return detail::same_level(cur, sub.d_.get());
    }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return detail::same_level(a.d_.get(), b.d_.get());
    }

    /// Relative degrees of the levels above F_p, bottom first.
    std::vector<std::size_t> tower_degrees() const {
        std::vector<std::size_t> out;
        for (auto cur = d_; cur && cur->index > 0; cur = cur->parent) out.push_back(cur->rel_degree);
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// Adjoins a root of the monic polynomial with the given coefficients (low degree first, at this level).
    /// Irreducibility is the caller's responsibility; polyring's extend_field verifies it.
    Field extend_unchecked(const std::vector<Elem>& monic_coeffs) const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::int64_t v) const;
    Elem from_coeffs(std::vector<Coeff> flat) const;
    /// Residue class of x at the top level (a root of the top modulus).
    Elem generator() const;
    /// Coefficients of the top modulus, low degree first, as elements of the parent level.
    std::vector<Elem> modulus() const;

    /// The element at position `index` in canonical (lexicographic) order.
    Elem element_at(std::uint64_t index) const;
    std::vector<Elem> elements(std::uint64_t limit = 1u << 22) const;
    Elem random(std::mt19937_64& rng) const;

   private:
    explicit Field(std::shared_ptr<const detail::Level> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::Level> d_;
    friend class Elem;
};

/// An element of a finite field level; values are canonical (fully reduced) coefficient vectors.
class Elem {
   public:
    Elem() = default;
    Elem(Field f, std::vector<Coeff> c) : f_(std::move(f)), c_(std::move(c)) {
        if (c_.size() != f_.degree()) fail(Errc::InvalidArgument, "coefficient vector has wrong length");
        for (auto& x : c_) x %= f_.characteristic();
    }

    const Field& field() const noexcept { return f_; }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return detail::all_zero(c_); }
    bool is_one() const noexcept { return c_[0] == 1 && detail::is_scalar(c_); }
    /// Value in F_p when the element lies in the prime field.
    Coeff scalar() const {
        if (!detail::is_scalar(c_)) fail(Errc::FieldMismatch, "element is not in the prime field");
        return c_[0];
    }

    bool in_subfield(const Field& sub) const {
        if (!f_.contains(sub)) return false;
        return detail::all_zero(std::span<const Coeff>(c_).subspan(sub.degree()));
    }

    Elem lift(const Field& to) const {
        if (to.level() == f_.level() && to == f_) return *this;
        if (!to.contains(f_)) fail(Errc::FieldMismatch, "target is not an extension of the element's field");
        std::vector<Coeff> c(to.degree(), 0);
        std::copy(c_.begin(), c_.end(), c.begin());
        return Elem(to, std::move(c), Raw{});
    }

    Elem project(const Field& to) const {
        if (!in_subfield(to)) fail(Errc::FieldMismatch, "element does not lie in the requested subfield");
        return Elem(to, std::vector<Coeff>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(to.degree())), Raw{});
    }

    Elem operator-() const {
        std::vector<Coeff> c(c_);
        const Coeff p = f_.characteristic();
        for (auto& x : c) x = x == 0 ? 0 : p - x;
        return Elem(f_, std::move(c), Raw{});
    }

    friend Elem operator+(const Elem& a, const Elem& b) {
        return combine(a, b, [](const Field& f, std::vector<Coeff>& x, const std::vector<Coeff>& y) {
            detail::add_to(f.characteristic(), y, x);
        });
    }
    friend Elem operator-(const Elem& a, const Elem& b) {
        return combine(a, b, [](const Field& f, std::vector<Coeff>& x, const std::vector<Coeff>& y) {
            detail::sub_from(f.characteristic(), y, x);
        });
    }
    friend Elem operator*(const Elem& a, const Elem& b) {
        return combine(a, b, [](const Field& f, std::vector<Coeff>& x, const std::vector<Coeff>& y) {
            detail::mul(f.data(), x, y, x);
        });
    }
    friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    Elem& operator/=(const Elem& o) { return *this = *this / o; }

    Elem inverse() const {
        std::vector<Coeff> out(c_.size());
        detail::inv(f_.data(), c_, out);
        return Elem(f_, std::move(out), Raw{});
    }

    Elem pow(const BigInt& e) const {
        if (e < 0) return inverse().pow(-e);
        std::vector<Coeff> out(c_.size());
        detail::pow_into(f_.data(), c_, e, out);
        return Elem(f_, std::move(out), Raw{});
    }
    Elem pow(std::int64_t e) const { return pow(BigInt(e)); }

    friend bool operator==(const Elem& a, const Elem& b) {
        if (a.f_.level() == b.f_.level()) return a.c_ == b.c_ && a.f_ == b.f_;
        const Elem& lo = a.f_.level() < b.f_.level() ? a : b;
        const Elem& hi = a.f_.level() < b.f_.level() ? b : a;
        if (!hi.f_.contains(lo.f_)) return false;
        return hi.in_subfield(lo.f_) && std::equal(lo.c_.begin(), lo.c_.end(), hi.c_.begin());
    }

    /// Canonical order: lexicographic on the flat coefficient vector, lowest index first.
    friend bool canonical_less(const Elem& a, const Elem& b) noexcept { return a.c_ < b.c_; }

    /// Decimal for prime-field levels, nested bracketed vectors otherwise.
    std::string to_string() const { return format(f_.level(), 0); }

   private:
    struct Raw {};
    Elem(Field f, std::vector<Coeff> c, Raw) : f_(std::move(f)), c_(std::move(c)) {}

    template <class Op>
    static Elem combine(const Elem& a, const Elem& b, Op op) {
        if (a.f_.level() == b.f_.level()) {
            if (!(a.f_ == b.f_)) fail(Errc::FieldMismatch, "operands live in different fields");
            std::vector<Coeff> x(a.c_);
            op(a.f_, x, b.c_);
            return Elem(a.f_, std::move(x), Raw{});
        }
        const bool a_low = a.f_.level() < b.f_.level();
        const Field& top = a_low ? b.f_ : a.f_;
        if (!top.contains(a_low ? a.f_ : b.f_)) fail(Errc::FieldMismatch, "operands live in different towers");
        Elem x = a.lift(top);
        Elem y = b.lift(top);
        op(top, x.c_, y.c_);
        return x;
    }

    std::string format(std::size_t level, std::size_t offset) const {
        if (level == 0) return std::to_string(c_[offset]);
        const Field L = f_.at_level(level);
        const std::size_t w = L.parent().degree();
        std::string s = "[";
        for (std::size_t i = 0; i < L.relative_degree(); ++i) {
            if (i) s += ",";
            s += format(level - 1, offset + i * w);
        }
        return s + "]";
    }

    Field f_;
    std::vector<Coeff> c_;
};

inline Elem Field::zero() const { return Elem(*this, std::vector<Coeff>(degree(), 0)); }

inline Elem Field::one() const {
    std::vector<Coeff> c(degree(), 0);
    c[0] = 1;
    return Elem(*this, std::move(c));
}

inline Elem Field::from_int(std::int64_t v) const {
    std::vector<Coeff> c(degree(), 0);
    const auto p = static_cast<std::int64_t>(characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    c[0] = static_cast<Coeff>(r);
    return Elem(*this, std::move(c));
}

inline Elem Field::from_coeffs(std::vector<Coeff> flat) const { return Elem(*this, std::move(flat)); }

inline Elem Field::generator() const {
    std::vector<Coeff> c(degree(), 0);
    if (level() == 0) fail(Errc::InvalidArgument, "prime field has no generator over a parent");
    c[parent().degree()] = 1;
    return Elem(*this, std::move(c));
}

inline std::vector<Elem> Field::modulus() const {
    if (level() == 0) return {};
    const Field P = parent();
    const std::size_t w = P.degree();
    std::vector<Elem> out;
    for (std::size_t i = 0; i <= relative_degree(); ++i)
        out.push_back(P.from_coeffs(std::vector<Coeff>(d_->modulus.begin() + static_cast<std::ptrdiff_t>(i * w),
                                                       d_->modulus.begin() + static_cast<std::ptrdiff_t>((i + 1) * w))));
    return out;
}

inline Field Field::extend_unchecked(const std::vector<Elem>& monic_coeffs) const {
    if (monic_coeffs.size() < 2) fail(Errc::DegreeZero, "extension modulus must have degree at least 1");
    if (!monic_coeffs.back().is_one()) fail(Errc::InvalidArgument, "extension modulus must be monic");
    auto L = std::make_shared<detail::Level>();
    L->p = characteristic();
    L->parent = d_;
    L->index = level() + 1;
    L->rel_degree = monic_coeffs.size() - 1;
    L->width = degree() * L->rel_degree;
    for (const auto& c : monic_coeffs) {
        const Elem e = c.lift(*this);
        if (!(e.field() == *this)) fail(Errc::FieldMismatch, "modulus coefficient outside the base level");
        L->modulus.insert(L->modulus.end(), e.coeffs().begin(), e.coeffs().end());
        L->modulus_kind.push_back(e.is_zero() ? 0 : detail::is_scalar(e.coeffs()) ? 1 : 2);
    }
    L->order = boost::multiprecision::pow(order(), static_cast<unsigned>(L->rel_degree));
    return Field(std::move(L));
}

inline Elem Field::element_at(std::uint64_t index) const {
    std::vector<Coeff> c(degree(), 0);
    const Coeff p = characteristic();
    for (std::size_t i = degree(); i-- > 0;) {
        c[i] = index % p;
        index /= p;
    }
    return Elem(*this, std::move(c));
}

inline std::vector<Elem> Field::elements(std::uint64_t limit) const {
    if (order() > limit) fail(Errc::FieldTooLarge, "field too large to enumerate");
    const auto n = static_cast<std::uint64_t>(order());
    std::vector<Elem> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

inline Elem Field::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<Coeff> dist(0, characteristic() - 1);
    std::vector<Coeff> c(degree());
    for (auto& x : c) x = dist(rng);
    return Elem(*this, std::move(c));
}

/// a^Q where Q is the cardinality of `base` (a level at or below a's field).
inline Elem frobenius(const Elem& a, const Field& base) {
    if (!a.field().contains(base)) fail(Errc::FieldMismatch, "base is not a subfield");
    return a.pow(base.order());
}

/// Product of the Galois conjugates of a over `down_to`, returned as an element of `down_to`.
/// Computed level by level as determinants of multiplication maps; 0 maps to 0.
inline Elem norm(const Elem& a, const Field& down_to) {
    if (!a.field().contains(down_to)) fail(Errc::FieldMismatch, "norm target is not a subfield");
    Field cur = a.field();
    std::vector<Coeff> v = a.coeffs();
    while (cur.level() > down_to.level()) {
        v = detail::relative_norm(cur.data(), v);
        cur = cur.parent();
    }
    return down_to.from_coeffs(std::move(v));
}

/// Sum of the Galois conjugates of a over `down_to`, returned as an element of `down_to`.
inline Elem trace(const Elem& a, const Field& down_to) {
    if (!a.field().contains(down_to)) fail(Errc::FieldMismatch, "trace target is not a subfield");
    Field cur = a.field();
    std::vector<Coeff> v = a.coeffs();
    while (cur.level() > down_to.level()) {
        v = detail::relative_trace(cur.data(), v);
        cur = cur.parent();
    }
    return down_to.from_coeffs(std::move(v));
}

}  // namespace dynir

#endif
