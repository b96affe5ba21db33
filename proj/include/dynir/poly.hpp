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
 * @file poly.hpp
 * @brief Dense univariate polynomials over any level of a field tower.
 *
 * Coefficients are stored low degree first as consecutive blocks of the level's flat element representation.
 * Prime-field polynomials take scalar fast paths in multiplication and division; every other level goes
 * through the block kernels in field.hpp.
 */

#ifndef DYNIR_POLY_HPP
#define DYNIR_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace dynir {

class Poly {
   public:
    Poly() = default;
    explicit Poly(Field f) : f_(std::move(f)) {}

    Poly(Field f, const std::vector<Elem>& coeffs) : f_(std::move(f)) {
        const std::size_t w = f_.degree();
        c_.assign(coeffs.size() * w, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const Elem e = coeffs[i].lift(f_);
            std::copy(e.coeffs().begin(), e.coeffs().end(), c_.begin() + static_cast<std::ptrdiff_t>(i * w));
        }
        trim();
    }

    /// From a flat block vector (low degree first).
    static Poly from_raw(Field f, std::vector<Coeff> raw) {
        Poly out(std::move(f));
        out.c_ = std::move(raw);
        out.trim();
        return out;
    }

    /// Integer coefficients, low degree first, embedded from the prime field.
    static Poly from_ints(const Field& f, const std::vector<std::int64_t>& low_first) {
        std::vector<Elem> cs;
        for (auto v : low_first) cs.push_back(f.from_int(v));
        return Poly(f, cs);
    }

    static Poly x(const Field& f) { return monomial(f.one(), 1); }
    static Poly constant(const Elem& c) { return Poly(c.field(), {c}); }
    static Poly monomial(const Elem& c, std::size_t k) {
        std::vector<Elem> cs(k + 1, c.field().zero());
        cs[k] = c;
        return Poly(c.field(), cs);
    }

    const Field& field() const noexcept { return f_; }
    std::size_t width() const noexcept { return f_.degree(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size() / width()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Coeff>& raw() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size() / width(); }

    Elem coeff(std::size_t i) const {
        if (i >= size()) return f_.zero();
        const std::size_t w = width();
        return f_.from_coeffs(std::vector<Coeff>(c_.begin() + static_cast<std::ptrdiff_t>(i * w),
                                                 c_.begin() + static_cast<std::ptrdiff_t>((i + 1) * w)));
    }

    Elem leading() const {
        if (is_zero()) return f_.zero();
        return coeff(size() - 1);
    }

    std::vector<Elem> coefficients() const {
        std::vector<Elem> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(coeff(i));
        return out;
    }

    bool is_monic() const { return !is_zero() && leading().is_one(); }

    Poly monic() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "zero polynomial has no monic form");
        return *this * leading().inverse();
    }

    Poly derivative() const {
        if (size() <= 1) return Poly(f_);
        std::vector<Elem> cs;
        for (std::size_t i = 1; i < size(); ++i) cs.push_back(coeff(i) * f_.from_int(static_cast<std::int64_t>(i % f_.characteristic())));
        return Poly(f_, cs);
    }

    /// Horner evaluation; x may live in an extension of the coefficient field.
    Elem operator()(const Elem& x) const {
        const Field& target = x.field().contains(f_) ? x.field() : f_;
        Elem acc = target.zero();
        for (std::size_t i = size(); i-- > 0;) acc = acc * x + coeff(i);
        return acc;
    }

    Poly lift(const Field& to) const {
        if (!to.contains(f_)) fail(Errc::FieldMismatch, "target does not contain the coefficient field");
        if (to.level() == f_.level()) return *this;
        return Poly(to, coefficients());
    }

    Poly operator-() const { return Poly(f_) - *this; }

    friend Poly operator+(const Poly& a, const Poly& b) { return add_sub(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return add_sub(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        const Field f = common(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(f);
        const Poly A = a.lift(f), B = b.lift(f);
        return from_raw(f, raw_mul(f.data(), A.c_, B.c_));
    }

    friend Poly operator*(const Poly& a, const Elem& s) {
        const Field f = a.f_.contains(s.field()) ? a.f_ : s.field();
        const Poly A = a.lift(f);
        const Elem S = s.lift(f);
        std::vector<Coeff> out(A.c_.size());
        const std::size_t w = f.degree();
        for (std::size_t i = 0; i < A.size(); ++i)
            detail::mul(f.data(), detail::CSpan(A.c_.data() + i * w, w), S.coeffs(), detail::MSpan(out.data() + i * w, w));
        return from_raw(f, std::move(out));
    }
    friend Poly operator*(const Elem& s, const Poly& a) { return a * s; }
    friend Poly operator+(const Poly& a, const Elem& s) { return a + constant(s); }
    friend Poly operator-(const Poly& a, const Elem& s) { return a - constant(s); }

    /// Quotient and remainder; throws ZeroPolynomial on division by zero.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
        const Field f = common(a, b);
        const Poly A = a.lift(f), B = b.lift(f);
        auto [q, r] = raw_divrem(f.data(), A.c_, B.c_);
        return {from_raw(f, std::move(q)), from_raw(f, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() && (a.f_.contains(b.f_) || b.f_.contains(a.f_));
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a.coeff(i) == b.coeff(i))) return false;
        return true;
    }

    /// Canonical order: by degree, then coefficient vectors from the top down.
    friend bool canonical_less(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.size(); i-- > 0;) {
            const Elem x = a.coeff(i), y = b.coeff(i);
            if (x == y) continue;
            return canonical_less(x, y);
        }
        return false;
    }

    /// Human form "a_d*x^d + ... + a_0"; unit coefficients and zero terms are omitted.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = size(); i-- > 0;) {
            const Elem c = coeff(i);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            const bool unit = c.is_one();
            if (i == 0) {
                s += c.to_string();
                continue;
            }
            if (!unit) s += c.to_string() + "*";
            s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return s;
    }

    // Raw kernels on flat block vectors (no trailing-zero invariant required on input).
    static std::vector<Coeff> raw_mul(const detail::Level& L, const std::vector<Coeff>& a, const std::vector<Coeff>& b);
    static std::pair<std::vector<Coeff>, std::vector<Coeff>> raw_divrem(const detail::Level& L,
                                                                        const std::vector<Coeff>& a,
                                                                        const std::vector<Coeff>& b);

   private:
    static Field common(const Poly& a, const Poly& b) {
        if (a.f_.contains(b.f_)) return a.f_;
        if (b.f_.contains(a.f_)) return b.f_;
        fail(Errc::FieldMismatch, "polynomials over different fields");
    }

    static Poly add_sub(const Poly& a, const Poly& b, bool sub) {
        const Field f = common(a, b);
        const Poly A = a.lift(f), B = b.lift(f);
        std::vector<Coeff> out(std::max(A.c_.size(), B.c_.size()), 0);
        std::copy(A.c_.begin(), A.c_.end(), out.begin());
        const Coeff p = f.characteristic();
        if (sub)
            detail::sub_from(p, B.c_, out);
        else
            detail::add_to(p, B.c_, out);
        return from_raw(f, std::move(out));
    }

    void trim() {
        const std::size_t w = width();
        while (!c_.empty() && detail::all_zero(detail::CSpan(c_.data() + c_.size() - w, w))) c_.resize(c_.size() - w);
    }

    Field f_;
    std::vector<Coeff> c_;
};

inline std::vector<Coeff> Poly::raw_mul(const detail::Level& L, const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    const std::size_t w = L.width;
    const std::size_t na = a.size() / w, nb = b.size() / w;
    if (na == 0 || nb == 0) return {};
    const Coeff p = L.p;
    if (w == 1) {
        std::vector<unsigned __int128> acc(na + nb - 1, 0);
        for (std::size_t i = 0; i < na; ++i) {
            if (a[i] == 0) continue;
            const Coeff ai = a[i];
            for (std::size_t j = 0; j < nb; ++j) acc[i + j] += static_cast<unsigned __int128>(ai * b[j]);
        }
        std::vector<Coeff> out(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<Coeff>(acc[k] % p);
        return out;
    }
    std::vector<Coeff> out((na + nb - 1) * w, 0), tmp(w);
    for (std::size_t i = 0; i < na; ++i) {
        detail::CSpan ai(a.data() + i * w, w);
        if (detail::all_zero(ai)) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            detail::CSpan bj(b.data() + j * w, w);
            if (detail::all_zero(bj)) continue;
            detail::mul(L, ai, bj, tmp);
            detail::add_to(p, tmp, detail::MSpan(out.data() + (i + j) * w, w));
        }
    }
    return out;
}

inline std::pair<std::vector<Coeff>, std::vector<Coeff>> Poly::raw_divrem(const detail::Level& L,
                                                                          const std::vector<Coeff>& a,
                                                                          const std::vector<Coeff>& b) {
    const std::size_t w = L.width;
    std::size_t nb = b.size() / w;
    while (nb > 0 && detail::all_zero(detail::CSpan(b.data() + (nb - 1) * w, w))) --nb;
    if (nb == 0) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
    const std::size_t na = a.size() / w;
    std::vector<Coeff> r(a);
    if (na < nb) return {{}, r};
    const Coeff p = L.p;
    std::vector<Coeff> q((na - nb + 1) * w, 0);
    std::vector<Coeff> lc_inv(w);
    detail::inv(L, detail::CSpan(b.data() + (nb - 1) * w, w), lc_inv);
    if (w == 1) {
        const Coeff li = lc_inv[0];
        for (std::size_t k = na; k-- > nb - 1;) {
            const Coeff c = r[k] * li % p;
            q[k - nb + 1] = c;
            if (c != 0) {
                const Coeff neg = p - c;
                for (std::size_t j = 0; j < nb; ++j) {
                    if (b[j] == 0) continue;
                    r[k - nb + 1 + j] = (r[k - nb + 1 + j] + neg * b[j]) % p;
                }
            }
        }
        r.resize((nb - 1) * w);
        return {q, r};
    }
    std::vector<Coeff> c(w), tmp(w);
    for (std::size_t k = na; k-- > nb - 1;) {
        detail::mul(L, detail::CSpan(r.data() + k * w, w), lc_inv, c);
        std::copy(c.begin(), c.end(), q.begin() + static_cast<std::ptrdiff_t>((k - nb + 1) * w));
        if (detail::all_zero(c)) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            detail::CSpan bj(b.data() + j * w, w);
            if (detail::all_zero(bj)) continue;
            detail::mul(L, c, bj, tmp);
            detail::sub_from(p, tmp, detail::MSpan(r.data() + (k - nb + 1 + j) * w, w));
        }
    }
    r.resize((nb - 1) * w);
    return {q, r};
}

/// Monic greatest common divisor (zero only when both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// base^e mod m.
inline Poly powmod(const Poly& base, const BigInt& e, const Poly& m) {
    const Field& f = m.field();
    Poly acc = Poly::constant(f.one()) % m;
    Poly b = base % m;
    if (e <= 0) return acc;
    const std::size_t top = boost::multiprecision::msb(e);
    for (std::size_t i = top + 1; i-- > 0;) {
        acc = (acc * acc) % m;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = (acc * b) % m;
    }
    return acc;
}

/// g(f(x)).
inline Poly compose(const Poly& g, const Poly& f) {
    if (!(g.field().contains(f.field()) || f.field().contains(g.field())))
        fail(Errc::FieldMismatch, "compose across different fields");
    const Field F = g.field().contains(f.field()) ? g.field() : f.field();
    Poly acc(F);
    for (std::size_t i = g.size(); i-- > 0;) acc = acc * f + g.coeff(i);
    return acc;
}

/// f composed with itself n times; iterate(f, 0) = x.
inline Poly iterate(const Poly& f, unsigned n) {
    Poly acc = Poly::x(f.field());
    for (unsigned i = 0; i < n; ++i) acc = compose(f, acc);
    return acc;
}

/// phi o f o phi^{-1} for phi(x) = c*x + alpha, i.e. c*f((x - alpha)/c) + alpha.
inline Poly affine_conjugate(const Poly& f, const Elem& c, const Elem& alpha) {
    if (c.is_zero()) fail(Errc::ZeroScale, "conjugating map must have nonzero scale");
    const Elem ci = c.inverse();
    const Poly inner = (Poly::x(f.field()) - alpha) * ci;
    return compose(f, inner) * c + alpha;
}

/// Res(f, g) by the Euclidean recursion Res(f,g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r), r = f mod g.
inline Elem resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) fail(Errc::ZeroPolynomial, "resultant of the zero polynomial");
    const Field F = f.field().contains(g.field()) ? f.field() : g.field();
    Poly a = f.lift(F), b = g.lift(F);
    Elem acc = F.one();
    while (true) {
        const int m = a.degree(), n = b.degree();
        if (n == 0) return acc * b.leading().pow(static_cast<std::int64_t>(m));
        if (m == 0) return acc * a.leading().pow(static_cast<std::int64_t>(n));
        Poly r = a % b;
        if (r.is_zero()) return F.zero();
        if ((m * n) % 2 == 1) acc = -acc;
        acc *= b.leading().pow(static_cast<std::int64_t>(m - r.degree()));
        a = std::move(b);
        b = std::move(r);
    }
}

/// (-1)^{d(d-1)/2} a_d^{d-k-2} Res(f, f') with k = deg f'.
inline Elem discriminant(const Poly& f) {
    const int d = f.degree();
    if (d < 2) fail(Errc::InvalidArgument, "discriminant needs degree at least 2");
    const Poly df = f.derivative();
    if (df.is_zero()) fail(Errc::VanishingDerivative, "derivative vanishes identically");
    const int k = df.degree();
    Elem r = f.leading().pow(static_cast<std::int64_t>(d - k - 2)) * resultant(f, df);
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

}  // namespace dynir

#endif
