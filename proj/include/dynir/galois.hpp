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
 * @file galois.hpp
 * @brief Powers of the relative Frobenius of a tower over one of its levels.
 *
 * sigma^k(x) = x^(Q^k) with Q the cardinality of the base level. An automorphism is determined by the images of
 * the level generators, so sigma^k is applied level by level from those images instead of by exponentiation.
 */

#ifndef DYNIR_GALOIS_HPP
#define DYNIR_GALOIS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "field.hpp"

namespace dynir {

class FrobeniusPowers {
   public:
    FrobeniusPowers(Field top, Field base) : top_(std::move(top)), base_(std::move(base)) {
        if (!top_.contains(base_)) fail(Errc::FieldMismatch, "base is not a subfield");
    }

    const Field& top() const noexcept { return top_; }
    const Field& base() const noexcept { return base_; }

    /// sigma^k(a) for a at any level between base and top.
    Elem apply(std::uint64_t k, const Elem& a) {
        if (!a.field().contains(base_)) fail(Errc::FieldMismatch, "element below the base level");
        return a.field().from_coeffs(apply_raw(k, a.field(), a.coeffs()));
    }

   private:
    using Vec = std::vector<Coeff>;

    Vec apply_raw(std::uint64_t k, const Field& L, detail::CSpan x) {
        if (L.level() <= base_.level() || k == 0) return Vec(x.begin(), x.end());
        const Field P = L.parent();
        const std::size_t w = P.degree(), d = L.relative_degree();
        const auto& pw = powers(k, L);
        Vec out(L.degree(), 0), tmp(w);
        for (std::size_t i = 0; i < d; ++i) {
            detail::CSpan xi(x.data() + i * w, w);
            if (detail::all_zero(xi)) continue;
            const Vec yi = apply_raw(k, P, xi);
            if (i == 0) {
                detail::add_to(L.characteristic(), yi, detail::MSpan(out.data(), w));
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                detail::CSpan pij(pw[i].data() + j * w, w);
                if (detail::all_zero(pij)) continue;
                detail::mul(P.data(), yi, pij, tmp);
                detail::add_to(L.characteristic(), tmp, detail::MSpan(out.data() + j * w, w));
            }
        }
        return out;
    }

    // sigma^k of the generator of level L
    const Vec& image(std::uint64_t k, const Field& L) {
        auto key = std::make_pair(k, L.level());
        if (auto it = images_.find(key); it != images_.end()) return it->second;
        const Elem g = L.generator();
        Vec v;
        if (k == 1) {
            v = g.pow(base_.order()).coeffs();
        } else if (k % 2 == 0) {
            const Vec half = image(k / 2, L);
            v = apply_raw(k / 2, L, half);
        } else {
            const Vec prev = image(k - 1, L);
            v = apply_raw(1, L, prev);
        }
        return images_.emplace(key, std::move(v)).first->second;
    }

    // image(k, L)^i for i < relative degree
    const std::vector<Vec>& powers(std::uint64_t k, const Field& L) {
        auto key = std::make_pair(k, L.level());
        if (auto it = powers_.find(key); it != powers_.end()) return it->second;
        const Vec img = image(k, L);
        std::vector<Vec> pw;
        Vec cur(L.degree(), 0);
        cur[0] = 1;
        for (std::size_t i = 0; i < L.relative_degree(); ++i) {
            pw.push_back(cur);
            detail::mul(L.data(), cur, img, cur);
        }
        return powers_.emplace(key, std::move(pw)).first->second;
    }

    Field top_, base_;
    std::map<std::pair<std::uint64_t, std::size_t>, Vec> images_;
    std::map<std::pair<std::uint64_t, std::size_t>, std::vector<Vec>> powers_;
};

}  // namespace dynir

#endif
