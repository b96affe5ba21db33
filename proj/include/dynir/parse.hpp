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
 * @file parse.hpp
 * @brief Text input for field elements and polynomials.
 *
 * Elements are integers (read mod p and embedded) or bracketed coefficient lists matching the tower, low degree
 * first, nested one bracket per level: "[3,1]" is 3 + 1*t over a degree-2 level. Polynomials are sums of terms
 * c*x^k with optional '*', implicit coefficient 1 and optional spaces, e.g. "2x^3 - x + [1,4]".
 */

#ifndef DYNIR_PARSE_HPP
#define DYNIR_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace dynir {

namespace detail {

class Cursor {
   public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    // decimal integer, reduced mod m on the fly (m = 0 keeps it exact up to 64 bits)
    std::uint64_t number(std::uint64_t m) {
        if (!at_digit()) error("expected a number");
        unsigned __int128 v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
            if (m) v %= m;
            else if (v > UINT64_MAX) error("number too large");
            ++i_;
        }
        return static_cast<std::uint64_t>(v);
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::ParseError, what + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
    }

   private:
    std::string_view s_;
    std::size_t i_ = 0;
};

inline std::vector<Coeff> parse_block(Cursor& c, const Field& F, std::size_t level) {
    const Field L = F.at_level(level);
    std::vector<Coeff> out(L.degree(), 0);
    if (c.accept('-')) {
        auto v = parse_block(c, F, level);
        for (auto& x : v) x = x == 0 ? 0 : F.characteristic() - x;
        return v;
    }
    if (c.at_digit()) {
        out[0] = c.number(F.characteristic());
        return out;
    }
    if (level == 0) c.error("nested list deeper than the tower");
    c.expect('[');
    const std::size_t w = L.parent().degree();
    std::size_t i = 0;
    if (!c.accept(']')) {
        do {
            if (i >= L.relative_degree()) c.error("too many coefficients for the level");
            auto v = parse_block(c, F, level - 1);
            std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(i * w));
            ++i;
        } while (c.accept(','));
        c.expect(']');
    }
    return out;
}

}  // namespace detail

inline Elem parse_elem(const Field& F, std::string_view text) {
    detail::Cursor c(text);
    auto v = detail::parse_block(c, F, F.level());
    if (!c.done()) c.error("trailing input");
    return F.from_coeffs(std::move(v));
}

inline Poly parse_poly(const Field& F, std::string_view text) {
    detail::Cursor c(text);
    std::map<std::size_t, Elem> terms;
    if (c.done()) c.error("empty polynomial");
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.accept('+')) {
        } else if (c.accept('-')) {
            neg = true;
        } else if (!first) {
            c.error("expected '+' or '-'");
        }
        first = false;
        Elem coef = F.one();
        bool have_coef = false;
        if (c.at_digit() || c.peek() == '[') {
            coef = F.from_coeffs(detail::parse_block(c, F, F.level()));
            have_coef = true;
            c.accept('*');
        }
        std::size_t k = 0;
        if (c.accept('x') || c.accept('X')) {
            k = 1;
            if (c.accept('^')) k = static_cast<std::size_t>(c.number(0));
        } else if (!have_coef) {
            c.error("expected a term");
        }
        if (neg) coef = -coef;
        auto it = terms.find(k);
        if (it == terms.end()) terms.emplace(k, coef);
        else it->second += coef;
    }
    const std::size_t deg = terms.rbegin()->first;
    std::vector<Elem> cs(deg + 1, F.zero());
    for (auto& [k, v] : terms) cs[k] = v;
    return Poly(F, cs);
}

}  // namespace dynir

#endif
