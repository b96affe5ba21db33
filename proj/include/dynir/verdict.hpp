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

#ifndef DYNIR_VERDICT_HPP
#define DYNIR_VERDICT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace dynir {

enum class VerdictKind { ProvedDynamicallyIrreducible, ReducibleAtIterate, IrreducibleThrough };

constexpr std::string_view kind_name(VerdictKind k) noexcept {
    switch (k) {
        case VerdictKind::ProvedDynamicallyIrreducible: return "ProvedDynamicallyIrreducible";
        case VerdictKind::ReducibleAtIterate: return "ReducibleAtIterate";
        case VerdictKind::IrreducibleThrough: return "IrreducibleThrough";
    }
    return "Unknown";
}

/// Three-valued outcome. `reason` is a stable machine tag, `detail` free text.
/// Reason tags: rth_power, fourth_power, hypothesis_failure, condition1_nonsquare, condition1_zero,
/// condition2_cube, dickson_reducible, oracle_factor, chu_criterion, chu_excluded, unicritical_criterion,
/// cohen_reducible, linearized_iterate, bound_reached, tower_budget.
struct Verdict {
    VerdictKind kind = VerdictKind::IrreducibleThrough;
    std::optional<unsigned> iterate;
    std::string reason;
    std::string detail;

    static Verdict proved(std::string reason, std::string detail = {}) {
        return {VerdictKind::ProvedDynamicallyIrreducible, std::nullopt, std::move(reason), std::move(detail)};
    }
    static Verdict reducible_at(unsigned n, std::string reason, std::string detail = {}) {
        return {VerdictKind::ReducibleAtIterate, n, std::move(reason), std::move(detail)};
    }
    static Verdict irreducible_through(unsigned n, std::string reason, std::string detail = {}) {
        return {VerdictKind::IrreducibleThrough, n, std::move(reason), std::move(detail)};
    }

    bool proved_irreducible() const noexcept { return kind == VerdictKind::ProvedDynamicallyIrreducible; }
    bool reducible() const noexcept { return kind == VerdictKind::ReducibleAtIterate; }

    /// 0 proved, 1 reducible, 2 inconclusive.
    int exit_code() const noexcept {
        switch (kind) {
            case VerdictKind::ProvedDynamicallyIrreducible: return 0;
            case VerdictKind::ReducibleAtIterate: return 1;
            case VerdictKind::IrreducibleThrough: return 2;
        }
        return 2;
    }

    std::string to_string() const {
        std::string s(kind_name(kind));
        if (iterate) s += "(" + std::to_string(*iterate) + ")";
        return s;
    }
};

}  // namespace dynir

#endif
