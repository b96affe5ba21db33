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
 * @file cli.hpp
 * @brief Command implementations behind tools/dynir: test, reproduce, search, verify-linearized.
 *
 * Each command returns every rendering it supports; the front end picks one by --format. Exit codes:
 * 0 proved irreducible (or a command that completed cleanly), 1 reducible, 2 inconclusive, 3 usage error.
 */

#ifndef DYNIR_CLI_HPP
#define DYNIR_CLI_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubic.hpp"
#include "linearized.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "unicritical.hpp"

namespace dynir::cli {

inline constexpr int kExitUsage = 3;

struct RunConfig {
    std::uint64_t p = 7;
    unsigned s = 1;
    std::string poly;
    std::optional<std::string> beta;
    unsigned n_max = 10;
    unsigned oracle_max = 5;
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSplitSeed;
    std::string format = "text";
    std::string family;
    unsigned degree = 3;
    int table = 0;
    std::uint64_t max_tower_degree = 6561;
    unsigned oracle_degree_cap = 729;  ///< largest iterate degree the plain oracle route factors
};

struct CommandResult {
    Json json;
    std::string text;
    std::string csv;
    std::string dot;
    int exit_code = 0;

    std::string render(const std::string& format) const {
        if (format == "json") return json.dump(2) + "\n";
        if (format == "csv") return csv;
        if (format == "dot") return dot;
        return text;
    }
};

/// DYNIR_SEED, when set, replaces the configured seed.
inline void apply_env(RunConfig& c) {
    if (const char* s = std::getenv("DYNIR_SEED"); s && *s) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 0);
        if (end && *end == '\0') c.seed = v;
        else fail(Errc::InvalidArgument, "DYNIR_SEED is not an integer");
    }
}

inline void validate(RunConfig& c) {
    if (c.n_max < 1) fail(Errc::InvalidArgument, "--nmax must be at least 1");
    if (c.s < 1) fail(Errc::InvalidArgument, "--s must be at least 1");
    if (c.jobs < 1) c.jobs = 1;
    c.oracle_max = std::min(c.oracle_max, c.n_max);
    static const std::vector<std::string> formats{"text", "json", "csv", "dot"};
    if (std::find(formats.begin(), formats.end(), c.format) == formats.end())
        fail(Errc::InvalidArgument, "unknown format " + c.format);
}

inline Field make_field(const RunConfig& c) { return build_field(c.p, {c.s}); }

inline std::string field_name(const Field& F) {
    std::string s = "F_" + std::to_string(F.characteristic());
    if (F.degree() > 1) s += "^" + std::to_string(F.degree());
    return s;
}

inline Json config_json(const RunConfig& c) {
    Json j{{"p", c.p},         {"s", c.s},           {"n_max", c.n_max}, {"oracle_max", c.oracle_max},
           {"seed", c.seed},   {"max_tower_degree", c.max_tower_degree}};
    if (!c.poly.empty()) j["poly"] = c.poly;
    j["beta"] = c.beta ? Json(*c.beta) : Json(nullptr);
    if (!c.family.empty()) j["family"] = c.family;
    return j;
}

/// Runs fn(i) for i < n on `jobs` workers; results keep index order, so output does not depend on scheduling.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, const std::function<R(std::size_t)>& fn) {
    std::vector<std::optional<R>> slots(n);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned w) {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) slots[i] = fn(i);
        } catch (...) {
            errors[w] = std::current_exception();
            next = n;
        }
    };
    if (jobs <= 1 || n <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// test

struct Analysis {
    std::string route;
    Verdict verdict;
    Json evidence = Json::object();
    std::vector<std::string> lines;  ///< human-readable evidence
    std::vector<Elem> critical_seeds;
};

namespace detail {

inline std::string join(const std::vector<Elem>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
    return s;
}

inline Analysis oracle_route(const Poly& f, const Elem& beta, const RunConfig& c) {
    Analysis a;
    a.route = "oracle";
    Poly it = f;
    Json checks = Json::array();
    const auto d = static_cast<std::size_t>(f.degree());
    std::size_t deg = d;
    unsigned last = 0;
    for (unsigned n = 1; n <= c.oracle_max && deg <= c.oracle_degree_cap; ++n, deg *= d) {
        if (n > 1) it = compose(f, it);
        const Poly target = it - beta;
        const bool irr = is_irreducible(target);
        Json rec{{"iterate", n}, {"degree", deg}, {"irreducible", irr}};
        if (!irr) {
            if (deg <= 243) rec["factorization"] = to_json(factor(target, c.seed));
            checks.push_back(rec);
            a.verdict = Verdict::reducible_at(n, "oracle_factor", "iterate " + std::to_string(n) + " factors");
            a.lines.push_back("iterate " + std::to_string(n) + ": reducible");
            a.evidence["oracle"] = checks;
            return a;
        }
        checks.push_back(rec);
        a.lines.push_back("iterate " + std::to_string(n) + ": irreducible");
        last = n;
    }
    a.evidence["oracle"] = checks;
    a.verdict = Verdict::irreducible_through(last, "bound_reached", "oracle degree cap or --oracle-max reached");
    return a;
}

inline Analysis linearized_route(const Poly& f) {
    Analysis a;
    a.route = "linearized";
    const ShiftedLinearized s = as_shifted_linearized(f);
    const CohenResult c = cohen_test(s);
    a.evidence["cohen"] = to_json(c);
    a.lines.push_back(std::string("cohen: ") + (c.irreducible ? "irreducible" : "reducible"));
    if (c.witness.A) a.lines.push_back("A = " + c.witness.A->to_string() + ", trace = " + c.witness.trace_value->to_string());
    a.verdict = linearized_verdict(s);
    return a;
}

inline Analysis unicritical_route(const UnicriticalForm& u, const std::optional<Elem>& beta) {
    Analysis a;
    a.route = "unicritical";
    a.critical_seeds = {u.gamma};
    a.lines.push_back("critical point " + u.gamma.to_string() + ", centered form " + u.centered.to_string());
    OrbitReport r;
    if (!beta) {
        r = unicritical_verdict(u);
    } else {
        const Elem target = *beta - u.gamma;
        if (!hypothesis_check(u.d, u.original.field()).ok) {
            r.orbit = forward_orbit(u.centered, u.centered.field().zero());
            r.verdict = Verdict::reducible_at(1, "hypothesis_failure", "first iterate factors");
        } else {
            r = pair_test(u.centered, target);
        }
    }
    a.evidence["orbit"] = to_json(r);
    a.lines.push_back("orbit tail [" + join(r.orbit.tail) + "] cycle [" + join(r.orbit.cycle) + "]");
    if (!r.adjusted.empty()) a.lines.push_back("adjusted critical orbit {" + join(r.value_set()) + "}");
    a.verdict = r.verdict;
    return a;
}

inline Analysis chu_route(const Elem& alpha) {
    Analysis a;
    a.route = "chu";
    const Elem two = alpha.field().from_int(2);
    a.verdict = chu_test(alpha);
    if (!(alpha == two || alpha == -two)) {
        const ChuCriterion c = chu_criterion(alpha);
        a.evidence["chu"] = to_json(c);
        a.lines.push_back("-3(a^2 - 4) = " + c.disc.to_string() + (c.disc_nonzero_square ? " (nonzero square)" : " (not a nonzero square)"));
        if (!c.roots.empty())
            a.lines.push_back("roots of x^2 - a x + 1: " + join(c.roots) + (c.holds ? " (no cubes)" : " (a cube)"));
    }
    a.evidence["alpha"] = alpha.to_string();
    return a;
}

inline Analysis cubic_route(const Poly& f, const std::optional<Elem>& beta, const RunConfig& c) {
    Analysis a;
    a.route = "cubic";
    DepressedCubic h = depress(f);
    if (beta) h.beta0 = h.beta0 + *beta;
    CubicOptions opt;
    opt.n_max = c.n_max;
    opt.oracle_max = c.oracle_max;
    opt.max_tower_degree = c.max_tower_degree;
    const CubicReport r = recursive_test(h, opt);
    a.evidence["cubic"] = to_json(r);
    if (!beta) {
        const GnosResult g = gnos_check(f, std::min(c.n_max, 12u));
        Json gj{{"pass", g.pass}};
        gj["first_violation"] = g.first_violation ? Json(*g.first_violation) : Json(nullptr);
        a.evidence["gnos"] = gj;
    }
    a.lines.push_back("depressed " + h.poly().to_string() + " with target " + h.beta0.to_string());
    std::string seq;
    for (const auto& v : r.cond1.values) seq += (seq.empty() ? "" : ",") + v.to_string();
    a.lines.push_back("condition 1 sequence (" + seq + (r.cond1.cycle ? ", periodic)" : ")"));
    std::string norms;
    for (const auto& l : r.levels)
        if (l.cond2) norms += (norms.empty() ? "" : ",") + l.cond2->norm.to_string();
    a.lines.push_back("condition 2 norms (" + norms + ")");
    for (const auto& [k, irr] : r.oracle)
        a.lines.push_back("oracle iterate " + std::to_string(k) + ": " + (irr ? "irreducible" : "reducible"));
    a.verdict = r.verdict;
    // critical points, in F_q^2 when they are not rational
    const Poly hd = f.derivative();
    auto roots = roots_in_field(hd);
    if (!roots.empty()) {
        a.critical_seeds = roots;
    } else if (hd.degree() == 2) {
        const Field E = extend_field(f.field(), hd.monic());
        const Elem g = E.generator();
        a.critical_seeds = {g, frobenius(g, f.field())};
    }
    return a;
}

}  // namespace detail

/// Shape detection and dispatch: linearized, unicritical, the x^3 - 3x family, other cubics (p > 3), oracle.
inline Analysis analyze(const Poly& f, const std::optional<Elem>& beta, const RunConfig& c) {
    const Field& F = f.field();
    const Coeff p = F.characteristic();
    const int d = f.degree();
    if (d < 1) fail(Errc::ConstantPolynomial, "polynomial must be nonconstant");
    if (d == 1) {
        Analysis a;
        a.route = "linear";
        a.verdict = Verdict::proved("linear", "every iterate has degree 1");
        return a;
    }
    if (!beta && is_shifted_linearized(f)) return detail::linearized_route(f);
    if (static_cast<Coeff>(d) % p != 0) {
        if (auto u = detect_unicritical(f)) return detail::unicritical_route(*u, beta);
    }
    if (d == 3 && p > 3) {
        if (!beta) {
            if (auto alpha = detect_chu(f)) return detail::chu_route(*alpha);
        }
        return detail::cubic_route(f, beta, c);
    }
    return detail::oracle_route(f, beta ? *beta : F.zero(), c);
}

inline CommandResult cmd_test(RunConfig c) {
    apply_env(c);
    validate(c);
    if (c.poly.empty()) fail(Errc::InvalidArgument, "--poly is required");
    const Field F = make_field(c);
    const Poly f = parse_poly(F, c.poly);
    std::optional<Elem> beta;
    if (c.beta) beta = parse_elem(F, *c.beta);
    const Analysis a = analyze(f, beta, c);

    CommandResult out;
    out.exit_code = a.verdict.exit_code();
    out.json = {{"command", "test"},
                {"config", config_json(c)},
                {"field", field_json(F)},
                {"poly", to_json(f)},
                {"route", a.route},
                {"evidence", a.evidence},
                {"verdict", to_json(a.verdict)},
                {"seed", c.seed}};
    std::ostringstream t;
    t << "polynomial: " << f.to_string() << " over " << field_name(F) << "\n";
    if (beta) t << "target: " << beta->to_string() << "\n";
    t << "route: " << a.route << "\n";
    for (const auto& l : a.lines) t << "  " << l << "\n";
    t << "verdict: " << a.verdict.to_string() << " [" << a.verdict.reason << "]";
    if (!a.verdict.detail.empty()) t << " " << a.verdict.detail;
    t << "\n";
    out.text = t.str();
    out.csv = csv("test", {"polynomial", "field", "route", "verdict", "iterate", "reason"},
                  {{f.to_string(), field_name(F), a.route, std::string(kind_name(a.verdict.kind)),
                    a.verdict.iterate ? std::to_string(*a.verdict.iterate) : "", a.verdict.reason}});
    out.dot = portrait_dot(f, a.critical_seeds);
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// reproduce

/// Least n <= bound with f^n reducible, by factoring.
inline std::optional<unsigned> least_reducible_iterate(const Poly& f, unsigned bound) {
    Poly it = f;
    for (unsigned n = 1; n <= bound; ++n) {
        if (n > 1) it = compose(f, it);
        if (!is_irreducible(it)) return n;
    }
    return std::nullopt;
}

/// The cubics over F_3 listed with their least reducible iterate.
inline const std::vector<std::string>& table2_polys() {
    static const std::vector<std::string> polys{
        "x^3+2x+1",       "x^3+2x+2",       "x^3+x^2+2",      "x^3+x^2+x+2",       "x^3+2x^2+1",
        "x^3+2x^2+x+1",   "2x^3+x+1",       "2x^3+x+2",       "2x^3+x^2+x+1",      "2x^3+x^2+2x+2",
        "2x^3+2x^2+x+2",  "2x^3+2x^2+2x+1", "x^3+x^2+2x+1",   "x^3+2x^2+2x+2",     "2x^3+x^2+2",
        "2x^3+2x^2+1"};
    return polys;
}

struct Table1Row {
    Poly poly;
    std::vector<Elem> orbit_set;
};

/// Dynamically irreducible a x^d + c with a, c nonzero, sorted by adjusted orbit set, then a, then c.
inline std::vector<Table1Row> table1_rows(const Field& F, unsigned d, unsigned jobs = 1) {
    std::vector<std::pair<Elem, Elem>> grid;
    for (const auto& a : F.elements())
        for (const auto& c : F.elements())
            if (!a.is_zero() && !c.is_zero()) grid.emplace_back(a, c);
    auto results = parallel_map<std::optional<Table1Row>>(grid.size(), jobs, [&](std::size_t i) -> std::optional<Table1Row> {
        std::vector<Elem> cs(d + 1, F.zero());
        cs[0] = grid[i].second;
        cs[d] = grid[i].first;
        const Poly f(F, cs);
        const auto u = detect_unicritical(f);
        const OrbitReport r = unicritical_verdict(*u);
        if (!r.verdict.proved_irreducible()) return std::nullopt;
        return Table1Row{f, r.value_set()};
    });
    std::vector<Table1Row> rows;
    for (auto& r : results)
        if (r) rows.push_back(std::move(*r));
    auto key = [](const std::vector<Elem>& s) {
        std::vector<std::vector<Coeff>> k;
        for (const auto& e : s) k.push_back(e.coeffs());
        return k;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const Table1Row& x, const Table1Row& y) {
        const auto kx = key(x.orbit_set), ky = key(y.orbit_set);
        if (kx != ky) return kx < ky;
        const Elem ax = x.poly.leading(), ay = y.poly.leading();
        if (!(ax == ay)) return canonical_less(ax, ay);
        return canonical_less(x.poly.coeff(0), y.poly.coeff(0));
    });
    return rows;
}

inline CommandResult cmd_reproduce(RunConfig c) {
    apply_env(c);
    validate(c);
    CommandResult out;
    std::ostringstream t;
    if (c.table == 1) {
        const Field F = make_field(c);
        const auto rows = table1_rows(F, c.degree, c.jobs);
        Json jr = Json::array();
        std::vector<std::vector<std::string>> cr;
        std::map<std::string, std::vector<std::string>> groups;
        std::vector<std::string> group_order;
        for (const auto& r : rows) {
            Json set = Json::array();
            for (const auto& e : r.orbit_set) set.push_back(e.to_string());
            const std::string key = "{" + detail::join(r.orbit_set) + "}";
            jr.push_back({{"polynomial", r.poly.to_string()}, {"adjusted_orbit", set}});
            cr.push_back({r.poly.to_string(), key});
            if (!groups.count(key)) group_order.push_back(key);
            groups[key].push_back(r.poly.to_string());
        }
        out.json = {{"command", "reproduce"}, {"table", 1}, {"field", field_json(F)}, {"degree", c.degree},
                    {"rows", jr},             {"count", rows.size()}, {"seed", c.seed}};
        out.csv = csv("table1", {"polynomial", "adjusted_orbit"}, cr);
        t << "dynamically irreducible a*x^" << c.degree << " + c over " << field_name(F) << ": " << rows.size() << "\n";
        for (const auto& g : group_order) {
            t << g << ":";
            for (const auto& p : groups[g]) t << " " << p << ";";
            t << "\n";
        }
    } else if (c.table == 2) {
        const Field F = Field::prime(3);
        const unsigned bound = std::max(4u, std::min(c.n_max, 6u));
        const auto& polys = table2_polys();
        auto mins = parallel_map<std::optional<unsigned>>(polys.size(), c.jobs, [&](std::size_t i) {
            return least_reducible_iterate(parse_poly(F, polys[i]), bound);
        });
        Json jr = Json::array();
        std::vector<std::vector<std::string>> cr;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const Poly f = parse_poly(F, polys[i]);
            jr.push_back({{"polynomial", f.to_string()}, {"min_reducible_iterate", mins[i] ? Json(*mins[i]) : Json(nullptr)}});
            cr.push_back({f.to_string(), mins[i] ? std::to_string(*mins[i]) : ""});
            t << f.to_string() << " -> " << (mins[i] ? std::to_string(*mins[i]) : "none up to " + std::to_string(bound)) << "\n";
        }
        // every cubic with lead 1 or 2
        std::vector<Poly> all;
        for (int a3 = 1; a3 <= 2; ++a3)
            for (int a2 = 0; a2 < 3; ++a2)
                for (int a1 = 0; a1 < 3; ++a1)
                    for (int a0 = 0; a0 < 3; ++a0) all.push_back(Poly::from_ints(F, {a0, a1, a2, a3}));
        auto all_mins = parallel_map<std::optional<unsigned>>(all.size(), c.jobs, [&](std::size_t i) {
            return least_reducible_iterate(all[i], 4);
        });
        Json survivors = Json::array();
        for (std::size_t i = 0; i < all.size(); ++i)
            if (!all_mins[i]) survivors.push_back(all[i].to_string());
        out.json = {{"command", "reproduce"}, {"table", 2}, {"field", field_json(F)}, {"rows", jr},
                    {"count", polys.size()},  {"sweep", {{"total", all.size()}, {"bound", 4}, {"irreducible_through_bound", survivors}}},
                    {"seed", c.seed}};
        out.csv = csv("table2", {"polynomial", "min_reducible_iterate"}, cr);
        t << "cubics over F_3 with lead 1 or 2 irreducible through iterate 4: " << survivors.size() << " of " << all.size() << "\n";
    } else {
        fail(Errc::InvalidArgument, "--table must be 1 or 2");
    }
    out.text = t.str();
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// search

inline CommandResult cmd_search(RunConfig c) {
    apply_env(c);
    validate(c);
    const Field F = make_field(c);
    CommandResult out;
    if (c.family == "linearized") {
        const LinearizedSweep s = verify_theorem52(F, c.seed);
        out.json = {{"command", "search"}, {"family", c.family}, {"report", to_json(s)}, {"survivors", Json::array()},
                    {"seed", c.seed}};
        out.text = s.field + ": " + std::to_string(s.total) + " polynomials, " + std::to_string(s.counterexamples.size()) +
                   " counterexamples\n";
        out.csv = csv("search-linearized", {"field", "total", "reducible_at_2", "counterexamples"},
                      {{s.field, std::to_string(s.total), std::to_string(s.reducible_at_2), std::to_string(s.counterexamples.size())}});
        out.exit_code = s.counterexamples.empty() ? 0 : 1;
        return out;
    }

    std::vector<Poly> items;
    const auto els = F.elements();
    if (c.family == "unicritical") {
        if (c.degree < 2) fail(Errc::InvalidArgument, "--degree must be at least 2");
        for (const auto& a : els)
            for (const auto& b : els) {
                if (a.is_zero() || b.is_zero()) continue;
                std::vector<Elem> cs(c.degree + 1, F.zero());
                cs[0] = b;
                cs[c.degree] = a;
                items.emplace_back(F, cs);
            }
    } else if (c.family == "depressed") {
        for (const auto& b1 : els)
            for (const auto& b0 : els) items.emplace_back(F, std::vector<Elem>{b0, b1, F.zero(), F.one()});
    } else if (c.family == "chu") {
        require_char_above_3(F);
        for (const auto& a : els) items.push_back(chu_polynomial(a));
    } else {
        fail(Errc::UnknownFamily, "unknown family '" + c.family + "' (unicritical, depressed, chu, linearized)");
    }

    auto verdicts = parallel_map<std::pair<std::string, Verdict>>(items.size(), c.jobs, [&](std::size_t i) {
        const Poly& f = items[i];
        if (c.family == "depressed" && f.coeff(1).is_zero() && f.coeff(0).is_zero())
            return std::make_pair(std::string("unicritical"), Verdict::reducible_at(1, "rth_power", "x^3 has the root 0"));
        const Analysis a = analyze(f, std::nullopt, c);
        return std::make_pair(a.route, a.verdict);
    });
    Json rows = Json::array(), survivors = Json::array();
    std::map<std::string, std::size_t> histogram;
    std::vector<std::vector<std::string>> cr;
    std::ostringstream t;
    std::size_t nsurv = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [route, v] = verdicts[i];
        histogram[v.to_string()]++;
        rows.push_back({{"polynomial", items[i].to_string()}, {"route", route}, {"verdict", to_json(v)}});
        cr.push_back({items[i].to_string(), route, std::string(kind_name(v.kind)), v.iterate ? std::to_string(*v.iterate) : "",
                      v.reason});
        if (!v.reducible()) {
            survivors.push_back({{"polynomial", items[i].to_string()}, {"verdict", v.to_string()}});
            t << "survivor: " << items[i].to_string() << "  " << v.to_string() << "\n";
            ++nsurv;
        }
    }
    Json hist = Json::object();
    for (const auto& [k, n] : histogram) hist[k] = n;
    t << c.family << " over " << field_name(F) << ": " << items.size() << " polynomials, " << nsurv << " survivors\n";
    for (const auto& [k, n] : histogram) t << "  " << k << ": " << n << "\n";
    out.json = {{"command", "search"}, {"family", c.family}, {"field", field_json(F)}, {"config", config_json(c)},
                {"rows", rows},        {"survivors", survivors}, {"histogram", hist}, {"seed", c.seed}};
    out.csv = csv("search-" + c.family, {"polynomial", "route", "verdict", "iterate", "reason"}, cr);
    out.text = t.str();
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// verify-linearized

inline CommandResult cmd_verify_linearized(RunConfig c) {
    apply_env(c);
    validate(c);
    const Field F = make_field(c);
    const LinearizedSweep s = verify_theorem52(F, c.seed);
    CommandResult out;
    out.json = to_json(s);
    std::ostringstream t;
    t << s.field << (s.exhaustive ? " (exhaustive)" : " (sampled)") << ": " << s.total << " polynomials\n";
    t << "  second iterate reducible: " << s.reducible_at_2 << "\n";
    if (s.reducible_at_3) t << "  third iterate reducible: " << *s.reducible_at_3 << "\n";
    for (const auto& f : s.irreducible_at_2) t << "  second iterate irreducible: " << f.to_string() << "\n";
    t << "  counterexamples: " << s.counterexamples.size() << "\n";
    out.text = t.str();
    out.csv = csv("verify-linearized", {"field", "exhaustive", "total", "reducible_at_2", "reducible_at_3", "counterexamples"},
                  {{s.field, s.exhaustive ? "true" : "false", std::to_string(s.total), std::to_string(s.reducible_at_2),
                    s.reducible_at_3 ? std::to_string(*s.reducible_at_3) : "", std::to_string(s.counterexamples.size())}});
    out.exit_code = s.counterexamples.empty() ? 0 : 1;
    return out;
}

}  // namespace dynir::cli

#endif
