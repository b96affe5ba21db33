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

// dynir: command-line front end. See README.md for usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <dynir/cli.hpp>

namespace {

void add_common(CLI::App* sub, dynir::cli::RunConfig& c, std::string& out) {
    sub->add_option("--p", c.p, "field characteristic");
    sub->add_option("--s", c.s, "extension degree over F_p");
    sub->add_option("--nmax", c.n_max, "largest iterate or tower level examined")->capture_default_str();
    sub->add_option("--oracle-max", c.oracle_max, "largest iterate cross-checked by factoring")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads for sweeps");
    sub->add_option("--seed", c.seed, "seed for randomized splitting and sampling");
    sub->add_option("--format", c.format, "text, json, csv or dot")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->add_option("--max-tower-degree", c.max_tower_degree, "largest relative tower degree built by the cubic test");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace dynir::cli;
    CLI::App app{"dynir: dynamical irreducibility of polynomials over finite fields"};
    app.require_subcommand(1);
    RunConfig c;
    std::string out;

    auto* test = app.add_subcommand("test", "verdict for one polynomial");
    add_common(test, c, out);
    test->add_option("--poly", c.poly, "polynomial in x, e.g. \"x^3+6x+2\"")->required();
    test->add_option("--beta", c.beta, "target a: test f^n(x) - a instead of f^n(x)");

    auto* repro = app.add_subcommand("reproduce", "regenerate a reference table");
    add_common(repro, c, out);
    repro->add_option("--table", c.table, "1: unicritical cubics over F_7, 2: cubics over F_3")->required();
    repro->add_option("--degree", c.degree, "degree for table 1");

    auto* search = app.add_subcommand("search", "sweep a family and list survivors");
    add_common(search, c, out);
    search->add_option("--family", c.family, "unicritical, depressed, chu or linearized")->required();
    search->add_option("--degree", c.degree, "degree for the unicritical family");

    auto* verify = app.add_subcommand("verify-linearized", "check every shifted linearized polynomial over F_q");
    add_common(verify, c, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    // table 1 defaults to F_7, table 2 is always over F_3
    if (repro->parsed() && repro->count("--p") == 0 && c.table == 1) c.p = 7;

    CommandResult r;
    try {
        if (test->parsed()) r = cmd_test(c);
        else if (repro->parsed()) r = cmd_reproduce(c);
        else if (search->parsed()) r = cmd_search(c);
        else r = cmd_verify_linearized(c);
    } catch (const dynir::Error& e) {
        std::cerr << "dynir: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string text = r.render(c.format);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "dynir: cannot write " << out << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return r.exit_code;
}
