/*
 * Copyright 2026 The drinfeld-level Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// drinfeld-level: run torsion / equivalence / tangent / isogeny experiments.
//
// Exit codes: 0 every case passed, 1 some case failed, 2 config or usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "drinfeld/errors.hpp"
#include "experiment.hpp"

namespace {

namespace ex = drinfeld::experiments;

struct Options {
  std::string config;
  std::string out;
  std::string csv;
  std::uint64_t max_card = 0;
  unsigned jobs = 1;
  bool print_config = false;
};

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

int execute(ex::Command cmd, const Options& o) {
  if (o.print_config) {
    std::cout << ex::dump(ex::default_config(cmd));
    return 0;
  }
  ex::Config config;
  try {
    config = o.config.empty() ? ex::parse_config(ex::default_config(cmd)) : ex::load_config(o.config);
  } catch (const drinfeld::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  ex::RunOptions ro;
  ro.jobs = o.jobs;
  if (o.max_card) ro.max_card = o.max_card;
  ex::RunResult r;
  try {
    r = ex::run(cmd, config, ro);
  } catch (const drinfeld::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const drinfeld::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = ex::dump(r.document);
  if (o.out.empty()) {
    std::cout << text;
  } else if (!write_file(o.out, text)) {
    std::cerr << "cannot write " << o.out << "\n";
    return 2;
  }
  if (!o.csv.empty() && !write_file(o.csv, ex::to_csv(r))) {
    std::cerr << "cannot write " << o.csv << "\n";
    return 2;
  }
  const auto& s = r.document["payload"]["summary"];
  std::cerr << ex::to_string(cmd) << ": " << s["cases"] << " cases, " << s["passed"] << " passed, " << s["failed"]
            << " failed, " << s["bound_exceeded"] << " over bounds\n";
  return r.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld module level-structure experiments"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, ex::Command>> subs;
  Options opts;
  for (auto cmd : {ex::Command::Torsion, ex::Command::Equivalence, ex::Command::Tangent, ex::Command::Isogeny}) {
    const char* help = "";
    switch (cmd) {
      case ex::Command::Torsion:
        help = "Division polynomials, torsion counts and module structure";
        break;
      case ex::Command::Equivalence:
        help = "Compare the per-prime and single divisor definitions of level structures";
        break;
      case ex::Command::Tangent:
        help = "Deformation classes over l[Y]/(Y^k) and level-structure lifts";
        break;
      case ex::Command::Isogeny:
        help = "Quotient isogenies by division polynomials";
        break;
    }
    CLI::App* sub = app.add_subcommand(ex::to_string(cmd), help);
    sub->add_option("--config", opts.config, "JSON config (default: the built-in grid)")->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out, "JSON output path (default: stdout)");
    sub->add_option("--csv", opts.csv, "CSV output path");
    sub->add_option("--max-card", opts.max_card, "Enumeration bound, overrides the config")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--print-config", opts.print_config, "Print the built-in config and exit");
    subs.emplace_back(sub, cmd);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) return execute(cmd, opts);
  return 2;
}
