// Copyright 2026 The nashld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nashld: eta-Nash regions and scheme simulation for the two-user linear
// deterministic interference channel with noisy output feedback.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nashld/equilibrium.hpp"
#include "nashld/io.hpp"
#include "nashld/regions.hpp"
#include "nashld/scheme.hpp"
#include "nashld/verification.hpp"

namespace {

using namespace nashld;

struct CliConfig {
  ChannelParams params;
  std::string eta;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::int64_t trials = 1000;
  std::string scheme1 = "floor";
  std::string scheme2 = "floor";
  std::string r1;
  std::string r2;
  std::string which = "n";
  bool exhaustive = false;
  bool sweep = false;
  bool oracle = false;
  int max_pattern = 1;
  std::string builtin;
  int user = 1;
};

void add_channel(CLI::App* sub, CliConfig& c, bool required = true) {
  auto nonneg = CLI::Range(0, kMaxLevels);
  auto* o1 = sub->add_option("--n11", c.params.n_fwd_11, "direct bit-pipes of pair 1")->check(nonneg);
  auto* o2 = sub->add_option("--n22", c.params.n_fwd_22, "direct bit-pipes of pair 2")->check(nonneg);
  auto* o3 = sub->add_option("--n12", c.params.n_12, "bit-pipes from transmitter 2 to receiver 1")->check(nonneg);
  auto* o4 = sub->add_option("--n21", c.params.n_21, "bit-pipes from transmitter 1 to receiver 2")->check(nonneg);
  sub->add_option("--fb11", c.params.n_fb_11, "feedback bit-pipes of pair 1")->check(nonneg);
  sub->add_option("--fb22", c.params.n_fb_22, "feedback bit-pipes of pair 2")->check(nonneg);
  if (required) {
    for (auto* o : {o1, o2, o3, o4}) o->required();
  }
}

void add_eta(CLI::App* sub, CliConfig& c) {
  sub->add_option("--eta", c.eta, "eta as an exact rational, e.g. 1/100")->required();
}

void add_output(CLI::App* sub, CliConfig& c, bool formats) {
  if (formats) {
    sub->add_option("--format", c.format, "json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  }
  sub->add_option("--out", c.out, "output file (default: standard output)");
}

Rational parse_eta(const std::string& text) {
  const Rational eta = Rational::parse(text);
  require_positive_eta(eta);
  return eta;
}

void emit(const CliConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + c.out + "'");
  f << text;
}

Scheme resolve_scheme(const ChannelParams& p, const std::string& name, int user) {
  if (name == "floor") return floor_scheme(p, user);
  if (name == "zero") return zero_scheme(p, user);
  if (name == "policed" || name == "cooperative") {
    auto pair = name == "policed" ? policed_pair(p) : cooperative_pair(p);
    return user == 1 ? pair.first : pair.second;
  }
  Scheme s = load_scheme(name);
  if (s.user != user) {
    throw std::invalid_argument("scheme file '" + name + "' is for user " + std::to_string(s.user) +
                                ", expected user " + std::to_string(user));
  }
  return s;
}

std::string render_region(const CliConfig& c, const std::string& label, const Region2& r,
                           const Region2* outline) {
  if (c.format == "csv") return region_csv(r);
  if (c.format == "svg") {
    std::vector<PlotLayer> layers;
    if (outline) layers.push_back({"C", *outline, false, "#1f4fd1", ""});
    layers.push_back({label, r, true, "#1a7f1a", "#9be39b"});
    return region_svg(layers, label + " " + c.params.str() + ", eta = " + c.eta);
  }
  Json j;
  j["params"] = to_json(c.params);
  j["eta"] = c.eta;
  j[label] = to_json(r);
  return j.dump(2) + "\n";
}

int cmd_region(const CliConfig& c) {
  const Rational eta = parse_eta(c.eta);
  const Region2 cap = capacity_region(c.params);
  const Region2 box = box_region(c.params, eta);
  const Region2 ne = intersect(cap, box);
  if (c.format == "json") {
    Json j;
    j["params"] = to_json(c.params);
    j["eta"] = eta.str();
    j["bounds"] = to_json(nash_bounds(c.params, eta));
    j["C"] = to_json(cap);
    j["B_eta"] = to_json(box);
    j["N_eta"] = to_json(ne);
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    const Region2& r = c.which == "c" ? cap : c.which == "b" ? box : ne;
    emit(c, region_csv(r));
  } else {
    emit(c, region_svg({{"C", cap, false, "#1f4fd1", ""}, {"N_eta", ne, true, "#1a7f1a", "#9be39b"}},
                       "C and N_eta for " + c.params.str() + ", eta = " + eta.str()));
  }
  return 0;
}

int cmd_box(const CliConfig& c) {
  const Rational eta = parse_eta(c.eta);
  emit(c, render_region(c, "B_eta", box_region(c.params, eta), nullptr));
  return 0;
}

int cmd_ne(const CliConfig& c) {
  const Rational eta = parse_eta(c.eta);
  const Region2 cap = capacity_region(c.params);
  emit(c, render_region(c, "N_eta", intersect(cap, box_region(c.params, eta)), &cap));
  return 0;
}

EquilibriumReport equilibrium_report(const CliConfig& c, const Rational& eta) {
  EquilibriumReport r;
  r.rate_pair = {Rational::parse(c.r1), Rational::parse(c.r2)};
  r.in_ne_region = is_ne_rate_pair(c.params, eta, r.rate_pair);
  r.bounds = nash_bounds(c.params, eta);
  r.witness = ne_split_search(c.params, eta, r.rate_pair);
  return r;
}

int cmd_ne_check(const CliConfig& c) {
  const Rational eta = parse_eta(c.eta);
  EquilibriumReport r = equilibrium_report(c, eta);
  if (c.oracle) {
    // scheme2 is the fixed profile of user 2; user 1 deviates.
    const Scheme fixed = resolve_scheme(c.params, c.scheme2, 2);
    DeviationClass cls;
    cls.max_pattern_length = c.max_pattern;
    r.oracle_class = cls.str();
    r.oracle = restricted_deviation_oracle(c.params, fixed, cls, eta, Rational(1, kDefaultEpsilonDen),
                                           c.seed);
  }
  emit(c, to_json(r).dump(2) + "\n");
  return 0;
}

int cmd_ne_split(const CliConfig& c) {
  const Rational eta = parse_eta(c.eta);
  const RatePair r{Rational::parse(c.r1), Rational::parse(c.r2)};
  const auto w = ne_split_search(c.params, eta, r);
  Json j;
  j["params"] = to_json(c.params);
  j["eta"] = eta.str();
  j["rate_pair"] = Json::array({r.x.str(), r.y.str()});
  j["witness_split"] = w ? to_json(*w) : Json(nullptr);
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_simulate(const CliConfig& c) {
  const Scheme s1 = resolve_scheme(c.params, c.scheme1, 1);
  const Scheme s2 = resolve_scheme(c.params, c.scheme2, 2);
  const SimulationReport report = run_and_verify(c.params, s1, s2, c.trials, c.exhaustive, c.seed);
  Json j;
  j["params"] = to_json(c.params);
  j["scheme1"] = c.scheme1;
  j["scheme2"] = c.scheme2;
  j["seed"] = c.seed;
  j["report"] = to_json(report);
  emit(c, j.dump(2) + "\n");
  return report.zero_error ? 0 : 2;
}

int cmd_check_inclusions(const CliConfig& c, bool explicit_params) {
  const Rational eta = parse_eta(c.eta);
  std::vector<ChannelParams> tuples;
  if (c.sweep) {
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int d = 0; d < 5; ++d)
          for (int e = 0; e < 5; ++e)
            for (int f = 0; f < 5; ++f)
              for (int g = 0; g < 5; ++g) tuples.push_back({a, b, d, e, f, g});
  } else if (explicit_params) {
    tuples.push_back(c.params);
  } else {
    tuples = figure2_family();
  }
  std::int64_t failures = 0;
  for (const auto& p : tuples) {
    const InclusionReport r = inclusion_report(p, eta);
    if (!r.holds()) ++failures;
    if (!c.sweep || !r.holds()) {
      std::cout << p.str() << " vertices " << r.no_feedback.vertices().size() << " "
                << r.given.vertices().size() << " " << r.perfect_feedback.vertices().size()
                << (r.holds() ? " ok" : " VIOLATED") << "\n";
    }
  }
  std::cout << "checked " << tuples.size() << " tuples, " << failures << " violations\n";
  return failures == 0 ? 0 : 1;
}

int cmd_verify_figure2(const CliConfig& c) {
  const Rational eta = c.eta.empty() ? Rational(1, 100) : parse_eta(c.eta);
  bool all = true;
  const auto report = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    all = all && ok;
  };
  const Region2 base = ne_region({7, 6, 4, 4, 0, 0}, eta);
  bool collapse = true;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) collapse = collapse && equals(ne_region({7, 6, 4, 4, a, b}, eta), base);
  report("N_eta(7,6,4,4,a,b) = N_eta(7,6,4,4,0,0) for a,b in 0..4", collapse);
  for (int a = 5; a <= 7; ++a) {
    bool larger = true;
    for (int b = 0; b <= 4; ++b) {
      larger = larger && strictly_contains(ne_region({7, 6, 4, 4, a, b}, eta), base);
    }
    report("N_eta(7,6,4,4," + std::to_string(a) + ",b) strictly contains the no-feedback region, b in 0..4",
           larger);
  }
  for (int b = 5; b <= 6; ++b) {
    report("N_eta(7,6,4,4,7," + std::to_string(b) + ") strictly contains N_eta(7,6,4,4,7,0)",
           strictly_contains(ne_region({7, 6, 4, 4, 7, b}, eta), ne_region({7, 6, 4, 4, 7, 0}, eta)));
  }
  const ChannelParams fig{7, 6, 4, 4, 5, 0};
  const Region2 ne = ne_region(fig, eta);
  report("(3,4) in N_eta(7,6,4,4,5,0)", contains_point(ne, {3, 4}));
  report("(5,4) in N_eta(7,6,4,4,5,0)", contains_point(ne, {5, 4}));
  for (const bool policed : {true, false}) {
    const auto [s1, s2] = policed ? policed_pair(fig) : cooperative_pair(fig);
    const SimulationReport r = run_and_verify(fig, s1, s2, c.trials, true, c.seed);
    report(std::string(policed ? "policed" : "cooperative") + " schemes: rates (" + r.rate[0].str() +
               ", " + r.rate[1].str() + "), random rate of user 2 " + s2.random_rate.str() + ", " +
               (r.zero_error ? "zero-error" : "errors"),
           r.zero_error);
  }

  if (!c.out.empty()) {
    std::filesystem::create_directories(c.out);
    for (const auto& p : figure2_family()) {
      const Region2 cap = capacity_region(p);
      const Region2 n = intersect(cap, box_region(p, eta));
      const std::string name = "figure2_fb" + std::to_string(p.n_fb_11) + "_" +
                               std::to_string(p.n_fb_22) + ".svg";
      std::ofstream f(std::filesystem::path(c.out) / name, std::ios::binary);
      std::vector<Point2> marks;
      if (p == fig) marks = {{3, 4}, {5, 4}};
      f << region_svg({{"C", cap, false, "#d12f1f", ""}, {"N_eta", n, true, "#1a7f1a", "#9be39b"}},
                      "C and N_eta for " + p.str() + ", eta = " + eta.str(), marks);
    }
  }
  return all ? 0 : 1;
}

int cmd_export_scheme(const CliConfig& c) {
  emit(c, scheme_to_json(resolve_scheme(c.params, c.builtin, c.user)).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eta-Nash regions and bit-level simulation for the linear deterministic "
               "interference channel with noisy feedback"};
  app.require_subcommand(1);
  CliConfig c;

  auto* region = app.add_subcommand("region", "C, B_eta and N_eta");
  add_channel(region, c);
  add_eta(region, c);
  add_output(region, c, true);
  region->add_option("--csv-region", c.which, "region written in csv format: c, b or n")
      ->check(CLI::IsMember({"c", "b", "n"}));

  auto* box = app.add_subcommand("box", "the box B_eta");
  add_channel(box, c);
  add_eta(box, c);
  add_output(box, c, true);

  auto* ne = app.add_subcommand("ne", "the eta-Nash region N_eta");
  add_channel(ne, c);
  add_eta(ne, c);
  add_output(ne, c, true);

  auto* ne_check = app.add_subcommand("ne-check", "equilibrium report for a rate pair");
  add_channel(ne_check, c);
  add_eta(ne_check, c);
  add_output(ne_check, c, false);
  ne_check->add_option("--r1", c.r1, "rate of pair 1")->required();
  ne_check->add_option("--r2", c.r2, "rate of pair 2")->required();
  ne_check->add_flag("--oracle", c.oracle, "run the restricted deviation oracle for user 1 against --scheme2");
  ne_check->add_option("--scheme2", c.scheme2, "fixed scheme of user 2 (file or floor/zero/policed/cooperative)");
  ne_check->add_option("--max-pattern", c.max_pattern, "largest pattern length in the deviation class")
      ->check(CLI::Range(1, 2));
  ne_check->add_option("--seed", c.seed, "random seed");

  auto* ne_split = app.add_subcommand("ne-split", "rate split witnessing an equilibrium");
  add_channel(ne_split, c);
  add_eta(ne_split, c);
  add_output(ne_split, c, false);
  ne_split->add_option("--r1", c.r1, "rate of pair 1")->required();
  ne_split->add_option("--r2", c.r2, "rate of pair 2")->required();

  auto* simulate = app.add_subcommand("simulate", "run two schemes and check decoding");
  add_channel(simulate, c);
  add_output(simulate, c, false);
  simulate->add_option("--scheme1", c.scheme1, "scheme of user 1 (file or floor/zero/policed/cooperative)");
  simulate->add_option("--scheme2", c.scheme2, "scheme of user 2 (file or floor/zero/policed/cooperative)");
  simulate->add_option("--trials", c.trials, "random trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", c.seed, "random seed");
  simulate->add_flag("--exhaustive", c.exhaustive, "enumerate every bit pattern of each block");

  auto* inclusions = app.add_subcommand("check-inclusions", "no-feedback <= given <= perfect-feedback");
  add_channel(inclusions, c, false);
  add_eta(inclusions, c);
  inclusions->add_flag("--sweep", c.sweep, "all tuples in {0..4}^6");

  auto* figure = app.add_subcommand("verify-figure2", "reproduce the (7,6,4,4) feedback study");
  figure->add_option("--eta", c.eta, "eta (default 1/100)");
  figure->add_option("--out", c.out, "directory for per-tuple SVG plots");
  figure->add_option("--trials", c.trials, "random trials")->check(CLI::PositiveNumber);
  figure->add_option("--seed", c.seed, "random seed");

  auto* export_scheme = app.add_subcommand("export-scheme", "write a built-in scheme as JSON");
  add_channel(export_scheme, c);
  add_output(export_scheme, c, false);
  export_scheme->add_option("--builtin", c.builtin, "floor, zero, policed or cooperative")
      ->required()
      ->check(CLI::IsMember({"floor", "zero", "policed", "cooperative"}));
  export_scheme->add_option("--user", c.user, "user 1 or 2")->check(CLI::Range(1, 2));

  CLI11_PARSE(app, argc, argv);

  try {
    validate_params(c.params);
    if (region->parsed()) return cmd_region(c);
    if (box->parsed()) return cmd_box(c);
    if (ne->parsed()) return cmd_ne(c);
    if (ne_check->parsed()) return cmd_ne_check(c);
    if (ne_split->parsed()) return cmd_ne_split(c);
    if (simulate->parsed()) return cmd_simulate(c);
    if (inclusions->parsed()) {
      const bool explicit_params = inclusions->count("--n11") + inclusions->count("--n22") +
                                       inclusions->count("--n12") + inclusions->count("--n21") >
                                   0;
      return cmd_check_inclusions(c, explicit_params);
    }
    if (figure->parsed()) return cmd_verify_figure2(c);
    if (export_scheme->parsed()) return cmd_export_scheme(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
