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

// Serialization. Rationals always travel as "num/den" strings.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nashld/channel.hpp"
#include "nashld/equilibrium.hpp"
#include "nashld/polytope.hpp"
#include "nashld/regions.hpp"
#include "nashld/scheme.hpp"
#include "nashld/verification.hpp"

namespace nashld {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const ChannelParams& p);
Json to_json(const Region2& r);
Json to_json(const LinearSystem& sys);
Json to_json(const NashBounds& nb);
Json to_json(const SimTrace& trace);
Json to_json(const SimulationReport& report);
Json to_json(const RateSplit& split);
Json to_json(const SplitWitness& w);

Json scheme_to_json(const Scheme& s);
// Throws std::invalid_argument on a malformed document (structure only;
// run validate_scheme for semantics).
Scheme scheme_from_json(const Json& j);

Scheme load_scheme(const std::string& path);
void save_scheme(const Scheme& s, const std::string& path);

struct EquilibriumReport {
  RatePair rate_pair;
  bool in_ne_region = false;
  NashBounds bounds;
  std::optional<SplitWitness> witness;
  std::optional<std::string> oracle_class;
  std::optional<OracleResult> oracle;
};

Json to_json(const EquilibriumReport& r);

// "r1,r2" header, then one vertex per line.
std::string region_csv(const Region2& r);

struct PlotLayer {
  std::string label;
  Region2 region;
  bool filled = false;
  std::string stroke;
  std::string fill;
};

// Deterministic standalone SVG: 80 px per rate unit, origin at the bottom
// left, integer grid and axis labels. Points in `marks` get a dot.
std::string region_svg(const std::vector<PlotLayer>& layers, const std::string& title,
                       const std::vector<Point2>& marks = {});

}  // namespace nashld
