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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nashld/equilibrium.hpp"
#include "nashld/io.hpp"
#include "nashld/regions.hpp"
#include "nashld/scheme.hpp"
#include "nashld/verification.hpp"

namespace py = pybind11;

namespace {

using nashld::ChannelParams;
using nashld::Rational;
using Params = std::tuple<int, int, int, int, int, int>;
using RationalPair = std::pair<std::string, std::string>;

ChannelParams to_params(const Params& t) {
  const ChannelParams p{std::get<0>(t), std::get<1>(t), std::get<2>(t),
                        std::get<3>(t), std::get<4>(t), std::get<5>(t)};
  nashld::validate_params(p);
  return p;
}

std::vector<RationalPair> vertices(const nashld::Region2& r) {
  std::vector<RationalPair> out;
  for (const auto& v : r.vertices()) out.emplace_back(v.x.str(), v.y.str());
  return out;
}

using RegionFn = nashld::Region2 (*)(const ChannelParams&, const Rational&);

std::vector<RationalPair> region_with_eta(RegionFn fn, const Params& p, const std::string& eta) {
  return vertices(fn(to_params(p), Rational::parse(eta)));
}

std::pair<nashld::Scheme, nashld::Scheme> builtin_pair(const ChannelParams& p,
                                                       const std::string& name) {
  if (name == "floor") return {nashld::floor_scheme(p, 1), nashld::floor_scheme(p, 2)};
  if (name == "zero") return {nashld::zero_scheme(p, 1), nashld::zero_scheme(p, 2)};
  if (name == "policed") return nashld::policed_pair(p);
  if (name == "cooperative") return nashld::cooperative_pair(p);
  throw std::invalid_argument("unknown built-in pair '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact regions and bit-level simulation; rationals cross as \"num/den\" strings.";

  py::register_exception<nashld::DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("theta", [](const Params& p, int i) { return nashld::theta(to_params(p), i).theta; });
  m.def("nash_bounds", [](const Params& p, const std::string& eta) {
    const auto nb = nashld::nash_bounds(to_params(p), Rational::parse(eta));
    return std::make_pair(RationalPair{nb.lower[0].str(), nb.lower[1].str()},
                          RationalPair{nb.upper[0].str(), nb.upper[1].str()});
  });
  m.def("capacity_region",
        [](const Params& p) { return vertices(nashld::capacity_region(to_params(p))); });
  m.def("box_region", [](const Params& p, const std::string& eta) {
    return region_with_eta(&nashld::box_region, p, eta);
  });
  m.def("ne_region", [](const Params& p, const std::string& eta) {
    return region_with_eta(&nashld::ne_region, p, eta);
  });
  m.def("ne_region_constructive", [](const Params& p, const std::string& eta) {
    return region_with_eta(&nashld::ne_region_constructive, p, eta);
  });
  m.def("is_ne_rate_pair", [](const Params& p, const std::string& eta, const std::string& r1,
                              const std::string& r2) {
    return nashld::is_ne_rate_pair(to_params(p), Rational::parse(eta),
                                   {Rational::parse(r1), Rational::parse(r2)});
  });
  m.def("ne_split_search", [](const Params& p, const std::string& eta, const std::string& r1,
                              const std::string& r2) -> std::optional<std::string> {
    const auto w = nashld::ne_split_search(to_params(p), Rational::parse(eta),
                                           {Rational::parse(r1), Rational::parse(r2)});
    if (!w) return std::nullopt;
    return nashld::to_json(*w).dump();
  });
  m.def("inclusion_chain_check", [](const Params& p, const std::string& eta) {
    return nashld::inclusion_chain_check(to_params(p), Rational::parse(eta));
  });
  m.def(
      "verify_pair",
      [](const Params& t, const std::string& name, std::int64_t trials, bool exhaustive,
         std::uint64_t seed) {
        const ChannelParams p = to_params(t);
        const auto [s1, s2] = builtin_pair(p, name);
        return nashld::to_json(nashld::run_and_verify(p, s1, s2, trials, exhaustive, seed)).dump();
      },
      py::arg("params"), py::arg("name"), py::arg("trials") = 64, py::arg("exhaustive") = true,
      py::arg("seed") = 1);
  m.def("scheme_json", [](const Params& t, const std::string& name, int user) {
    const auto pair = builtin_pair(to_params(t), name);
    return nashld::scheme_to_json(user == 1 ? pair.first : pair.second).dump();
  });
}
