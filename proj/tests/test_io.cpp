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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "nashld/io.hpp"
#include "nashld/regions.hpp"
#include "nashld/scheme.hpp"
#include "nashld/verification.hpp"

namespace nashld {
namespace {

const ChannelParams kFig{7, 6, 4, 4, 0, 0};
const ChannelParams kFig5{7, 6, 4, 4, 5, 0};

TEST(Json, Rationals) {
  EXPECT_EQ(to_json(Rational(3)), "3/1");
  EXPECT_EQ(to_json(Rational(-2, 6)), "-1/3");
  EXPECT_EQ(rational_from_json(Json("299/100")), Rational(299, 100));
  EXPECT_THROW(rational_from_json(Json(0.5)), std::invalid_argument);
}

TEST(Json, RegionShape) {
  const Json j = to_json(box_region(kFig5, Rational(1, 100)));
  EXPECT_FALSE(j["empty"].get<bool>());
  ASSERT_EQ(j["vertices"].size(), 4U);
  EXPECT_EQ(j["vertices"][0][0], "299/100");
  EXPECT_EQ(j["halfspaces"][0]["a"].size(), 2U);
  EXPECT_TRUE(j["halfspaces"][0]["b"].is_string());
  EXPECT_TRUE(to_json(Region2())["empty"].get<bool>());
}

TEST(Json, SchemeRoundTrip) {
  const auto [p1, p2] = policed_pair(kFig5);
  const auto [c1, c2] = cooperative_pair(kFig5);
  for (const Scheme& s : {p1, p2, c1, c2, floor_scheme(kFig, 1), zero_scheme(kFig, 2)}) {
    const Json j = scheme_to_json(s);
    const Scheme back = scheme_from_json(j);
    EXPECT_EQ(scheme_to_json(back).dump(), j.dump());
    EXPECT_EQ(back.levels, s.levels);
    EXPECT_EQ(back.decoder.rows, s.decoder.rows);
  }
}

TEST(Json, SchemeFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "nashld_scheme_test.json";
  const Scheme s = policed_pair(kFig5).second;
  save_scheme(s, path.string());
  const Scheme back = load_scheme(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(scheme_to_json(back), scheme_to_json(s));
  EXPECT_THROW(load_scheme((path.string() + ".missing")), std::invalid_argument);
}

TEST(Json, MalformedSchemes) {
  Json good = scheme_to_json(floor_scheme(kFig, 1));
  for (const char* key : {"user", "levels", "decoder", "fresh_rate"}) {
    Json bad = good;
    bad.erase(key);
    EXPECT_THROW(scheme_from_json(bad), std::invalid_argument) << key;
  }
  Json bad_level = good;
  bad_level["levels"][0][0] = "fresh:one";
  EXPECT_THROW(scheme_from_json(bad_level), std::invalid_argument);
  Json bad_row = good;
  bad_row["decoder"]["rows"][0] = "10x";
  EXPECT_THROW(scheme_from_json(bad_row), std::invalid_argument);
  EXPECT_THROW(scheme_from_json(Json::array()), std::invalid_argument);
}

TEST(Json, TraceAndReport) {
  const Scheme s1 = floor_scheme(kFig, 1), s2 = floor_scheme(kFig, 2);
  const SimTrace tr = simulate(kFig, s1, s2, Bits(9, 1), Bits(6, 0), {}, {});
  const Json j = to_json(tr);
  EXPECT_EQ(j["params"]["q"], 7);
  EXPECT_EQ(j["x1"].size(), 3U);
  EXPECT_EQ(j["x1"][0], "70");
  EXPECT_EQ(j["message1"], "111111111");
  EXPECT_EQ(j["error_probability1"], "0/1");
  const Json r = to_json(run_and_verify(kFig, s1, s2, 4, true));
  EXPECT_EQ(r["verdict"], "zero-error");
}

TEST(Csv, Vertices) {
  EXPECT_EQ(region_csv(capacity_region(kFig)), "r1,r2\n0/1,0/1\n7/1,0/1\n6/1,2/1\n4/1,4/1\n0/1,6/1\n");
  EXPECT_EQ(region_csv(Region2()), "r1,r2\n");
}

TEST(Svg, DeterministicAndSelfContained) {
  const std::vector<PlotLayer> layers = {
      {"C", capacity_region(kFig5), false, "#1f4e79", ""},
      {"N_eta", ne_region(kFig5, Rational(1, 100)), true, "#b03a2e", "#f5b7b1"}};
  const std::string a = region_svg(layers, "t", {{3, 4}, {5, 4}});
  const std::string b = region_svg(layers, "t", {{3, 4}, {5, 4}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<svg", 0), 0U);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  for (const char* ext : {"href", "<image", "url(", "@import", "<script"}) {
    EXPECT_EQ(a.find(ext), std::string::npos) << ext;
  }
}

}  // namespace
}  // namespace nashld
