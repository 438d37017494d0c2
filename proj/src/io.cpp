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

#include "nashld/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nashld {
namespace {

constexpr double kPixelsPerUnit = 80.0;
constexpr double kMargin = 48.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Json bits_json(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (auto x : b) s.push_back(x ? '1' : '0');
  return s;
}

Json vectors_json(const std::vector<BitVector>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.hex());
  return out;
}

template <typename T>
const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  }
  const Json& f = j.at(name);
  if constexpr (std::is_same_v<T, int>) {
    if (!f.is_number_integer()) throw std::invalid_argument(std::string("'") + name + "' must be an integer");
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!f.is_string()) throw std::invalid_argument(std::string("'") + name + "' must be a string");
  } else {
    if (!f.is_array()) throw std::invalid_argument(std::string("'") + name + "' must be an array");
  }
  return f;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const ChannelParams& p) {
  Json j;
  j["n_fwd_11"] = p.n_fwd_11;
  j["n_fwd_22"] = p.n_fwd_22;
  j["n_12"] = p.n_12;
  j["n_21"] = p.n_21;
  j["n_fb_11"] = p.n_fb_11;
  j["n_fb_22"] = p.n_fb_22;
  j["q"] = derive_q(p);
  return j;
}

Json to_json(const LinearSystem& sys) {
  Json rows = Json::array();
  for (const auto& r : sys.rows) {
    Json a = Json::array();
    for (const auto& c : r.a) a.push_back(c.str());
    Json row;
    row["a"] = std::move(a);
    row["b"] = r.b.str();
    if (r.rel == Relation::kEqual) row["rel"] = "=";
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Region2& r) {
  Json j;
  j["empty"] = r.empty();
  j["degenerate"] = r.degenerate();
  j["halfspaces"] = r.empty() ? Json::array() : to_json(r.halfspaces());
  Json v = Json::array();
  for (const auto& p : r.vertices()) v.push_back(Json::array({p.x.str(), p.y.str()}));
  j["vertices"] = std::move(v);
  return j;
}

Json to_json(const NashBounds& nb) {
  Json j;
  j["L"] = Json::array({nb.lower[0].str(), nb.lower[1].str()});
  j["U"] = Json::array({nb.upper[0].str(), nb.upper[1].str()});
  j["eta"] = nb.eta.str();
  return j;
}

Json to_json(const SimTrace& t) {
  Json j;
  j["params"] = to_json(t.params);
  j["block_length"] = Json::array({t.block_length[0], t.block_length[1]});
  for (int u = 0; u < 2; ++u) {
    const std::string k = std::to_string(u + 1);
    j["x" + k] = vectors_json(t.x[u]);
    j["y" + k] = vectors_json(t.y[u]);
    j["feedback" + k] = vectors_json(t.fb[u]);
  }
  for (int u = 0; u < 2; ++u) {
    const std::string k = std::to_string(u + 1);
    j["message" + k] = bits_json(t.message[u]);
    j["decoded" + k] = bits_json(t.decoded[u]);
    j["error_probability" + k] = t.message[u].empty()
                                     ? Json(nullptr)
                                     : Json(bit_error_probability(t.message[u], t.decoded[u]).str());
  }
  return j;
}

Json to_json(const SimulationReport& r) {
  Json j;
  j["rate"] = Json::array({r.rate[0].str(), r.rate[1].str()});
  j["finite_rate"] = Json::array({r.finite_rate[0].str(), r.finite_rate[1].str()});
  j["error_probability"] = Json::array({r.error_probability[0].str(), r.error_probability[1].str()});
  j["trials"] = r.trials;
  j["mode"] = to_string(r.mode);
  j["verdict"] = r.zero_error ? "zero-error" : "failed";
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  return j;
}

Json to_json(const RateSplit& split) {
  static const char* kNames[] = {"C1", "R1", "C2", "R2", "P"};
  Json j;
  for (int i = 1; i <= 2; ++i) {
    Json u;
    for (int k = 0; k < 5; ++k) u[kNames[k]] = split.at(i, static_cast<SplitPart>(k)).str();
    j["user" + std::to_string(i)] = std::move(u);
  }
  return j;
}

Json to_json(const SplitWitness& w) {
  Json j;
  j["shifted_split"] = to_json(w.shifted);
  j["R_C"] = Json::array({w.common[0].str(), w.common[1].str()});
  j["R_R"] = Json::array({w.random[0].str(), w.random[1].str()});
  j["R_P"] = Json::array({w.priv[0].str(), w.priv[1].str()});
  return j;
}

Json scheme_to_json(const Scheme& s) {
  Json j;
  j["user"] = s.user;
  j["pattern_length"] = s.pattern_length;
  j["blocks"] = s.blocks;
  Json levels = Json::array();
  for (const auto& use : s.levels) {
    Json row = Json::array();
    for (const auto& a : use) row.push_back(a.str());
    levels.push_back(std::move(row));
  }
  j["levels"] = std::move(levels);
  Json columns = Json::array();
  for (const auto& c : s.decoder.columns) columns.push_back(c.str());
  Json rows = Json::array();
  for (const auto& r : s.decoder.rows) {
    std::string bits(r.size(), '0');
    for (std::size_t c = 0; c < r.size(); ++c) bits[c] = r.test(c) ? '1' : '0';
    rows.push_back(bits);
  }
  j["decoder"] = {{"columns", std::move(columns)}, {"rows", std::move(rows)}};
  j["fresh_rate"] = s.fresh_rate.str();
  j["random_rate"] = s.random_rate.str();
  return j;
}

Scheme scheme_from_json(const Json& j) {
  try {
    Scheme s;
    s.user = field<int>(j, "user").get<int>();
    s.pattern_length = field<int>(j, "pattern_length").get<int>();
    s.blocks = field<int>(j, "blocks").get<int>();
    for (const auto& use : field<Json>(j, "levels")) {
      if (!use.is_array()) throw std::invalid_argument("'levels' must be an array of arrays");
      std::vector<LevelAssignment> row;
      for (const auto& a : use) {
        if (!a.is_string()) throw std::invalid_argument("level assignments must be strings");
        row.push_back(LevelAssignment::parse(a.get<std::string>()));
      }
      s.levels.push_back(std::move(row));
    }
    const Json& dec = j.at("decoder");
    for (const auto& c : field<Json>(dec, "columns")) {
      if (!c.is_string()) throw std::invalid_argument("decoder columns must be strings");
      s.decoder.columns.push_back(DecoderColumn::parse(c.get<std::string>()));
    }
    for (const auto& r : field<Json>(dec, "rows")) {
      if (!r.is_string()) throw std::invalid_argument("decoder rows must be bit strings");
      const std::string bits = r.get<std::string>();
      DynamicBits row(bits.size());
      for (std::size_t c = 0; c < bits.size(); ++c) {
        if (bits[c] != '0' && bits[c] != '1') throw std::invalid_argument("decoder rows must be bit strings");
        row[c] = bits[c] == '1';
      }
      s.decoder.rows.push_back(std::move(row));
    }
    s.fresh_rate = Rational::parse(field<std::string>(j, "fresh_rate").get<std::string>());
    s.random_rate = Rational::parse(field<std::string>(j, "random_rate").get<std::string>());
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed scheme: ") + e.what());
  }
}

Scheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
  return scheme_from_json(j);
}

void save_scheme(const Scheme& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << scheme_to_json(s).dump(2) << "\n";
}

Json to_json(const EquilibriumReport& r) {
  Json j;
  j["rate_pair"] = Json::array({r.rate_pair.x.str(), r.rate_pair.y.str()});
  j["in_ne_region"] = r.in_ne_region;
  j["bounds"] = to_json(r.bounds);
  j["witness_split"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  if (r.oracle) {
    Json o;
    o["class"] = r.oracle_class.value_or("");
    o["label"] = "eta-NE within class";
    o["best_rate"] = r.oracle->best.str();
    o["ceiling"] = r.oracle->ceiling.str();
    o["fixed_r_jC"] = r.oracle->fixed_aggregates.common.str();
    o["fixed_r_jR"] = r.oracle->fixed_aggregates.random.str();
    o["candidates"] = r.oracle->candidates;
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  return j;
}

std::string region_csv(const Region2& r) {
  std::string out = "r1,r2\n";
  for (const auto& p : r.vertices()) out += p.x.str() + "," + p.y.str() + "\n";
  return out;
}

std::string region_svg(const std::vector<PlotLayer>& layers, const std::string& title,
                       const std::vector<Point2>& marks) {
  Rational max_x(1);
  Rational max_y(1);
  for (const auto& l : layers) {
    for (const auto& p : l.region.vertices()) {
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
  }
  for (const auto& p : marks) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const int gx = static_cast<int>(std::ceil(max_x.to_double()));
  const int gy = static_cast<int>(std::ceil(max_y.to_double()));
  const double width = 2 * kMargin + kPixelsPerUnit * gx + 160;
  const double height = 2 * kMargin + kPixelsPerUnit * gy;
  const auto px = [&](const Rational& x) { return fmt(kMargin + kPixelsPerUnit * x.to_double()); };
  const auto py = [&](const Rational& y) {
    return fmt(kMargin + kPixelsPerUnit * (gy - y.to_double()));
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
    << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  s << "<title>" << escape(title) << "</title>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
    << "\" fill=\"white\"/>\n";
  s << "<g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (int x = 0; x <= gx; ++x) {
    s << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
      << py(gy) << "\"/>\n";
  }
  for (int y = 0; y <= gy; ++y) {
    s << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(gx) << "\" y2=\""
      << py(y) << "\"/>\n";
  }
  s << "</g>\n";
  s << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(gx) << "\" y2=\""
    << py(0) << "\"/>\n";
  s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
    << py(gy) << "\"/>\n";
  s << "</g>\n";
  s << "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n";
  for (int x = 0; x <= gx; ++x) {
    s << "<text x=\"" << px(x) << "\" y=\"" << fmt(kMargin + kPixelsPerUnit * gy + 20)
      << "\" text-anchor=\"middle\">" << x << "</text>\n";
  }
  for (int y = 0; y <= gy; ++y) {
    s << "<text x=\"" << fmt(kMargin - 10) << "\" y=\"" << fmt(kMargin + kPixelsPerUnit * (gy - y) + 5)
      << "\" text-anchor=\"end\">" << y << "</text>\n";
  }
  s << "<text x=\"" << px(gx) << "\" y=\"" << fmt(kMargin + kPixelsPerUnit * gy + 40)
    << "\" text-anchor=\"end\">R1</text>\n";
  s << "<text x=\"" << fmt(kMargin - 30) << "\" y=\"" << fmt(kMargin - 16) << "\">R2</text>\n";
  s << "</g>\n";

  double legend_y = kMargin;
  const double legend_x = kMargin + kPixelsPerUnit * gx + 24;
  for (const auto& l : layers) {
    const auto& v = l.region.vertices();
    const std::string stroke = l.stroke.empty() ? "black" : l.stroke;
    const std::string fill = l.filled ? (l.fill.empty() ? "#9be39b" : l.fill) : "none";
    if (v.size() == 1) {
      s << "<circle cx=\"" << px(v[0].x) << "\" cy=\"" << py(v[0].y) << "\" r=\"4\" fill=\""
        << stroke << "\"/>\n";
    } else if (!v.empty()) {
      s << "<polygon points=\"";
      for (std::size_t k = 0; k < v.size(); ++k) {
        s << (k ? " " : "") << px(v[k].x) << "," << py(v[k].y);
      }
      s << "\" fill=\"" << fill << "\"" << (l.filled ? " fill-opacity=\"0.6\"" : "")
        << " stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
    }
    s << "<line x1=\"" << fmt(legend_x) << "\" y1=\"" << fmt(legend_y) << "\" x2=\""
      << fmt(legend_x + 24) << "\" y2=\"" << fmt(legend_y) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"3\"/>\n";
    s << "<text x=\"" << fmt(legend_x + 30) << "\" y=\"" << fmt(legend_y + 5)
      << "\" font-family=\"sans-serif\" font-size=\"14\">" << escape(l.label) << "</text>\n";
    legend_y += 22;
  }
  for (const auto& p : marks) {
    s << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"4\" fill=\"black\"/>\n";
    s << "<text x=\"" << fmt(kMargin + kPixelsPerUnit * p.x.to_double() + 6) << "\" y=\""
      << fmt(kMargin + kPixelsPerUnit * (gy - p.y.to_double()) - 6)
      << "\" font-family=\"sans-serif\" font-size=\"12\">(" << p.x.str() << ", " << p.y.str()
      << ")</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace nashld
