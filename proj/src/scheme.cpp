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

#include "nashld/scheme.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace nashld {
namespace {

constexpr int kMaxBlockOffset = 16;

int parse_int(std::string_view s, std::string_view context) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed integer in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

std::string signed_offset(int o) {
  return o > 0 ? "+" + std::to_string(o) : std::to_string(o);
}

int count_kind(const Scheme& s, AssignmentKind kind) {
  int n = 0;
  for (const auto& use : s.levels) {
    for (const auto& a : use) n += a.kind == kind;
  }
  return n;
}

}  // namespace

std::string LevelAssignment::str() const {
  switch (kind) {
    case AssignmentKind::kZero:
      return "zero";
    case AssignmentKind::kFresh:
      return "fresh:" + std::to_string(index);
    case AssignmentKind::kCommonRandom:
      return "random:" + std::to_string(index);
    case AssignmentKind::kRelay:
      return "relay:" + std::to_string(feedback_level) + ":" + std::to_string(lag);
  }
  return "zero";
}

LevelAssignment LevelAssignment::parse(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view head = parts.front();
  if (head == "zero" && parts.size() == 1) return zero();
  if (head == "fresh" && parts.size() == 2) return fresh(parse_int(parts[1], text));
  if (head == "random" && parts.size() == 2) return random(parse_int(parts[1], text));
  if (head == "relay" && parts.size() == 3) {
    return relay(parse_int(parts[1], text), parse_int(parts[2], text));
  }
  throw std::invalid_argument("unknown level assignment '" + std::string(text) + "'");
}

std::string DecoderColumn::str() const {
  switch (kind) {
    case Kind::kObservation:
      return "y@" + signed_offset(block_offset) + ":" + std::to_string(use) + ":" +
             std::to_string(level);
    case Kind::kOmega:
      return "omega@" + signed_offset(block_offset) + ":" + std::to_string(index);
    case Kind::kDecoded:
      return "prev@" + signed_offset(block_offset) + ":" + std::to_string(index);
  }
  return {};
}

DecoderColumn DecoderColumn::parse(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("decoder column '" + std::string(text) + "' lacks '@'");
  }
  const std::string_view head = text.substr(0, at);
  const auto parts = split(text.substr(at + 1), ':');
  DecoderColumn c;
  if (head == "y" && parts.size() == 3) {
    c.kind = Kind::kObservation;
    c.block_offset = parse_int(parts[0], text);
    c.use = parse_int(parts[1], text);
    c.level = parse_int(parts[2], text);
    return c;
  }
  if ((head == "omega" || head == "prev") && parts.size() == 2) {
    c.kind = head == "omega" ? Kind::kOmega : Kind::kDecoded;
    c.block_offset = parse_int(parts[0], text);
    c.index = parse_int(parts[1], text);
    return c;
  }
  throw std::invalid_argument("unknown decoder column '" + std::string(text) + "'");
}

int Decoder::lookahead() const {
  int ahead = 0;
  for (const auto& row : rows) {
    for (auto c = row.find_first(); c != DynamicBits::npos; c = row.find_next(c)) {
      if (c < columns.size()) ahead = std::max(ahead, columns[c].block_offset);
    }
  }
  return ahead;
}

int Scheme::fresh_per_block() const { return count_kind(*this, AssignmentKind::kFresh); }
int Scheme::random_per_block() const {
  return count_kind(*this, AssignmentKind::kCommonRandom);
}

void Scheme::declare_rates() {
  fresh_rate = Rational(fresh_per_block(), pattern_length);
  random_rate = Rational(random_per_block(), pattern_length);
}

std::vector<std::string> validate_scheme(const ChannelParams& p, const Scheme& s) {
  std::vector<std::string> out;
  try {
    validate_params(p);
  } catch (const std::invalid_argument& e) {
    out.emplace_back(e.what());
    return out;
  }
  const int q = derive_q(p);
  if (s.user != 1 && s.user != 2) {
    out.push_back("user must be 1 or 2");
    return out;
  }
  if (q < 1) out.push_back("channel has q = 0; nothing can be transmitted");
  if (s.pattern_length < 1) out.push_back("pattern_length must be >= 1");
  if (s.blocks < 3) out.push_back("at least 3 blocks are required");
  if (static_cast<int>(s.levels.size()) != s.pattern_length) {
    out.push_back("levels lists " + std::to_string(s.levels.size()) +
                  " uses, pattern_length is " + std::to_string(s.pattern_length));
  }

  const int fb_exp = feedback_exponent(p, s.user);
  std::map<int, int> fresh_seen;
  std::map<int, int> random_seen;
  for (std::size_t u = 0; u < s.levels.size(); ++u) {
    const auto& use = s.levels[u];
    if (static_cast<int>(use.size()) != q) {
      out.push_back("use " + std::to_string(u) + " assigns " +
                    std::to_string(use.size()) + " levels, channel has q = " +
                    std::to_string(q));
    }
    for (std::size_t m = 0; m < use.size(); ++m) {
      const auto& a = use[m];
      const std::string where =
          "use " + std::to_string(u) + " level " + std::to_string(m + 1) + ": ";
      switch (a.kind) {
        case AssignmentKind::kZero:
          break;
        case AssignmentKind::kFresh:
          ++fresh_seen[a.index];
          break;
        case AssignmentKind::kCommonRandom:
          ++random_seen[a.index];
          break;
        case AssignmentKind::kRelay:
          if (a.lag < 1) out.push_back(where + "relay lag must be >= 1 (feedback is delayed)");
          if (a.feedback_level < 1 || a.feedback_level > q) {
            out.push_back(where + "relay references feedback level " +
                          std::to_string(a.feedback_level) + " outside 1.." +
                          std::to_string(q));
          } else if (a.feedback_level <= fb_exp) {
            out.push_back(where + "feedback level " + std::to_string(a.feedback_level) +
                          " is truncated by the feedback link");
          }
          break;
      }
    }
  }
  const auto check_positions = [&](const std::map<int, int>& seen, const char* what) {
    const int count = static_cast<int>(seen.size());
    for (const auto& [k, times] : seen) {
      if (k < 0 || k >= count) {
        out.push_back(std::string(what) + " position " + std::to_string(k) +
                      " is not in 0.." + std::to_string(count - 1));
      }
      if (times > 1) {
        out.push_back(std::string(what) + " position " + std::to_string(k) +
                      " used " + std::to_string(times) + " times in one block");
      }
    }
  };
  check_positions(fresh_seen, "fresh");
  check_positions(random_seen, "random");

  const int fresh = s.fresh_per_block();
  const int random = s.random_per_block();
  const auto& dec = s.decoder;
  if (static_cast<int>(dec.rows.size()) != fresh) {
    out.push_back("decoder has " + std::to_string(dec.rows.size()) + " rows, scheme has " +
                  std::to_string(fresh) + " fresh bits per block");
  }
  for (std::size_t r = 0; r < dec.rows.size(); ++r) {
    if (dec.rows[r].size() != dec.columns.size()) {
      out.push_back("decoder row " + std::to_string(r) + " has width " +
                    std::to_string(dec.rows[r].size()) + ", expected " +
                    std::to_string(dec.columns.size()));
    }
  }
  for (const auto& c : dec.columns) {
    const std::string where = "decoder column " + c.str() + ": ";
    if (std::abs(c.block_offset) > kMaxBlockOffset) {
      out.push_back(where + "block offset too large");
    }
    switch (c.kind) {
      case DecoderColumn::Kind::kObservation:
        if (c.use < 0 || c.use >= s.pattern_length) out.push_back(where + "use outside pattern");
        if (c.level < 1 || c.level > q) out.push_back(where + "level outside 1..q");
        break;
      case DecoderColumn::Kind::kOmega:
        if (c.index < 0 || c.index >= random) out.push_back(where + "no such random bit");
        break;
      case DecoderColumn::Kind::kDecoded:
        if (c.block_offset >= 0) out.push_back(where + "only earlier blocks are decoded");
        if (c.index < 0 || c.index >= fresh) out.push_back(where + "no such fresh bit");
        break;
    }
  }

  if (s.pattern_length >= 1) {
    if (s.fresh_rate != Rational(fresh, s.pattern_length)) {
      out.push_back("declared fresh_rate " + s.fresh_rate.str() + " differs from " +
                    Rational(fresh, s.pattern_length).str());
    }
    if (s.random_rate != Rational(random, s.pattern_length)) {
      out.push_back("declared random_rate " + s.random_rate.str() + " differs from " +
                    Rational(random, s.pattern_length).str());
    }
  }
  return out;
}

void require_valid(const ChannelParams& p, const Scheme& s) {
  const auto problems = validate_scheme(p, s);
  if (problems.empty()) return;
  std::string msg = "invalid scheme for user " + std::to_string(s.user) + ":";
  for (const auto& pr : problems) msg += "\n  " + pr;
  throw std::invalid_argument(msg);
}

Rational achieved_rate(const Scheme& s) {
  return Rational(s.fresh_per_block(), s.pattern_length);
}

Scheme floor_scheme(const ChannelParams& p, int i, int blocks) {
  validate_params(p);
  const int q = derive_q(p);
  Scheme s;
  s.user = check_user(i);
  s.blocks = blocks;
  s.levels.assign(1, std::vector<LevelAssignment>(q));
  const int clean = std::max(p.direct(i) - p.cross(i), 0);
  for (int k = 1; k <= clean; ++k) {
    s.levels[0][k - 1] = LevelAssignment::fresh(k - 1);
    // Level k lands on output level k + q - n_ii, above the interference.
    s.decoder.columns.push_back(
        {DecoderColumn::Kind::kObservation, 0, 0, k + q - p.direct(i), 0});
  }
  for (int k = 0; k < clean; ++k) {
    DynamicBits row(clean);
    row.set(k);
    s.decoder.rows.push_back(row);
  }
  s.declare_rates();
  return s;
}

Scheme zero_scheme(const ChannelParams& p, int i, int blocks) {
  validate_params(p);
  Scheme s;
  s.user = check_user(i);
  s.blocks = blocks;
  s.levels.assign(1, std::vector<LevelAssignment>(derive_q(p)));
  s.declare_rates();
  return s;
}

namespace {

// Symbolic steady-state run: every transmitted and received bit as a GF(2)
// form over the fresh and common-random bits of both users.
class SymbolicRun {
 public:
  SymbolicRun(const ChannelParams& p, const Scheme& s1, const Scheme& s2, int uses)
      : p_(p), q_(derive_q(p)), uses_(uses) {
    const Scheme* sch[2] = {&s1, &s2};
    int width = 0;
    for (int u = 0; u < 2; ++u) {
      const int blocks = (uses + sch[u]->pattern_length - 1) / sch[u]->pattern_length;
      const int f = sch[u]->fresh_per_block();
      const int r = sch[u]->random_per_block();
      fresh_base_[u] = width;
      width += blocks * f;
      random_base_[u] = width;
      width += blocks * r;
      per_block_fresh_[u] = f;
      per_block_random_[u] = r;
    }
    width_ = width;
    for (int u = 0; u < 2; ++u) {
      x_[u].assign(uses, std::vector<DynamicBits>(q_ + 1, DynamicBits(width_)));
    }
    for (int n = 0; n < uses; ++n) {
      for (int u = 0; u < 2; ++u) {
        const Scheme& s = *sch[u];
        const int b = n / s.pattern_length;
        const auto& pattern = s.levels[n % s.pattern_length];
        for (int m = 1; m <= q_; ++m) {
          const auto& a = pattern[m - 1];
          auto& form = x_[u][n][m];
          switch (a.kind) {
            case AssignmentKind::kZero:
              break;
            case AssignmentKind::kFresh:
              form.set(fresh_source(u, b, a.index));
              break;
            case AssignmentKind::kCommonRandom:
              form.set(random_source(u, b, a.index));
              break;
            case AssignmentKind::kRelay: {
              // Other user's component of feedback level L at use n - lag:
              // feedback level L is output level L - e, which carries the
              // other input's level L - e - (q - n_ij).
              const int src = n - a.lag;
              const int out_level = a.feedback_level - feedback_exponent(p_, u + 1);
              const int in_level = out_level - (q_ - p_.cross(u + 1));
              if (src >= 0 && out_level >= 1 && in_level >= 1) {
                form = x_[1 - u][src][in_level];
              }
              break;
            }
          }
        }
      }
    }
  }

  std::size_t width() const { return width_; }

  DynamicBits output(int user, int n, int level) const {
    const int u = user - 1;
    DynamicBits y(width_);
    if (n < 0 || n >= uses_) return y;
    const int own = level - (q_ - p_.direct(user));
    const int cross = level - (q_ - p_.cross(user));
    if (own >= 1) y ^= x_[u][n][own];
    if (cross >= 1) y ^= x_[1 - u][n][cross];
    return y;
  }

  DynamicBits unit(std::size_t source) const {
    DynamicBits v(width_);
    v.set(source);
    return v;
  }

  std::size_t fresh_source(int u, int block, int k) const {
    return fresh_base_[u] + static_cast<std::size_t>(block) * per_block_fresh_[u] + k;
  }
  std::size_t random_source(int u, int block, int k) const {
    return random_base_[u] + static_cast<std::size_t>(block) * per_block_random_[u] + k;
  }

 private:
  ChannelParams p_;
  int q_;
  int uses_;
  std::size_t width_ = 0;
  std::size_t fresh_base_[2] = {0, 0};
  std::size_t random_base_[2] = {0, 0};
  int per_block_fresh_[2] = {0, 0};
  int per_block_random_[2] = {0, 0};
  // x_[u][n][m], level m in 1..q (index 0 unused)
  std::vector<std::vector<DynamicBits>> x_[2];
};

DynamicBits column_form(const SymbolicRun& run, int user, int pattern, int block,
                        const DecoderColumn& c) {
  const int b = block + c.block_offset;
  switch (c.kind) {
    case DecoderColumn::Kind::kObservation:
      return run.output(user, b * pattern + c.use, c.level);
    case DecoderColumn::Kind::kOmega:
      return b < 0 ? DynamicBits(run.width()) : run.unit(run.random_source(user - 1, b, c.index));
    case DecoderColumn::Kind::kDecoded:
      return b < 0 ? DynamicBits(run.width()) : run.unit(run.fresh_source(user - 1, b, c.index));
  }
  return DynamicBits(run.width());
}

}  // namespace

SynthesisResult synthesize_decoder(const ChannelParams& p, const Scheme& own,
                                   const Scheme& other, int max_lookahead) {
  validate_params(p);
  const int q = derive_q(p);
  if (own.user == other.user) throw std::invalid_argument("schemes must belong to different users");
  const int user = check_user(own.user);
  const int fresh = own.fresh_per_block();
  const int random = own.random_per_block();
  const int pattern = own.pattern_length;

  SynthesisResult result;
  if (fresh == 0) {
    result.decoder = Decoder{};
    return result;
  }

  constexpr int kPreHistory = 3;
  constexpr int kBackWindow = 2;
  const int target = kPreHistory + kBackWindow;
  const int horizon_blocks = target + max_lookahead + 3;
  const Scheme& s1 = user == 1 ? own : other;
  const Scheme& s2 = user == 1 ? other : own;
  const SymbolicRun run(p, s1, s2, horizon_blocks * pattern);

  for (int ahead = 0; ahead <= max_lookahead; ++ahead) {
    std::vector<DecoderColumn> columns;
    for (int o = 0; o <= ahead; ++o) {
      for (int u = 0; u < pattern; ++u) {
        for (int m = 1; m <= q; ++m) {
          columns.push_back({DecoderColumn::Kind::kObservation, o, u, m, 0});
        }
      }
    }
    for (int o = -kBackWindow; o < 0; ++o) {
      for (int k = 0; k < fresh; ++k) columns.push_back({DecoderColumn::Kind::kDecoded, o, 0, 0, k});
    }
    for (int o = -kBackWindow; o <= ahead; ++o) {
      for (int k = 0; k < random; ++k) columns.push_back({DecoderColumn::Kind::kOmega, o, 0, 0, k});
    }
    for (int o = -kBackWindow; o < 0; ++o) {
      for (int u = 0; u < pattern; ++u) {
        for (int m = 1; m <= q; ++m) {
          columns.push_back({DecoderColumn::Kind::kObservation, o, u, m, 0});
        }
      }
    }

    Gf2Span span(run.width(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      span.insert(column_form(run, user, pattern, target, columns[c]), c);
    }

    std::vector<DynamicBits> rows;
    std::vector<int> undecodable;
    for (int k = 0; k < fresh; ++k) {
      auto tags = span.express(run.unit(run.fresh_source(user - 1, target, k)));
      bool ok = tags.has_value();
      // The same map must work one block earlier and later (shift invariance).
      for (int shift : {-1, 1}) {
        if (!ok) break;
        DynamicBits acc(run.width());
        for (auto c = tags->find_first(); c != DynamicBits::npos; c = tags->find_next(c)) {
          acc ^= column_form(run, user, pattern, target + shift, columns[c]);
        }
        ok = acc == run.unit(run.fresh_source(user - 1, target + shift, k));
      }
      if (ok) {
        rows.push_back(*tags);
      } else {
        undecodable.push_back(k);
      }
    }
    if (!undecodable.empty()) {
      result.undecodable = std::move(undecodable);
      continue;
    }

    // Keep only columns some row reads, in canonical order.
    std::set<DecoderColumn> used;
    for (const auto& row : rows) {
      for (auto c = row.find_first(); c != DynamicBits::npos; c = row.find_next(c)) {
        used.insert(columns[c]);
      }
    }
    Decoder dec;
    dec.columns.assign(used.begin(), used.end());
    std::map<DecoderColumn, std::size_t> position;
    for (std::size_t c = 0; c < dec.columns.size(); ++c) position[dec.columns[c]] = c;
    for (const auto& row : rows) {
      DynamicBits compact(dec.columns.size());
      for (auto c = row.find_first(); c != DynamicBits::npos; c = row.find_next(c)) {
        compact.set(position.at(columns[c]));
      }
      dec.rows.push_back(std::move(compact));
    }
    result.decoder = std::move(dec);
    result.undecodable.clear();
    return result;
  }
  return result;
}

Scheme with_synthesized_decoder(const ChannelParams& p, Scheme own, const Scheme& other) {
  auto result = synthesize_decoder(p, own, other);
  if (!result.decoder) {
    std::string msg = "no linear decoder recovers fresh positions";
    for (int k : result.undecodable) msg += " " + std::to_string(k);
    throw std::invalid_argument(msg);
  }
  own.decoder = std::move(*result.decoder);
  own.declare_rates();
  return own;
}

namespace {

void require_figure_channel(const ChannelParams& p) {
  if (p.n_fwd_11 != 7 || p.n_fwd_22 != 6 || p.n_12 != 4 || p.n_21 != 4 || p.n_fb_11 != 5) {
    throw std::invalid_argument("built-in relay pairs need channel (7,6,4,4,5,*), got " +
                                p.str());
  }
}

std::pair<Scheme, Scheme> relay_pair(const ChannelParams& p, bool policed) {
  require_figure_channel(p);
  using A = LevelAssignment;
  Scheme s1;
  s1.user = 1;
  // User 2's top two levels reach receiver 1 at levels 4 and 5, which feed
  // back to transmitter 1 as feedback levels 6 and 7.
  s1.levels = {{A::fresh(0), A::fresh(1), A::relay(6, 1), A::relay(7, 1), A::fresh(2),
                policed ? A::zero() : A::fresh(3), policed ? A::zero() : A::fresh(4)}};
  Scheme s2;
  s2.user = 2;
  s2.levels = {{A::fresh(0), A::fresh(1), policed ? A::random(0) : A::zero(),
                policed ? A::random(1) : A::zero(), A::fresh(2), A::fresh(3), A::zero()}};
  s1.declare_rates();
  s2.declare_rates();
  Scheme d1 = with_synthesized_decoder(p, s1, s2);
  Scheme d2 = with_synthesized_decoder(p, s2, s1);
  return {std::move(d1), std::move(d2)};
}

class SchemeTransmitter final : public Transmitter {
 public:
  SchemeTransmitter(const ChannelParams& p, const Scheme& s, const Bits& message,
                    const Bits& omega)
      : p_(p), s_(s), message_(message), omega_(omega) {}

  int block_length() const override { return s_.block_length(); }

  BitVector input(int n, std::span<const BitVector> feedback) override {
    BitVector x = encode_use(p_, s_, n, message_, omega_, feedback, inputs_);
    inputs_.push_back(x);
    return x;
  }

 private:
  const ChannelParams& p_;
  const Scheme& s_;
  const Bits& message_;
  const Bits& omega_;
  std::vector<BitVector> inputs_;
};

}  // namespace

std::pair<Scheme, Scheme> policed_pair(const ChannelParams& p) { return relay_pair(p, true); }
std::pair<Scheme, Scheme> cooperative_pair(const ChannelParams& p) {
  return relay_pair(p, false);
}

BitVector encode_use(const ChannelParams& p, const Scheme& s, int n, const Bits& message,
                     const Bits& omega, std::span<const BitVector> feedback,
                     std::span<const BitVector> own_inputs) {
  const int q = derive_q(p);
  const int fresh = s.fresh_per_block();
  const int random = s.random_per_block();
  const int block = (n - 1) / s.pattern_length;
  const auto& pattern = s.levels.at((n - 1) % s.pattern_length);
  BitVector x(q);
  for (int m = 1; m <= q; ++m) {
    const auto& a = pattern[m - 1];
    bool bit = false;
    switch (a.kind) {
      case AssignmentKind::kZero:
        break;
      case AssignmentKind::kFresh:
        if (block < s.blocks) bit = message.at(static_cast<std::size_t>(block) * fresh + a.index) != 0;
        break;
      case AssignmentKind::kCommonRandom: {
        const std::size_t idx = static_cast<std::size_t>(block) * random + a.index;
        if (idx < omega.size()) bit = omega[idx] != 0;
        break;
      }
      case AssignmentKind::kRelay: {
        const int src = n - a.lag;
        if (src >= 1) {
          const BitVector own = feedback_output(
              p, shift_down(own_inputs[src - 1], q - p.direct(s.user)), s.user);
          bit = feedback[src - 1].at(a.feedback_level) != own.at(a.feedback_level);
        }
        break;
      }
    }
    x.set(m, bit);
  }
  return x;
}

Bits decode(const ChannelParams& p, const Scheme& s, std::span<const BitVector> outputs,
            const Bits& omega) {
  (void)p;
  const int fresh = s.fresh_per_block();
  const int random = s.random_per_block();
  const int pattern = s.pattern_length;
  Bits decoded(static_cast<std::size_t>(fresh) * s.blocks, 0);
  for (int b = 0; b < s.blocks; ++b) {
    for (int k = 0; k < fresh; ++k) {
      const auto& row = s.decoder.rows[k];
      bool acc = false;
      for (auto ci = row.find_first(); ci != DynamicBits::npos; ci = row.find_next(ci)) {
        const auto& c = s.decoder.columns[ci];
        const int blk = b + c.block_offset;
        if (blk < 0) continue;
        switch (c.kind) {
          case DecoderColumn::Kind::kObservation: {
            const std::size_t use = static_cast<std::size_t>(blk) * pattern + c.use;
            if (use < outputs.size()) acc ^= outputs[use].at(c.level);
            break;
          }
          case DecoderColumn::Kind::kOmega: {
            const std::size_t idx = static_cast<std::size_t>(blk) * random + c.index;
            if (idx < omega.size()) acc ^= omega[idx] != 0;
            break;
          }
          case DecoderColumn::Kind::kDecoded:
            acc ^= decoded[static_cast<std::size_t>(blk) * fresh + c.index] != 0;
            break;
        }
      }
      decoded[static_cast<std::size_t>(b) * fresh + k] = acc ? 1 : 0;
    }
  }
  return decoded;
}

SimTrace simulate(const ChannelParams& p, const Scheme& s1, const Scheme& s2, const Bits& w1,
                  const Bits& w2, const Bits& omega1, const Bits& omega2) {
  require_valid(p, s1);
  require_valid(p, s2);
  if (s1.user != 1 || s2.user != 2) {
    throw std::invalid_argument("simulate expects schemes for users 1 and 2, in order");
  }
  const Scheme* sch[2] = {&s1, &s2};
  const Bits* w[2] = {&w1, &w2};
  const Bits* om[2] = {&omega1, &omega2};
  for (int u = 0; u < 2; ++u) {
    if (static_cast<int>(w[u]->size()) != sch[u]->message_bits()) {
      throw std::invalid_argument("user " + std::to_string(u + 1) + " message has " +
                                  std::to_string(w[u]->size()) + " bits, scheme needs " +
                                  std::to_string(sch[u]->message_bits()));
    }
    if (static_cast<int>(om[u]->size()) != sch[u]->random_bits()) {
      throw std::invalid_argument("user " + std::to_string(u + 1) + " randomness has " +
                                  std::to_string(om[u]->size()) + " bits, scheme needs " +
                                  std::to_string(sch[u]->random_bits()));
    }
  }
  SchemeTransmitter t1(p, s1, w1, omega1);
  SchemeTransmitter t2(p, s2, w2, omega2);
  SimTrace trace = run_channel(p, t1, t2);
  for (int u = 0; u < 2; ++u) {
    trace.message[u] = *w[u];
    trace.decoded[u] = decode(p, *sch[u], trace.y[u], *om[u]);
  }
  return trace;
}

}  // namespace nashld
