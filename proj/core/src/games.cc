// Copyright 2026 The nlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlgames/games.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

#include "nlgames/error.h"

namespace nlgames {
namespace {

std::size_t checked_power(std::size_t base, std::size_t n, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Splits a flattened tuple index into n base-`base` digits, first most significant.
void digits(std::size_t value, std::size_t base, std::vector<std::size_t>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = value % base;
    value /= base;
  }
}

// Counts winning coordinates of each (a, b, x, y) tuple entry of G^n.
template <typename Fn>
Game compose(const Game& g, std::size_t n, const std::string& name, Fn&& accept) {
  if (n == 0) throw Error(ErrorCode::kParam, "repetition count must be positive");
  if (n > 64) throw Error(ErrorCode::kDimension, "repetition count above 64 is not supported");
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  const std::size_t entries = checked_power(m * m * k * k, n, kMaxPredicateEntries);
  if (entries > kMaxPredicateEntries) {
    throw Error(ErrorCode::kDimension,
                "G^" + std::to_string(n) + " needs more than 2^20 predicate entries; use a smaller n");
  }
  const std::size_t kn = checked_power(k, n, entries);
  const std::size_t mn = checked_power(m, n, entries);

  std::vector<double> dist(kn * kn);
  std::vector<std::size_t> xs(n), ys(n), as(n), bs(n);
  for (std::size_t x = 0; x < kn; ++x) {
    digits(x, k, xs);
    for (std::size_t y = 0; y < kn; ++y) {
      digits(y, k, ys);
      double q = 1.0;
      for (std::size_t i = 0; i < n; ++i) q *= g.p(xs[i], ys[i]);
      dist[x * kn + y] = q;
    }
  }
  std::vector<bool> pred(entries);
  for (std::size_t a = 0; a < mn; ++a) {
    digits(a, m, as);
    for (std::size_t b = 0; b < mn; ++b) {
      digits(b, m, bs);
      for (std::size_t x = 0; x < kn; ++x) {
        digits(x, k, xs);
        for (std::size_t y = 0; y < kn; ++y) {
          digits(y, k, ys);
          std::size_t count = 0;
          for (std::size_t i = 0; i < n; ++i) count += g.wins(as[i], bs[i], xs[i], ys[i]);
          pred[((a * mn + b) * kn + x) * kn + y] = accept(count);
        }
      }
    }
  }
  return Game(kn, mn, std::move(dist), std::move(pred), name);
}

// a/b >= c/d for b, d > 0, without forming products.
bool fraction_ge(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  while (true) {
    const std::uint64_t qa = a / b;
    const std::uint64_t qc = c / d;
    if (qa != qc) return qa > qc;
    const std::uint64_t ra = a % b;
    const std::uint64_t rc = c % d;
    if (rc == 0) return true;
    if (ra == 0) return false;
    // ra/b >= rc/d  <=>  d/rc >= b/ra
    a = d;
    c = b;
    b = rc;
    d = ra;
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Game::Game(std::size_t inputs, std::size_t outputs, std::vector<double> distribution,
           std::vector<bool> predicate, std::string name)
    : inputs_(inputs),
      outputs_(outputs),
      distribution_(std::move(distribution)),
      predicate_(std::move(predicate)),
      name_(std::move(name)) {
  if (inputs_ == 0 || outputs_ == 0) {
    throw Error(ErrorCode::kShape, "game alphabets must be nonempty");
  }
  if (distribution_.size() != inputs_ * inputs_) {
    throw Error(ErrorCode::kShape, "distribution shape: expected " +
                                       std::to_string(inputs_ * inputs_) + " entries");
  }
  if (predicate_.size() != outputs_ * outputs_ * inputs_ * inputs_) {
    throw Error(ErrorCode::kShape, "predicate shape: expected " +
                                       std::to_string(outputs_ * outputs_ * inputs_ * inputs_) +
                                       " entries");
  }
  double sum = 0.0;
  for (double p : distribution_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorCode::kNormalization, "distribution entries must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNormalization,
                "distribution not normalized (sum " + format_double(sum) + ")");
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    for (double& p : distribution_) p /= sum;
  }
}

double Game::p_x(std::size_t x) const {
  double s = 0.0;
  for (std::size_t y = 0; y < inputs_; ++y) s += p(x, y);
  return s;
}

double Game::p_y(std::size_t y) const {
  double s = 0.0;
  for (std::size_t x = 0; x < inputs_; ++x) s += p(x, y);
  return s;
}

bool Game::is_uniform(double tol) const {
  const double u = 1.0 / static_cast<double>(inputs_ * inputs_);
  return std::all_of(distribution_.begin(), distribution_.end(),
                     [&](double p) { return std::abs(p - u) <= tol; });
}

GameMeta game_meta(const Game& g) {
  GameMeta meta;
  const double k2 = static_cast<double>(g.inputs() * g.inputs());
  const auto [lo, hi] = std::minmax_element(g.distribution().begin(), g.distribution().end());
  meta.is_uniform = g.is_uniform();
  meta.alpha_min = k2 * *lo;
  meta.alpha_max = k2 * *hi;
  if (*lo > 0.0) meta.q = k2 * (*hi) * (*hi) / *lo;
  return meta;
}

Game make_chsh() {
  std::vector<bool> pred(16);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) pred[((a * 2 + b) * 2 + x) * 2 + y] = (a ^ b) == (x & y);
  return Game(2, 2, std::vector<double>(4, 0.25), std::move(pred), "chsh");
}

Game make_always_win(std::size_t inputs, std::size_t outputs) {
  const std::size_t k2 = inputs * inputs;
  return Game(inputs, outputs, std::vector<double>(k2, 1.0 / static_cast<double>(k2)),
              std::vector<bool>(outputs * outputs * k2, true), "always-win");
}

Game repeat(const Game& g, std::size_t n) {
  if (n == 1) return g;
  return compose(g, n, g.name().empty() ? "" : g.name() + "^" + std::to_string(n),
                 [n](std::size_t count) { return count == n; });
}

Game threshold(const Game& g, std::size_t n, Rational alpha) {
  if (alpha.den <= 0 || alpha.num < 0 || alpha.num > alpha.den) {
    throw Error(ErrorCode::kParam, "threshold alpha must be a rational in [0,1]");
  }
  const auto num = static_cast<std::uint64_t>(alpha.num);
  const auto den = static_cast<std::uint64_t>(alpha.den);
  return compose(g, n, g.name(),
                 [&](std::size_t count) { return fraction_ge(count, n, num, den); });
}

Game threshold(const Game& g, std::size_t n, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kParam, "threshold alpha must lie in [0,1]");
  }
  if (alpha == 0.0) return threshold(g, n, Rational{0, 1});
  // alpha = mantissa / 2^shift exactly.
  int exp = 0;
  const double frac = std::frexp(alpha, &exp);
  auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  int shift = 53 - exp;
  while (shift > 0 && (mantissa & 1) == 0) {
    mantissa >>= 1;
    --shift;
  }
  if (shift >= 64) {
    // alpha < 2^-11, so alpha * n < 1 for every n the size cap admits.
    return compose(g, n, g.name(), [](std::size_t count) { return count >= 1; });
  }
  const std::uint64_t den = std::uint64_t{1} << shift;
  return compose(g, n, g.name(),
                 [&](std::size_t count) { return fraction_ge(count, n, mantissa, den); });
}

LiftedGame complete_support_lift(const Game& g) {
  const GameMeta meta = game_meta(g);
  if (!meta.q) throw Error(ErrorCode::kSupport, "not complete support: some p_xy is zero");
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  const std::size_t k2 = 2 * k;
  const double base = meta.alpha_min / static_cast<double>(k * k);
  std::vector<double> dist(k2 * k2, 0.0);
  std::vector<bool> pred(m * m * k2 * k2, false);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      dist[x * k2 + y] = base;
      dist[(k + x) * k2 + (k + y)] = std::max(0.0, g.p(x, y) - base);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t cx = 0; cx < k2; ++cx) {
        for (std::size_t cy = 0; cy < k2; ++cy) {
          const bool fx = cx >= k;
          const bool fy = cy >= k;
          bool v = true;
          if (!fx && !fy) v = g.wins(a, b, cx, cy);
          pred[((a * m + b) * k2 + cx) * k2 + cy] = v;
        }
      }
    }
  }
  return {Game(k2, m, std::move(dist), std::move(pred), g.name().empty() ? "" : g.name() + "-lift"),
          meta};
}

Game parse_game(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed game JSON: ") + e.what());
  }
  try {
    const auto k = doc.at("inputs").get<std::size_t>();
    const auto m = doc.at("outputs").get<std::size_t>();
    const auto& rows = doc.at("distribution");
    if (!rows.is_array() || rows.size() != k) {
      throw Error(ErrorCode::kShape, "distribution shape: expected " + std::to_string(k) + " rows");
    }
    std::vector<double> dist;
    dist.reserve(k * k);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != k) {
        throw Error(ErrorCode::kShape,
                    "distribution shape: expected rows of " + std::to_string(k) + " entries");
      }
      for (const auto& v : row) dist.push_back(v.get<double>());
    }
    std::vector<bool> pred;
    const auto& flat = doc.at("predicate");
    if (!flat.is_array()) throw Error(ErrorCode::kShape, "predicate shape: expected an array");
    pred.reserve(flat.size());
    for (const auto& v : flat) {
      const int bit = v.is_boolean() ? static_cast<int>(v.get<bool>()) : v.get<int>();
      if (bit != 0 && bit != 1) throw Error(ErrorCode::kParse, "predicate entries must be 0 or 1");
      pred.push_back(bit == 1);
    }
    std::string name = doc.contains("name") ? doc["name"].get<std::string>() : std::string();
    return Game(k, m, std::move(dist), std::move(pred), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("game JSON: ") + e.what());
  }
}

std::string emit_game(const Game& g) {
  const std::size_t k = g.inputs();
  std::string out = "{\"inputs\":" + std::to_string(k) +
                    ",\"outputs\":" + std::to_string(g.outputs()) + ",\"distribution\":[";
  for (std::size_t x = 0; x < k; ++x) {
    out += x ? ",[" : "[";
    for (std::size_t y = 0; y < k; ++y) {
      if (y) out += ',';
      out += format_double(g.p(x, y));
    }
    out += ']';
  }
  out += "],\"predicate\":[";
  for (std::size_t i = 0; i < g.predicate().size(); ++i) {
    if (i) out += ',';
    out += g.predicate()[i] ? '1' : '0';
  }
  out += ']';
  if (!g.name().empty()) out += ",\"name\":" + nlohmann::json(g.name()).dump();
  out += '}';
  return out;
}

}  // namespace nlgames
