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

#ifndef NLGAMES_GAMES_H_
#define NLGAMES_GAMES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlgames {

// Two-player game over common input alphabet [k] and output alphabet [m].
// The predicate is stored bit-packed at index ((a*m + b)*k + x)*k + y.
class Game {
 public:
  // distribution is k*k row-major (x major). Throws kShape on size mismatch,
  // kNormalization on negative entries or a sum more than 1e-9 from 1. Sums
  // off by more than 1e-12 are renormalized.
  Game(std::size_t inputs, std::size_t outputs, std::vector<double> distribution,
       std::vector<bool> predicate, std::string name = {});

  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  const std::string& name() const { return name_; }

  double p(std::size_t x, std::size_t y) const { return distribution_[x * inputs_ + y]; }
  const std::vector<double>& distribution() const { return distribution_; }
  bool wins(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const {
    return predicate_[predicate_index(a, b, x, y)];
  }
  const std::vector<bool>& predicate() const { return predicate_; }
  std::size_t predicate_index(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const {
    return ((a * outputs_ + b) * inputs_ + x) * inputs_ + y;
  }

  double p_x(std::size_t x) const;
  double p_y(std::size_t y) const;
  bool is_uniform(double tol = 1e-12) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<double> distribution_;
  std::vector<bool> predicate_;
  std::string name_;
};

struct GameMeta {
  bool is_uniform = false;
  double alpha_min = 0.0;  // min_xy k^2 p_xy
  double alpha_max = 0.0;  // max_xy k^2 p_xy
  // k^2 (max p)^2 / min p, absent without complete support.
  std::optional<double> q;
};

GameMeta game_meta(const Game& g);

// a XOR b == x AND y, uniform inputs.
Game make_chsh();
// Predicate identically 1.
Game make_always_win(std::size_t inputs, std::size_t outputs);

// Upper bound on predicate entries for repeat and threshold.
inline constexpr std::size_t kMaxPredicateEntries = std::size_t{1} << 20;

// G^n: tuples flattened with the first coordinate most significant.
Game repeat(const Game& g, std::size_t n);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// G^n_alpha: wins iff #winning coordinates >= alpha * n, compared exactly.
Game threshold(const Game& g, std::size_t n, Rational alpha);
// alpha is taken as the exact binary value of the double.
Game threshold(const Game& g, std::size_t n, double alpha);

struct LiftedGame {
  Game game;
  GameMeta meta;
};

// Inputs (c, x) with flag c in {0,1} at index c*k + x. Flag-0 pairs carry
// alpha_min / k^2 and the original predicate; flag-1 pairs carry the rest of
// p and always win. Mismatched flags have probability 0.
LiftedGame complete_support_lift(const Game& g);

// {"inputs", "outputs", "distribution": [[...]], "predicate": [...], "name"}.
Game parse_game(std::string_view json_text);
// Canonical form: fixed key order, 17 significant digits, no whitespace.
std::string emit_game(const Game& g);

}  // namespace nlgames

#endif  // NLGAMES_GAMES_H_
