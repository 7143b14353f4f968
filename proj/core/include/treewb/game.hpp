/*
 * Copyright 2026 The treewb authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treewb/types.hpp"

namespace treewb {

/// Reproducible linear-congruential generator. All randomness in the
/// workbench flows through this so corpora can be regenerated bit-exactly
/// from seeds, also by other implementations:
///
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///   next() = state' >> 33
///   bounded(n) = next() % n
///
/// The state is initialised to the seed itself.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 33;
  }

  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Finite parity game, max-parity convention: an infinite play is won by Eve
/// iff the highest priority visited infinitely often is even. Every position
/// must have at least one outgoing edge; see make_total().
struct ParityGame {
  std::string name;
  std::vector<std::string> position_names;
  std::vector<Player> owner;
  std::vector<int> priority;
  std::vector<std::pair<int, int>> edges;  // ordered (src, dst)
  int initial = 0;

  int position_count() const { return static_cast<int>(position_names.size()); }
  int position_index(const std::string& n) const;
};

void validate(const ParityGame& g);

/// Adds a self-loop to every sink and, when needed, bumps the sink's priority
/// by one so that being stuck loses for the owner. A sink has no other
/// infinite play through it, so the bump cannot affect any other play.
void make_total(ParityGame& g);

/// Winning regions plus positional strategies. A strategy entry is the chosen
/// successor, −1 where undefined; entries exist exactly on positions that are
/// owned and won by the respective player.
struct Solution {
  std::vector<Player> winner;
  std::vector<int> strategy_eve;
  std::vector<int> strategy_adam;
};

/// Exact solver: Zielonka's recursive attractor decomposition.
Solution solve_game(const ParityGame& g);

/// Independent cross-check solver: small progress measures. Measures give
/// Eve's strategy directly; Adam's strategy comes from solving the dual game.
Solution solve_game_oracle(const ParityGame& g);

/// Owners swapped, every priority incremented. Winners are exactly swapped.
ParityGame dual_game(const ParityGame& g);

/// Seeded random game: `positions` positions; per position the owner and the
/// priority in [0, max_priority] are drawn from the Lcg, then 1 + bounded(density)
/// candidate successors (duplicate edges are skipped). Draw order per
/// position: owner, priority; then all edge targets, position by position.
ParityGame random_game(int positions, int density, int max_priority,
                       std::uint64_t seed);

}  // namespace treewb
