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

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace treewb {

enum class Player { Eve, Adam };
enum class Dir { Eps, L, R };

const char* to_string(Player p);
const char* to_string(Dir d);

struct TreewbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlphabetMismatch : TreewbError {
  using TreewbError::TreewbError;
};
struct ShiftUnavailable : TreewbError {
  using TreewbError::TreewbError;
};
struct BadTransition : TreewbError {
  using TreewbError::TreewbError;
};
struct BadIndex : TreewbError {
  using TreewbError::TreewbError;
};
struct FamilyMismatch : TreewbError {
  using TreewbError::TreewbError;
};
struct MissingPair : FamilyMismatch {
  using FamilyMismatch::FamilyMismatch;
};
struct TransitionMismatch : FamilyMismatch {
  using FamilyMismatch::FamilyMismatch;
};

struct ParseError : TreewbError {
  ParseError(const std::string& file, int line, const std::string& what)
      : TreewbError(file + ":" + std::to_string(line) + ": " + what),
        file(file),
        line(line) {}
  std::string file;
  int line;
};

/// Finite, ordered set of letter names. Iteration order is declaration order.
struct Alphabet {
  std::vector<std::string> symbols;

  int size() const { return static_cast<int>(symbols.size()); }
  /// Index of a symbol, -1 if absent.
  int index(const std::string& s) const;
  bool operator==(const Alphabet&) const = default;
};

/// One non-deterministic transition (q, q_L, a, q_R), all by index.
struct NtaTransition {
  int src;
  int left;
  int letter;
  int right;
  auto operator<=>(const NtaTransition&) const = default;
};

/// Non-deterministic parity tree automaton. A run labels every vertex of a
/// tree with a state; it is accepting when on every branch the limsup of the
/// state priorities is even (max parity). The transition list order defines
/// the canonical transition indices 0,1,2,...
struct Nta {
  std::string name;
  Alphabet alphabet;
  std::vector<std::string> states;
  std::vector<int> priority;  // per state
  int initial = 0;
  std::vector<NtaTransition> transitions;

  int state_count() const { return static_cast<int>(states.size()); }
  int state_index(const std::string& s) const;
  /// Indices of transitions starting from (state, letter), in canonical order.
  std::vector<int> transitions_from(int state, int letter) const;
  int min_priority() const;
  int max_priority() const;
  bool operator==(const Nta&) const = default;
};

/// One alternating transition (q, a, d, q'), all by index.
struct AtaTransition {
  int src;
  int letter;
  Dir dir;
  int dst;
  auto operator<=>(const AtaTransition&) const = default;
};

/// Alternating parity tree automaton. Acceptance of a tree is defined by a
/// parity game whose positions are (vertex, state); Eve resolves the states
/// in `eve`, Adam the rest. Totality: every (state, letter) pair has at
/// least one transition.
struct Ata {
  std::string name;
  Alphabet alphabet;
  std::vector<std::string> states;
  std::vector<char> eve;  // per state: 1 = owned by Eve
  std::vector<int> priority;
  int initial = 0;
  std::vector<AtaTransition> transitions;

  int state_count() const { return static_cast<int>(states.size()); }
  int state_index(const std::string& s) const;
  std::vector<int> transitions_from(int state, int letter) const;
  int min_priority() const;
  int max_priority() const;
  bool operator==(const Ata&) const = default;
};

/// Finite pointed system denoting its infinite unfolding t : {L,R}* -> A.
/// Every node has both successors, so the unfolding is a full binary tree.
struct RegularTree {
  std::string name;
  Alphabet alphabet;
  std::vector<std::string> nodes;
  int root = 0;
  std::vector<int> label;               // per node, symbol index
  std::vector<std::array<int, 2>> succ; // per node: [L, R]

  int node_count() const { return static_cast<int>(nodes.size()); }
  int node_index(const std::string& n) const;
  bool operator==(const RegularTree&) const = default;
};

/// Priority band [lo, hi], lo <= hi.
struct IndexPair {
  int lo = 0;
  int hi = 0;
  bool operator==(const IndexPair&) const = default;
};

void validate(const Alphabet& a);
void validate(const Nta& a);
void validate(const Ata& a);
void validate(const RegularTree& t);
void validate(const IndexPair& p);

/// Picks `base` if unused, otherwise base_2, base_3, ...
std::string unique_name(const std::string& base,
                        const std::vector<std::string>& taken);

}  // namespace treewb
