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

#include <string>
#include <vector>

#include "treewb/types.hpp"

namespace treewb {

/// Dual automaton: ownership swapped, every priority incremented, same
/// transitions. Accepts exactly the trees the input rejects.
Ata complement(const Ata& c);

/// Fresh Adam-owned initial state with epsilon moves on every letter to both
/// operands' initial states; accepts the intersection of the languages. The
/// operands are kept as disjoint copies (second copy renamed on collision),
/// so component structure is preserved and the fresh state is a trivial SCC.
Ata intersect(const Ata& c1, const Ata& c2);

/// Same with an Eve-owned fresh state; accepts the union.
Ata unite(const Ata& c1, const Ata& c2);

/// One Eve state of priority 0 with epsilon self-loops: accepts every tree.
Ata accept_all_ata(const Alphabet& alphabet, const std::string& name = "acceptall");

/// One Eve state of priority 1 with epsilon self-loops: accepts nothing.
Ata reject_all_ata(const Alphabet& alphabet, const std::string& name = "rejectall");

/// Per productive pair (q, a) of the owner: its transitions in canonical
/// order with one alternating automaton each. Depending on context the
/// automata are either claimed separators (inputs of partition_family) or
/// the assembled partition members.
struct SeparatorEntry {
  std::string state;
  std::string letter;
  std::vector<int> deltas;      // canonical transition indices, ascending
  std::vector<Ata> separators;  // same length
};

struct SeparatorFamily {
  std::string name;
  std::string owner;  // name of the Nta
  std::vector<SeparatorEntry> entries;

  const SeparatorEntry* find(const std::string& state,
                             const std::string& letter) const;
};

/// Assembles a partition from claimed separators: with K transitions per
/// pair, member 1 is S1, member k is Sk intersected with the complements of
/// all earlier inputs, and the last member is the complement slot (the K-th
/// input is not consulted). K = 1 yields accept-all. Members are pairwise
/// disjoint and covering by construction; containment L_delta inside member
/// delta additionally needs the inputs to be genuine separators and is
/// checked downstream by verify_family. Requires the claimed entries to
/// cover exactly the productive pairs with exactly their transitions.
SeparatorFamily partition_family(const Nta& a, const SeparatorFamily& claimed);

/// partition_family over accept-all inputs: the valid family for automata
/// that are deterministic on every productive pair.
SeparatorFamily trivial_family(const Nta& a);

}  // namespace treewb
