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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treewb/game.hpp"
#include "treewb/types.hpp"

namespace treewb {

/// Emptiness game of an NTA: Eve picks a letter and a transition, Adam picks
/// a direction. State q is live iff Eve wins position q.
/// Positions 0..|Q|-1 are the states, |Q|..|Q|+|Delta|-1 the transitions.
ParityGame emptiness_game(const Nta& a);

/// Per-state liveness, indexed like a.states.
std::vector<char> live_mask(const Nta& a);

/// { q : some tree has an accepting run starting from q }, canonical order.
std::vector<std::string> live_states(const Nta& a);

/// A regular tree accepted from `from`, read off Eve's positional strategy in
/// the emptiness game. Tree nodes are the strategy-reachable states and carry
/// their names, so the accepting run can be read back from the node names.
/// Empty when `from` is not live.
std::optional<RegularTree> accepting_witness(const Nta& a,
                                             const std::string& from);

struct ProductivityReport {
  std::vector<std::string> live_states;
  std::vector<std::pair<std::string, std::string>> productive_pairs;
};

/// A pair (q, a) is productive iff it appears in some accepting run from the
/// initial state. Computed as: q reachable from a live initial state through
/// transitions whose both children are live, and (q, a) itself has such a
/// transition. Limsup acceptance ignores finite prefixes, so any such path
/// extends to a full accepting run.
ProductivityReport productive_pairs(const Nta& a);

/// Same, as (state index, letter index) pairs in canonical order.
std::vector<std::pair<int, int>> productive_pair_indices(const Nta& a);

struct PruneResult {
  Nta automaton;
  /// The initial state was dead. It is retained (well-formedness) but has no
  /// transitions left; the pruned language is empty.
  bool empty_after_prune = false;
};

/// Drops dead states and transitions with a dead child. The language from
/// every surviving state is unchanged.
PruneResult prune(const Nta& a);

/// Automaton for L_delta: trees with an accepting run that uses the given
/// transition at the root (rooted at the transition's source state, not the
/// initial state). Adds a fresh initial state; original states and
/// transitions keep their indices.
Nta delta_rooted(const Nta& a, int delta);

struct DisjointnessResult {
  bool disjoint = false;
  std::optional<RegularTree> witness;  // accepted by both when not disjoint
};

/// Emptiness of the monitored product: states Q1 x Q2 x monitor, the monitor
/// stepping on the pair of child-state priorities, product priority = monitor
/// output. Stepping on children (not sources) matches run acceptance, which
/// evaluates priorities along the branch; the roots' priorities cannot
/// change any limsup.
DisjointnessResult is_disjoint(const Nta& a1, const Nta& a2);

/// The divergence automaton D: accepts exactly the trees with two distinct
/// accepting runs from the initial state. Three layers:
///   pend(q)        spine above the divergence point; priority is the
///                  smallest odd value above every priority of `a`, so an
///                  accepting run of D must actually diverge;
///   plain(q)       off-spine single-run tracking, priority of q;
///   pair(q1,q2,m)  the two runs after the divergence, monitored so a branch
///                  accepts iff both tracked runs accept on it.
/// At the divergence vertex the spine splits on two distinct transitions.
Nta divergence_automaton(const Nta& a);

struct AmbiguityVerdict {
  bool unambiguous = false;
  std::optional<RegularTree> witness;  // tree with >= 2 accepting runs
};

/// Decides whether the automaton has at most one accepting run on every
/// tree, by emptiness of the divergence automaton.
AmbiguityVerdict is_unambiguous(const Nta& a);

}  // namespace treewb
