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
#include <vector>

#include "treewb/boolean.hpp"
#include "treewb/types.hpp"

namespace treewb {

enum class RKind { Entry, Sel, Choice, LoseEve, LoseAdam, Separator };

struct RStateInfo {
  RKind kind;
  int q = -1;      // state of the source automaton, where applicable
  int m = -2;      // declared odd budget; -1 = bottom, -2 = not applicable
  int delta = -1;  // transition index for Choice / Separator states
};

struct RConstruction {
  Ata automaton;
  std::vector<RStateInfo> info;  // per state of `automaton`
  std::vector<int> odd_values;   // odd numbers within the band, ascending
  IndexPair band;
};

/// Builds the alternating automaton R equivalent to an unambiguous A, given
/// a separator family covering exactly A's productive pairs.
///
/// The game read of R at a vertex labelled a, playing entry(q, m):
///   1. (q, a) unproductive: Eve loses.
///   2. m declared and the priority of q exceeds m: Adam loses.
///   3. Adam declares m (an odd value within the band, or keeps bottom);
///      once declared, m is fixed forever.
///   4. Eve declares a transition from (q, a)      -> sel, then choice state.
///   5-7. Adam either rejects the transition, moving into the separator of
///      that transition, or accepts and picks a direction.
///
/// Priorities: bottom layer 0; declared layer 1 exactly when the priority of
/// q equals m, else 0; sel/choice 0, except 1 on the declared layer in the
/// Buchi-shaped band (lo = hi-1), which keeps those components pure without
/// changing any limsup. Rules 3-7 are reified as entry -> sel -> choice
/// chains of epsilon transitions, so the acceptance game of the output is
/// exactly the game above.
RConstruction build_r(const Nta& a, const SeparatorFamily& family,
                      std::optional<IndexPair> band = std::nullopt);

}  // namespace treewb
