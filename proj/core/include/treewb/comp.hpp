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

#include "treewb/types.hpp"

namespace treewb {

struct SccEntry {
  std::vector<int> states;      // state indices, ascending
  std::vector<int> priorities;  // distinct priorities, ascending
  std::optional<int> chosen_even_shift;
  bool fits_band1 = false;  // [lo, hi]
  bool fits_band2 = false;  // [lo+1, hi+1]
  bool trivial = false;     // single state without a self-loop
};

struct SccReport {
  std::vector<SccEntry> sccs;  // partition the reachable states
  bool verdict = false;
};

/// Checks the band structure of an alternating automaton: every strongly
/// connected component of the state graph (edge q -> q' iff some transition
/// exists, any letter or direction) reachable from the initial state must fit
/// [lo, hi] or [lo+1, hi+1] up to a per-component even priority shift. An
/// even shift cannot change the limsup parity of any play trapped in the
/// component, so fitting modulo shifts is the semantically robust reading.
SccReport scc_comp_check(const Ata& aut, IndexPair band);

/// Applies each reachable component's chosen even shift so the priority sets
/// literally lie inside the two bands. Regular-tree membership is preserved.
/// Unreachable states keep their priorities. Throws ShiftUnavailable when
/// scc_comp_check fails.
Ata normalize_shift(const Ata& aut, IndexPair band);

}  // namespace treewb
