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

#include <vector>

#include "treewb/types.hpp"

namespace treewb {

/// Deterministic machine over pairs of priorities that compiles the
/// conjunction of two max-parity conditions into a single one. Contract: for
/// every infinite sequence of pairs within range1 x range2, the limsup of
/// out() along the run is even iff the limsup of the first components is
/// even AND the limsup of the second components is even.
struct Monitor {
  IndexPair range1;
  IndexPair range2;
  int start = 0;
  std::vector<int> out;    // per state
  std::vector<int> table;  // dense: state x (p1 - lo1) x (p2 - lo2)

  int state_count() const { return static_cast<int>(out.size()); }

  int step(int state, int p1, int p2) const {
    if (p1 < range1.lo || p1 > range1.hi || p2 < range2.lo || p2 > range2.hi)
      throw BadIndex("monitor input outside declared ranges");
    int w1 = range1.hi - range1.lo + 1;
    int w2 = range2.hi - range2.lo + 1;
    return table[(state * w1 + (p1 - range1.lo)) * w2 + (p2 - range2.lo)];
  }
};

/// For ranges within (1,2) x (1,2) this is the two-phase counter: wait for
/// the first component to show an even value, then for the second, emit 2 on
/// the phase reset and 1 otherwise. For general ranges it is an index
/// appearance record over the Streett pairs of the two parity conditions.
Monitor make_monitor(IndexPair range1, IndexPair range2);

}  // namespace treewb
