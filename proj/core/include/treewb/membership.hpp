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

#include "treewb/game.hpp"
#include "treewb/types.hpp"

namespace treewb {

/// Membership game of a regular tree in an alternating automaton. Positions
/// are (node, state); epsilon transitions stay at the node, L/R move to the
/// successors. Position index = node * |Q| + state.
ParityGame membership_game(const RegularTree& t, const Ata& c);

/// True iff Eve wins the membership game from (root, initial), i.e. the
/// unfolding of t is accepted.
bool member_ata(const RegularTree& t, const Ata& c);

/// Acceptance of the unfolding of t by an NTA: Eve picks a transition on the
/// node's label, Adam a direction. `from` defaults to the initial state,
/// `at_node` to the root; other values query the game at inner positions,
/// which coincides with membership of the re-rooted tree.
bool member_nta(const RegularTree& t, const Nta& a,
                const std::optional<std::string>& from = std::nullopt,
                const std::optional<std::string>& at_node = std::nullopt);

enum class RunCount { Zero, One, Many };

const char* to_string(RunCount c);

/// ZERO/ONE/MANY accepting runs of `a` on the unfolding of t, decided via
/// the divergence automaton.
RunCount count_runs(const RegularTree& t, const Nta& a);

}  // namespace treewb
