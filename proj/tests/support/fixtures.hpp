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
#include <utility>
#include <vector>

#include "treewb/boolean.hpp"
#include "treewb/corpus.hpp"
#include "treewb/game.hpp"
#include "treewb/monitor.hpp"
#include "treewb/types.hpp"

namespace treewb::testing {

Alphabet ab();

// The shipped example automata, programmatic twins of the files in data/.
Nta inf();        // every branch has infinitely many a's (deterministic)
Nta eb();         // some branch has infinitely many a's (ambiguous)
Nta allb();       // exactly the all-b tree
Nta empty_aut();  // recognises nothing
Nta u1();         // unambiguous nondeterministic, left-child guess
Nta u2();         // unambiguous nondeterministic, three-way guess
Nta a14();        // index (1,4) ladder with a root guess

Ata left_a();   // left child of the root is labelled a
Ata right_a();  // right child of the root is labelled a

SeparatorFamily a14_family();  // valid family for a14()
SeparatorFamily u2_family();   // valid family for u2()

RegularTree all_a_tree();
RegularTree all_b_tree();
/// Root a; its left subtree is all-b. Rejected by inf().
RegularTree left_all_b_tree();

RegularTree reroot(const RegularTree& t, const std::string& node);

/// One-player alternating view of an NTA (Eve resolves the transition, Adam
/// the direction). Membership oracle: member_ata of this equals member_nta.
Ata embed_nta(const Nta& a);

/// Seeded total random ATA for property tests.
Ata random_ata(const Alphabet& alphabet, int states, int max_priority,
               std::uint64_t seed);

using PairWord = std::vector<std::pair<int, int>>;

/// Limsup of the monitor output along u v^omega (v non-empty).
int monitor_lasso_limsup(const Monitor& m, const PairWord& u, const PairWord& v);

/// Exhaustively checks the monitor contract on every lasso u v^omega with
/// |uv| <= max_len over the monitor's ranges. Enumerates v and, instead of
/// every u, every monitor state reachable by at most |uv|-|v| letters (the
/// check depends on u only through that state). Returns the number of
/// counterexamples, describing the first in `fail` when given.
long exhaustive_lasso_check(const Monitor& m, int max_len,
                            std::string* fail = nullptr);

/// Winner agreement, determinacy, strategy domains and strategy
/// self-verification for one game; throws on any discrepancy.
void check_solution_invariants(const ParityGame& g);

}  // namespace treewb::testing
