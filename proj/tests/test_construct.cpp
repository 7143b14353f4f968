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

#include <map>
#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "treewb/analysis.hpp"
#include "treewb/comp.hpp"
#include "treewb/construct.hpp"
#include "treewb/corpus.hpp"
#include "treewb/membership.hpp"

using namespace treewb;
namespace tt = treewb::testing;

TEST_CASE("R of INF: odd values, state count, band, language") {
  Nta a = tt::inf();
  RConstruction rc = build_r(a, trivial_family(a));

  CHECK(rc.odd_values == std::vector<int>{1});  // the only possible odd value
  int entries = 0;
  for (const auto& i : rc.info) entries += i.kind == RKind::Entry;
  CHECK(entries == a.state_count() * (1 + static_cast<int>(rc.odd_values.size())));

  CHECK(scc_comp_check(rc.automaton, {0, 0}).verdict);
  CHECK(scc_comp_check(rc.automaton, {0, 0}).verdict ==
        scc_comp_check(rc.automaton, {2, 2}).verdict);

  Corpus corpus = random_corpus(tt::ab(), 60, 1, 8, 21);
  corpus.trees.push_back(tt::all_a_tree());
  corpus.trees.push_back(tt::left_all_b_tree());
  for (const auto& t : corpus.trees)
    CHECK(member_nta(t, a) == member_ata(t, rc.automaton));
  CHECK(member_ata(tt::all_a_tree(), rc.automaton));
  CHECK_FALSE(member_ata(tt::left_all_b_tree(), rc.automaton));
}

TEST_CASE("R of an empty-language automaton rejects everything") {
  Nta a = tt::empty_aut();
  RConstruction rc = build_r(a, trivial_family(a), IndexPair{1, 2});
  Corpus corpus = random_corpus(tt::ab(), 30, 1, 6, 22);
  for (const auto& t : corpus.trees) CHECK_FALSE(member_ata(t, rc.automaton));
}

TEST_CASE("the declared value never changes once set") {
  for (const Nta& a : {tt::inf(), tt::a14()}) {
    RConstruction rc = build_r(a, a.name == "INF" ? trivial_family(a)
                                                  : tt::a14_family());
    const Ata& r = rc.automaton;
    auto in_c = [&rc](int s) {
      RKind k = rc.info[s].kind;
      return k == RKind::Entry || k == RKind::Sel || k == RKind::Choice;
    };
    for (const auto& tr : r.transitions) {
      if (!in_c(tr.src) || !in_c(tr.dst)) continue;
      int ms = rc.info[tr.src].m, md = rc.info[tr.dst].m;
      if (ms != -1) CHECK(md == ms);  // declared: frozen
    }
  }
}

TEST_CASE("every component of R is of one of the expected shapes") {
  for (bool buchi : {true, false}) {
    Nta a = buchi ? tt::inf() : tt::a14();
    RConstruction rc =
        build_r(a, buchi ? trivial_family(a) : tt::a14_family());
    const Ata& r = rc.automaton;

    // Group reachable states into components via the checker itself.
    SccReport rep = scc_comp_check(r, {rc.band.lo + 1, rc.band.hi});
    CHECK(rep.verdict);
    for (const auto& scc : rep.sccs) {
      if (scc.trivial) continue;
      bool has_bot = false, has_declared = false, has_sep = false;
      std::set<int> prios;
      for (int s : scc.states) {
        const RStateInfo& info = rc.info[s];
        if (info.kind == RKind::Separator) has_sep = true;
        else if (info.m == -1) has_bot = true;
        else has_declared = true;
        prios.insert(r.priority[s]);
      }
      // No mixing between the three zones.
      CHECK(has_bot + has_declared + has_sep == 1);
      if (has_bot) CHECK(prios == std::set<int>{0});
      if (has_declared) {
        if (rc.band.lo == rc.band.hi - 1) {
          CHECK(prios == std::set<int>{1});
        } else {
          for (int p : prios) CHECK((p == 0 || p == 1));
        }
      }
    }
  }
}

TEST_CASE("build_r validates its inputs") {
  SUBCASE("odd band maximum") {
    CHECK_THROWS_AS(build_r(tt::empty_aut(), trivial_family(tt::empty_aut())),
                    BadIndex);  // priorities {1}: default band (1,1)
  }
  SUBCASE("priority outside an explicit band") {
    Nta a = tt::inf();
    CHECK_THROWS_AS(build_r(a, trivial_family(a), IndexPair{2, 2}), BadIndex);
  }
  SUBCASE("family for a different pair structure") {
    CHECK_THROWS_AS(build_r(tt::inf(), tt::u2_family()), FamilyMismatch);
  }
  SUBCASE("family entry with wrong transitions") {
    SeparatorFamily f = trivial_family(tt::inf());
    f.entries[0].deltas.pop_back();
    f.entries[0].separators.pop_back();
    CHECK_THROWS_AS(build_r(tt::inf(), f), FamilyMismatch);
  }
}

TEST_CASE("R of A14 fits (2,4) and matches on a corpus") {
  Nta a = tt::a14();
  RConstruction rc = build_r(a, tt::a14_family());
  CHECK(rc.odd_values == std::vector<int>{1, 3});
  CHECK(scc_comp_check(rc.automaton, {2, 4}).verdict);
  Corpus corpus = random_corpus(tt::ab(), 40, 1, 7, 23);
  for (const auto& t : corpus.trees)
    CHECK(member_nta(t, a) == member_ata(t, rc.automaton));
}

TEST_CASE("a rejecting separator shrinks the language (soundness breaks)") {
  // Shrinking one family member can only remove trees from L(R): every
  // disagreement with the corrupted family is a rejection of a member of
  // L(A), never an extra acceptance.
  Nta a = tt::inf();
  SeparatorFamily f = trivial_family(a);
  f.entries[0].separators[0] = reject_all_ata(a.alphabet);
  RConstruction rc = build_r(a, f);
  Corpus corpus = random_corpus(tt::ab(), 80, 1, 6, 24);
  corpus.trees.push_back(tt::all_a_tree());
  int false_rejects = 0;
  for (const auto& t : corpus.trees) {
    bool in_a = member_nta(t, a);
    bool in_r = member_ata(t, rc.automaton);
    if (in_r) CHECK(in_a);  // L(R_corrupt) is still a subset of L(A)
    false_rejects += in_a && !in_r;
  }
  CHECK(false_rejects > 0);  // the all-a tree at least
}
