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

#include <sstream>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "treewb/boolean.hpp"
#include "treewb/construct.hpp"
#include "treewb/corpus.hpp"
#include "treewb/io.hpp"

using namespace treewb;
namespace tt = treewb::testing;

namespace {

Nta reparse(const Nta& a) {
  std::istringstream in(print_nta(a));
  return parse_nta(in, "<mem>");
}

Ata reparse(const Ata& a) {
  std::istringstream in(print_ata(a));
  return parse_ata(in, "<mem>");
}

RegularTree reparse(const RegularTree& t) {
  std::istringstream in(print_tree(t));
  return parse_tree(in, "<mem>");
}

}  // namespace

TEST_CASE("validation rejects malformed values") {
  Alphabet dup{{"a", "a"}};
  CHECK_THROWS_AS(validate(dup), TreewbError);
  CHECK_THROWS_AS(validate(Alphabet{}), TreewbError);

  Nta a = tt::inf();
  a.transitions.push_back(a.transitions.front());
  CHECK_THROWS_WITH_AS(validate(a), doctest::Contains("duplicate transition"),
                       TreewbError);

  Nta b = tt::inf();
  b.initial = 7;
  CHECK_THROWS_AS(validate(b), TreewbError);

  // Ata totality: (state, letter) without a transition.
  Ata c = accept_all_ata(tt::ab());
  c.transitions.pop_back();
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("no transition"),
                       TreewbError);

  CHECK_THROWS_AS(validate(IndexPair{3, 1}), TreewbError);
}

TEST_CASE("round-trip parse(print(x)) == x") {
  CHECK(reparse(tt::inf()) == tt::inf());
  CHECK(reparse(tt::eb()) == tt::eb());
  CHECK(reparse(tt::a14()) == tt::a14());
  CHECK(reparse(tt::left_a()) == tt::left_a());

  // R has interleaved Eve/Adam state blocks.
  RConstruction rc = build_r(tt::inf(), trivial_family(tt::inf()));
  CHECK(reparse(rc.automaton) == rc.automaton);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    RegularTree t = random_regular_tree(tt::ab(), 6, seed);
    CHECK(reparse(t) == t);
    Ata r = tt::random_ata(tt::ab(), 5, 4, seed);
    CHECK(reparse(r) == r);
  }

  ParityGame g = random_game(12, 3, 4, 9);
  std::istringstream in(print_game(g));
  ParityGame h = parse_game(in, "<mem>");
  CHECK(h.position_names == g.position_names);
  CHECK(h.owner == g.owner);
  CHECK(h.priority == g.priority);
  CHECK(h.edges == g.edges);
  CHECK(h.initial == g.initial);
}

TEST_CASE("parse errors carry file and line") {
  std::istringstream in("nta X\nalphabet a b\nstates s:1\ninit s\ntrans s c s s\n");
  try {
    parse_nta(in, "bad.nta");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.file == "bad.nta");
    CHECK(e.line == 5);
    CHECK(std::string(e.what()).find("unknown letter") != std::string::npos);
  }

  std::istringstream in2("tree T\nalphabet a\nnodes n0:a\nroot n0\nedge n0 L n0\n");
  CHECK_THROWS_WITH_AS(parse_tree(in2, "t.tree"),
                       doctest::Contains("missing a successor"), ParseError);

  std::istringstream in3("game G\npos p EVE x\n");
  CHECK_THROWS_AS(parse_game(in3, "g.game"), ParseError);
}

TEST_CASE("shipped data files match the programmatic fixtures") {
  std::string dir = TREEWB_DATA_DIR;
  CHECK(load_nta(dir + "/INF.nta") == tt::inf());
  CHECK(load_nta(dir + "/EB.nta") == tt::eb());
  CHECK(load_nta(dir + "/ALLB.nta") == tt::allb());
  CHECK(load_nta(dir + "/EMPTY.nta") == tt::empty_aut());
  CHECK(load_nta(dir + "/U1.nta") == tt::u1());
  CHECK(load_nta(dir + "/U2.nta") == tt::u2());
  CHECK(load_nta(dir + "/A14.nta") == tt::a14());
  CHECK(load_tree(dir + "/allA.tree") == tt::all_a_tree());
  CHECK(load_tree(dir + "/allB.tree") == tt::all_b_tree());

  Ata la = load_ata(dir + "/left_a.ata");
  la.name = "left_a";
  CHECK(la == tt::left_a());
}

TEST_CASE("family files round-trip through write_family/load_family") {
  SeparatorFamily f = tt::u2_family();
  std::string dir = "family_rt_tmp";
  std::string path = write_family(f, dir, "U2F.family");
  SeparatorFamily g = load_family(path);
  REQUIRE(g.entries.size() == f.entries.size());
  CHECK(g.owner == f.owner);
  for (size_t i = 0; i < f.entries.size(); ++i) {
    CHECK(g.entries[i].state == f.entries[i].state);
    CHECK(g.entries[i].letter == f.entries[i].letter);
    CHECK(g.entries[i].deltas == f.entries[i].deltas);
    CHECK(g.entries[i].separators == f.entries[i].separators);
  }
}

TEST_CASE("unique_name avoids collisions deterministically") {
  std::vector<std::string> taken{"x", "x_2"};
  CHECK(unique_name("y", taken) == "y");
  CHECK(unique_name("x", taken) == "x_3");
}
