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

#include "fixtures.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace treewb::testing {

Alphabet ab() { return Alphabet{{"a", "b"}}; }

namespace {

int idx(const std::vector<std::string>& names, const std::string& n) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  throw std::runtime_error("fixture name lookup failed: " + n);
}

struct NtaBuilder {
  Nta a;

  NtaBuilder(std::string name, std::vector<std::pair<std::string, int>> states,
             const std::string& initial) {
    a.name = std::move(name);
    a.alphabet = ab();
    for (auto& [s, p] : states) {
      a.states.push_back(s);
      a.priority.push_back(p);
    }
    a.initial = idx(a.states, initial);
  }

  NtaBuilder& t(const std::string& src, const std::string& letter,
                const std::string& left, const std::string& right) {
    a.transitions.push_back({idx(a.states, src), idx(a.states, left),
                             a.alphabet.index(letter), idx(a.states, right)});
    return *this;
  }

  Nta done() {
    validate(a);
    return a;
  }
};

}  // namespace

Nta inf() {
  return NtaBuilder("INF", {{"s1", 1}, {"s2", 2}}, "s1")
      .t("s1", "a", "s2", "s2")
      .t("s1", "b", "s1", "s1")
      .t("s2", "a", "s2", "s2")
      .t("s2", "b", "s1", "s1")
      .done();
}

Nta eb() {
  return NtaBuilder("EB", {{"gb", 1}, {"ga", 2}, {"all", 2}}, "gb")
      .t("gb", "a", "ga", "all")
      .t("gb", "a", "all", "ga")
      .t("gb", "b", "gb", "all")
      .t("gb", "b", "all", "gb")
      .t("ga", "a", "ga", "all")
      .t("ga", "a", "all", "ga")
      .t("ga", "b", "gb", "all")
      .t("ga", "b", "all", "gb")
      .t("all", "a", "all", "all")
      .t("all", "b", "all", "all")
      .done();
}

Nta allb() {
  return NtaBuilder("ALLB", {{"z", 0}}, "z").t("z", "b", "z", "z").done();
}

Nta empty_aut() {
  return NtaBuilder("EMPTY", {{"q", 1}}, "q")
      .t("q", "a", "q", "q")
      .t("q", "b", "q", "q")
      .done();
}

Nta u1() {
  return NtaBuilder("U1", {{"u0", 2}, {"xa", 2}, {"xb", 2}}, "u0")
      .t("u0", "a", "xa", "u0")
      .t("u0", "a", "xb", "u0")
      .t("u0", "b", "u0", "u0")
      .t("xa", "a", "u0", "u0")
      .t("xb", "b", "u0", "u0")
      .done();
}

Nta u2() {
  return NtaBuilder("U2", {{"v0", 2}, {"ya", 2}, {"yb", 2}}, "v0")
      .t("v0", "a", "ya", "v0")
      .t("v0", "a", "yb", "ya")
      .t("v0", "a", "yb", "yb")
      .t("v0", "b", "v0", "v0")
      .t("ya", "a", "v0", "v0")
      .t("yb", "b", "v0", "v0")
      .done();
}

Nta a14() {
  return NtaBuilder("A14",
                    {{"q0", 1},
                     {"ca", 1},
                     {"cb", 1},
                     {"c1", 1},
                     {"c2", 2},
                     {"c3", 3},
                     {"c4", 4}},
                    "q0")
      .t("q0", "a", "ca", "c1")
      .t("q0", "a", "cb", "c1")
      .t("q0", "b", "c1", "c1")
      .t("ca", "a", "c2", "c2")
      .t("cb", "b", "c1", "c1")
      .t("c1", "a", "c2", "c2")
      .t("c1", "b", "c1", "c1")
      .t("c2", "a", "c3", "c3")
      .t("c2", "b", "c1", "c1")
      .t("c3", "a", "c4", "c4")
      .t("c3", "b", "c1", "c1")
      .t("c4", "a", "c4", "c4")
      .t("c4", "b", "c1", "c1")
      .done();
}

namespace {

Ata child_label_checker(const std::string& name, Dir dir) {
  Ata a;
  a.name = name;
  a.alphabet = ab();
  a.states = {"s0", "s1", "acc", "rej"};
  a.eve = {1, 1, 1, 1};
  a.priority = {0, 0, 0, 1};
  a.initial = 0;
  for (int l = 0; l < 2; ++l) a.transitions.push_back({0, l, dir, 1});
  a.transitions.push_back({1, 0, Dir::Eps, 2});
  a.transitions.push_back({1, 1, Dir::Eps, 3});
  for (int l = 0; l < 2; ++l) a.transitions.push_back({2, l, Dir::Eps, 2});
  for (int l = 0; l < 2; ++l) a.transitions.push_back({3, l, Dir::Eps, 3});
  validate(a);
  return a;
}

}  // namespace

Ata left_a() { return child_label_checker("left_a", Dir::L); }
Ata right_a() { return child_label_checker("right_a", Dir::R); }

namespace {

// Accept-all claims everywhere; the (state, letter) slots in `special`
// override the leading claimed separators of that pair.
SeparatorFamily claimed_family(
    const Nta& a,
    const std::vector<std::tuple<std::string, std::string, std::vector<Ata>>>&
        special) {
  SeparatorFamily claimed;
  claimed.name = a.name + "F";
  claimed.owner = a.name;
  for (int q = 0; q < a.state_count(); ++q)
    for (int l = 0; l < a.alphabet.size(); ++l) {
      auto deltas = a.transitions_from(q, l);
      if (deltas.empty()) continue;
      SeparatorEntry e;
      e.state = a.states[q];
      e.letter = a.alphabet.symbols[l];
      e.deltas = deltas;
      for (size_t i = 0; i < deltas.size(); ++i)
        e.separators.push_back(accept_all_ata(a.alphabet));
      for (const auto& [st, le, seps] : special)
        if (st == e.state && le == e.letter)
          for (size_t i = 0; i < seps.size() && i < e.separators.size(); ++i)
            e.separators[i] = seps[i];
      claimed.entries.push_back(std::move(e));
    }
  return claimed;
}

}  // namespace

SeparatorFamily a14_family() {
  Nta a = a14();
  return partition_family(a, claimed_family(a, {{"q0", "a", {left_a()}}}));
}

SeparatorFamily u2_family() {
  Nta a = u2();
  return partition_family(
      a, claimed_family(a, {{"v0", "a", {left_a(), right_a()}}}));
}

namespace {

RegularTree single_node_tree(const std::string& name, int letter) {
  RegularTree t;
  t.name = name;
  t.alphabet = ab();
  t.nodes = {"n0"};
  t.root = 0;
  t.label = {letter};
  t.succ = {{0, 0}};
  return t;
}

}  // namespace

RegularTree all_a_tree() { return single_node_tree("allA", 0); }
RegularTree all_b_tree() { return single_node_tree("allB", 1); }

RegularTree left_all_b_tree() {
  RegularTree t;
  t.name = "leftAllB";
  t.alphabet = ab();
  t.nodes = {"n0", "nb"};
  t.root = 0;
  t.label = {0, 1};
  t.succ = {{1, 0}, {1, 1}};
  validate(t);
  return t;
}

RegularTree reroot(const RegularTree& t, const std::string& node) {
  RegularTree out = t;
  out.name = t.name + "_at_" + node;
  out.root = t.node_index(node);
  if (out.root < 0) throw std::runtime_error("no node " + node);
  return out;
}

Ata embed_nta(const Nta& a) {
  Ata c;
  c.name = a.name + "_embed";
  c.alphabet = a.alphabet;
  for (int q = 0; q < a.state_count(); ++q) {
    c.states.push_back(a.states[q]);
    c.eve.push_back(1);
    c.priority.push_back(a.priority[q]);
  }
  int base = a.state_count();
  for (size_t j = 0; j < a.transitions.size(); ++j) {
    c.states.push_back(unique_name("t" + std::to_string(j), c.states));
    c.eve.push_back(0);
    c.priority.push_back(a.priority[a.transitions[j].src]);
  }
  int dead = c.state_count();
  c.states.push_back(unique_name("dead", c.states));
  c.eve.push_back(1);
  c.priority.push_back(1);
  c.initial = a.initial;

  Nta copy = a;
  for (int q = 0; q < a.state_count(); ++q)
    for (int l = 0; l < a.alphabet.size(); ++l) {
      auto js = copy.transitions_from(q, l);
      if (js.empty()) {
        c.transitions.push_back({q, l, Dir::Eps, dead});
        continue;
      }
      for (int j : js) c.transitions.push_back({q, l, Dir::Eps, base + j});
    }
  for (size_t j = 0; j < a.transitions.size(); ++j) {
    const auto& tr = a.transitions[j];
    for (int l = 0; l < a.alphabet.size(); ++l) {
      if (l == tr.letter) {
        c.transitions.push_back({base + static_cast<int>(j), l, Dir::L, tr.left});
        c.transitions.push_back({base + static_cast<int>(j), l, Dir::R, tr.right});
      } else {
        c.transitions.push_back({base + static_cast<int>(j), l, Dir::Eps, dead});
      }
    }
  }
  for (int l = 0; l < a.alphabet.size(); ++l)
    c.transitions.push_back({dead, l, Dir::Eps, dead});
  validate(c);
  return c;
}

Ata random_ata(const Alphabet& alphabet, int states, int max_priority,
               std::uint64_t seed) {
  Lcg rng(seed);
  Ata a;
  a.name = "ra" + std::to_string(seed);
  a.alphabet = alphabet;
  for (int q = 0; q < states; ++q) {
    a.states.push_back("q" + std::to_string(q));
    a.eve.push_back(rng.bounded(2) == 0);
    a.priority.push_back(static_cast<int>(rng.bounded(max_priority + 1)));
  }
  a.initial = 0;
  for (int q = 0; q < states; ++q)
    for (int l = 0; l < alphabet.size(); ++l) {
      int n = 1 + static_cast<int>(rng.bounded(2));
      for (int k = 0; k < n; ++k) {
        Dir d = static_cast<Dir>(rng.bounded(3));
        int dst = static_cast<int>(rng.bounded(states));
        a.transitions.push_back({q, l, d, dst});
      }
    }
  // Duplicates are possible but harmless for an Ata (it is a relation);
  // totality holds by construction.
  validate(a);
  return a;
}

int monitor_lasso_limsup(const Monitor& m, const PairWord& u,
                         const PairWord& v) {
  if (v.empty()) throw std::runtime_error("lasso needs a non-empty cycle");
  int s = m.start;
  for (auto [p1, p2] : u) s = m.step(s, p1, p2);
  std::vector<int> seen(m.state_count(), -1);
  std::vector<int> max_out;
  std::vector<int> boundary;
  while (seen[s] < 0) {
    seen[s] = static_cast<int>(boundary.size());
    boundary.push_back(s);
    int mo = -1;
    for (auto [p1, p2] : v) {
      s = m.step(s, p1, p2);
      mo = std::max(mo, m.out[s]);
    }
    max_out.push_back(mo);
  }
  int limsup = -1;
  for (size_t i = seen[s]; i < max_out.size(); ++i)
    limsup = std::max(limsup, max_out[i]);
  return limsup;
}

long exhaustive_lasso_check(const Monitor& m, int max_len, std::string* fail) {
  // Letters of the pair alphabet.
  std::vector<std::pair<int, int>> letters;
  for (int p1 = m.range1.lo; p1 <= m.range1.hi; ++p1)
    for (int p2 = m.range2.lo; p2 <= m.range2.hi; ++p2)
      letters.emplace_back(p1, p2);
  int nl = static_cast<int>(letters.size());

  // reach[d] = states reachable by a word of length <= d.
  std::vector<std::vector<int>> reach(max_len);
  {
    std::vector<char> seen(m.state_count(), 0);
    seen[m.start] = 1;
    reach[0] = {m.start};
    std::vector<int> frontier = {m.start};
    for (int d = 1; d < max_len; ++d) {
      std::vector<int> next;
      for (int s : frontier)
        for (auto [p1, p2] : letters) {
          int s2 = m.step(s, p1, p2);
          if (!seen[s2]) {
            seen[s2] = 1;
            next.push_back(s2);
          }
        }
      reach[d] = reach[d - 1];
      reach[d].insert(reach[d].end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  // Dense step table and output lookups for the hot loop.
  int w1 = m.range1.hi - m.range1.lo + 1;
  int w2 = m.range2.hi - m.range2.lo + 1;
  auto code = [&](std::pair<int, int> p) {
    return (p.first - m.range1.lo) * w2 + (p.second - m.range2.lo);
  };
  std::vector<int> step_flat(m.state_count() * w1 * w2);
  for (int s = 0; s < m.state_count(); ++s)
    for (auto p : letters)
      step_flat[s * w1 * w2 + code(p)] = m.step(s, p.first, p.second);

  long bad = 0;
  std::vector<int> word;
  std::vector<int> vcodes;
  std::vector<int> at(m.state_count());
  std::vector<long> gen(m.state_count(), -1);
  long generation = 0;
  std::vector<int> mo, bound;
  for (int vlen = 1; vlen <= max_len; ++vlen) {
    word.assign(vlen, 0);
    while (true) {
      vcodes.clear();
      int lim1 = -1, lim2 = -1;
      for (int i = 0; i < vlen; ++i) {
        vcodes.push_back(code(letters[word[i]]));
        lim1 = std::max(lim1, letters[word[i]].first);
        lim2 = std::max(lim2, letters[word[i]].second);
      }
      bool expected = lim1 % 2 == 0 && lim2 % 2 == 0;
      for (int s : reach[max_len - vlen]) {
        // Limsup of the monitor run iterating the cycle from state s.
        generation++;
        int cur = s;
        mo.clear();
        bound.clear();
        while (gen[cur] != generation) {
          gen[cur] = generation;
          at[cur] = static_cast<int>(bound.size());
          bound.push_back(cur);
          int mx = -1;
          for (int c : vcodes) {
            cur = step_flat[cur * w1 * w2 + c];
            mx = std::max(mx, m.out[cur]);
          }
          mo.push_back(mx);
        }
        int limsup = -1;
        for (size_t i = at[cur]; i < mo.size(); ++i)
          limsup = std::max(limsup, mo[i]);
        if ((limsup % 2 == 0) != expected) {
          if (bad == 0 && fail) {
            *fail = "cycle";
            for (int i = 0; i < vlen; ++i)
              *fail += " (" + std::to_string(letters[word[i]].first) + "," +
                       std::to_string(letters[word[i]].second) + ")";
            *fail += " from state " + std::to_string(s);
          }
          bad++;
        }
      }
      // Odometer over the cycle word.
      int i = vlen - 1;
      while (i >= 0 && ++word[i] == nl) word[i--] = 0;
      if (i < 0) break;
    }
  }
  return bad;
}

namespace {

[[noreturn]] void bail(const std::string& what) {
  throw std::runtime_error("solution invariant violated: " + what);
}

// Restrict the winner's owned-and-won positions to the strategy edge and
// re-solve; the winner must keep the region.
void self_verify(const ParityGame& g, const Solution& s, Player p) {
  ParityGame h = g;
  h.edges.clear();
  const std::vector<int>& strat =
      p == Player::Eve ? s.strategy_eve : s.strategy_adam;
  for (auto [src, dst] : g.edges) {
    if (g.owner[src] == p && s.winner[src] == p) continue;
    h.edges.emplace_back(src, dst);
  }
  for (int v = 0; v < g.position_count(); ++v)
    if (g.owner[v] == p && s.winner[v] == p) {
      if (strat[v] < 0) bail("missing strategy entry");
      h.edges.emplace_back(v, strat[v]);
    }
  Solution hs = solve_game(h);
  for (int v = 0; v < g.position_count(); ++v)
    if (s.winner[v] == p && hs.winner[v] != p)
      bail("fixing the strategy loses " + g.position_names[v]);
}

}  // namespace

void check_solution_invariants(const ParityGame& g) {
  Solution a = solve_game(g);
  Solution b = solve_game_oracle(g);
  std::vector<std::vector<int>> succ(g.position_count());
  for (auto [s, d] : g.edges) succ[s].push_back(d);

  for (int v = 0; v < g.position_count(); ++v)
    if (a.winner[v] != b.winner[v])
      bail("solver disagreement at " + g.position_names[v]);

  for (const Solution* s : {&a, &b})
    for (Player p : {Player::Eve, Player::Adam}) {
      const std::vector<int>& strat =
          p == Player::Eve ? s->strategy_eve : s->strategy_adam;
      for (int v = 0; v < g.position_count(); ++v) {
        bool should = g.owner[v] == p && s->winner[v] == p;
        if (!should) {
          if (strat[v] >= 0)
            bail("strategy entry outside owned-and-won at " +
                 g.position_names[v]);
          continue;
        }
        if (strat[v] < 0) bail("winner lacks a move at " + g.position_names[v]);
        if (std::find(succ[v].begin(), succ[v].end(), strat[v]) == succ[v].end())
          bail("strategy is not an edge at " + g.position_names[v]);
        if (s->winner[strat[v]] != p)
          bail("strategy leaves the winning region at " + g.position_names[v]);
      }
      self_verify(g, *s, p);
    }

  // Dual involution: winners swap pointwise.
  Solution d = solve_game_oracle(dual_game(g));
  for (int v = 0; v < g.position_count(); ++v)
    if ((d.winner[v] == Player::Eve) != (a.winner[v] == Player::Adam))
      bail("dual winners do not swap at " + g.position_names[v]);
}

}  // namespace treewb::testing
