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

#include "treewb/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "treewb/monitor.hpp"

namespace treewb {

ParityGame emptiness_game(const Nta& a) {
  ParityGame g;
  g.name = a.name + "_emptiness";
  int n = a.state_count();
  for (int q = 0; q < n; ++q) {
    g.position_names.push_back("s:" + a.states[q]);
    g.owner.push_back(Player::Eve);
    g.priority.push_back(a.priority[q]);
  }
  for (size_t j = 0; j < a.transitions.size(); ++j) {
    g.position_names.push_back("t:" + std::to_string(j));
    g.owner.push_back(Player::Adam);
    g.priority.push_back(a.priority[a.transitions[j].src]);
  }
  for (size_t j = 0; j < a.transitions.size(); ++j)
    g.edges.emplace_back(a.transitions[j].src, n + static_cast<int>(j));
  for (size_t j = 0; j < a.transitions.size(); ++j) {
    g.edges.emplace_back(n + static_cast<int>(j), a.transitions[j].left);
    g.edges.emplace_back(n + static_cast<int>(j), a.transitions[j].right);
  }
  g.initial = a.initial;
  make_total(g);  // transitionless states become losing sinks for Eve
  return g;
}

std::vector<char> live_mask(const Nta& a) {
  ParityGame g = emptiness_game(a);
  Solution s = solve_game(g);
  std::vector<char> live(a.state_count(), 0);
  for (int q = 0; q < a.state_count(); ++q)
    live[q] = s.winner[q] == Player::Eve;
  return live;
}

std::vector<std::string> live_states(const Nta& a) {
  std::vector<char> mask = live_mask(a);
  std::vector<std::string> out;
  for (int q = 0; q < a.state_count(); ++q)
    if (mask[q]) out.push_back(a.states[q]);
  return out;
}

std::optional<RegularTree> accepting_witness(const Nta& a,
                                             const std::string& from) {
  int q0 = a.state_index(from);
  if (q0 < 0) throw TreewbError("unknown state: " + from);
  ParityGame g = emptiness_game(a);
  Solution s = solve_game(g);
  if (s.winner[q0] != Player::Eve) return std::nullopt;

  int n = a.state_count();
  RegularTree t;
  t.name = a.name + "_w_" + from;
  t.alphabet = a.alphabet;
  std::vector<int> node_of(n, -1);
  std::deque<int> queue;
  auto visit = [&](int q) {
    if (node_of[q] >= 0) return node_of[q];
    node_of[q] = t.node_count();
    t.nodes.push_back(a.states[q]);
    t.label.push_back(-1);
    t.succ.push_back({-1, -1});
    queue.push_back(q);
    return node_of[q];
  };
  visit(q0);
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    int pos = s.strategy_eve[q];
    if (pos < n)  // self-loop sink added by make_total; cannot happen when won
      throw TreewbError("missing strategy at live state " + a.states[q]);
    const NtaTransition& tr = a.transitions[pos - n];
    t.label[node_of[q]] = tr.letter;
    int left = visit(tr.left);   // may reallocate t.succ
    int right = visit(tr.right);
    t.succ[node_of[q]] = {left, right};
  }
  t.root = 0;
  return t;
}

namespace {

// Live(q, a): some transition from (q, a) has two live children.
std::vector<char> live_pairs(const Nta& a, const std::vector<char>& live) {
  std::vector<char> lp(a.state_count() * a.alphabet.size(), 0);
  for (const auto& tr : a.transitions)
    if (live[tr.left] && live[tr.right])
      lp[tr.src * a.alphabet.size() + tr.letter] = 1;
  return lp;
}

// Least set containing a live initial state and closed under taking children
// of transitions with two live children.
std::vector<char> productive_reach(const Nta& a, const std::vector<char>& live) {
  std::vector<char> reach(a.state_count(), 0);
  if (!live[a.initial]) return reach;
  reach[a.initial] = 1;
  std::deque<int> queue{a.initial};
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (const auto& tr : a.transitions) {
      if (tr.src != q || !live[tr.left] || !live[tr.right]) continue;
      for (int c : {tr.left, tr.right})
        if (!reach[c]) {
          reach[c] = 1;
          queue.push_back(c);
        }
    }
  }
  return reach;
}

}  // namespace

std::vector<std::pair<int, int>> productive_pair_indices(const Nta& a) {
  std::vector<char> live = live_mask(a);
  std::vector<char> lp = live_pairs(a, live);
  std::vector<char> reach = productive_reach(a, live);
  std::vector<std::pair<int, int>> out;
  for (int q = 0; q < a.state_count(); ++q)
    for (int l = 0; l < a.alphabet.size(); ++l)
      if (reach[q] && lp[q * a.alphabet.size() + l]) out.emplace_back(q, l);
  return out;
}

ProductivityReport productive_pairs(const Nta& a) {
  ProductivityReport r;
  r.live_states = live_states(a);
  for (auto [q, l] : productive_pair_indices(a))
    r.productive_pairs.emplace_back(a.states[q], a.alphabet.symbols[l]);
  return r;
}

PruneResult prune(const Nta& a) {
  std::vector<char> live = live_mask(a);
  PruneResult res;
  res.empty_after_prune = !live[a.initial];

  std::vector<int> remap(a.state_count(), -1);
  Nta& out = res.automaton;
  out.name = a.name;
  out.alphabet = a.alphabet;
  for (int q = 0; q < a.state_count(); ++q) {
    if (!live[q] && q != a.initial) continue;
    remap[q] = out.state_count();
    out.states.push_back(a.states[q]);
    out.priority.push_back(a.priority[q]);
  }
  out.initial = remap[a.initial];
  for (const auto& tr : a.transitions) {
    if (!live[tr.src] || !live[tr.left] || !live[tr.right]) continue;
    out.transitions.push_back(
        {remap[tr.src], remap[tr.left], tr.letter, remap[tr.right]});
  }
  return res;
}

Nta delta_rooted(const Nta& a, int delta) {
  if (delta < 0 || delta >= static_cast<int>(a.transitions.size()))
    throw BadTransition("no transition with index " + std::to_string(delta));
  const NtaTransition& tr = a.transitions[delta];
  Nta out = a;
  out.name = a.name + "_d" + std::to_string(delta);
  std::string top = unique_name("__top", a.states);
  out.states.push_back(top);
  out.priority.push_back(a.priority[tr.src]);
  out.initial = out.state_count() - 1;
  out.transitions.push_back({out.initial, tr.left, tr.letter, tr.right});
  return out;
}

namespace {

// Lazily constructed product automaton keyed by (q1, q2, monitor state).
struct ProductBuilder {
  const Nta& a1;
  const Nta& a2;
  Monitor mon;
  Nta prod;
  std::map<std::tuple<int, int, int>, int> ids;
  std::deque<std::tuple<int, int, int>> queue;

  ProductBuilder(const Nta& n1, const Nta& n2)
      : a1(n1),
        a2(n2),
        mon(make_monitor({n1.min_priority(), n1.max_priority()},
                         {n2.min_priority(), n2.max_priority()})) {
    prod.name = a1.name + "_x_" + a2.name;
    prod.alphabet = a1.alphabet;
  }

  int intern(int q1, int q2, int ms) {
    auto key = std::make_tuple(q1, q2, ms);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = prod.state_count();
    ids.emplace(key, id);
    prod.states.push_back(a1.states[q1] + "~" + a2.states[q2] + "~m" +
                          std::to_string(ms));
    prod.priority.push_back(mon.out[ms]);
    queue.push_back(key);
    return id;
  }

  Nta build() {
    prod.initial = intern(a1.initial, a2.initial, mon.start);
    while (!queue.empty()) {
      auto [q1, q2, ms] = queue.front();
      queue.pop_front();
      int src = ids.at({q1, q2, ms});
      for (int l = 0; l < prod.alphabet.size(); ++l)
        for (int j1 : a1.transitions_from(q1, l))
          for (int j2 : a2.transitions_from(q2, l)) {
            const auto& t1 = a1.transitions[j1];
            const auto& t2 = a2.transitions[j2];
            int lm = mon.step(ms, a1.priority[t1.left], a2.priority[t2.left]);
            int rm = mon.step(ms, a1.priority[t1.right], a2.priority[t2.right]);
            int left = intern(t1.left, t2.left, lm);
            int right = intern(t1.right, t2.right, rm);
            prod.transitions.push_back({src, left, l, right});
          }
    }
    return prod;
  }
};

}  // namespace

DisjointnessResult is_disjoint(const Nta& a1, const Nta& a2) {
  if (!(a1.alphabet == a2.alphabet))
    throw AlphabetMismatch("alphabets of " + a1.name + " and " + a2.name +
                           " differ");
  ProductBuilder builder(a1, a2);
  Nta prod = builder.build();
  std::vector<char> live = live_mask(prod);
  DisjointnessResult res;
  res.disjoint = !live[prod.initial];
  if (!res.disjoint)
    res.witness = accepting_witness(prod, prod.states[prod.initial]);
  return res;
}

namespace {

struct DivergenceBuilder {
  const Nta& a;
  Monitor mon;
  int odd_top;
  Nta d;
  // kind: 0 = pend, 1 = plain, 2 = pair; pair keyed by (q1, q2, monitor).
  std::map<std::tuple<int, int, int, int>, int> ids;
  std::deque<std::tuple<int, int, int, int>> queue;

  explicit DivergenceBuilder(const Nta& aut)
      : a(aut),
        mon(make_monitor({aut.min_priority(), aut.max_priority()},
                         {aut.min_priority(), aut.max_priority()})) {
    int maxp = a.max_priority();
    odd_top = maxp % 2 == 1 ? maxp + 2 : maxp + 1;
    d.name = a.name + "_div";
    d.alphabet = a.alphabet;
  }

  int intern(int kind, int q1, int q2, int ms) {
    auto key = std::make_tuple(kind, q1, q2, ms);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = d.state_count();
    ids.emplace(key, id);
    switch (kind) {
      case 0:
        d.states.push_back("pend_" + a.states[q1]);
        d.priority.push_back(odd_top);
        break;
      case 1:
        d.states.push_back("plain_" + a.states[q1]);
        d.priority.push_back(a.priority[q1]);
        break;
      default:
        d.states.push_back("pair_" + a.states[q1] + "~" + a.states[q2] + "~m" +
                           std::to_string(ms));
        d.priority.push_back(mon.out[ms]);
    }
    queue.push_back(key);
    return id;
  }

  int pair_state(const NtaTransition& t1, const NtaTransition& t2, int ms,
                 bool left) {
    int c1 = left ? t1.left : t1.right;
    int c2 = left ? t2.left : t2.right;
    int next = mon.step(ms, a.priority[c1], a.priority[c2]);
    return intern(2, c1, c2, next);
  }

  Nta build() {
    d.initial = intern(0, a.initial, -1, -1);
    while (!queue.empty()) {
      auto [kind, q1, q2, ms] = queue.front();
      queue.pop_front();
      int src = ids.at({kind, q1, q2, ms});
      for (int l = 0; l < d.alphabet.size(); ++l) {
        if (kind == 0) {
          auto js = a.transitions_from(q1, l);
          for (int j : js) {
            const auto& t = a.transitions[j];
            // Move the spine into one child, the other continues as a
            // single run.
            d.transitions.push_back(
                {src, intern(0, t.left, -1, -1), l, intern(1, t.right, -1, -1)});
            d.transitions.push_back(
                {src, intern(1, t.left, -1, -1), l, intern(0, t.right, -1, -1)});
          }
          // Diverge here: choose two distinct transitions.
          for (size_t x = 0; x < js.size(); ++x)
            for (size_t y = x + 1; y < js.size(); ++y) {
              const auto& t1 = a.transitions[js[x]];
              const auto& t2 = a.transitions[js[y]];
              d.transitions.push_back({src,
                                       pair_state(t1, t2, mon.start, true), l,
                                       pair_state(t1, t2, mon.start, false)});
            }
        } else if (kind == 1) {
          for (int j : a.transitions_from(q1, l)) {
            const auto& t = a.transitions[j];
            d.transitions.push_back(
                {src, intern(1, t.left, -1, -1), l, intern(1, t.right, -1, -1)});
          }
        } else {
          for (int j1 : a.transitions_from(q1, l))
            for (int j2 : a.transitions_from(q2, l)) {
              const auto& t1 = a.transitions[j1];
              const auto& t2 = a.transitions[j2];
              d.transitions.push_back({src, pair_state(t1, t2, ms, true), l,
                                       pair_state(t1, t2, ms, false)});
            }
        }
      }
    }
    return d;
  }
};

}  // namespace

Nta divergence_automaton(const Nta& a) {
  return DivergenceBuilder(a).build();
}

AmbiguityVerdict is_unambiguous(const Nta& a) {
  Nta d = divergence_automaton(a);
  std::vector<char> live = live_mask(d);
  AmbiguityVerdict v;
  v.unambiguous = !live[d.initial];
  if (!v.unambiguous)
    v.witness = accepting_witness(d, d.states[d.initial]);
  return v;
}

}  // namespace treewb
