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

#include "treewb/membership.hpp"

#include "treewb/analysis.hpp"

namespace treewb {

ParityGame membership_game(const RegularTree& t, const Ata& c) {
  if (!(t.alphabet == c.alphabet))
    throw AlphabetMismatch("alphabets of " + t.name + " and " + c.name +
                           " differ");
  ParityGame g;
  g.name = c.name + "_on_" + t.name;
  int nq = c.state_count();
  for (int v = 0; v < t.node_count(); ++v)
    for (int q = 0; q < nq; ++q) {
      g.position_names.push_back(t.nodes[v] + "|" + c.states[q]);
      g.owner.push_back(c.eve[q] ? Player::Eve : Player::Adam);
      g.priority.push_back(c.priority[q]);
    }
  for (int v = 0; v < t.node_count(); ++v) {
    for (const auto& tr : c.transitions) {
      if (tr.letter != t.label[v]) continue;
      int dst_node = tr.dir == Dir::Eps  ? v
                     : tr.dir == Dir::L ? t.succ[v][0]
                                        : t.succ[v][1];
      g.edges.emplace_back(v * nq + tr.src, dst_node * nq + tr.dst);
    }
  }
  g.initial = t.root * nq + c.initial;
  return g;  // total by ATA totality
}

bool member_ata(const RegularTree& t, const Ata& c) {
  ParityGame g = membership_game(t, c);
  Solution s = solve_game(g);
  return s.winner[g.initial] == Player::Eve;
}

bool member_nta(const RegularTree& t, const Nta& a,
                const std::optional<std::string>& from,
                const std::optional<std::string>& at_node) {
  if (!(t.alphabet == a.alphabet))
    throw AlphabetMismatch("alphabets of " + t.name + " and " + a.name +
                           " differ");
  int q0 = from ? a.state_index(*from) : a.initial;
  if (q0 < 0) throw TreewbError("unknown state: " + *from);
  int v0 = at_node ? t.node_index(*at_node) : t.root;
  if (v0 < 0) throw TreewbError("unknown node: " + *at_node);

  ParityGame g;
  g.name = a.name + "_on_" + t.name;
  int nq = a.state_count();
  int nt = static_cast<int>(a.transitions.size());
  // (node, state) positions, then (node, transition) positions.
  for (int v = 0; v < t.node_count(); ++v)
    for (int q = 0; q < nq; ++q) {
      g.position_names.push_back(t.nodes[v] + "|" + a.states[q]);
      g.owner.push_back(Player::Eve);
      g.priority.push_back(a.priority[q]);
    }
  int base = t.node_count() * nq;
  for (int v = 0; v < t.node_count(); ++v)
    for (int j = 0; j < nt; ++j) {
      g.position_names.push_back(t.nodes[v] + "|d" + std::to_string(j));
      g.owner.push_back(Player::Adam);
      g.priority.push_back(a.priority[a.transitions[j].src]);
    }
  for (int v = 0; v < t.node_count(); ++v)
    for (int j = 0; j < nt; ++j) {
      const auto& tr = a.transitions[j];
      if (tr.letter != t.label[v]) continue;
      g.edges.emplace_back(v * nq + tr.src, base + v * nt + j);
      g.edges.emplace_back(base + v * nt + j, t.succ[v][0] * nq + tr.left);
      g.edges.emplace_back(base + v * nt + j, t.succ[v][1] * nq + tr.right);
    }
  g.initial = v0 * nq + q0;
  make_total(g);  // stuck Eve positions lose
  Solution s = solve_game(g);
  return s.winner[g.initial] == Player::Eve;
}

const char* to_string(RunCount c) {
  switch (c) {
    case RunCount::Zero: return "ZERO";
    case RunCount::One: return "ONE";
    case RunCount::Many: return "MANY";
  }
  return "?";
}

RunCount count_runs(const RegularTree& t, const Nta& a) {
  if (!member_nta(t, a)) return RunCount::Zero;
  Nta d = divergence_automaton(a);
  return member_nta(t, d) ? RunCount::Many : RunCount::One;
}

}  // namespace treewb
