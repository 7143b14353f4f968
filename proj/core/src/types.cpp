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

#include "treewb/types.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace treewb {

const char* to_string(Player p) { return p == Player::Eve ? "EVE" : "ADAM"; }

const char* to_string(Dir d) {
  switch (d) {
    case Dir::Eps: return "EPS";
    case Dir::L: return "L";
    case Dir::R: return "R";
  }
  return "?";
}

int Alphabet::index(const std::string& s) const {
  for (int i = 0; i < size(); ++i)
    if (symbols[i] == s) return i;
  return -1;
}

int Nta::state_index(const std::string& s) const {
  for (int i = 0; i < state_count(); ++i)
    if (states[i] == s) return i;
  return -1;
}

std::vector<int> Nta::transitions_from(int state, int letter) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(transitions.size()); ++i)
    if (transitions[i].src == state && transitions[i].letter == letter)
      out.push_back(i);
  return out;
}

int Nta::min_priority() const {
  return *std::min_element(priority.begin(), priority.end());
}

int Nta::max_priority() const {
  return *std::max_element(priority.begin(), priority.end());
}

int Ata::state_index(const std::string& s) const {
  for (int i = 0; i < state_count(); ++i)
    if (states[i] == s) return i;
  return -1;
}

std::vector<int> Ata::transitions_from(int state, int letter) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(transitions.size()); ++i)
    if (transitions[i].src == state && transitions[i].letter == letter)
      out.push_back(i);
  return out;
}

int Ata::min_priority() const {
  return *std::min_element(priority.begin(), priority.end());
}

int Ata::max_priority() const {
  return *std::max_element(priority.begin(), priority.end());
}

int RegularTree::node_index(const std::string& n) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes[i] == n) return i;
  return -1;
}

namespace {

void check(bool cond, const std::string& what) {
  if (!cond) throw TreewbError(what);
}

void check_names(const std::vector<std::string>& names, const char* kind) {
  check(!names.empty(), std::string(kind) + " set must be non-empty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    check(!n.empty(), std::string("empty ") + kind + " name");
    check(n.find_first_of(" \t\n\r#") == std::string::npos,
          std::string("bad ") + kind + " name: " + n);
    check(seen.insert(n).second, std::string("duplicate ") + kind + ": " + n);
  }
}

}  // namespace

void validate(const Alphabet& a) { check_names(a.symbols, "symbol"); }

void validate(const Nta& a) {
  validate(a.alphabet);
  check_names(a.states, "state");
  check(a.priority.size() == a.states.size(), "priority map not total");
  for (int p : a.priority) check(p >= 0, "negative priority");
  check(a.initial >= 0 && a.initial < a.state_count(), "initial not a state");
  std::set<NtaTransition> seen;
  for (const auto& t : a.transitions) {
    check(t.src >= 0 && t.src < a.state_count(), "transition src not a state");
    check(t.left >= 0 && t.left < a.state_count(), "transition left not a state");
    check(t.right >= 0 && t.right < a.state_count(), "transition right not a state");
    check(t.letter >= 0 && t.letter < a.alphabet.size(), "transition letter not in alphabet");
    check(seen.insert(t).second, "duplicate transition");
  }
}

void validate(const Ata& a) {
  validate(a.alphabet);
  check_names(a.states, "state");
  check(a.priority.size() == a.states.size(), "priority map not total");
  check(a.eve.size() == a.states.size(), "ownership map not total");
  for (int p : a.priority) check(p >= 0, "negative priority");
  check(a.initial >= 0 && a.initial < a.state_count(), "initial not a state");
  std::set<AtaTransition> seen;
  std::vector<char> covered(a.states.size() * a.alphabet.size(), 0);
  for (const auto& t : a.transitions) {
    check(t.src >= 0 && t.src < a.state_count(), "transition src not a state");
    check(t.dst >= 0 && t.dst < a.state_count(), "transition dst not a state");
    check(t.letter >= 0 && t.letter < a.alphabet.size(), "transition letter not in alphabet");
    seen.insert(t);
    covered[t.src * a.alphabet.size() + t.letter] = 1;
  }
  // Totality: at least one transition per (state, letter).
  for (int q = 0; q < a.state_count(); ++q)
    for (int l = 0; l < a.alphabet.size(); ++l)
      check(covered[q * a.alphabet.size() + l],
            "no transition from (" + a.states[q] + ", " + a.alphabet.symbols[l] + ")");
}

void validate(const RegularTree& t) {
  validate(t.alphabet);
  check_names(t.nodes, "node");
  check(t.root >= 0 && t.root < t.node_count(), "root not a node");
  check(t.label.size() == t.nodes.size(), "label map not total");
  check(t.succ.size() == t.nodes.size(), "successor maps not total");
  for (int l : t.label)
    check(l >= 0 && l < t.alphabet.size(), "node label not in alphabet");
  for (const auto& s : t.succ) {
    check(s[0] >= 0 && s[0] < t.node_count(), "L successor not a node");
    check(s[1] >= 0 && s[1] < t.node_count(), "R successor not a node");
  }
}

void validate(const IndexPair& p) {
  check(p.lo >= 0 && p.lo <= p.hi, "bad index pair");
}

std::string unique_name(const std::string& base,
                        const std::vector<std::string>& taken) {
  auto used = [&taken](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 2;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

}  // namespace treewb
