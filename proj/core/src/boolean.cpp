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

#include "treewb/boolean.hpp"

#include <algorithm>

#include "treewb/analysis.hpp"

namespace treewb {

Ata complement(const Ata& c) {
  Ata out = c;
  out.name = c.name + "__not";
  for (auto& e : out.eve) e = !e;
  for (auto& p : out.priority) p += 1;
  return out;
}

namespace {

Ata combine(const Ata& c1, const Ata& c2, bool conjunction) {
  if (!(c1.alphabet == c2.alphabet))
    throw AlphabetMismatch("alphabets of " + c1.name + " and " + c2.name +
                           " differ");
  const char* tag = conjunction ? "__and__" : "__or__";
  Ata out;
  out.name = c1.name + tag + c2.name;
  out.alphabet = c1.alphabet;

  std::string fresh = c1.name + tag + c2.name;
  out.states.push_back(fresh);
  out.eve.push_back(!conjunction);
  out.priority.push_back(0);
  out.initial = 0;

  std::vector<int> map1(c1.state_count()), map2(c2.state_count());
  for (int q = 0; q < c1.state_count(); ++q) {
    map1[q] = out.state_count();
    out.states.push_back(unique_name(c1.states[q], out.states));
    out.eve.push_back(c1.eve[q]);
    out.priority.push_back(c1.priority[q]);
  }
  for (int q = 0; q < c2.state_count(); ++q) {
    map2[q] = out.state_count();
    out.states.push_back(unique_name(c2.states[q], out.states));
    out.eve.push_back(c2.eve[q]);
    out.priority.push_back(c2.priority[q]);
  }

  for (int l = 0; l < out.alphabet.size(); ++l) {
    out.transitions.push_back({0, l, Dir::Eps, map1[c1.initial]});
    out.transitions.push_back({0, l, Dir::Eps, map2[c2.initial]});
  }
  for (const auto& t : c1.transitions)
    out.transitions.push_back({map1[t.src], t.letter, t.dir, map1[t.dst]});
  for (const auto& t : c2.transitions)
    out.transitions.push_back({map2[t.src], t.letter, t.dir, map2[t.dst]});
  return out;
}

Ata sink_ata(const Alphabet& alphabet, const std::string& name, int priority) {
  validate(alphabet);
  Ata a;
  a.name = name;
  a.alphabet = alphabet;
  a.states.push_back("q");
  a.eve.push_back(1);
  a.priority.push_back(priority);
  a.initial = 0;
  for (int l = 0; l < alphabet.size(); ++l)
    a.transitions.push_back({0, l, Dir::Eps, 0});
  return a;
}

}  // namespace

Ata intersect(const Ata& c1, const Ata& c2) { return combine(c1, c2, true); }

Ata unite(const Ata& c1, const Ata& c2) { return combine(c1, c2, false); }

Ata accept_all_ata(const Alphabet& alphabet, const std::string& name) {
  return sink_ata(alphabet, name, 0);
}

Ata reject_all_ata(const Alphabet& alphabet, const std::string& name) {
  return sink_ata(alphabet, name, 1);
}

const SeparatorEntry* SeparatorFamily::find(const std::string& state,
                                            const std::string& letter) const {
  for (const auto& e : entries)
    if (e.state == state && e.letter == letter) return &e;
  return nullptr;
}

SeparatorFamily partition_family(const Nta& a, const SeparatorFamily& claimed) {
  auto pairs = productive_pair_indices(a);

  for (const auto& e : claimed.entries) {
    int q = a.state_index(e.state);
    int l = a.alphabet.index(e.letter);
    if (q < 0 || l < 0 ||
        std::find(pairs.begin(), pairs.end(), std::make_pair(q, l)) ==
            pairs.end())
      throw TransitionMismatch("entry (" + e.state + ", " + e.letter +
                               ") is not a productive pair of " + a.name);
  }

  SeparatorFamily out;
  out.name = claimed.name.empty() ? a.name + "_family" : claimed.name;
  out.owner = a.name;
  for (auto [q, l] : pairs) {
    const SeparatorEntry* in =
        claimed.find(a.states[q], a.alphabet.symbols[l]);
    if (!in)
      throw MissingPair("no separators for productive pair (" + a.states[q] +
                        ", " + a.alphabet.symbols[l] + ")");
    std::vector<int> deltas = a.transitions_from(q, l);
    if (in->deltas != deltas)
      throw TransitionMismatch("separator list for (" + a.states[q] + ", " +
                               a.alphabet.symbols[l] +
                               ") does not match the transitions");
    for (const auto& s : in->separators) {
      if (!(s.alphabet == a.alphabet))
        throw AlphabetMismatch("separator " + s.name +
                               " uses a different alphabet");
      validate(s);
    }

    SeparatorEntry entry;
    entry.state = a.states[q];
    entry.letter = a.alphabet.symbols[l];
    entry.deltas = deltas;
    int k = static_cast<int>(deltas.size());
    for (int i = 0; i < k; ++i) {
      Ata member;
      if (k == 1) {
        member = accept_all_ata(a.alphabet);
      } else if (i == 0) {
        member = in->separators[0];
      } else if (i < k - 1) {
        member = in->separators[i];
        for (int j = 0; j < i; ++j)
          member = intersect(member, complement(in->separators[j]));
      } else {
        member = complement(in->separators[0]);
        for (int j = 1; j < k - 1; ++j)
          member = intersect(member, complement(in->separators[j]));
      }
      member.name = a.name + "_c" + std::to_string(deltas[i]);
      entry.separators.push_back(std::move(member));
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

SeparatorFamily trivial_family(const Nta& a) {
  SeparatorFamily claimed;
  claimed.name = a.name + "_trivial";
  claimed.owner = a.name;
  for (auto [q, l] : productive_pair_indices(a)) {
    SeparatorEntry e;
    e.state = a.states[q];
    e.letter = a.alphabet.symbols[l];
    e.deltas = a.transitions_from(q, l);
    for (size_t i = 0; i < e.deltas.size(); ++i)
      e.separators.push_back(accept_all_ata(a.alphabet));
    claimed.entries.push_back(std::move(e));
  }
  return partition_family(a, claimed);
}

}  // namespace treewb
