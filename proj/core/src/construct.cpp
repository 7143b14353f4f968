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

#include "treewb/construct.hpp"

#include <algorithm>
#include <map>

#include "treewb/analysis.hpp"

namespace treewb {

namespace {

std::string m_tag(int m) { return m < 0 ? "bot" : std::to_string(m); }

}  // namespace

RConstruction build_r(const Nta& a, const SeparatorFamily& family,
                      std::optional<IndexPair> band_opt) {
  IndexPair band = band_opt.value_or(IndexPair{a.min_priority(), a.max_priority()});
  validate(band);
  if (band.hi % 2 != 0)
    throw BadIndex("band maximum must be even, got " + std::to_string(band.hi));
  for (int q = 0; q < a.state_count(); ++q)
    if (a.priority[q] < band.lo || a.priority[q] > band.hi)
      throw BadIndex("priority of " + a.states[q] + " outside the band");

  auto pairs = productive_pair_indices(a);
  auto productive = [&pairs](int q, int l) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(q, l)) !=
           pairs.end();
  };

  // The family must list exactly the productive pairs, with exactly their
  // transitions, and separator alphabets must agree.
  if (family.entries.size() != pairs.size())
    throw FamilyMismatch("family has " + std::to_string(family.entries.size()) +
                         " entries, expected " + std::to_string(pairs.size()));
  std::map<int, const Ata*> separator_of;  // by transition index
  for (auto [q, l] : pairs) {
    const SeparatorEntry* e = family.find(a.states[q], a.alphabet.symbols[l]);
    if (!e)
      throw MissingPair("family misses productive pair (" + a.states[q] + ", " +
                        a.alphabet.symbols[l] + ")");
    if (e->deltas != a.transitions_from(q, l))
      throw TransitionMismatch("family transitions for (" + a.states[q] + ", " +
                               a.alphabet.symbols[l] + ") do not match");
    for (size_t i = 0; i < e->deltas.size(); ++i) {
      const Ata& sep = e->separators[i];
      if (!(sep.alphabet == a.alphabet))
        throw AlphabetMismatch("separator " + sep.name + " alphabet differs");
      validate(sep);
      separator_of[e->deltas[i]] = &sep;
    }
  }

  RConstruction rc;
  rc.band = band;
  for (int k = band.lo; k <= band.hi; ++k)
    if (k % 2 == 1) rc.odd_values.push_back(k);
  bool buchi_shaped = band.lo == band.hi - 1;

  Ata& r = rc.automaton;
  r.name = a.name + "_r";
  r.alphabet = a.alphabet;

  std::vector<int> ms;  // -1 = bottom, then the odd values
  ms.push_back(-1);
  for (int k : rc.odd_values) ms.push_back(k);

  auto add_state = [&r, &rc](const std::string& base, bool eve, int priority,
                             RStateInfo info) {
    r.states.push_back(unique_name(base, r.states));
    r.eve.push_back(eve);
    r.priority.push_back(priority);
    rc.info.push_back(info);
    return r.state_count() - 1;
  };

  // Entry block: all (q, m) combinations, bottom first.
  std::map<std::pair<int, int>, int> entry, sel;
  std::map<std::pair<int, int>, std::map<int, int>> choice;  // (q,m) -> delta
  for (int q = 0; q < a.state_count(); ++q)
    for (int m : ms) {
      int prio = m < 0 ? 0 : (a.priority[q] == m ? 1 : 0);
      entry[{q, m}] = add_state("E_" + a.states[q] + "_" + m_tag(m), false,
                                prio, {RKind::Entry, q, m, -1});
    }
  int mid_prio_declared = buchi_shaped ? 1 : 0;
  for (int q = 0; q < a.state_count(); ++q)
    for (int m : ms)
      sel[{q, m}] = add_state("S_" + a.states[q] + "_" + m_tag(m), true,
                              m < 0 ? 0 : mid_prio_declared,
                              {RKind::Sel, q, m, -1});
  for (int q = 0; q < a.state_count(); ++q)
    for (int m : ms)
      for (int j = 0; j < static_cast<int>(a.transitions.size()); ++j) {
        if (a.transitions[j].src != q) continue;
        choice[{q, m}][j] =
            add_state("C_" + a.states[q] + "_" + m_tag(m) + "_d" +
                          std::to_string(j),
                      false, m < 0 ? 0 : mid_prio_declared,
                      {RKind::Choice, q, m, j});
      }
  int lose_eve = add_state("LoseEve", true, 1, {RKind::LoseEve, -1, -2, -1});
  int lose_adam =
      add_state("LoseAdam", false, 0, {RKind::LoseAdam, -1, -2, -1});

  // Separator copies, one per transition listed in the family.
  std::map<int, int> sep_init;               // delta -> initial state in r
  std::map<int, std::vector<int>> sep_map;   // delta -> state remap
  for (const auto& [delta, sep] : separator_of) {
    std::vector<int>& remap = sep_map[delta];
    for (int q = 0; q < sep->state_count(); ++q)
      remap.push_back(add_state("c" + std::to_string(delta) + "_" + sep->states[q],
                                sep->eve[q], sep->priority[q],
                                {RKind::Separator, q, -2, delta}));
    sep_init[delta] = remap[sep->initial];
  }

  // Transitions. Entry states resolve the rules per letter.
  for (int q = 0; q < a.state_count(); ++q)
    for (int m : ms) {
      int src = entry[{q, m}];
      for (int l = 0; l < a.alphabet.size(); ++l) {
        if (!productive(q, l)) {
          r.transitions.push_back({src, l, Dir::Eps, lose_eve});
        } else if (m >= 0 && a.priority[q] > m) {
          r.transitions.push_back({src, l, Dir::Eps, lose_adam});
        } else if (m < 0) {
          for (int m2 : ms)
            r.transitions.push_back({src, l, Dir::Eps, sel[{q, m2}]});
        } else {
          r.transitions.push_back({src, l, Dir::Eps, sel[{q, m}]});
        }
      }
    }
  for (int q = 0; q < a.state_count(); ++q)
    for (int m : ms) {
      int src = sel[{q, m}];
      for (int l = 0; l < a.alphabet.size(); ++l) {
        auto js = a.transitions_from(q, l);
        if (!productive(q, l) || js.empty()) {
          r.transitions.push_back({src, l, Dir::Eps, lose_eve});
          continue;
        }
        for (int j : js)
          r.transitions.push_back({src, l, Dir::Eps, choice[{q, m}][j]});
      }
    }
  for (int q = 0; q < a.state_count(); ++q)
    for (int m : ms)
      for (auto [j, src] : choice[{q, m}]) {
        const NtaTransition& tr = a.transitions[j];
        for (int l = 0; l < a.alphabet.size(); ++l) {
          if (l != tr.letter) {
            r.transitions.push_back({src, l, Dir::Eps, lose_adam});
            continue;
          }
          auto it = sep_init.find(j);
          if (it != sep_init.end())
            r.transitions.push_back({src, l, Dir::Eps, it->second});
          r.transitions.push_back({src, l, Dir::L, entry[{tr.left, m}]});
          r.transitions.push_back({src, l, Dir::R, entry[{tr.right, m}]});
        }
      }
  for (int l = 0; l < a.alphabet.size(); ++l) {
    r.transitions.push_back({lose_eve, l, Dir::Eps, lose_eve});
    r.transitions.push_back({lose_adam, l, Dir::Eps, lose_adam});
  }
  for (const auto& [delta, sep] : separator_of) {
    const std::vector<int>& remap = sep_map[delta];
    for (const auto& t : sep->transitions)
      r.transitions.push_back({remap[t.src], t.letter, t.dir, remap[t.dst]});
  }

  r.initial = entry[{a.initial, -1}];
  return rc;
}

}  // namespace treewb
