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

#include "treewb/verify.hpp"

#include <set>

#include "treewb/analysis.hpp"
#include "treewb/membership.hpp"

namespace treewb {

const char* to_string(ObligationKind k) {
  switch (k) {
    case ObligationKind::Covering: return "COVERING";
    case ObligationKind::Disjointness: return "DISJOINTNESS";
    case ObligationKind::Containment: return "CONTAINMENT";
  }
  return "?";
}

FamilyReport verify_family(const Nta& a, const SeparatorFamily& family,
                           const Corpus& corpus) {
  FamilyReport report;
  report.trees_checked = corpus.size();

  // Transition-rooted automata, one per family delta.
  std::vector<std::pair<int, Nta>> rooted;
  for (const auto& e : family.entries)
    for (int d : e.deltas) rooted.emplace_back(d, delta_rooted(a, d));
  auto rooted_of = [&rooted](int d) -> const Nta& {
    for (auto& [dd, aut] : rooted)
      if (dd == d) return aut;
    throw BadTransition("delta " + std::to_string(d));
  };

  for (const auto& t : corpus.trees) {
    for (const auto& e : family.entries) {
      int acceptors = 0;
      for (size_t i = 0; i < e.deltas.size(); ++i) {
        bool in_member = member_ata(t, e.separators[i]);
        if (in_member) acceptors++;
        if (member_nta(t, rooted_of(e.deltas[i])) && !in_member)
          report.violations.push_back({t.name, e.state, e.letter,
                                       ObligationKind::Containment,
                                       e.deltas[i]});
      }
      if (acceptors == 0)
        report.violations.push_back(
            {t.name, e.state, e.letter, ObligationKind::Covering, -1});
      else if (acceptors > 1)
        report.violations.push_back(
            {t.name, e.state, e.letter, ObligationKind::Disjointness, -1});
    }
  }
  return report;
}

int EquivalenceReport::blamed_count() const {
  int n = 0;
  for (const auto& m : mismatches) n += m.blamed;
  return n;
}

int EquivalenceReport::unblamed_count() const {
  return static_cast<int>(mismatches.size()) - blamed_count();
}

EquivalenceReport verify_equivalence(const Nta& a, const Ata& r,
                                     const Corpus& corpus,
                                     const SeparatorFamily& family) {
  EquivalenceReport report;
  report.total = corpus.size();
  report.vacuous = corpus.size() == 0;

  FamilyReport fam = verify_family(a, family, corpus);
  std::set<std::string> dirty;
  for (const auto& v : fam.violations) dirty.insert(v.tree);

  for (const auto& t : corpus.trees) {
    bool in_a = member_nta(t, a);
    bool in_r = member_ata(t, r);
    if (in_a == in_r) {
      report.agreements++;
      continue;
    }
    bool blamed = dirty.count(t.name) > 0;
    report.mismatches.push_back({t.name, in_a, in_r, blamed});
    for (const auto& v : fam.violations)
      if (v.tree == t.name) report.family_blame.push_back(v);
  }
  return report;
}

}  // namespace treewb
