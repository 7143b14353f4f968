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
#include <vector>

#include "treewb/boolean.hpp"
#include "treewb/corpus.hpp"
#include "treewb/types.hpp"

namespace treewb {

enum class ObligationKind { Covering, Disjointness, Containment };

const char* to_string(ObligationKind k);

struct FamilyViolation {
  std::string tree;
  std::string state;
  std::string letter;
  ObligationKind kind;
  int delta = -1;  // offending transition for containment violations
};

struct FamilyReport {
  int trees_checked = 0;
  std::vector<FamilyViolation> violations;

  bool clean() const { return violations.empty(); }
};

/// Checks the family obligations on every corpus tree and productive pair:
/// exactly one member accepts the tree (covering + disjointness), and
/// membership in the transition-rooted language implies membership in the
/// member (containment).
FamilyReport verify_family(const Nta& a, const SeparatorFamily& family,
                           const Corpus& corpus);

struct Mismatch {
  std::string tree;
  bool in_a = false;
  bool in_r = false;
  bool blamed = false;  // the same tree violates a family obligation
};

struct EquivalenceReport {
  int total = 0;
  int agreements = 0;
  bool vacuous = false;  // empty corpus
  std::vector<Mismatch> mismatches;
  std::vector<FamilyViolation> family_blame;  // violations on mismatching trees

  int blamed_count() const;
  int unblamed_count() const;
};

/// Per tree, compares NTA membership with ATA membership of R. Mismatches on
/// trees where the family itself breaks an obligation are attributed to the
/// family rather than the construction.
EquivalenceReport verify_equivalence(const Nta& a, const Ata& r,
                                     const Corpus& corpus,
                                     const SeparatorFamily& family);

}  // namespace treewb
