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

#include <cstdint>
#include <string>
#include <vector>

#include "treewb/types.hpp"

namespace treewb {

/// Deterministic in (alphabet, size, seed). Nodes n0..n{size-1}; for each
/// node in order, three Lcg draws: label index, L successor, R successor,
/// all uniform by bounded(). Root is n0.
RegularTree random_regular_tree(const Alphabet& alphabet, int size,
                                std::uint64_t seed);

struct Corpus {
  std::vector<RegularTree> trees;
  std::vector<std::string> provenance;  // per tree: "seed=S size=N" or file

  int size() const { return static_cast<int>(trees.size()); }
};

/// `count` trees with sizes cycling min_size..max_size; tree i uses seed
/// `seed + i`.
Corpus random_corpus(const Alphabet& alphabet, int count, int min_size,
                     int max_size, std::uint64_t seed);

}  // namespace treewb
