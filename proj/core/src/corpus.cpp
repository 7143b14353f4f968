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

#include "treewb/corpus.hpp"

#include "treewb/game.hpp"

namespace treewb {

RegularTree random_regular_tree(const Alphabet& alphabet, int size,
                                std::uint64_t seed) {
  if (size < 1) throw TreewbError("tree size must be at least 1");
  validate(alphabet);
  Lcg rng(seed);
  RegularTree t;
  t.name = "rt" + std::to_string(size) + "_" + std::to_string(seed);
  t.alphabet = alphabet;
  for (int i = 0; i < size; ++i) {
    t.nodes.push_back("n" + std::to_string(i));
    t.label.push_back(static_cast<int>(rng.bounded(alphabet.size())));
    int l = static_cast<int>(rng.bounded(size));
    int r = static_cast<int>(rng.bounded(size));
    t.succ.push_back({l, r});
  }
  t.root = 0;
  return t;
}

Corpus random_corpus(const Alphabet& alphabet, int count, int min_size,
                     int max_size, std::uint64_t seed) {
  if (min_size < 1 || max_size < min_size)
    throw TreewbError("bad corpus size range");
  Corpus c;
  for (int i = 0; i < count; ++i) {
    int size = min_size + i % (max_size - min_size + 1);
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    c.trees.push_back(random_regular_tree(alphabet, size, s));
    c.provenance.push_back("seed=" + std::to_string(s) +
                           " size=" + std::to_string(size));
  }
  return c;
}

}  // namespace treewb
