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

#include "treewb/monitor.hpp"

#include <map>
#include <tuple>

namespace treewb {

namespace {

Monitor buchi_counter(IndexPair r1, IndexPair r2) {
  // States: 0 = waiting for an even first component, 1 = waiting for an even
  // second component, 2 = phase reset (behaves like state 0).
  Monitor m;
  m.range1 = r1;
  m.range2 = r2;
  m.start = 0;
  m.out = {1, 1, 2};
  int w1 = r1.hi - r1.lo + 1, w2 = r2.hi - r2.lo + 1;
  m.table.assign(3 * w1 * w2, 0);
  for (int s = 0; s < 3; ++s)
    for (int p1 = r1.lo; p1 <= r1.hi; ++p1)
      for (int p2 = r2.lo; p2 <= r2.hi; ++p2) {
        int phase = s == 2 ? 0 : s;
        int next;
        if (phase == 0)
          next = p1 % 2 == 0 ? 1 : 0;
        else
          next = p2 % 2 == 0 ? 2 : 1;
        m.table[(s * w1 + (p1 - r1.lo)) * w2 + (p2 - r2.lo)] = next;
      }
  return m;
}

// Streett view of one max-parity condition: for every odd priority o in the
// range, the pair (E, F) with F = "value is exactly o" and E = "value
// exceeds o". The condition holds iff every pair with F hit infinitely often
// also has E hit infinitely often.
struct StreettPair {
  int component;  // 0 or 1
  int odd;
};

// Index appearance record. A state is a permutation of the pair indices
// (front = most recently E-hit) plus the (e, f) positions of the previous
// step: e = deepest E-hit, f = deepest F-hit, 1-based, 0 when absent. Output
// is 2e when e >= f and 2f-1 otherwise. Pairs whose E is hit infinitely
// often cycle at the front; a pair with F recurring but E eventually silent
// freezes at some depth beyond them and forces an odd limsup from there.
struct IarState {
  std::vector<int> perm;
  int e = 0;
  int f = 0;
  auto operator<=>(const IarState&) const = default;
};

Monitor iar_monitor(IndexPair r1, IndexPair r2) {
  std::vector<StreettPair> pairs;
  for (int o = r1.lo; o <= r1.hi; ++o)
    if (o % 2 == 1) pairs.push_back({0, o});
  for (int o = r2.lo; o <= r2.hi; ++o)
    if (o % 2 == 1) pairs.push_back({1, o});
  int k = static_cast<int>(pairs.size());

  auto hit_e = [&pairs](int j, int p1, int p2) {
    int v = pairs[j].component == 0 ? p1 : p2;
    return v > pairs[j].odd;
  };
  auto hit_f = [&pairs](int j, int p1, int p2) {
    int v = pairs[j].component == 0 ? p1 : p2;
    return v == pairs[j].odd;
  };

  IarState init;
  for (int j = 0; j < k; ++j) init.perm.push_back(j);

  Monitor m;
  m.range1 = r1;
  m.range2 = r2;
  int w1 = r1.hi - r1.lo + 1, w2 = r2.hi - r2.lo + 1;

  std::map<IarState, int> ids;
  std::vector<IarState> states;
  auto intern = [&ids, &states](const IarState& s) {
    auto [it, fresh] = ids.try_emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  m.start = intern(init);

  for (int sid = 0; sid < static_cast<int>(states.size()); ++sid) {
    IarState cur = states[sid];  // copy: `states` may grow below
    m.table.resize((sid + 1) * w1 * w2);
    for (int p1 = r1.lo; p1 <= r1.hi; ++p1)
      for (int p2 = r2.lo; p2 <= r2.hi; ++p2) {
        IarState next;
        next.e = next.f = 0;
        std::vector<int> front, back;
        for (int pos = 0; pos < k; ++pos) {
          int j = cur.perm[pos];
          if (hit_e(j, p1, p2)) {
            next.e = pos + 1;  // deepest E-hit so far
            front.push_back(j);
          } else {
            back.push_back(j);
          }
          if (hit_f(j, p1, p2)) next.f = pos + 1;
        }
        next.perm = front;
        next.perm.insert(next.perm.end(), back.begin(), back.end());
        int nid = intern(next);
        m.table[(sid * w1 + (p1 - r1.lo)) * w2 + (p2 - r2.lo)] = nid;
      }
  }
  m.out.resize(states.size());
  for (int sid = 0; sid < static_cast<int>(states.size()); ++sid) {
    const IarState& s = states[sid];
    m.out[sid] = s.e >= s.f ? 2 * s.e : 2 * s.f - 1;
  }
  return m;
}

}  // namespace

Monitor make_monitor(IndexPair range1, IndexPair range2) {
  validate(range1);
  validate(range2);
  if (range1.lo >= 1 && range1.hi <= 2 && range2.lo >= 1 && range2.hi <= 2)
    return buchi_counter(range1, range2);
  return iar_monitor(range1, range2);
}

}  // namespace treewb
