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

#include "treewb/comp.hpp"

#include <algorithm>
#include <set>

namespace treewb {

namespace {

struct Graph {
  std::vector<std::vector<int>> succ;

  explicit Graph(const Ata& a) : succ(a.state_count()) {
    std::set<std::pair<int, int>> seen;
    for (const auto& t : a.transitions)
      if (seen.insert({t.src, t.dst}).second) succ[t.src].push_back(t.dst);
  }
};

// Iterative Tarjan; components come out in reverse topological order, which
// we do not rely on. Only states reachable from the initial state are
// visited.
struct Tarjan {
  const Graph& g;
  std::vector<int> index, low, comp;
  std::vector<char> on_stack;
  std::vector<int> stack;
  int counter = 0, comp_count = 0;

  explicit Tarjan(const Graph& graph, int root)
      : g(graph),
        index(graph.succ.size(), -1),
        low(graph.succ.size(), 0),
        comp(graph.succ.size(), -1),
        on_stack(graph.succ.size(), 0) {
    run(root);
  }

  void run(int root) {
    struct Frame {
      int v;
      size_t next_child;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& f = frames.back();
      if (f.next_child < g.succ[f.v].size()) {
        int w = g.succ[f.v][f.next_child++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == v) break;
          }
          comp_count++;
        }
      }
    }
  }
};

// Smallest even shift s with P+s inside [lo, hi], scanning ascending.
std::optional<int> even_shift_into(const std::vector<int>& prios, int lo,
                                   int hi) {
  int pmin = prios.front(), pmax = prios.back();
  for (int s = lo - pmin; s <= hi - pmax; ++s)
    if (s % 2 == 0) return s;
  return std::nullopt;
}

}  // namespace

SccReport scc_comp_check(const Ata& aut, IndexPair band) {
  validate(band);
  Graph g(aut);
  Tarjan tarjan(g, aut.initial);

  SccReport report;
  report.verdict = true;
  std::vector<SccEntry> by_comp(tarjan.comp_count);
  for (int q = 0; q < aut.state_count(); ++q)
    if (tarjan.comp[q] >= 0) by_comp[tarjan.comp[q]].states.push_back(q);

  for (auto& entry : by_comp) {
    std::set<int> prios;
    for (int q : entry.states) prios.insert(aut.priority[q]);
    entry.priorities.assign(prios.begin(), prios.end());
    if (entry.states.size() == 1) {
      int q = entry.states.front();
      entry.trivial =
          std::find(g.succ[q].begin(), g.succ[q].end(), q) == g.succ[q].end();
    }
    auto s1 = even_shift_into(entry.priorities, band.lo, band.hi);
    auto s2 = even_shift_into(entry.priorities, band.lo + 1, band.hi + 1);
    entry.fits_band1 = s1.has_value();
    entry.fits_band2 = s2.has_value();
    entry.chosen_even_shift = s1 ? s1 : s2;
    if (!entry.chosen_even_shift) report.verdict = false;
  }

  // Deterministic order: by smallest contained state index.
  std::sort(by_comp.begin(), by_comp.end(),
            [](const SccEntry& a, const SccEntry& b) {
              return a.states.front() < b.states.front();
            });
  report.sccs = std::move(by_comp);
  return report;
}

Ata normalize_shift(const Ata& aut, IndexPair band) {
  SccReport report = scc_comp_check(aut, band);
  if (!report.verdict)
    throw ShiftUnavailable("automaton " + aut.name +
                           " does not fit the band up to even shifts");
  Ata out = aut;
  for (const auto& entry : report.sccs)
    for (int q : entry.states) out.priority[q] += *entry.chosen_even_shift;
  return out;
}

}  // namespace treewb
