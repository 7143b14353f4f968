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

#include "treewb/game.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace treewb {

int ParityGame::position_index(const std::string& n) const {
  for (int i = 0; i < position_count(); ++i)
    if (position_names[i] == n) return i;
  return -1;
}

void validate(const ParityGame& g) {
  if (g.position_names.empty()) throw TreewbError("game has no positions");
  std::set<std::string> seen;
  for (const auto& n : g.position_names)
    if (!seen.insert(n).second) throw TreewbError("duplicate position: " + n);
  if (g.owner.size() != g.position_names.size() ||
      g.priority.size() != g.position_names.size())
    throw TreewbError("owner/priority maps not total");
  if (g.initial < 0 || g.initial >= g.position_count())
    throw TreewbError("initial not a position");
  std::vector<char> has_out(g.position_names.size(), 0);
  for (auto [s, d] : g.edges) {
    if (s < 0 || s >= g.position_count() || d < 0 || d >= g.position_count())
      throw TreewbError("edge endpoint not a position");
    has_out[s] = 1;
  }
  for (int i = 0; i < g.position_count(); ++i)
    if (!has_out[i])
      throw TreewbError("position without outgoing edge: " + g.position_names[i]);
}

void make_total(ParityGame& g) {
  std::vector<char> has_out(g.position_names.size(), 0);
  for (auto [s, d] : g.edges) (void)d, has_out[s] = 1;
  for (int i = 0; i < g.position_count(); ++i) {
    if (has_out[i]) continue;
    bool even = g.priority[i] % 2 == 0;
    if (g.owner[i] == Player::Eve && even) g.priority[i] += 1;
    if (g.owner[i] == Player::Adam && !even) g.priority[i] += 1;
    g.edges.emplace_back(i, i);
  }
}

namespace {

struct Adjacency {
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;

  explicit Adjacency(const ParityGame& g)
      : succ(g.position_count()), pred(g.position_count()) {
    for (auto [s, d] : g.edges) {
      succ[s].push_back(d);
      pred[d].push_back(s);
    }
  }
};

// Attractor of `target` for `player` within the subgame `active`. Extends
// `attr` in place; records the player's attracting move in `strategy` for
// attracted player-owned positions outside the target.
void attractor(const ParityGame& g, const Adjacency& adj,
               const std::vector<char>& active, Player player,
               std::vector<char>& attr, std::vector<int>& strategy) {
  std::vector<int> degree(g.position_count(), 0);
  for (int v = 0; v < g.position_count(); ++v) {
    if (!active[v] || g.owner[v] == player) continue;
    for (int w : adj.succ[v])
      if (active[w]) degree[v]++;
  }
  std::deque<int> queue;
  for (int v = 0; v < g.position_count(); ++v)
    if (attr[v]) queue.push_back(v);
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int v : adj.pred[w]) {
      if (!active[v] || attr[v]) continue;
      if (g.owner[v] == player) {
        attr[v] = 1;
        strategy[v] = w;
        queue.push_back(v);
      } else if (--degree[v] == 0) {
        attr[v] = 1;
        queue.push_back(v);
      }
    }
  }
}

struct Zielonka {
  const ParityGame& g;
  Adjacency adj;
  std::vector<Player> winner;
  std::vector<int> strat_eve, strat_adam;

  explicit Zielonka(const ParityGame& game)
      : g(game),
        adj(game),
        winner(game.position_count(), Player::Eve),
        strat_eve(game.position_count(), -1),
        strat_adam(game.position_count(), -1) {}

  std::vector<int>& strat(Player p) {
    return p == Player::Eve ? strat_eve : strat_adam;
  }

  void solve(std::vector<char> active, int count) {
    if (count == 0) return;
    int top = -1;
    for (int v = 0; v < g.position_count(); ++v)
      if (active[v]) top = std::max(top, g.priority[v]);
    Player player = top % 2 == 0 ? Player::Eve : Player::Adam;
    Player opponent = player == Player::Eve ? Player::Adam : Player::Eve;

    std::vector<char> attr(g.position_count(), 0);
    for (int v = 0; v < g.position_count(); ++v)
      if (active[v] && g.priority[v] == top) attr[v] = 1;
    std::vector<int> attr_strat(g.position_count(), -1);
    attractor(g, adj, active, player, attr, attr_strat);

    std::vector<char> rest = active;
    int rest_count = count;
    for (int v = 0; v < g.position_count(); ++v)
      if (attr[v] && rest[v]) rest[v] = 0, rest_count--;

    solve(rest, rest_count);

    bool opponent_escapes = false;
    for (int v = 0; v < g.position_count(); ++v)
      if (rest[v] && winner[v] == opponent) opponent_escapes = true;

    if (!opponent_escapes) {
      // `player` wins the whole subgame: attractor strategy toward the top
      // set, any active successor inside it.
      for (int v = 0; v < g.position_count(); ++v) {
        if (!active[v] || !attr[v]) continue;
        winner[v] = player;
        if (g.owner[v] != player) continue;
        if (attr_strat[v] >= 0) {
          strat(player)[v] = attr_strat[v];
        } else {
          for (int w : adj.succ[v])
            if (active[w]) {
              strat(player)[v] = w;
              break;
            }
        }
      }
      return;
    }

    // The opponent keeps part of the remainder; remove their full attractor
    // and re-solve what is left.
    std::vector<char> oppwin(g.position_count(), 0);
    for (int v = 0; v < g.position_count(); ++v)
      if (rest[v] && winner[v] == opponent) oppwin[v] = 1;
    std::vector<int> opp_strat(g.position_count(), -1);
    attractor(g, adj, active, opponent, oppwin, opp_strat);

    for (int v = 0; v < g.position_count(); ++v) {
      if (!oppwin[v]) continue;
      winner[v] = opponent;
      if (g.owner[v] == opponent && opp_strat[v] >= 0)
        strat(opponent)[v] = opp_strat[v];
      // Positions already solved by the recursion keep their strategy.
    }

    std::vector<char> remaining = active;
    int remaining_count = count;
    for (int v = 0; v < g.position_count(); ++v)
      if (oppwin[v] && remaining[v]) remaining[v] = 0, remaining_count--;
    solve(remaining, remaining_count);
  }
};

}  // namespace

Solution solve_game(const ParityGame& g) {
  Zielonka z(g);
  std::vector<char> all(g.position_count(), 1);
  z.solve(all, g.position_count());
  // Strategies only on owned-and-won positions.
  for (int v = 0; v < g.position_count(); ++v) {
    if (!(z.winner[v] == Player::Eve && g.owner[v] == Player::Eve))
      z.strat_eve[v] = -1;
    if (!(z.winner[v] == Player::Adam && g.owner[v] == Player::Adam))
      z.strat_adam[v] = -1;
  }
  return Solution{z.winner, z.strat_eve, z.strat_adam};
}

namespace {

// Small progress measures, max-parity, from Eve's side. A measure is a tuple
// with one component per odd priority, most significant first (descending
// priority); component p is capped by the number of positions of priority p.
// Eve wins exactly the positions whose least-fixpoint measure is not top.
struct Spm {
  const ParityGame& g;
  Adjacency adj;
  std::vector<int> odds;          // odd priorities, descending
  std::vector<int> cap;           // per component
  std::vector<std::vector<int>> mu;
  std::vector<char> top;

  explicit Spm(const ParityGame& game) : g(game), adj(game) {
    int maxp = 0;
    for (int p : g.priority) maxp = std::max(maxp, p);
    for (int p = maxp; p >= 1; --p)
      if (p % 2 == 1) odds.push_back(p);
    cap.assign(odds.size(), 0);
    for (int v = 0; v < g.position_count(); ++v)
      for (size_t i = 0; i < odds.size(); ++i)
        if (g.priority[v] == odds[i]) cap[i]++;
    mu.assign(g.position_count(), std::vector<int>(odds.size(), 0));
    top.assign(g.position_count(), 0);
  }

  // Number of components for priorities >= p.
  int prefix(int p) const {
    int k = 0;
    while (k < static_cast<int>(odds.size()) && odds[k] >= p) k++;
    return k;
  }

  // Lexicographic comparison of full measures; top handled by callers.
  static int cmp(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // prog(v, w): least measure m with m >=_{pr(v)} mu(w) (strictly greater
  // when pr(v) is odd). Returns false when the result is top.
  bool prog(int v, int w, std::vector<int>& out) const {
    if (top[w]) return false;
    int p = g.priority[v];
    int k = prefix(p);
    out.assign(odds.size(), 0);
    for (int i = 0; i < k; ++i) out[i] = mu[w][i];
    if (p % 2 == 0) return true;
    // Strictly increase within the first k components, least significant
    // first; carry into more significant components at the caps.
    for (int i = k - 1; i >= 0; --i) {
      if (out[i] < cap[i]) {
        out[i]++;
        for (int j = i + 1; j < k; ++j) out[j] = 0;
        return true;
      }
    }
    return false;
  }

  void run() {
    std::deque<int> queue;
    std::vector<char> queued(g.position_count(), 0);
    for (int v = 0; v < g.position_count(); ++v) {
      queue.push_back(v);
      queued[v] = 1;
    }
    std::vector<int> cand, acc;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      if (top[v]) continue;
      // Eve minimises over successors (top worst), Adam maximises.
      bool have_nontop = false, have_top = false;
      for (int w : adj.succ[v]) {
        if (!prog(v, w, cand)) {
          have_top = true;
          continue;
        }
        if (!have_nontop) {
          acc = cand;
          have_nontop = true;
        } else if (g.owner[v] == Player::Eve ? cmp(cand, acc) < 0
                                             : cmp(cand, acc) > 0) {
          acc = cand;
        }
      }
      bool result_top =
          g.owner[v] == Player::Eve ? !have_nontop : have_top;
      bool lifted;
      if (result_top) {
        lifted = true;
        top[v] = 1;
      } else {
        lifted = cmp(acc, mu[v]) > 0;
        if (lifted) mu[v] = acc;
      }
      if (lifted)
        for (int u : adj.pred[v])
          if (!queued[u] && !top[u]) {
            queue.push_back(u);
            queued[u] = 1;
          }
    }
  }

  // Winning move for Eve: successor with the least measure.
  int eve_move(int v) const {
    int best = -1;
    for (int w : adj.succ[v]) {
      if (top[w]) continue;
      if (best == -1 || cmp(mu[w], mu[best]) < 0) best = w;
    }
    return best;
  }
};

}  // namespace

ParityGame dual_game(const ParityGame& g) {
  ParityGame d = g;
  d.name = g.name + "_dual";
  for (auto& o : d.owner) o = o == Player::Eve ? Player::Adam : Player::Eve;
  for (auto& p : d.priority) p += 1;
  return d;
}

Solution solve_game_oracle(const ParityGame& g) {
  Spm primal(g);
  primal.run();
  ParityGame dg = dual_game(g);
  Spm dual(dg);
  dual.run();

  Solution s;
  s.winner.assign(g.position_count(), Player::Eve);
  s.strategy_eve.assign(g.position_count(), -1);
  s.strategy_adam.assign(g.position_count(), -1);
  for (int v = 0; v < g.position_count(); ++v) {
    bool eve_wins = !primal.top[v];
    // Determinacy cross-check against the dual run.
    bool adam_wins_dual = !dual.top[v];
    if (eve_wins == adam_wins_dual)
      throw TreewbError("progress-measure duality violated at position " +
                        g.position_names[v]);
    s.winner[v] = eve_wins ? Player::Eve : Player::Adam;
    if (eve_wins && g.owner[v] == Player::Eve)
      s.strategy_eve[v] = primal.eve_move(v);
    if (!eve_wins && g.owner[v] == Player::Adam)
      s.strategy_adam[v] = dual.eve_move(v);
  }
  return s;
}

ParityGame random_game(int positions, int density, int max_priority,
                       std::uint64_t seed) {
  if (positions < 1 || density < 1 || max_priority < 0)
    throw TreewbError("bad random game parameters");
  Lcg rng(seed);
  ParityGame g;
  g.name = "rg_" + std::to_string(positions) + "_" + std::to_string(seed);
  for (int i = 0; i < positions; ++i) {
    g.position_names.push_back("p" + std::to_string(i));
    g.owner.push_back(rng.bounded(2) == 0 ? Player::Eve : Player::Adam);
    g.priority.push_back(static_cast<int>(rng.bounded(max_priority + 1)));
  }
  for (int i = 0; i < positions; ++i) {
    int out = 1 + static_cast<int>(rng.bounded(density));
    std::set<int> chosen;
    for (int j = 0; j < out; ++j) {
      int dst = static_cast<int>(rng.bounded(positions));
      if (chosen.insert(dst).second) g.edges.emplace_back(i, dst);
    }
  }
  g.initial = 0;
  return g;
}

}  // namespace treewb
