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

// treewb — a workbench for automata on infinite binary trees.
//
// Boolean verbs exit 0 for "true"/clean, 1 for "false"/violations, 2 on
// usage or parse errors. With --format lines the output is machine-readable
// KEY VALUE records.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treewb/analysis.hpp"
#include "treewb/boolean.hpp"
#include "treewb/comp.hpp"
#include "treewb/construct.hpp"
#include "treewb/corpus.hpp"
#include "treewb/game.hpp"
#include "treewb/io.hpp"
#include "treewb/membership.hpp"
#include "treewb/verify.hpp"

namespace fs = std::filesystem;
using namespace treewb;

namespace {

struct Options {
  bool lines = false;  // --format lines
  std::string out;     // -o
  std::uint64_t seed = 1;
};

void emit(const Options& opt, const std::string& key, const std::string& value,
          const std::string& human) {
  if (opt.lines)
    std::cout << key << " " << value << "\n";
  else
    std::cout << human << "\n";
}

void deliver_tree(const Options& opt, const RegularTree& witness) {
  if (!opt.out.empty())
    write_file(opt.out, print_tree(witness));
  else
    std::cout << print_tree(witness);
}

void deliver_ata(const Options& opt, const Ata& a) {
  if (!opt.out.empty())
    write_file(opt.out, print_ata(a));
  else
    std::cout << print_ata(a);
}

int cmd_solve_game(const Options& opt, const std::string& file) {
  ParityGame g = load_game(file);
  Solution s = solve_game(g);
  for (int p = 0; p < g.position_count(); ++p)
    emit(opt, "WINNER " + g.position_names[p], to_string(s.winner[p]),
         g.position_names[p] + " is won by " + to_string(s.winner[p]));
  for (int p = 0; p < g.position_count(); ++p) {
    if (s.strategy_eve[p] >= 0)
      emit(opt, "STRAT_EVE " + g.position_names[p],
           g.position_names[s.strategy_eve[p]],
           "Eve plays " + g.position_names[p] + " -> " +
               g.position_names[s.strategy_eve[p]]);
    if (s.strategy_adam[p] >= 0)
      emit(opt, "STRAT_ADAM " + g.position_names[p],
           g.position_names[s.strategy_adam[p]],
           "Adam plays " + g.position_names[p] + " -> " +
               g.position_names[s.strategy_adam[p]]);
  }
  bool eve = s.winner[g.initial] == Player::Eve;
  emit(opt, "INITIAL_WINNER", to_string(s.winner[g.initial]),
       "initial position " + g.position_names[g.initial] + " is won by " +
           to_string(s.winner[g.initial]));
  return eve ? 0 : 1;
}

int cmd_empty(const Options& opt, const std::string& file) {
  Nta a = load_nta(file);
  auto live = live_states(a);
  bool empty =
      std::find(live.begin(), live.end(), a.states[a.initial]) == live.end();
  std::string joined;
  for (const auto& s : live) joined += (joined.empty() ? "" : " ") + s;
  emit(opt, "LIVE", joined.empty() ? "-" : joined,
       "live states:" + (joined.empty() ? " none" : " " + joined));
  emit(opt, "EMPTY", empty ? "true" : "false",
       a.name + (empty ? " recognises the empty language"
                       : " recognises a non-empty language"));
  return empty ? 0 : 1;
}

int cmd_productive(const Options& opt, const std::string& file) {
  Nta a = load_nta(file);
  ProductivityReport r = productive_pairs(a);
  std::string live;
  for (const auto& s : r.live_states) live += (live.empty() ? "" : " ") + s;
  emit(opt, "LIVE", live.empty() ? "-" : live,
       "live states:" + (live.empty() ? " none" : " " + live));
  for (const auto& [q, l] : r.productive_pairs)
    emit(opt, "PRODUCTIVE", q + " " + l, "productive: (" + q + ", " + l + ")");
  if (!opt.lines && r.productive_pairs.empty())
    std::cout << "no productive pairs\n";
  return 0;
}

int cmd_prune(const Options& opt, const std::string& file) {
  Nta a = load_nta(file);
  PruneResult r = prune(a);
  emit(opt, "EMPTY_AFTER_PRUNE", r.empty_after_prune ? "true" : "false",
       r.empty_after_prune ? "initial state is dead; language is empty"
                           : "initial state is live");
  if (!opt.out.empty())
    write_file(opt.out, print_nta(r.automaton));
  else
    std::cout << print_nta(r.automaton);
  return 0;
}

int cmd_disjoint(const Options& opt, const std::string& f1,
                 const std::string& f2) {
  Nta a1 = load_nta(f1), a2 = load_nta(f2);
  DisjointnessResult r = is_disjoint(a1, a2);
  emit(opt, "DISJOINT", r.disjoint ? "true" : "false",
       r.disjoint ? "languages are disjoint" : "languages intersect");
  if (r.witness) deliver_tree(opt, *r.witness);
  return r.disjoint ? 0 : 1;
}

int cmd_ambiguous(const Options& opt, const std::string& file) {
  Nta a = load_nta(file);
  AmbiguityVerdict v = is_unambiguous(a);
  emit(opt, "AMBIGUOUS", v.unambiguous ? "false" : "true",
       a.name + (v.unambiguous ? " is unambiguous" : " is ambiguous"));
  if (v.witness) deliver_tree(opt, *v.witness);
  return v.unambiguous ? 1 : 0;  // the verb asks: is it ambiguous?
}

int cmd_delta_rooted(const Options& opt, const std::string& file, int delta) {
  Nta d = delta_rooted(load_nta(file), delta);
  if (!opt.out.empty())
    write_file(opt.out, print_nta(d));
  else
    std::cout << print_nta(d);
  return 0;
}

int cmd_family(const Options& opt, const std::string& nta_file,
               const std::string& family_file) {
  Nta a = load_nta(nta_file);
  SeparatorFamily claimed = load_family(family_file);
  if (claimed.owner != a.name)
    throw FamilyMismatch("family is for " + claimed.owner + ", not " + a.name);
  SeparatorFamily built = partition_family(a, claimed);
  std::string dir = opt.out.empty() ? "." : opt.out;
  std::string path = write_family(built, dir, built.name + ".family");
  emit(opt, "FAMILY", path, "wrote partition family to " + path);
  return 0;
}

int cmd_build_r(const Options& opt, const std::string& nta_file,
                const std::string& family_file, bool check_band,
                std::optional<IndexPair> band) {
  Nta a = load_nta(nta_file);
  SeparatorFamily family = load_family(family_file);
  if (family.owner != a.name)
    throw FamilyMismatch("family is for " + family.owner + ", not " + a.name);
  RConstruction rc = build_r(a, family, band);
  deliver_ata(opt, rc.automaton);
  if (check_band) {
    IndexPair target{rc.band.lo + 1, rc.band.hi};
    SccReport rep = scc_comp_check(rc.automaton, target);
    emit(opt, "BAND_OK", rep.verdict ? "true" : "false",
         "component check for (" + std::to_string(target.lo) + "," +
             std::to_string(target.hi) + "): " +
             (rep.verdict ? "pass" : "fail"));
    if (!rep.verdict) return 1;
  }
  return 0;
}

int cmd_comp_check(const Options& opt, const std::string& file,
                   IndexPair band) {
  Ata a = load_ata(file);
  SccReport rep = scc_comp_check(a, band);
  for (size_t i = 0; i < rep.sccs.size(); ++i) {
    const SccEntry& e = rep.sccs[i];
    std::ostringstream prios, states;
    for (int p : e.priorities) prios << p << " ";
    for (int q : e.states) states << a.states[q] << " ";
    std::string shift =
        e.chosen_even_shift ? std::to_string(*e.chosen_even_shift) : "NONE";
    emit(opt, "SCC" + std::to_string(i),
         "shift=" + shift + " prios= " + prios.str(),
         "component { " + states.str() + "} priorities { " + prios.str() +
             "} shift " + shift);
  }
  emit(opt, "COMP_OK", rep.verdict ? "true" : "false",
       rep.verdict ? "automaton fits the band (up to even shifts)"
                   : "automaton does not fit the band");
  return rep.verdict ? 0 : 1;
}

int cmd_member(const Options& opt, const std::string& tree_file,
               const std::string& aut_file,
               const std::optional<std::string>& from) {
  RegularTree t = load_tree(tree_file);
  std::string kind = peek_kind(aut_file);
  bool member;
  if (kind == "nta") {
    member = member_nta(t, load_nta(aut_file), from);
  } else if (kind == "ata") {
    if (from) throw TreewbError("--from is only meaningful for an nta");
    member = member_ata(t, load_ata(aut_file));
  } else {
    throw TreewbError(aut_file + " is neither an nta nor an ata file");
  }
  emit(opt, "MEMBER", member ? "true" : "false",
       t.name + (member ? " is accepted" : " is rejected"));
  return member ? 0 : 1;
}

int cmd_count_runs(const Options& opt, const std::string& tree_file,
                   const std::string& nta_file) {
  RunCount c = count_runs(load_tree(tree_file), load_nta(nta_file));
  emit(opt, "COUNT", to_string(c),
       std::string("accepting runs: ") + to_string(c));
  return 0;
}

int cmd_gen_corpus(const Options& opt, int size, int count,
                   const std::string& alphabet_csv) {
  Alphabet alphabet;
  std::stringstream ss(alphabet_csv);
  std::string sym;
  while (std::getline(ss, sym, ','))
    if (!sym.empty()) alphabet.symbols.push_back(sym);
  validate(alphabet);
  std::string dir = opt.out.empty() ? "." : opt.out;
  fs::create_directories(dir);
  for (int i = 0; i < count; ++i) {
    RegularTree t = random_regular_tree(alphabet, size, opt.seed + i);
    std::string path = (fs::path(dir) / (t.name + ".tree")).string();
    write_file(path, print_tree(t));
    emit(opt, "TREE", path, "wrote " + path);
  }
  return 0;
}

Corpus load_corpus_dir(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".tree")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  Corpus c;
  for (const auto& f : files) {
    c.trees.push_back(load_tree(f));
    c.provenance.push_back(f);
  }
  return c;
}

int cmd_verify(const Options& opt, const std::string& nta_file,
               const std::string& ata_file, const std::string& family_file,
               const std::string& corpus_dir) {
  Nta a = load_nta(nta_file);
  Ata r = load_ata(ata_file);
  SeparatorFamily family = load_family(family_file);
  Corpus corpus = load_corpus_dir(corpus_dir);

  FamilyReport fam = verify_family(a, family, corpus);
  for (const auto& v : fam.violations)
    emit(opt, "VIOLATION",
         v.tree + " " + v.state + " " + v.letter + " " + to_string(v.kind),
         "family violation on " + v.tree + " at (" + v.state + ", " +
             v.letter + "): " + to_string(v.kind));

  EquivalenceReport rep = verify_equivalence(a, r, corpus, family);
  for (const auto& m : rep.mismatches)
    emit(opt, "MISMATCH",
         m.tree + (m.in_a ? " inA" : " !inA") + (m.in_r ? " inR" : " !inR") +
             (m.blamed ? " BLAME_FAMILY" : ""),
         "mismatch on " + m.tree + ": nta says " + (m.in_a ? "yes" : "no") +
             ", alternating automaton says " + (m.in_r ? "yes" : "no") +
             (m.blamed ? " (family to blame)" : ""));
  if (rep.vacuous) emit(opt, "VACUOUS", "true", "corpus is empty");
  std::cout << "RESULT agree=" << rep.agreements
            << " mismatch=" << rep.mismatches.size()
            << " blamed=" << rep.blamed_count() << "\n";
  return rep.mismatches.empty() && fam.violations.empty() ? 0 : 1;
}

int cmd_play(const std::string& tree_file, const std::string& ata_file,
             const std::string& user_side_name) {
  RegularTree t = load_tree(tree_file);
  Ata c = load_ata(ata_file);
  Player user = user_side_name == "eve" ? Player::Eve : Player::Adam;
  Player machine = user == Player::Eve ? Player::Adam : Player::Eve;

  ParityGame g = membership_game(t, c);
  Solution sol = solve_game(g);
  std::cout << "membership game of " << t.name << " in " << c.name << "\n";
  std::cout << "prediction: " << to_string(sol.winner[g.initial])
            << " wins from the initial position\n";
  std::cout << "you play " << to_string(user)
            << "; type a move number or 'quit'\n";

  std::vector<std::vector<int>> succ(g.position_count());
  for (auto [s, d] : g.edges) succ[s].push_back(d);

  std::vector<int> history;
  std::vector<int> seen_at(g.position_count(), -1);
  int pos = g.initial;
  while (true) {
    if (seen_at[pos] >= 0) {
      int maxp = 0;
      for (size_t i = seen_at[pos]; i < history.size(); ++i)
        maxp = std::max(maxp, g.priority[history[i]]);
      std::cout << "position repeats; the loop's top priority is " << maxp
                << ", so this play is won by "
                << (maxp % 2 == 0 ? "EVE" : "ADAM") << "\n";
      return 0;
    }
    seen_at[pos] = static_cast<int>(history.size());
    history.push_back(pos);

    std::cout << "at " << g.position_names[pos] << "  owner "
              << to_string(g.owner[pos]) << "  priority " << g.priority[pos]
              << "\n";
    int next;
    if (g.owner[pos] == machine) {
      int strat = machine == Player::Eve ? sol.strategy_eve[pos]
                                         : sol.strategy_adam[pos];
      next = strat >= 0 ? strat : succ[pos].front();
      std::cout << "machine moves to " << g.position_names[next] << "\n";
    } else {
      for (size_t i = 0; i < succ[pos].size(); ++i)
        std::cout << "  " << i << ") " << g.position_names[succ[pos][i]]
                  << "\n";
      std::string input;
      while (true) {
        std::cout << "> " << std::flush;
        if (!(std::cin >> input) || input == "quit") {
          std::cout << "\nbye\n";
          return 0;
        }
        try {
          size_t idx = std::stoul(input);
          if (idx < succ[pos].size()) {
            next = succ[pos][idx];
            break;
          }
        } catch (const std::exception&) {
        }
        std::cout << "illegal move\n";
      }
    }
    pos = next;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for parity automata on infinite binary trees"};
  app.require_subcommand(1);

  Options opt;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or lines")
      ->check(CLI::IsMember({"text", "lines"}));

  std::string file1, file2, file3, file4;
  int delta = 0;
  std::vector<int> band_vals;
  bool check_band = false;
  std::string from_state;
  int size = 4, count = 1;
  std::string alphabet_csv = "a,b";
  std::string user_side = "adam";

  auto add_out = [&opt](CLI::App* cmd) {
    cmd->add_option("-o,--out", opt.out, "write the result here");
  };

  auto* c_solve = app.add_subcommand("solve-game", "solve a parity game");
  c_solve->add_option("game", file1)->required();

  auto* c_empty =
      app.add_subcommand("empty", "emptiness of an nta; prints live states");
  c_empty->add_option("nta", file1)->required();

  auto* c_prod =
      app.add_subcommand("productive", "live states and productive pairs");
  c_prod->add_option("nta", file1)->required();

  auto* c_prune =
      app.add_subcommand("prune", "drop dead states and transitions");
  c_prune->add_option("nta", file1)->required();
  add_out(c_prune);

  auto* c_disj =
      app.add_subcommand("disjoint", "language disjointness of two ntas");
  c_disj->add_option("nta1", file1)->required();
  c_disj->add_option("nta2", file2)->required();
  add_out(c_disj);

  auto* c_amb = app.add_subcommand(
      "ambiguous", "does some tree have two accepting runs?");
  c_amb->add_option("nta", file1)->required();
  add_out(c_amb);

  auto* c_delta = app.add_subcommand(
      "delta-rooted", "automaton of the transition-rooted language");
  c_delta->add_option("nta", file1)->required();
  c_delta->add_option("delta", delta, "canonical transition index")->required();
  add_out(c_delta);

  auto* c_compl =
      app.add_subcommand("complement", "dualize an alternating automaton");
  c_compl->add_option("ata", file1)->required();
  add_out(c_compl);

  auto* c_union =
      app.add_subcommand("union", "union of two alternating automata");
  c_union->add_option("ata1", file1)->required();
  c_union->add_option("ata2", file2)->required();
  add_out(c_union);

  auto* c_inter = app.add_subcommand(
      "intersect", "intersection of two alternating automata");
  c_inter->add_option("ata1", file1)->required();
  c_inter->add_option("ata2", file2)->required();
  add_out(c_inter);

  auto* c_family = app.add_subcommand(
      "family", "assemble a partition family from claimed separators");
  c_family->add_option("nta", file1)->required();
  c_family->add_option("family", file2)->required();
  add_out(c_family);

  auto* c_build = app.add_subcommand(
      "build-r", "build the alternating automaton R from an nta and a family");
  c_build->add_option("nta", file1)->required();
  c_build->add_option("family", file2)->required();
  c_build->add_flag("--check-band", check_band,
                    "fail unless R fits (lo+1, hi)");
  c_build
      ->add_option("--band", band_vals,
                   "priority band of the input (two numbers)")
      ->expected(2);
  add_out(c_build);

  auto* c_comp = app.add_subcommand("comp-check", "per-component band check");
  c_comp->add_option("ata", file1)->required();
  c_comp->add_option("--band", band_vals, "band (two numbers)")
      ->expected(2)
      ->required();

  auto* c_norm = app.add_subcommand(
      "normalize", "apply per-component even shifts into the band");
  c_norm->add_option("ata", file1)->required();
  c_norm->add_option("--band", band_vals, "band (two numbers)")
      ->expected(2)
      ->required();
  add_out(c_norm);

  auto* c_member = app.add_subcommand("member", "membership of a regular tree");
  c_member->add_option("tree", file1)->required();
  c_member->add_option("automaton", file2, "nta or ata file")->required();
  c_member->add_option("--from", from_state, "start state (nta only)");

  auto* c_count =
      app.add_subcommand("count-runs", "ZERO, ONE or MANY accepting runs");
  c_count->add_option("tree", file1)->required();
  c_count->add_option("nta", file2)->required();

  auto* c_gen =
      app.add_subcommand("gen-corpus", "write seeded random regular trees");
  c_gen->add_option("--size", size, "nodes per tree")->required();
  c_gen->add_option("--count", count, "number of trees")->required();
  c_gen->add_option("--seed", opt.seed, "seed of the first tree")->required();
  c_gen->add_option("--alphabet", alphabet_csv, "comma-separated letters");
  add_out(c_gen);

  auto* c_verify = app.add_subcommand(
      "verify", "family obligations and language agreement on a corpus");
  c_verify->add_option("--nta", file1)->required();
  c_verify->add_option("--ata", file2)->required();
  c_verify->add_option("--family", file3)->required();
  c_verify->add_option("--corpus", file4, "directory of .tree files")
      ->required();

  auto* c_play = app.add_subcommand("play", "step through a membership game");
  c_play->add_option("tree", file1)->required();
  c_play->add_option("ata", file2)->required();
  c_play->add_option("--as", user_side, "side you play: eve or adam")
      ->check(CLI::IsMember({"eve", "adam"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.lines = format == "lines";
  std::optional<std::string> from;
  if (!from_state.empty()) from = from_state;

  try {
    if (*c_solve) return cmd_solve_game(opt, file1);
    if (*c_empty) return cmd_empty(opt, file1);
    if (*c_prod) return cmd_productive(opt, file1);
    if (*c_prune) return cmd_prune(opt, file1);
    if (*c_disj) return cmd_disjoint(opt, file1, file2);
    if (*c_amb) return cmd_ambiguous(opt, file1);
    if (*c_delta) return cmd_delta_rooted(opt, file1, delta);
    if (*c_compl) {
      deliver_ata(opt, complement(load_ata(file1)));
      return 0;
    }
    if (*c_union) {
      deliver_ata(opt, unite(load_ata(file1), load_ata(file2)));
      return 0;
    }
    if (*c_inter) {
      deliver_ata(opt, intersect(load_ata(file1), load_ata(file2)));
      return 0;
    }
    if (*c_family) return cmd_family(opt, file1, file2);
    if (*c_build) {
      std::optional<IndexPair> band;
      if (band_vals.size() == 2) band = IndexPair{band_vals[0], band_vals[1]};
      return cmd_build_r(opt, file1, file2, check_band, band);
    }
    if (*c_comp)
      return cmd_comp_check(opt, file1, {band_vals[0], band_vals[1]});
    if (*c_norm) {
      deliver_ata(opt,
                  normalize_shift(load_ata(file1),
                                  {band_vals[0], band_vals[1]}));
      return 0;
    }
    if (*c_member) return cmd_member(opt, file1, file2, from);
    if (*c_count) return cmd_count_runs(opt, file1, file2);
    if (*c_gen) return cmd_gen_corpus(opt, size, count, alphabet_csv);
    if (*c_verify) return cmd_verify(opt, file1, file2, file3, file4);
    if (*c_play) return cmd_play(file1, file2, user_side);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TreewbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
