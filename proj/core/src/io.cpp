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

#include "treewb/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace treewb {

namespace {

struct Lines {
  std::string file;
  int number = 0;  // current line, 1-based
  std::istream& in;

  explicit Lines(std::istream& s, std::string name)
      : file(std::move(name)), in(s) {}

  // Next non-empty line as tokens, comments stripped. False at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      number++;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(file, number, what);
  }
};

// "name:42" -> (name, 42)
std::pair<std::string, int> split_priority(Lines& src, const std::string& tok) {
  auto colon = tok.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
    src.fail("expected name:number, got '" + tok + "'");
  try {
    return {tok.substr(0, colon), std::stoi(tok.substr(colon + 1))};
  } catch (const std::exception&) {
    src.fail("bad number in '" + tok + "'");
  }
}

int parse_int(Lines& src, const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    src.fail("expected a number, got '" + tok + "'");
  }
}

void expect_header(Lines& src, std::vector<std::string>& tokens,
                   const std::string& kind) {
  if (!src.next(tokens) || tokens[0] != kind || tokens.size() < 2)
    src.fail("expected '" + kind + " NAME' header");
}

int lookup(Lines& src, const std::vector<std::string>& names,
           const std::string& tok, const char* what) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == tok) return static_cast<int>(i);
  src.fail(std::string("unknown ") + what + ": '" + tok + "'");
}

template <typename T>
void finish(Lines& src, const T& value) {
  try {
    validate(value);
  } catch (const TreewbError& e) {
    src.fail(e.what());
  }
}

}  // namespace

Nta parse_nta(std::istream& in, const std::string& filename) {
  Lines src(in, filename);
  std::vector<std::string> tok;
  expect_header(src, tok, "nta");
  Nta a;
  a.name = tok[1];
  std::string init_name;
  while (src.next(tok)) {
    if (tok[0] == "alphabet") {
      a.alphabet.symbols.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "states") {
      for (size_t i = 1; i < tok.size(); ++i) {
        auto [name, prio] = split_priority(src, tok[i]);
        a.states.push_back(name);
        a.priority.push_back(prio);
      }
    } else if (tok[0] == "init") {
      if (tok.size() != 2) src.fail("init takes one state");
      init_name = tok[1];
    } else if (tok[0] == "trans") {
      if (tok.size() != 5) src.fail("trans takes: src letter left right");
      a.transitions.push_back({lookup(src, a.states, tok[1], "state"),
                               lookup(src, a.states, tok[3], "state"),
                               lookup(src, a.alphabet.symbols, tok[2], "letter"),
                               lookup(src, a.states, tok[4], "state")});
    } else {
      src.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (init_name.empty()) src.fail("missing init record");
  a.initial = lookup(src, a.states, init_name, "state");
  finish(src, a);
  return a;
}

Ata parse_ata(std::istream& in, const std::string& filename) {
  Lines src(in, filename);
  std::vector<std::string> tok;
  expect_header(src, tok, "ata");
  Ata a;
  a.name = tok[1];
  std::string init_name;
  while (src.next(tok)) {
    if (tok[0] == "alphabet") {
      a.alphabet.symbols.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "estates" || tok[0] == "astates") {
      bool eve = tok[0] == "estates";
      for (size_t i = 1; i < tok.size(); ++i) {
        auto [name, prio] = split_priority(src, tok[i]);
        a.states.push_back(name);
        a.eve.push_back(eve);
        a.priority.push_back(prio);
      }
    } else if (tok[0] == "init") {
      if (tok.size() != 2) src.fail("init takes one state");
      init_name = tok[1];
    } else if (tok[0] == "trans") {
      if (tok.size() != 5) src.fail("trans takes: src letter DIR dst");
      Dir d;
      if (tok[3] == "EPS")
        d = Dir::Eps;
      else if (tok[3] == "L")
        d = Dir::L;
      else if (tok[3] == "R")
        d = Dir::R;
      else
        src.fail("bad direction '" + tok[3] + "'");
      a.transitions.push_back({lookup(src, a.states, tok[1], "state"),
                               lookup(src, a.alphabet.symbols, tok[2], "letter"),
                               d, lookup(src, a.states, tok[4], "state")});
    } else {
      src.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (init_name.empty()) src.fail("missing init record");
  a.initial = lookup(src, a.states, init_name, "state");
  finish(src, a);
  return a;
}

RegularTree parse_tree(std::istream& in, const std::string& filename) {
  Lines src(in, filename);
  std::vector<std::string> tok;
  expect_header(src, tok, "tree");
  RegularTree t;
  t.name = tok[1];
  std::string root_name;
  std::vector<std::array<char, 2>> seen;
  while (src.next(tok)) {
    if (tok[0] == "alphabet") {
      t.alphabet.symbols.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "nodes") {
      for (size_t i = 1; i < tok.size(); ++i) {
        auto colon = tok[i].rfind(':');
        if (colon == std::string::npos)
          src.fail("expected node:label, got '" + tok[i] + "'");
        t.nodes.push_back(tok[i].substr(0, colon));
        t.label.push_back(
            lookup(src, t.alphabet.symbols, tok[i].substr(colon + 1), "letter"));
        t.succ.push_back({-1, -1});
        seen.push_back({0, 0});
      }
    } else if (tok[0] == "root") {
      if (tok.size() != 2) src.fail("root takes one node");
      root_name = tok[1];
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) src.fail("edge takes: node DIR dst");
      int n = lookup(src, t.nodes, tok[1], "node");
      int d = tok[2] == "L" ? 0 : tok[2] == "R" ? 1 : -1;
      if (d < 0) src.fail("bad direction '" + tok[2] + "'");
      if (seen[n][d]) src.fail("duplicate edge from '" + tok[1] + "'");
      seen[n][d] = 1;
      t.succ[n][d] = lookup(src, t.nodes, tok[3], "node");
    } else {
      src.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (root_name.empty()) src.fail("missing root record");
  t.root = lookup(src, t.nodes, root_name, "node");
  for (int n = 0; n < t.node_count(); ++n)
    if (t.succ[n][0] < 0 || t.succ[n][1] < 0)
      src.fail("node '" + t.nodes[n] + "' is missing a successor");
  finish(src, t);
  return t;
}

ParityGame parse_game(std::istream& in, const std::string& filename) {
  Lines src(in, filename);
  std::vector<std::string> tok;
  expect_header(src, tok, "game");
  ParityGame g;
  g.name = tok[1];
  std::string init_name;
  while (src.next(tok)) {
    if (tok[0] == "pos") {
      if (tok.size() != 4) src.fail("pos takes: id OWNER PRIORITY");
      g.position_names.push_back(tok[1]);
      if (tok[2] == "EVE")
        g.owner.push_back(Player::Eve);
      else if (tok[2] == "ADAM")
        g.owner.push_back(Player::Adam);
      else
        src.fail("bad owner '" + tok[2] + "'");
      g.priority.push_back(parse_int(src, tok[3]));
    } else if (tok[0] == "init") {
      if (tok.size() != 2) src.fail("init takes one position");
      init_name = tok[1];
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) src.fail("edge takes: src dst");
      g.edges.emplace_back(lookup(src, g.position_names, tok[1], "position"),
                           lookup(src, g.position_names, tok[2], "position"));
    } else {
      src.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (init_name.empty()) src.fail("missing init record");
  g.initial = lookup(src, g.position_names, init_name, "position");
  try {
    validate(g);
  } catch (const TreewbError& e) {
    src.fail(e.what());
  }
  return g;
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

Nta load_nta(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_nta(in, path);
}

Ata load_ata(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_ata(in, path);
}

RegularTree load_tree(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_tree(in, path);
}

ParityGame load_game(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_game(in, path);
}

SeparatorFamily load_family(const std::string& path) {
  auto in = open_or_fail(path);
  Lines src(in, path);
  std::vector<std::string> tok;
  if (!src.next(tok) || tok[0] != "family" || tok.size() != 4 ||
      tok[2] != "for")
    src.fail("expected 'family NAME for NTANAME' header");
  SeparatorFamily f;
  f.name = tok[1];
  f.owner = tok[3];
  auto base = std::filesystem::path(path).parent_path();
  while (src.next(tok)) {
    if (tok[0] != "sep" || tok.size() != 5)
      src.fail("expected 'sep q a TRANSINDEX ATAFILE'");
    const std::string& state = tok[1];
    const std::string& letter = tok[2];
    int delta = parse_int(src, tok[3]);
    SeparatorEntry* entry = nullptr;
    for (auto& e : f.entries)
      if (e.state == state && e.letter == letter) entry = &e;
    if (!entry) {
      f.entries.push_back({state, letter, {}, {}});
      entry = &f.entries.back();
    }
    entry->deltas.push_back(delta);
    entry->separators.push_back(
        load_ata((base / tok[4]).string()));
  }
  return f;
}

namespace {

std::string priostr(const std::string& name, int prio) {
  return name + ":" + std::to_string(prio);
}

}  // namespace

std::string print_nta(const Nta& a) {
  std::ostringstream out;
  out << "nta " << a.name << "\n";
  out << "alphabet";
  for (const auto& s : a.alphabet.symbols) out << " " << s;
  out << "\nstates";
  for (int q = 0; q < a.state_count(); ++q)
    out << " " << priostr(a.states[q], a.priority[q]);
  out << "\ninit " << a.states[a.initial] << "\n";
  for (const auto& t : a.transitions)
    out << "trans " << a.states[t.src] << " " << a.alphabet.symbols[t.letter]
        << " " << a.states[t.left] << " " << a.states[t.right] << "\n";
  return out.str();
}

std::string print_ata(const Ata& a) {
  std::ostringstream out;
  out << "ata " << a.name << "\n";
  out << "alphabet";
  for (const auto& s : a.alphabet.symbols) out << " " << s;
  out << "\n";
  // Runs of equal ownership, so the declaration order survives a round-trip.
  for (int q = 0; q < a.state_count();) {
    bool eve = a.eve[q];
    out << (eve ? "estates" : "astates");
    for (; q < a.state_count() && a.eve[q] == eve; ++q)
      out << " " << priostr(a.states[q], a.priority[q]);
    out << "\n";
  }
  out << "init " << a.states[a.initial] << "\n";
  for (const auto& t : a.transitions)
    out << "trans " << a.states[t.src] << " " << a.alphabet.symbols[t.letter]
        << " " << to_string(t.dir) << " " << a.states[t.dst] << "\n";
  return out.str();
}

std::string print_tree(const RegularTree& t) {
  std::ostringstream out;
  out << "tree " << t.name << "\n";
  out << "alphabet";
  for (const auto& s : t.alphabet.symbols) out << " " << s;
  out << "\nnodes";
  for (int n = 0; n < t.node_count(); ++n)
    out << " " << t.nodes[n] << ":" << t.alphabet.symbols[t.label[n]];
  out << "\nroot " << t.nodes[t.root] << "\n";
  for (int n = 0; n < t.node_count(); ++n) {
    out << "edge " << t.nodes[n] << " L " << t.nodes[t.succ[n][0]] << "\n";
    out << "edge " << t.nodes[n] << " R " << t.nodes[t.succ[n][1]] << "\n";
  }
  return out.str();
}

std::string print_game(const ParityGame& g) {
  std::ostringstream out;
  out << "game " << g.name << "\n";
  for (int p = 0; p < g.position_count(); ++p)
    out << "pos " << g.position_names[p] << " " << to_string(g.owner[p]) << " "
        << g.priority[p] << "\n";
  out << "init " << g.position_names[g.initial] << "\n";
  for (auto [s, d] : g.edges)
    out << "edge " << g.position_names[s] << " " << g.position_names[d] << "\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw TreewbError("cannot write " + path);
  out << content;
}

std::string write_family(const SeparatorFamily& family, const std::string& dir,
                         const std::string& filename) {
  std::filesystem::create_directories(dir);
  std::ostringstream out;
  out << "family " << family.name << " for " << family.owner << "\n";
  for (const auto& e : family.entries)
    for (size_t i = 0; i < e.deltas.size(); ++i) {
      std::string ata_file =
          family.name + "_c" + std::to_string(e.deltas[i]) + ".ata";
      write_file((std::filesystem::path(dir) / ata_file).string(),
                 print_ata(e.separators[i]));
      out << "sep " << e.state << " " << e.letter << " " << e.deltas[i] << " "
          << ata_file << "\n";
    }
  std::string path = (std::filesystem::path(dir) / filename).string();
  write_file(path, out.str());
  return path;
}

std::string peek_kind(const std::string& path) {
  auto in = open_or_fail(path);
  Lines src(in, path);
  std::vector<std::string> tok;
  if (!src.next(tok)) src.fail("empty file");
  return tok[0];
}

}  // namespace treewb
