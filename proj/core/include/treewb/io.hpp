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

#include <iosfwd>
#include <string>

#include "treewb/boolean.hpp"
#include "treewb/game.hpp"
#include "treewb/types.hpp"

namespace treewb {

// Line-oriented text formats: one record per line, '#' starts a comment,
// tokens are whitespace-separated. Parsing a printed value returns an equal
// value; printing is canonical because all iteration orders are declaration
// orders.
//
//   nta NAME / alphabet a b / states s:P ... / init s / trans src letter left right
//   ata NAME / alphabet ... / estates s:P ... / astates s:P ... / init s /
//     trans src letter DIR dst          with DIR one of EPS, L, R
//   tree NAME / alphabet ... / nodes n:a ... / root n / edge n L dst, edge n R dst
//   game NAME / pos id OWNER PRIORITY / init id / edge src dst
//   family NAME for NTANAME / sep q a TRANSINDEX ATAFILE
//
// ATA paths inside family files resolve relative to the family file.

Nta parse_nta(std::istream& in, const std::string& filename);
Ata parse_ata(std::istream& in, const std::string& filename);
RegularTree parse_tree(std::istream& in, const std::string& filename);
ParityGame parse_game(std::istream& in, const std::string& filename);

Nta load_nta(const std::string& path);
Ata load_ata(const std::string& path);
RegularTree load_tree(const std::string& path);
ParityGame load_game(const std::string& path);
SeparatorFamily load_family(const std::string& path);

std::string print_nta(const Nta& a);
std::string print_ata(const Ata& a);
std::string print_tree(const RegularTree& t);
std::string print_game(const ParityGame& g);

/// Writes the family file plus one ATA file per member into `dir`. Member
/// files are named NAME_cDELTA.ata. Returns the family file path.
std::string write_family(const SeparatorFamily& family, const std::string& dir,
                         const std::string& filename);

void write_file(const std::string& path, const std::string& content);

/// First keyword of a file ("nta", "ata", "tree", "game", "family").
std::string peek_kind(const std::string& path);

}  // namespace treewb
