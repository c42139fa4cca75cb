// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTHOLOC_IO_HPP_
#define ORTHOLOC_IO_HPP_

#include <string>
#include <vector>

#include "ortholoc/lattice.hpp"
#include "ortholoc/locality.hpp"
#include "ortholoc/ortho.hpp"

namespace ortholoc {

// Poset/lattice files: {"n": <int>, "labels": [..]?, "covers": [[l,u], ..]}.
// The reader closes the cover relation reflexively and transitively and
// validates; the writer emits covers sorted lexicographically.
Poset poset_from_json(const std::string& text);
std::string poset_to_json(const Poset& p);

// Relation files: {"n": <int>, "pairs": [[i,j], ..]}. The reader symmetrizes
// and validates indices; the writer emits pairs with i <= j, sorted.
LocalityRelation relation_from_json(const std::string& text, LatticePtr host);
std::string relation_to_json(const LocalityRelation& r);

// Orthocomplementation files: {"n": <int>, "psi": [..]}.
Orthocomplementation ortho_from_json(const std::string& text, LatticePtr host);
std::string ortho_to_json(const Orthocomplementation& o);

/// Graphviz digraph of the cover relation, one edge per cover, elements
/// grouped into ranks by height above the minimal elements.
std::string poset_to_dot(const Poset& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Poset read_poset_file(const std::string& path);
LatticePtr read_lattice_file(const std::string& path);
LocalityRelation read_relation_file(const std::string& path, LatticePtr host);

std::string to_hex(const std::vector<std::uint8_t>& bytes);

/// Canonical-form hex for small posets; for carriers past the enumeration
/// cap, the hex of the order matrix in the given labeling (flagged by the
/// second member).
struct PosetDigest {
  std::string hex;
  bool canonical = false;
};
PosetDigest poset_digest(const Poset& p);

}  // namespace ortholoc

#endif  // ORTHOLOC_IO_HPP_
