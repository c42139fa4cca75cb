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

#ifndef ORTHOLOC_ORDER_HPP_
#define ORTHOLOC_ORDER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortholoc/element_set.hpp"

namespace ortholoc {

/// Finite partial order on elements 0..n-1, stored as the full relation
/// matrix (reflexive and transitively closed). Labels are display-only and
/// never affect semantics.
struct Poset {
  int n = 0;
  std::vector<std::uint8_t> leq;  // n*n row-major; leq[a*n+b] != 0 means a <= b
  std::vector<std::string> labels;

  bool less_equal(int a, int b) const {
    return leq[static_cast<std::size_t>(a) * n + b] != 0;
  }
  bool less(int a, int b) const { return a != b && less_equal(a, b); }
  std::string label(int a) const;
};

/// Checks the three order axioms and wraps the matrix into a Poset. The empty
/// carrier is rejected. Axiom violations carry a witness pair or triple.
Poset validate_poset(int n, std::vector<std::uint8_t> matrix,
                     std::vector<std::string> labels = {});

/// Builds a poset from a cover (or any acyclic edge) list by
/// reflexive-transitive closure, then validates.
Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> labels = {});

/// Principal ideal {b | b <= a}.
ElementSet down_set(const Poset& p, int a);
/// Principal filter {b | a <= b}.
ElementSet up_set(const Poset& p, int a);

/// True iff s is downward closed.
bool is_poset_ideal(const Poset& p, const ElementSet& s);

/// {c | a <= c <= b}; requires a <= b.
ElementSet interval(const Poset& p, int a, int b);

/// Minimal elements among the non-bottom ones; requires a bottom.
ElementSet atoms(const Poset& p);

struct PosetBounds {
  std::optional<int> bottom;
  std::optional<int> top;
};
PosetBounds bounds(const Poset& p);

/// All pairs (x, y) with x < y and nothing strictly between, sorted
/// lexicographically.
std::vector<std::pair<int, int>> covers(const Poset& p);

/// Isomorphism-invariant encoding: the minimum relation-matrix encoding over
/// all element permutations compatible with the per-element (down-set size,
/// up-set size) classes. Equal encodings iff isomorphic posets.
std::vector<std::uint8_t> canonical_form(const Poset& p);

}  // namespace ortholoc

#endif  // ORTHOLOC_ORDER_HPP_
