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

#ifndef ORTHOLOC_TESTS_COMMON_HPP_
#define ORTHOLOC_TESTS_COMMON_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ortholoc/lattice.hpp"
#include "ortholoc/locality.hpp"
#include "ortholoc/order.hpp"

namespace ortholoc::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ORTHOLOC_FIXTURE_DIR) + "/" + name;
}

// Diamond: 0, a, b, c pairwise incomparable, 1.
inline LatticePtr make_m3() {
  return build_lattice(poset_from_covers(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
      {"0", "a", "b", "c", "1"}));
}

// Pentagon: 0 < b1 < b2 < 1 and 0 < c < 1.
inline LatticePtr make_n5() {
  return build_lattice(poset_from_covers(
      5, {{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}},
      {"0", "b1", "b2", "c", "1"}));
}

// Four-element Boolean lattice: 0 < a, b < 1.
inline LatticePtr make_b2() {
  return build_lattice(
      poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                        {"0", "a", "b", "1"}));
}

inline LatticePtr make_chain(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return build_lattice(poset_from_covers(k, edges));
}

// Divisors of 4 under divisibility: 1 | 2 | 4.
inline LatticePtr make_div4() {
  return build_lattice(
      poset_from_covers(3, {{0, 1}, {1, 2}}, {"1", "2", "4"}));
}

// Power set of a k-element set, elements indexed by subset masks.
inline LatticePtr make_powerset(int k) {
  int n = 1 << k;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((i & ~j) == 0) leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  return build_lattice(validate_poset(n, std::move(leq)));
}

// The unique strongly separating relation on the Boolean 4-lattice:
// everything with 0, plus the two incomparable elements with each other.
inline LocalityRelation b2_strongly_separating(LatticePtr b2) {
  return LocalityRelation::from_pairs(
      std::move(b2), {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 2}});
}

// Everything with 0 and nothing else: weak closedness holds, closedness
// does not.
inline LocalityRelation b2_weakly_closed_only(LatticePtr b2) {
  return LocalityRelation::from_pairs(std::move(b2),
                                      {{0, 0}, {0, 1}, {0, 2}, {0, 3}});
}

}  // namespace ortholoc::testing

#endif  // ORTHOLOC_TESTS_COMMON_HPP_
