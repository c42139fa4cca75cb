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

#include "ortholoc/order.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ortholoc/caps.hpp"
#include "ortholoc/error.hpp"

namespace ortholoc {

std::string Poset::label(int a) const {
  if (!labels.empty()) return labels[static_cast<std::size_t>(a)];
  return std::to_string(a);
}

Poset validate_poset(int n, std::vector<std::uint8_t> matrix,
                     std::vector<std::string> labels) {
  require(n >= 1, Errc::parse_error, "poset needs a nonempty carrier");
  require(matrix.size() == static_cast<std::size_t>(n) * n, Errc::parse_error,
          "order matrix is not n*n");
  require(labels.empty() || labels.size() == static_cast<std::size_t>(n),
          Errc::parse_error, "label list does not match carrier size");

  auto at = [&](int a, int b) -> std::uint8_t& {
    return matrix[static_cast<std::size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i) {
    require(at(i, i) != 0, Errc::reflexivity_violation,
            "reflexivity fails at element " + std::to_string(i), {i});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i)) {
        fail(Errc::antisymmetry_violation,
             "antisymmetry fails on pair (" + std::to_string(i) + ", " +
                 std::to_string(j) + ")",
             {i, j});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (at(j, k) && !at(i, k)) {
          fail(Errc::transitivity_violation,
               "transitivity fails on triple (" + std::to_string(i) + ", " +
                   std::to_string(j) + ", " + std::to_string(k) + ")",
               {i, j, k});
        }
      }
    }
  }
  Poset p;
  p.n = n;
  p.leq = std::move(matrix);
  p.labels = std::move(labels);
  return p;
}

Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> labels) {
  require(n >= 1, Errc::parse_error, "poset needs a nonempty carrier");
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    require(lo >= 0 && lo < n && hi >= 0 && hi < n, Errc::parse_error,
            "cover pair out of range", {lo, hi});
    m[static_cast<std::size_t>(lo) * n + hi] = 1;
  }
  // Warshall closure; antisymmetry violations surface in validate_poset.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!m[static_cast<std::size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (m[static_cast<std::size_t>(k) * n + j]) {
          m[static_cast<std::size_t>(i) * n + j] = 1;
        }
      }
    }
  }
  return validate_poset(n, std::move(m), std::move(labels));
}

ElementSet down_set(const Poset& p, int a) {
  require(a >= 0 && a < p.n, Errc::index_out_of_range,
          "element index out of range", {a});
  ElementSet s(p.n);
  for (int b = 0; b < p.n; ++b) {
    if (p.less_equal(b, a)) s.insert(b);
  }
  return s;
}

ElementSet up_set(const Poset& p, int a) {
  require(a >= 0 && a < p.n, Errc::index_out_of_range,
          "element index out of range", {a});
  ElementSet s(p.n);
  for (int b = 0; b < p.n; ++b) {
    if (p.less_equal(a, b)) s.insert(b);
  }
  return s;
}

bool is_poset_ideal(const Poset& p, const ElementSet& s) {
  for (int a = 0; a < p.n; ++a) {
    if (!s.contains(a)) continue;
    for (int b = 0; b < p.n; ++b) {
      if (p.less_equal(b, a) && !s.contains(b)) return false;
    }
  }
  return true;
}

ElementSet interval(const Poset& p, int a, int b) {
  require(a >= 0 && a < p.n && b >= 0 && b < p.n, Errc::index_out_of_range,
          "element index out of range", {a, b});
  require(p.less_equal(a, b), Errc::not_comparable,
          "interval endpoints are not ordered", {a, b});
  ElementSet s(p.n);
  for (int c = 0; c < p.n; ++c) {
    if (p.less_equal(a, c) && p.less_equal(c, b)) s.insert(c);
  }
  return s;
}

ElementSet atoms(const Poset& p) {
  PosetBounds b = bounds(p);
  require(b.bottom.has_value(), Errc::no_bottom, "poset has no bottom");
  int bottom = *b.bottom;
  ElementSet s(p.n);
  for (int a = 0; a < p.n; ++a) {
    if (a == bottom) continue;
    bool minimal = true;
    for (int x = 0; x < p.n; ++x) {
      if (x != bottom && p.less(x, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) s.insert(a);
  }
  return s;
}

PosetBounds bounds(const Poset& p) {
  PosetBounds b;
  for (int a = 0; a < p.n; ++a) {
    bool is_bottom = true;
    bool is_top = true;
    for (int x = 0; x < p.n; ++x) {
      if (!p.less_equal(a, x)) is_bottom = false;
      if (!p.less_equal(x, a)) is_top = false;
    }
    if (is_bottom && !b.bottom) b.bottom = a;
    if (is_top && !b.top) b.top = a;
  }
  return b;
}

std::vector<std::pair<int, int>> covers(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) {
      if (!p.less(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < p.n; ++z) {
        if (p.less(x, z) && p.less(z, y)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::uint8_t> encode_permuted(const Poset& p,
                                          const std::vector<int>& old_of_new) {
  // Header byte is n, then the permuted matrix packed row-major, MSB first.
  int n = p.n;
  std::vector<std::uint8_t> bytes(1 + static_cast<std::size_t>(n * n + 7) / 8,
                                  0);
  bytes[0] = static_cast<std::uint8_t>(n);
  int bit = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (p.less_equal(old_of_new[r], old_of_new[c])) {
        bytes[1 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      }
      ++bit;
    }
  }
  return bytes;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const Poset& p) {
  require(p.n <= enumeration_cap(), Errc::size_cap_exceeded,
          "canonical form capped at n <= " + std::to_string(enumeration_cap()));

  // Partition elements by the isomorphism-invariant (|down|, |up|) pair and
  // lay classes out in ascending key order; only permutations within class
  // blocks can realize an isomorphism.
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int a = 0; a < p.n; ++a) {
    classes[{down_set(p, a).count(), up_set(p, a).count()}].push_back(a);
  }

  std::vector<std::vector<int>> blocks;
  blocks.reserve(classes.size());
  for (auto& [key, members] : classes) blocks.push_back(members);

  std::vector<int> old_of_new(static_cast<std::size_t>(p.n));
  std::vector<std::uint8_t> best;
  // Odometer over per-block permutations.
  std::vector<std::vector<int>> perm = blocks;
  while (true) {
    int pos = 0;
    for (const auto& block : perm) {
      for (int e : block) old_of_new[static_cast<std::size_t>(pos++)] = e;
    }
    std::vector<std::uint8_t> enc = encode_permuted(p, old_of_new);
    if (best.empty() || enc < best) best = std::move(enc);

    std::size_t k = 0;
    while (k < perm.size() && !std::next_permutation(perm[k].begin(), perm[k].end())) {
      perm[k] = blocks[k];
      ++k;
    }
    if (k == perm.size()) break;
  }
  return best;
}

}  // namespace ortholoc
