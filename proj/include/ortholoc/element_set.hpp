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

#ifndef ORTHOLOC_ELEMENT_SET_HPP_
#define ORTHOLOC_ELEMENT_SET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

#include "ortholoc/error.hpp"

namespace ortholoc {

/// Subset of a fixed universe 0..n-1, stored as a bitset. Used for element
/// sets of posets and lattices and for vector sets over finite fields.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {
    require(universe >= 0, Errc::index_out_of_range, "negative universe size");
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  int universe_size() const { return n_; }

  bool contains(int i) const {
    check_index(i);
    return (w_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
  }

  void insert(int i) {
    check_index(i);
    w_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(int i) {
    check_index(i);
    w_[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  bool empty() const {
    for (auto w : w_) {
      if (w != 0) return false;
    }
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same_universe(other);
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] & ~other.w_[k]) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= other.w_[k];
    return *this;
  }

  ElementSet& operator|=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= other.w_[k];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    a &= b;
    return a;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    a |= b;
    return a;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  /// Members in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < n_; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  /// Backing words, little-endian bit order; stable for use as a map key.
  const std::vector<std::uint64_t>& words() const { return w_; }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] != 0) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    }
    return -1;
  }

 private:
  void check_index(int i) const {
    require(i >= 0 && i < n_, Errc::index_out_of_range,
            "element index out of range", {i});
  }
  void check_same_universe(const ElementSet& other) const {
    require(n_ == other.n_, Errc::index_out_of_range,
            "element sets over different universes");
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ortholoc

#endif  // ORTHOLOC_ELEMENT_SET_HPP_
