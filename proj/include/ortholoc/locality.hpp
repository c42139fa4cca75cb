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

#ifndef ORTHOLOC_LOCALITY_HPP_
#define ORTHOLOC_LOCALITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortholoc/lattice.hpp"

namespace ortholoc {

/// Symmetric binary relation on the elements of a host lattice. Polar sets of
/// single elements are precomputed; instances are immutable.
class LocalityRelation {
 public:
  LocalityRelation(LatticePtr host, std::vector<std::uint8_t> rel);

  static LocalityRelation from_pairs(
      LatticePtr host, const std::vector<std::pair<int, int>>& pairs);

  /// a T b iff a ^ b = bottom (the disjointedness relation).
  static LocalityRelation disjointedness(LatticePtr host);

  static LocalityRelation all_true(LatticePtr host);

  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  int size() const { return host_->size(); }

  bool related(int a, int b) const {
    return rel_[static_cast<std::size_t>(a) * size() + b] != 0;
  }

  const std::vector<std::uint8_t>& matrix() const { return rel_; }

  /// Polar set of a single element: everything related to it.
  const ElementSet& polar_of(int a) const {
    return polars_[static_cast<std::size_t>(a)];
  }

  /// Polar set of a subset: elements related to every member. The empty set
  /// has the full carrier as its polar.
  ElementSet polar(const ElementSet& s) const;

  /// All a with a T a.
  ElementSet kernel() const;

  friend bool operator==(const LocalityRelation& a, const LocalityRelation& b) {
    return a.size() == b.size() && a.host_->poset.leq == b.host_->poset.leq &&
           a.rel_ == b.rel_;
  }

 private:
  LatticePtr host_;
  std::vector<std::uint8_t> rel_;
  std::vector<ElementSet> polars_;
};

/// Counterexample payload: a short tag plus the elements involved.
struct Witness {
  std::string kind;
  std::vector<int> elements;
};

struct CheckOutcome {
  bool holds = true;
  std::optional<Witness> witness;
};

/// Checkers normally require the previous level of the chain
/// poset locality -> lattice locality -> separating -> strongly separating.
/// Relaxed mode evaluates any single definition on any symmetric relation.
enum class CheckMode { chained, relaxed };

/// Order compatibility, evaluated through all three equivalent conditions
/// (antitone polars; polars are poset ideals; down-sets inside double
/// polars), which must agree.
CheckOutcome is_poset_locality(const LocalityRelation& r);

/// Every polar set is a lattice ideal: nonempty, downward closed and
/// join-closed. The empty set does not count as a lattice ideal, so a
/// lattice locality relates the bottom element to everything.
CheckOutcome is_lattice_locality(const LocalityRelation& r);

/// For a poset locality: the polar of a join is the intersection of the
/// polars, over every finite index set. Pairs plus induction cover the
/// nonempty sets; the empty set demands that the bottom's polar be the full
/// carrier (empty join and empty intersection).
bool check_join_polar(const LocalityRelation& r);

/// Related elements meet at the bottom, and every polar set has a greatest
/// element.
CheckOutcome is_separating(const LocalityRelation& r,
                           CheckMode mode = CheckMode::chained);

/// Greatest element of a's polar set. Fails with two maximal incomparable
/// members when there is none. When the relation is a poset locality, the
/// polar of the greatest element must equal the polar of the whole polar set.
int greatest_of_polar(const LocalityRelation& r, int a);

/// Separating, and the greatest element of the double polar of a is a itself
/// (equivalently the double polar sits inside the down-set of a; both
/// formulations are evaluated and must agree).
CheckOutcome is_strongly_separating(const LocalityRelation& r,
                                    CheckMode mode = CheckMode::chained);

/// Only the bottom is self-related. In chained mode the equivalent pairwise
/// formulation (related implies disjoint) is evaluated too and must agree.
CheckOutcome is_nondegenerate(const LocalityRelation& r,
                              CheckMode mode = CheckMode::chained);

/// The three closedness-style conditions of a separated locality lattice:
/// `extreme`  : a's polar is {0} exactly when a is the top;
/// `closedness`: a and the greatest element of its polar meet at 0 and join
///               to 1;
/// `closednessweak`: a's polar is everything exactly when a is the bottom.
/// extreme and closedness must agree, and closedness implies closednessweak.
struct ClosednessStatus {
  CheckOutcome extreme;
  CheckOutcome closedness;
  CheckOutcome closednessweak;
};
ClosednessStatus closedness_status(const LocalityRelation& r,
                                   CheckMode mode = CheckMode::chained);

/// Pointwise conjunction; hosts must match. Lattice localities are closed
/// under intersection.
LocalityRelation intersect(const LocalityRelation& r1,
                           const LocalityRelation& r2);

/// All antitone involutive self-maps of the host (order anti-automorphisms of
/// order two), fixed points included. Search is pruned by pairing elements
/// with dual (down, up) degree profiles.
std::vector<std::vector<int>> all_antitone_involutions(const Lattice& l);

/// All strongly separating locality relations on the host, generated from
/// antitone involution candidates and verified definitionally, sorted by
/// relation bytes.
std::vector<LocalityRelation> enumerate_strongly_separating(LatticePtr host);

/// Aggregated report over every checker; unset entries were skipped because
/// an earlier level of the chain failed.
struct LocalityClass {
  CheckMode mode = CheckMode::chained;
  std::optional<CheckOutcome> poset_locality;
  std::optional<CheckOutcome> lattice_locality;
  std::optional<bool> join_polar;
  std::optional<CheckOutcome> separating;
  std::optional<CheckOutcome> strongly_separating;
  std::optional<CheckOutcome> nondegenerate;
  std::optional<CheckOutcome> extreme;
  std::optional<CheckOutcome> closedness;
  std::optional<CheckOutcome> closednessweak;
};
LocalityClass classify(const LocalityRelation& r,
                       CheckMode mode = CheckMode::chained);

/// Restricts r to a sublattice given by carrier elements (ascending, must be
/// meet/join closed); returns the relation on the induced lattice.
LocalityRelation restrict_to_sublattice(const LocalityRelation& r,
                                        const std::vector<int>& carrier);

}  // namespace ortholoc

#endif  // ORTHOLOC_LOCALITY_HPP_
