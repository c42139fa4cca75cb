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

#ifndef ORTHOLOC_LATTICE_HPP_
#define ORTHOLOC_LATTICE_HPP_

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "ortholoc/order.hpp"

namespace ortholoc {

/// Finite lattice: a poset together with total meet/join tables and its
/// bounds. Immutable after construction; share via LatticePtr.
struct Lattice {
  Poset poset;
  std::vector<int> meet_table;  // n*n row-major
  std::vector<int> join_table;
  int bottom = 0;
  int top = 0;

  int size() const { return poset.n; }
  int meet(int a, int b) const {
    return meet_table[static_cast<std::size_t>(a) * poset.n + b];
  }
  int join(int a, int b) const {
    return join_table[static_cast<std::size_t>(a) * poset.n + b];
  }
  bool leq(int a, int b) const { return poset.less_equal(a, b); }
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Fills the meet/join tables, failing with the first pair that lacks a
/// greatest lower or least upper bound.
LatticePtr build_lattice(Poset p);

/// True when two hosts are interchangeable: same object or identical order
/// matrix.
bool same_host(const Lattice& a, const Lattice& b);

struct TripleWitness {
  int a = 0, b = 0, c = 0;
};

struct PropertyCheck {
  bool holds = true;
  std::optional<TripleWitness> witness;  // first failing triple, lex order
};

/// Meet-over-join distributivity for all triples. The dual identity is
/// evaluated as well and must agree.
PropertyCheck is_distributive(const Lattice& l);

/// a >= c implies (a^b)vc = a^(bvc), for all triples.
PropertyCheck is_modular(const Lattice& l);

struct CancellationResult {
  bool cancellation = true;          // equal meets and joins force equality
  bool modular_cancellation = true;  // same, restricted to a <= b
  std::optional<TripleWitness> cancellation_witness;
  std::optional<TripleWitness> modular_cancellation_witness;
};
CancellationResult cancellation_laws(const Lattice& l);

enum class SublatticeKind { pentagon, diamond };

/// Five elements whose induced meets and joins realize the pentagon or the
/// diamond. Pentagon roles: {zero, lower, upper, side, one} with
/// lower < upper, side incomparable to both. Diamond roles:
/// {zero, x, y, z, one} with x, y, z pairwise incomparable.
struct SublatticeWitness {
  SublatticeKind kind = SublatticeKind::pentagon;
  std::array<int, 5> elements{};
};

/// First (lexicographic role scan) forbidden sublattice of the given kind, if
/// any. Meets and joins are the ambient ones.
std::optional<SublatticeWitness> find_forbidden_sublattice(const Lattice& l,
                                                           SublatticeKind kind);

/// All a' with a ^ a' = 0 and a v a' = 1.
ElementSet complements_of(const Lattice& l, int a);

struct Complementedness {
  bool complemented = false;
  bool sectionally = false;
  bool relatively = false;
};
Complementedness complementedness(const Lattice& l);

struct Atomicity {
  bool atomic = false;
  bool atomistic = false;
  bool complete = false;
};
Atomicity atomicity(const Lattice& l);

/// One representative per isomorphism class of n-element lattices, sorted by
/// canonical form bytes. Capped by enumeration_cap().
std::vector<LatticePtr> enumerate_lattices(int n);

}  // namespace ortholoc

#endif  // ORTHOLOC_LATTICE_HPP_
