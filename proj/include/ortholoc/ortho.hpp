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

#ifndef ORTHOLOC_ORTHO_HPP_
#define ORTHOLOC_ORTHO_HPP_

#include <vector>

#include "ortholoc/lattice.hpp"
#include "ortholoc/locality.hpp"

namespace ortholoc {

/// Antitone involutive self-map with the separating property: nothing but the
/// bottom sits below both a and psi(a). Validated eagerly; the top must be
/// the image of the bottom.
class Orthocomplementation {
 public:
  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  int size() const { return host_->size(); }
  int psi(int a) const { return psi_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& map() const { return psi_; }

  friend bool operator==(const Orthocomplementation& a,
                         const Orthocomplementation& b) {
    return a.host_->poset.leq == b.host_->poset.leq && a.psi_ == b.psi_;
  }

 private:
  friend Orthocomplementation validate_orthocomplementation(
      LatticePtr host, std::vector<int> map);
  Orthocomplementation(LatticePtr host, std::vector<int> map)
      : host_(std::move(host)), psi_(std::move(map)) {}

  LatticePtr host_;
  std::vector<int> psi_;
};

/// Checks the antitone, involutive and separating axioms, in that order, and
/// certifies psi(bottom) == top. Failures carry witnesses.
Orthocomplementation validate_orthocomplementation(LatticePtr host,
                                                   std::vector<int> map);

/// Both De Morgan identities over all pairs. True for every valid
/// orthocomplementation; a false return means a library bug.
bool check_de_morgan(const Orthocomplementation& o);

/// a ^ psi(a) = 0 and a v psi(a) = 1 for every a.
bool check_strong_separation(const Orthocomplementation& o);

/// a -> greatest(polar(a)); requires a strongly separating relation.
Orthocomplementation ortho_from_locality(const LocalityRelation& r);

/// a T b iff b <= psi(a); the result is strongly separating (verified).
LocalityRelation locality_from_ortho(const Orthocomplementation& o);

/// Enumerates both sides on the host and verifies the two assignments above
/// are mutually inverse bijections.
struct RoundtripReport {
  int n = 0;
  int num_strongly_separating = 0;
  int num_orthocomplementations = 0;
  bool locality_roundtrip = false;  // locality -> ortho -> locality fixed
  bool ortho_roundtrip = false;     // ortho -> locality -> ortho fixed
  bool counts_match = false;
  bool ok = false;
};
RoundtripReport roundtrip_check(LatticePtr host);

/// All orthocomplementations, via degree-dual antitone involution candidates
/// plus full validation, sorted by map bytes.
std::vector<Orthocomplementation> enumerate_orthocomplementations(
    LatticePtr host);

/// Antitone self-map with x <= map(map(x)); the weak half of an
/// orthocomplementation.
class AntitoneMap {
 public:
  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  int size() const { return host_->size(); }
  int image(int a) const { return map_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& map() const { return map_; }

  friend bool operator==(const AntitoneMap& a, const AntitoneMap& b) {
    return a.host_->poset.leq == b.host_->poset.leq && a.map_ == b.map_;
  }

 private:
  friend AntitoneMap validate_antitone_map(LatticePtr host,
                                           std::vector<int> map);
  AntitoneMap(LatticePtr host, std::vector<int> map)
      : host_(std::move(host)), map_(std::move(map)) {}

  LatticePtr host_;
  std::vector<int> map_;
};

AntitoneMap validate_antitone_map(LatticePtr host, std::vector<int> map);

/// For a poset locality that relates the bottom to everything and whose
/// polar sets all have greatest elements: x -> greatest(polar(x)).
AntitoneMap antitone_from_poset_locality(const LocalityRelation& r);

/// x T y iff y <= map(x); round-trips with antitone_from_poset_locality
/// (verified both ways).
LocalityRelation poset_locality_from_antitone(const AntitoneMap& m);

/// Symmetric relation on the atoms of an atomistic complete lattice where
/// every atom's polar is exactly the atom set of some (unique) element.
class AtomRelation {
 public:
  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  const std::vector<int>& atom_list() const { return atoms_; }
  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  bool related(int i, int j) const {
    return rel_[static_cast<std::size_t>(i) * atoms_.size() + j] != 0;
  }
  const std::vector<std::uint8_t>& matrix() const { return rel_; }
  /// The element whose atom set realizes atom i's polar.
  int bounding_element(int i) const {
    return bound_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const AtomRelation& a, const AtomRelation& b) {
    return a.host_->poset.leq == b.host_->poset.leq && a.atoms_ == b.atoms_ &&
           a.rel_ == b.rel_;
  }

 private:
  friend AtomRelation validate_atom_relation(LatticePtr host,
                                             std::vector<std::uint8_t> rel);
  AtomRelation(LatticePtr host, std::vector<int> atoms,
               std::vector<std::uint8_t> rel, std::vector<int> bound)
      : host_(std::move(host)),
        atoms_(std::move(atoms)),
        rel_(std::move(rel)),
        bound_(std::move(bound)) {}

  LatticePtr host_;
  std::vector<int> atoms_;            // ascending element indices
  std::vector<std::uint8_t> rel_;     // k*k over atom positions
  std::vector<int> bound_;            // per atom: the realizing element
};

/// Validates symmetry and the polar-realizability condition on an atomistic
/// complete host. `rel` is k*k over atom positions (atoms in ascending
/// element order).
AtomRelation validate_atom_relation(LatticePtr host,
                                    std::vector<std::uint8_t> rel);

/// Restriction of a qualifying lattice locality to the atoms.
AtomRelation atom_relation_from_lattice_locality(const LocalityRelation& r);

/// Extension: a T b iff one side is the bottom or every atom pair below them
/// is related. Round-trips with the restriction (verified).
LocalityRelation lattice_locality_from_atom_relation(const AtomRelation& ar);

/// Exercises both weak correspondences on one host. Qualifying relations
/// (poset localities relating the bottom to everything, all polars with
/// greatest elements) are collected exhaustively for hosts of at most
/// `max_exhaustive` elements and from structured plus sampled candidates
/// otherwise; each must round-trip through its antitone map, satisfy
/// sup-to-inf duality over every subset, and (on atomistic hosts)
/// round-trip through its atom relation. Valid atom relations are also
/// enumerated directly and extended back.
struct AppendixReport {
  int n = 0;
  int num_qualifying = 0;
  int num_atom_relations = 0;
  bool antitone_roundtrip = true;
  bool sup_inf_duality = true;
  bool atomistic_host = false;
  bool atom_roundtrip = true;  // vacuous on non-atomistic hosts
  bool ok = false;
};
AppendixReport check_appendix_correspondences(LatticePtr host,
                                              int max_exhaustive = 4,
                                              int samples = 2000,
                                              unsigned seed = 7u);

}  // namespace ortholoc

#endif  // ORTHOLOC_ORTHO_HPP_
