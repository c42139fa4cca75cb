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

#ifndef ORTHOLOC_GF_HPP_
#define ORTHOLOC_GF_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ortholoc/lattice.hpp"
#include "ortholoc/locality.hpp"
#include "ortholoc/ortho.hpp"

namespace ortholoc {

/// Arithmetic modulo a prime. Primality is checked at construction.
struct PrimeField {
  int q;
  explicit PrimeField(int modulus);
  int add(int a, int b) const { return (a + b) % q; }
  int sub(int a, int b) const { return (a - b % q + q) % q; }
  int mul(int a, int b) const { return (a * b) % q; }
  int neg(int a) const { return (q - a % q) % q; }
  int inv(int a) const;
};

using FpVector = std::vector<int>;  // entries reduced mod q

/// Little-endian base-q digit encoding: coordinate i contributes q^i.
int encode_vector(int q, const FpVector& v);
FpVector decode_vector(int q, int n, int index);

/// Reduced row echelon form with zero rows dropped; the canonical
/// representative of a row space.
std::vector<FpVector> rref(int q, std::vector<FpVector> rows);

/// Linear subspace of F_q^n held by its canonical RREF basis. Equal
/// subspaces have identical encodings.
class Subspace {
 public:
  static Subspace span(int q, int n, const std::vector<FpVector>& generators);
  static Subspace zero(int q, int n);

  int q() const { return q_; }
  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<FpVector>& basis() const { return basis_; }
  bool contains(const FpVector& v) const;
  std::vector<int> pivot_columns() const;

  /// Byte encoding of (dim, basis entries); identical iff equal subspaces.
  std::string encoding() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(int q, int n, std::vector<FpVector> basis)
      : q_(q), n_(n), basis_(std::move(basis)) {}
  int q_ = 0, n_ = 0;
  std::vector<FpVector> basis_;
};

/// Every subspace of F_q^n with the inclusion lattice (meet intersection,
/// join sum). Subspaces are sorted by (dim, pivot columns, basis entries),
/// so index 0 is the zero space and the last index is the full space.
struct SubspaceLatticeModel {
  int q = 0;
  int n = 0;
  int num_vectors = 0;  // q^n
  std::vector<Subspace> subspaces;
  std::vector<ElementSet> members;  // per subspace, the vector-index set
  LatticePtr lattice;
  std::unordered_map<std::string, int> index_by_encoding;
  std::vector<int> line_of_vector;  // per nonzero vector, the spanned line

  int index_of(const Subspace& s) const;
  /// Subspace index whose member set equals `mask`, or -1.
  int index_of_members(const ElementSet& mask) const;
};

SubspaceLatticeModel enumerate_subspaces(int q, int n);

/// n x n matrix over F_q; symmetry is not required.
struct BilinearForm {
  int q = 0;
  int n = 0;
  std::vector<int> entries;  // row-major
  static BilinearForm identity(int q, int n);
  static BilinearForm from_rows(int q, const std::vector<FpVector>& rows);
  int eval(const FpVector& x, const FpVector& y) const;
};

/// Symmetric relation on all q^n vectors whose single-vector polar sets are
/// subspaces (hence every polar set is). Immutable; validated eagerly.
class VectorLocality {
 public:
  VectorLocality(int q, int n, std::vector<ElementSet> polars);

  int q() const { return q_; }
  int dim() const { return n_; }
  int num_vectors() const { return num_vectors_; }
  bool related(int v, int w) const { return polars_[static_cast<std::size_t>(v)].contains(w); }
  const ElementSet& polar_of(int v) const {
    return polars_[static_cast<std::size_t>(v)];
  }
  ElementSet polar(const ElementSet& vectors) const;

  friend bool operator==(const VectorLocality& a, const VectorLocality& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.polars_ == b.polars_;
  }

 private:
  int q_ = 0, n_ = 0, num_vectors_ = 0;
  std::vector<ElementSet> polars_;
};

/// v T w iff the form vanishes both ways on (v, w).
VectorLocality form_locality(const BilinearForm& f);

/// The bundled F_2^3 example: the e2 axis paired with the e1-e3 plane
/// (plus everything with the zero vector).
VectorLocality f2_cubed_fixture();

/// U T W iff every member pair is related; the result relates the zero
/// subspace to everything and is a lattice locality (verified).
LocalityRelation vs_to_lattice_locality(const VectorLocality& v,
                                        const SubspaceLatticeModel& m);

/// v1 T v2 iff their spanned lines are related; requires a lattice locality
/// whose zero-subspace polar is everything.
VectorLocality lattice_to_vs_locality(const LocalityRelation& r,
                                      const SubspaceLatticeModel& m);

/// Round-trips both conversions over a battery of vector localities (every
/// bilinear form on the space, plus the bundled fixture when it applies) and
/// checks the two polar-transport identities pointwise.
struct VsRoundtripReport {
  int q = 0, n = 0;
  int num_relations = 0;
  bool vector_roundtrip = false;   // vector -> lattice -> vector fixed
  bool lattice_roundtrip = false;  // lattice -> vector -> lattice fixed
  bool polar_transport = false;
  bool ok = false;
};
VsRoundtripReport roundtrip_vs_lattice(const SubspaceLatticeModel& m);

struct VsNondegeneracy {
  bool nondegenerate = false;  // only the zero vector is self-related
  bool strongly = false;       // and every proper subspace has nonzero polar
  std::optional<int> self_related_vector;
  std::optional<int> zero_polar_subspace;  // model index
};
VsNondegeneracy vs_nondegeneracy(const VectorLocality& v,
                                 const SubspaceLatticeModel* model = nullptr);

/// Both equivalences between vector-level non-degeneracy and the
/// separating-style properties of the induced lattice relation; when the
/// vector locality is strongly non-degenerate, the polar map must validate
/// as an orthocomplementation.
struct Vgv2Report {
  VsNondegeneracy degeneracy;
  bool lattice_locality = false;
  bool disjointness = false;  // related subspaces intersect trivially
  bool strongly_separating = false;
  bool clause_nondegenerate_ok = false;
  bool clause_strong_ok = false;
  bool ortho_valid = true;  // vacuous unless strongly non-degenerate
  std::optional<std::vector<int>> psi;
  bool ok = false;
};
Vgv2Report check_prop_vgv2(const VectorLocality& v,
                           const SubspaceLatticeModel& m);

/// Orthogonalization: rebuilds the input basis into one whose distinct
/// vectors are pairwise related, keeping span(u_1..u_k) = span(e_1..e_k) at
/// every step. Requires a strongly non-degenerate locality; the k+1st vector
/// is the smallest-index member of polar(W_k) inside W_{k+1} with leading
/// coefficient one.
std::vector<FpVector> locality_basis_gram_schmidt(
    const VectorLocality& v, const std::vector<FpVector>& input_basis);
std::vector<FpVector> locality_basis_gram_schmidt(
    const VectorLocality& v, const std::vector<FpVector>& input_basis,
    const SubspaceLatticeModel& model);

/// True iff the vectors form a basis and are pairwise related.
bool is_locality_basis(const VectorLocality& v,
                       const std::vector<FpVector>& basis);

/// All orthocomplementations of the subspace lattice of F_q^2; their count
/// equals the number of fixed-point-free involutions of the q+1 lines.
std::vector<Orthocomplementation> classify_plane_orthocomplementations(int q);

}  // namespace ortholoc

#endif  // ORTHOLOC_GF_HPP_
