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

#include "ortholoc/gf.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "ortholoc/caps.hpp"
#include "ortholoc/error.hpp"

namespace ortholoc {

PrimeField::PrimeField(int modulus) : q(modulus) {
  require(modulus >= 2, Errc::not_prime,
          std::to_string(modulus) + " is not a prime");
  for (int d = 2; d * d <= modulus; ++d) {
    require(modulus % d != 0, Errc::not_prime,
            std::to_string(modulus) + " is not a prime");
  }
}

int PrimeField::inv(int a) const {
  require(a % q != 0, Errc::precondition_failed, "zero has no inverse");
  int base = a % q, result = 1;
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = (result * base) % q;
    base = (base * base) % q;
  }
  return result;
}

int encode_vector(int q, const FpVector& v) {
  int index = 0, place = 1;
  for (int digit : v) {
    index += (digit % q + q) % q * place;
    place *= q;
  }
  return index;
}

FpVector decode_vector(int q, int n, int index) {
  FpVector v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = index % q;
    index /= q;
  }
  return v;
}

std::vector<FpVector> rref(int q, std::vector<FpVector> rows) {
  PrimeField f(q);
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size();
  for (auto& row : rows) {
    require(row.size() == n, Errc::dimension_mismatch, "ragged matrix");
    for (auto& x : row) x = (x % q + q) % q;
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[pivot_row], rows[r]);
    int scale = f.inv(rows[pivot_row][col]);
    for (auto& x : rows[pivot_row]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      int factor = rows[i][col];
      for (std::size_t c = 0; c < n; ++c) {
        rows[i][c] = f.sub(rows[i][c], f.mul(factor, rows[pivot_row][c]));
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

Subspace Subspace::span(int q, int n, const std::vector<FpVector>& generators) {
  PrimeField f(q);
  std::vector<FpVector> rows = generators;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, Errc::dimension_mismatch,
            "generator has wrong length");
  }
  return Subspace(q, n, rref(q, std::move(rows)));
}

Subspace Subspace::zero(int q, int n) { return Subspace(q, n, {}); }

bool Subspace::contains(const FpVector& v) const {
  require(static_cast<int>(v.size()) == n_, Errc::dimension_mismatch,
          "vector has wrong length");
  PrimeField f(q_);
  FpVector rest = v;
  for (auto& x : rest) x = (x % q_ + q_) % q_;
  for (const auto& row : basis_) {
    int pivot = -1;
    for (int c = 0; c < n_; ++c) {
      if (row[static_cast<std::size_t>(c)] != 0) {
        pivot = c;
        break;
      }
    }
    int factor = rest[static_cast<std::size_t>(pivot)];
    if (factor == 0) continue;
    for (int c = 0; c < n_; ++c) {
      rest[static_cast<std::size_t>(c)] =
          f.sub(rest[static_cast<std::size_t>(c)],
                f.mul(factor, row[static_cast<std::size_t>(c)]));
    }
  }
  for (int x : rest) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<int> Subspace::pivot_columns() const {
  std::vector<int> out;
  for (const auto& row : basis_) {
    for (int c = 0; c < n_; ++c) {
      if (row[static_cast<std::size_t>(c)] != 0) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::string Subspace::encoding() const {
  std::string s;
  s.push_back(static_cast<char>(dim()));
  for (const auto& row : basis_) {
    for (int x : row) s.push_back(static_cast<char>(x));
  }
  return s;
}

namespace {

std::string subspace_label(const Subspace& s) {
  if (s.dim() == 0) return "0";
  if (s.dim() == s.ambient_dim()) return "V";
  std::string label = "<";
  bool first_row = true;
  for (const auto& row : s.basis()) {
    if (!first_row) label += ",";
    first_row = false;
    for (int x : row) label += std::to_string(x);
  }
  label += ">";
  return label;
}

ElementSet member_mask(const Subspace& s, int num_vectors) {
  // All linear combinations of the basis rows.
  PrimeField f(s.q());
  ElementSet mask(num_vectors);
  int combos = 1;
  for (int i = 0; i < s.dim(); ++i) combos *= s.q();
  for (int c = 0; c < combos; ++c) {
    FpVector coeff = decode_vector(s.q(), s.dim(), c);
    FpVector v(static_cast<std::size_t>(s.ambient_dim()), 0);
    for (int i = 0; i < s.dim(); ++i) {
      for (int j = 0; j < s.ambient_dim(); ++j) {
        v[static_cast<std::size_t>(j)] =
            f.add(v[static_cast<std::size_t>(j)],
                  f.mul(coeff[static_cast<std::size_t>(i)],
                        s.basis()[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(j)]));
      }
    }
    mask.insert(encode_vector(s.q(), v));
  }
  return mask;
}

struct SubspaceSortKey {
  int dim;
  std::vector<int> pivots;
  std::vector<int> entries;
  bool operator<(const SubspaceSortKey& o) const {
    if (dim != o.dim) return dim < o.dim;
    if (pivots != o.pivots) return pivots < o.pivots;
    return entries < o.entries;
  }
};

SubspaceSortKey sort_key(const Subspace& s) {
  SubspaceSortKey key{s.dim(), s.pivot_columns(), {}};
  for (const auto& row : s.basis()) {
    for (int x : row) key.entries.push_back(x);
  }
  return key;
}

}  // namespace

int SubspaceLatticeModel::index_of(const Subspace& s) const {
  auto it = index_by_encoding.find(s.encoding());
  require(it != index_by_encoding.end(), Errc::precondition_failed,
          "subspace is not part of this model");
  return it->second;
}

int SubspaceLatticeModel::index_of_members(const ElementSet& mask) const {
  for (int i = 0; i < static_cast<int>(subspaces.size()); ++i) {
    if (members[static_cast<std::size_t>(i)] == mask) return i;
  }
  return -1;
}

namespace {

// Number of subspaces of F_q^n, saturating well past the cap.
long long count_subspaces(int q, int n) {
  const long long limit = 1LL << 40;
  std::vector<long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next(static_cast<std::size_t>(i) + 1, 1);
    long long qk = 1;
    for (int k = 1; k < i; ++k) {
      qk = std::min(qk * q, limit);
      next[static_cast<std::size_t>(k)] =
          std::min(row[static_cast<std::size_t>(k) - 1] +
                       qk * row[static_cast<std::size_t>(k)],
                   limit);
    }
    row = std::move(next);
  }
  long long total = 0;
  for (long long x : row) total = std::min(total + x, limit);
  return total;
}

}  // namespace

SubspaceLatticeModel enumerate_subspaces(int q, int n) {
  PrimeField f(q);
  require(n >= 1, Errc::dimension_mismatch, "dimension must be positive");
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= q;
    require(space <= kMaxVectorSpaceSize, Errc::size_cap_exceeded,
            "vector space capped at q^n <= " +
                std::to_string(kMaxVectorSpaceSize));
  }
  require(count_subspaces(q, n) <= kMaxSubspaces, Errc::size_cap_exceeded,
          "subspace count capped at " + std::to_string(kMaxSubspaces));

  SubspaceLatticeModel model;
  model.q = q;
  model.n = n;
  model.num_vectors = static_cast<int>(space);

  // All reduced row echelon matrices: choose pivot columns, then fill the
  // free entries (right of the pivot, outside pivot columns).
  std::vector<Subspace> all;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    auto enumerate_with_pivots = [&]() {
      std::vector<std::pair<int, int>> free_cells;
      for (int r = 0; r < k; ++r) {
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
          if (!chosen[static_cast<std::size_t>(c)]) free_cells.emplace_back(r, c);
        }
      }
      std::vector<int> fill(free_cells.size(), 0);
      while (true) {
        std::vector<FpVector> rows(
            static_cast<std::size_t>(k),
            FpVector(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < k; ++r) {
          rows[static_cast<std::size_t>(r)]
              [static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
        }
        for (std::size_t i = 0; i < free_cells.size(); ++i) {
          rows[static_cast<std::size_t>(free_cells[i].first)]
              [static_cast<std::size_t>(free_cells[i].second)] = fill[i];
        }
        all.push_back(Subspace::span(q, n, rows));
        std::size_t pos = 0;
        while (pos < fill.size() && ++fill[pos] == q) fill[pos++] = 0;
        if (pos == fill.size()) break;
      }
    };
    // Lexicographic combinations of pivot columns.
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
      all.push_back(Subspace::zero(q, n));
    } else {
      while (true) {
        pivots = comb;
        std::fill(chosen.begin(), chosen.end(), 0);
        for (int c : comb) chosen[static_cast<std::size_t>(c)] = 1;
        enumerate_with_pivots();
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
          comb[static_cast<std::size_t>(j)] =
              comb[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
  }
  require(static_cast<int>(all.size()) <= kMaxSubspaces,
          Errc::size_cap_exceeded,
          "subspace count capped at " + std::to_string(kMaxSubspaces));

  std::sort(all.begin(), all.end(), [](const Subspace& a, const Subspace& b) {
    return sort_key(a) < sort_key(b);
  });
  model.subspaces = std::move(all);

  int count = static_cast<int>(model.subspaces.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Subspace& s = model.subspaces[static_cast<std::size_t>(i)];
    model.index_by_encoding.emplace(s.encoding(), i);
    model.members.push_back(member_mask(s, model.num_vectors));
    labels.push_back(subspace_label(s));
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(count) * count, 0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (model.members[static_cast<std::size_t>(i)].is_subset_of(
              model.members[static_cast<std::size_t>(j)])) {
        leq[static_cast<std::size_t>(i) * count + j] = 1;
      }
    }
  }
  model.lattice =
      build_lattice(validate_poset(count, std::move(leq), std::move(labels)));

  // The order-theoretic tables must agree with intersection and sum.
  if (count <= 512) {
    for (int i = 0; i < count; ++i) {
      for (int j = i; j < count; ++j) {
        ElementSet inter = model.members[static_cast<std::size_t>(i)] &
                           model.members[static_cast<std::size_t>(j)];
        internal_check(
            model.members[static_cast<std::size_t>(
                model.lattice->meet(i, j))] == inter,
            "lattice meet differs from subspace intersection");
        std::vector<FpVector> stacked =
            model.subspaces[static_cast<std::size_t>(i)].basis();
        for (const auto& row :
             model.subspaces[static_cast<std::size_t>(j)].basis()) {
          stacked.push_back(row);
        }
        internal_check(model.lattice->join(i, j) ==
                           model.index_of(Subspace::span(q, n, stacked)),
                       "lattice join differs from subspace sum");
      }
    }
  }

  model.line_of_vector.assign(static_cast<std::size_t>(model.num_vectors), 0);
  for (int i = 0; i < count; ++i) {
    if (model.subspaces[static_cast<std::size_t>(i)].dim() != 1) continue;
    for (int v : model.members[static_cast<std::size_t>(i)].elements()) {
      if (v != 0) model.line_of_vector[static_cast<std::size_t>(v)] = i;
    }
  }
  return model;
}

BilinearForm BilinearForm::identity(int q, int n) {
  BilinearForm out;
  out.q = q;
  out.n = n;
  out.entries.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) out.entries[static_cast<std::size_t>(i) * n + i] = 1;
  return out;
}

BilinearForm BilinearForm::from_rows(int q, const std::vector<FpVector>& rows) {
  BilinearForm out;
  out.q = q;
  out.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == out.n, Errc::dimension_mismatch,
            "form matrix must be square");
    for (int x : row) out.entries.push_back((x % q + q) % q);
  }
  return out;
}

int BilinearForm::eval(const FpVector& x, const FpVector& y) const {
  PrimeField f(q);
  require(static_cast<int>(x.size()) == n && static_cast<int>(y.size()) == n,
          Errc::dimension_mismatch, "vector has wrong length");
  int acc = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      acc = f.add(acc, f.mul(f.mul(x[static_cast<std::size_t>(i)] % q,
                                   entries[static_cast<std::size_t>(i) * n + j]),
                             y[static_cast<std::size_t>(j)] % q));
    }
  }
  return acc;
}

VectorLocality::VectorLocality(int q, int n, std::vector<ElementSet> polars)
    : q_(q), n_(n), polars_(std::move(polars)) {
  PrimeField f(q);
  num_vectors_ = 1;
  for (int i = 0; i < n; ++i) {
    num_vectors_ *= q;
    require(num_vectors_ <= kMaxVectorRelationSize, Errc::size_cap_exceeded,
            "vector relation capped at q^n <= " +
                std::to_string(kMaxVectorRelationSize));
  }
  require(polars_.size() == static_cast<std::size_t>(num_vectors_),
          Errc::parse_error, "polar table does not cover the space");
  for (int v = 0; v < num_vectors_; ++v) {
    require(polars_[static_cast<std::size_t>(v)].universe_size() ==
                num_vectors_,
            Errc::parse_error, "polar table does not cover the space");
    for (int w = v + 1; w < num_vectors_; ++w) {
      require(polars_[static_cast<std::size_t>(v)].contains(w) ==
                  polars_[static_cast<std::size_t>(w)].contains(v),
              Errc::not_symmetric, "vector relation is not symmetric", {v, w});
    }
  }
  // Each single-vector polar must be closed under addition and scaling; the
  // greedy rank bound detects exactly that.
  for (int v = 0; v < num_vectors_; ++v) {
    std::vector<FpVector> gens;
    for (int w : polars_[static_cast<std::size_t>(v)].elements()) {
      gens.push_back(decode_vector(q, n, w));
    }
    std::vector<FpVector> basis = rref(q, gens);
    long long span_size = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) span_size *= q;
    require(polars_[static_cast<std::size_t>(v)].count() == span_size &&
                !polars_[static_cast<std::size_t>(v)].empty(),
            Errc::precondition_failed,
            "polar set of a vector is not a subspace", {v});
  }
  internal_check(polars_[0] == ElementSet::full(num_vectors_),
                 "zero vector is not related to everything");
}

ElementSet VectorLocality::polar(const ElementSet& vectors) const {
  ElementSet out = ElementSet::full(num_vectors_);
  for (int v : vectors.elements()) out &= polars_[static_cast<std::size_t>(v)];
  return out;
}

VectorLocality form_locality(const BilinearForm& fm) {
  PrimeField f(fm.q);
  int num = 1;
  for (int i = 0; i < fm.n; ++i) num *= fm.q;
  std::vector<FpVector> decoded;
  decoded.reserve(static_cast<std::size_t>(num));
  for (int v = 0; v < num; ++v) decoded.push_back(decode_vector(fm.q, fm.n, v));
  std::vector<ElementSet> polars(static_cast<std::size_t>(num),
                                 ElementSet(num));
  for (int v = 0; v < num; ++v) {
    for (int w = v; w < num; ++w) {
      if (fm.eval(decoded[static_cast<std::size_t>(v)],
                  decoded[static_cast<std::size_t>(w)]) == 0 &&
          fm.eval(decoded[static_cast<std::size_t>(w)],
                  decoded[static_cast<std::size_t>(v)]) == 0) {
        polars[static_cast<std::size_t>(v)].insert(w);
        polars[static_cast<std::size_t>(w)].insert(v);
      }
    }
  }
  return VectorLocality(fm.q, fm.n, std::move(polars));
}

VectorLocality f2_cubed_fixture() {
  const int q = 2, n = 3, num = 8;
  Subspace plane = Subspace::span(q, n, {{1, 0, 0}, {0, 0, 1}});
  Subspace line = Subspace::span(q, n, {{0, 1, 0}});
  std::vector<ElementSet> polars(num, ElementSet(num));
  for (int v = 0; v < num; ++v) {
    for (int w = 0; w < num; ++w) {
      FpVector vv = decode_vector(q, n, v);
      FpVector ww = decode_vector(q, n, w);
      bool related = v == 0 || w == 0 ||
                     (plane.contains(vv) && line.contains(ww)) ||
                     (line.contains(vv) && plane.contains(ww));
      if (related) polars[static_cast<std::size_t>(v)].insert(w);
    }
  }
  return VectorLocality(q, n, std::move(polars));
}

LocalityRelation vs_to_lattice_locality(const VectorLocality& v,
                                        const SubspaceLatticeModel& m) {
  require(v.q() == m.q && v.dim() == m.n, Errc::dimension_mismatch,
          "vector locality and model live on different spaces");
  int count = static_cast<int>(m.subspaces.size());
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(count) * count, 0);
  for (int u = 0; u < count; ++u) {
    ElementSet pmask = v.polar(m.members[static_cast<std::size_t>(u)]);
    for (int w = 0; w < count; ++w) {
      if (m.members[static_cast<std::size_t>(w)].is_subset_of(pmask)) {
        rel[static_cast<std::size_t>(u) * count + w] = 1;
      }
    }
  }
  LocalityRelation out(m.lattice, std::move(rel));
  internal_check(out.polar_of(0) == ElementSet::full(count),
                 "zero subspace is not related to everything");
  internal_check(is_lattice_locality(out).holds,
                 "vector locality did not induce a lattice locality");
  return out;
}

VectorLocality lattice_to_vs_locality(const LocalityRelation& r,
                                      const SubspaceLatticeModel& m) {
  require(same_host(r.host(), *m.lattice), Errc::host_mismatch,
          "relation does not live on the model lattice");
  require(is_lattice_locality(r).holds, Errc::precondition_failed,
          "needs a lattice locality");
  require(r.polar_of(0) ==
              ElementSet::full(static_cast<int>(m.subspaces.size())),
          Errc::precondition_failed,
          "zero subspace must be related to everything");
  int num = m.num_vectors;
  std::vector<ElementSet> polars(static_cast<std::size_t>(num),
                                 ElementSet(num));
  for (int v = 0; v < num; ++v) {
    for (int w = 0; w < num; ++w) {
      bool related =
          v == 0 || w == 0 ||
          r.related(m.line_of_vector[static_cast<std::size_t>(v)],
                    m.line_of_vector[static_cast<std::size_t>(w)]);
      if (related) polars[static_cast<std::size_t>(v)].insert(w);
    }
  }
  return VectorLocality(m.q, m.n, std::move(polars));
}

namespace {

ElementSet span_mask(const SubspaceLatticeModel& m,
                     const std::vector<FpVector>& vectors) {
  return member_mask(Subspace::span(m.q, m.n, vectors), m.num_vectors);
}

int span_index(const SubspaceLatticeModel& m, const ElementSet& vectors) {
  std::vector<FpVector> gens;
  for (int v : vectors.elements()) gens.push_back(decode_vector(m.q, m.n, v));
  return m.index_of(Subspace::span(m.q, m.n, gens));
}

bool polar_transport_holds(const VectorLocality& v, const LocalityRelation& g,
                           const SubspaceLatticeModel& m,
                           const VectorLocality& back) {
  int count = static_cast<int>(m.subspaces.size());
  // Lattice polar of U is the down-set of the subspace polar of U.
  for (int u = 0; u < count; ++u) {
    ElementSet pmask = v.polar(m.members[static_cast<std::size_t>(u)]);
    int p_index = m.index_of_members(pmask);
    if (p_index < 0) return false;
    if (!(g.polar_of(u) == down_set(m.lattice->poset, p_index))) return false;
  }
  // Vector polar of a set X is the member set of the greatest element of the
  // lattice polar of span(X).
  std::vector<ElementSet> samples;
  samples.push_back(ElementSet(m.num_vectors));
  samples.push_back(ElementSet::full(m.num_vectors));
  if (m.num_vectors <= 9) {
    for (int bits = 0; bits < (1 << m.num_vectors); ++bits) {
      ElementSet s(m.num_vectors);
      for (int i = 0; i < m.num_vectors; ++i) {
        if (bits & (1 << i)) s.insert(i);
      }
      samples.push_back(std::move(s));
    }
  } else {
    for (int i = 0; i < m.num_vectors; ++i) {
      ElementSet s(m.num_vectors);
      s.insert(i);
      samples.push_back(std::move(s));
    }
    std::mt19937 rng(20210322);
    for (int t = 0; t < 64; ++t) {
      ElementSet s(m.num_vectors);
      for (int i = 0; i < m.num_vectors; ++i) {
        if (rng() % 2 == 0) s.insert(i);
      }
      samples.push_back(std::move(s));
    }
  }
  for (const ElementSet& x : samples) {
    int sp = span_index(m, x);
    int g_top = greatest_of_polar(g, sp);
    if (!(back.polar(x) == m.members[static_cast<std::size_t>(g_top)])) {
      return false;
    }
  }
  return true;
}

}  // namespace

VsRoundtripReport roundtrip_vs_lattice(const SubspaceLatticeModel& m) {
  VsRoundtripReport report;
  report.q = m.q;
  report.n = m.n;
  report.vector_roundtrip = true;
  report.lattice_roundtrip = true;
  report.polar_transport = true;

  std::vector<VectorLocality> battery;
  int cells = m.n * m.n;
  long long forms = 1;
  for (int i = 0; i < cells; ++i) forms *= m.q;
  for (long long code = 0; code < forms; ++code) {
    BilinearForm f;
    f.q = m.q;
    f.n = m.n;
    long long rest = code;
    for (int i = 0; i < cells; ++i) {
      f.entries.push_back(static_cast<int>(rest % m.q));
      rest /= m.q;
    }
    battery.push_back(form_locality(f));
  }
  if (m.q == 2 && m.n == 3) battery.push_back(f2_cubed_fixture());
  report.num_relations = static_cast<int>(battery.size());

  for (const VectorLocality& v : battery) {
    LocalityRelation g = vs_to_lattice_locality(v, m);
    VectorLocality back = lattice_to_vs_locality(g, m);
    if (!(back == v)) report.vector_roundtrip = false;
    LocalityRelation g2 = vs_to_lattice_locality(back, m);
    if (!(g2 == g)) report.lattice_roundtrip = false;
    if (!polar_transport_holds(v, g, m, back)) report.polar_transport = false;
  }
  report.ok = report.vector_roundtrip && report.lattice_roundtrip &&
              report.polar_transport;
  return report;
}

VsNondegeneracy vs_nondegeneracy(const VectorLocality& v,
                                 const SubspaceLatticeModel* model) {
  VsNondegeneracy out;
  out.nondegenerate = true;
  for (int x = 1; x < v.num_vectors(); ++x) {
    if (v.related(x, x)) {
      out.nondegenerate = false;
      out.self_related_vector = x;
      break;
    }
  }
  if (!out.nondegenerate) return out;

  SubspaceLatticeModel local;
  const SubspaceLatticeModel* m = model;
  if (m == nullptr) {
    local = enumerate_subspaces(v.q(), v.dim());
    m = &local;
  }
  out.strongly = true;
  int count = static_cast<int>(m->subspaces.size());
  for (int u = 0; u < count - 1; ++u) {  // the full space is the last index
    ElementSet pmask = v.polar(m->members[static_cast<std::size_t>(u)]);
    if (pmask.count() <= 1) {
      out.strongly = false;
      out.zero_polar_subspace = u;
      break;
    }
  }
  if (out.strongly) {
    // Each subspace and its polar split the space.
    for (int u = 0; u < count; ++u) {
      ElementSet pmask = v.polar(m->members[static_cast<std::size_t>(u)]);
      ElementSet inter = pmask & m->members[static_cast<std::size_t>(u)];
      internal_check(inter.count() == 1,
                     "subspace meets its polar beyond zero");
      internal_check(static_cast<long long>(pmask.count()) *
                             m->members[static_cast<std::size_t>(u)].count() ==
                         static_cast<long long>(m->num_vectors),
                     "subspace and its polar do not split the space");
    }
  }
  return out;
}

Vgv2Report check_prop_vgv2(const VectorLocality& v,
                           const SubspaceLatticeModel& m) {
  Vgv2Report report;
  report.degeneracy = vs_nondegeneracy(v, &m);
  LocalityRelation g = vs_to_lattice_locality(v, m);
  report.lattice_locality = is_lattice_locality(g).holds;
  report.disjointness = true;
  int count = static_cast<int>(m.subspaces.size());
  for (int a = 0; a < count && report.disjointness; ++a) {
    for (int b = a; b < count; ++b) {
      if (g.related(a, b) && m.lattice->meet(a, b) != m.lattice->bottom) {
        report.disjointness = false;
        break;
      }
    }
  }
  report.strongly_separating =
      report.lattice_locality &&
      is_separating(g, CheckMode::relaxed).holds &&
      is_strongly_separating(g, CheckMode::relaxed).holds;

  report.clause_nondegenerate_ok =
      report.degeneracy.nondegenerate ==
      (report.lattice_locality && report.disjointness);
  report.clause_strong_ok =
      report.degeneracy.strongly == report.strongly_separating;

  if (report.degeneracy.strongly) {
    std::vector<int> psi;
    psi.reserve(static_cast<std::size_t>(count));
    for (int u = 0; u < count; ++u) {
      int p = m.index_of_members(v.polar(m.members[static_cast<std::size_t>(u)]));
      report.ortho_valid = report.ortho_valid && p >= 0;
      psi.push_back(p);
    }
    if (report.ortho_valid) {
      try {
        validate_orthocomplementation(m.lattice, psi);
        report.psi = std::move(psi);
      } catch (const Error&) {
        report.ortho_valid = false;
      }
    }
  }
  report.ok = report.clause_nondegenerate_ok && report.clause_strong_ok &&
              report.ortho_valid;
  return report;
}

std::vector<FpVector> locality_basis_gram_schmidt(
    const VectorLocality& v, const std::vector<FpVector>& input_basis) {
  return locality_basis_gram_schmidt(v, input_basis,
                                     enumerate_subspaces(v.q(), v.dim()));
}

std::vector<FpVector> locality_basis_gram_schmidt(
    const VectorLocality& v, const std::vector<FpVector>& input_basis,
    const SubspaceLatticeModel& m) {
  require(v.q() == m.q && v.dim() == m.n, Errc::dimension_mismatch,
          "vector locality and model live on different spaces");
  VsNondegeneracy deg = vs_nondegeneracy(v, &m);
  require(deg.strongly, Errc::precondition_failed,
          "needs a strongly non-degenerate vector locality");
  int n = v.dim();
  require(static_cast<int>(input_basis.size()) == n, Errc::not_a_basis,
          "wrong number of basis vectors");
  require(static_cast<int>(rref(v.q(), input_basis).size()) == n,
          Errc::not_a_basis, "input vectors do not span the space");

  std::vector<FpVector> out;
  out.push_back(decode_vector(v.q(), n,
                              encode_vector(v.q(), input_basis[0])));
  for (int k = 1; k < n; ++k) {
    std::vector<FpVector> prefix(input_basis.begin(),
                                 input_basis.begin() + k);
    std::vector<FpVector> prefix_next(input_basis.begin(),
                                      input_basis.begin() + k + 1);
    ElementSet w_k = span_mask(m, prefix);
    ElementSet w_next = span_mask(m, prefix_next);
    ElementSet candidates = v.polar(w_k) & w_next;
    int pick = -1;
    for (int idx : candidates.elements()) {
      if (idx == 0) continue;
      FpVector vec = decode_vector(v.q(), n, idx);
      int lead = 0;
      for (int c : vec) {
        if (c != 0) {
          lead = c;
          break;
        }
      }
      if (lead == 1) {
        pick = idx;
        break;
      }
    }
    internal_check(pick >= 0, "no candidate extends the locality basis");
    out.push_back(decode_vector(v.q(), n, pick));
    internal_check(span_mask(m, out) == w_next,
                   "span invariant broken while orthogonalizing");
    for (int j = 0; j < k; ++j) {
      internal_check(v.related(encode_vector(v.q(), out[static_cast<std::size_t>(j)]),
                               pick),
                     "new basis vector is not related to the earlier ones");
    }
  }
  internal_check(is_locality_basis(v, out),
                 "orthogonalization did not produce a locality basis");
  return out;
}

bool is_locality_basis(const VectorLocality& v,
                       const std::vector<FpVector>& basis) {
  if (static_cast<int>(basis.size()) != v.dim()) return false;
  if (static_cast<int>(rref(v.q(), basis).size()) != v.dim()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!v.related(encode_vector(v.q(), basis[i]),
                     encode_vector(v.q(), basis[j]))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Orthocomplementation> classify_plane_orthocomplementations(int q) {
  require(q <= kMaxPlanePrime, Errc::size_cap_exceeded,
          "plane classification capped at q <= " +
              std::to_string(kMaxPlanePrime));
  SubspaceLatticeModel m = enumerate_subspaces(q, 2);
  std::vector<Orthocomplementation> out =
      enumerate_orthocomplementations(m.lattice);
  int lines = q + 1;
  long long expected = 0;
  if (lines % 2 == 0) {
    expected = 1;
    for (int i = lines - 1; i > 0; i -= 2) expected *= i;
  }
  internal_check(static_cast<long long>(out.size()) == expected,
                 "plane orthocomplementation count differs from the "
                 "fixed-point-free involution count");
  return out;
}

}  // namespace ortholoc
