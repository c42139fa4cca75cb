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
//
// Top-level verification suite. Every check is exact: the structures are
// finite and discrete, so each criterion either holds on the nose or fails
// with a counterexample. One line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "oracles.hpp"
#include "ortholoc/gf.hpp"
#include "ortholoc/io.hpp"
#include "ortholoc/lattice.hpp"
#include "ortholoc/locality.hpp"
#include "ortholoc/ortho.hpp"

using namespace ortholoc;
using namespace ortholoc::testing;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
  void note(const std::string& text) { detail << " " << text; }
};

std::vector<LatticePtr> corpus(int max_n) {
  std::vector<LatticePtr> out;
  for (int n = 1; n <= max_n; ++n) {
    for (LatticePtr& l : enumerate_lattices(n)) out.push_back(std::move(l));
  }
  return out;
}

LocalityRelation random_symmetric(LatticePtr host, std::mt19937& rng) {
  int n = host->size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rng() % 2 == 0) {
        rel[static_cast<std::size_t>(i) * n + j] = 1;
        rel[static_cast<std::size_t>(j) * n + i] = 1;
      }
    }
  }
  return LocalityRelation(std::move(host), std::move(rel));
}

// --------------------------------------------------------------------------
// 1. Distributivity and modularity are exactly the absence of the forbidden
//    sublattices, over every isomorphism class with at most 7 elements; the
//    class counts are pinned and cross-checked against the blind oracle.
// --------------------------------------------------------------------------
Criterion criterion_1() {
  Criterion c;
  const int expected[] = {1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n) {
    std::vector<LatticePtr> classes = enumerate_lattices(n);
    c.expect(static_cast<int>(classes.size()) == expected[n - 1],
             "class count n=" + std::to_string(n));
    c.expect(oracle_lattice_class_count(n) == expected[n - 1],
             "blind oracle count n=" + std::to_string(n));
    for (const LatticePtr& l : classes) {
      bool pentagon =
          find_forbidden_sublattice(*l, SublatticeKind::pentagon).has_value();
      bool diamond =
          find_forbidden_sublattice(*l, SublatticeKind::diamond).has_value();
      c.expect(pentagon ==
                   oracle_has_forbidden_sublattice(*l, SublatticeKind::pentagon),
               "pentagon search vs subset oracle");
      c.expect(diamond ==
                   oracle_has_forbidden_sublattice(*l, SublatticeKind::diamond),
               "diamond search vs subset oracle");
      c.expect(is_distributive(*l).holds == (!pentagon && !diamond),
               "distributive iff no pentagon and no diamond");
      c.expect(is_modular(*l).holds == !pentagon, "modular iff no pentagon");
    }
  }
  c.note("78 classes, counts 1,1,1,2,5,15,53");
  return c;
}

// --------------------------------------------------------------------------
// 2. The cancellation laws coincide with distributivity and modularity.
// --------------------------------------------------------------------------
Criterion criterion_2() {
  Criterion c;
  int checked = 0;
  for (const LatticePtr& l : corpus(7)) {
    CancellationResult laws = cancellation_laws(*l);
    c.expect(laws.cancellation == is_distributive(*l).holds,
             "cancellation iff distributive");
    c.expect(laws.modular_cancellation == is_modular(*l).holds,
             "modular cancellation iff modular");
    ++checked;
  }
  c.note(std::to_string(checked) + " lattices");
  return c;
}

// --------------------------------------------------------------------------
// 3. Definition equivalences: the three poset-locality conditions, the
//    join-polar identity against lattice locality, and the two
//    non-degeneracy formulations. Exhaustive for n <= 4, sampled for
//    n = 5, 6.
// --------------------------------------------------------------------------
Criterion criterion_3() {
  Criterion c;
  long long relations = 0;
  auto probe = [&](const LocalityRelation& r) {
    ++relations;
    CheckOutcome poset = is_poset_locality(r);  // asserts three-way agreement
    if (poset.holds) {
      c.expect(is_lattice_locality(r).holds == check_join_polar(r),
               "lattice locality iff join-polar identity");
    }
    if (is_lattice_locality(r).holds) {
      is_nondegenerate(r);  // asserts the two formulations agree
    }
  };
  for (int n = 1; n <= 4; ++n) {
    for (const LatticePtr& l : enumerate_lattices(n)) {
      for_each_symmetric_relation(l, probe);
    }
  }
  std::mt19937 rng(424242);
  for (int n : {5, 6}) {
    std::vector<LatticePtr> classes = enumerate_lattices(n);
    int per_lattice =
        static_cast<int>((100000 + classes.size() - 1) / classes.size());
    for (const LatticePtr& l : classes) {
      for (int t = 0; t < per_lattice; ++t) probe(random_symmetric(l, rng));
    }
  }
  c.note(std::to_string(relations) + " relations");
  return c;
}

// --------------------------------------------------------------------------
// 4. The correspondence between strongly separating localities and
//    orthocomplementations is a bijection on every lattice with at most 6
//    elements; the blind relation scan agrees with the involution-driven
//    search wherever it is feasible.
// --------------------------------------------------------------------------
Criterion criterion_4() {
  Criterion c;
  int total_relations = 0;
  int lattices = 0;
  for (const LatticePtr& l : corpus(6)) {
    ++lattices;
    RoundtripReport rep = roundtrip_check(l);
    c.expect(rep.counts_match, "count mismatch at n=" + std::to_string(rep.n));
    c.expect(rep.locality_roundtrip, "locality -> ortho -> locality");
    c.expect(rep.ortho_roundtrip, "ortho -> locality -> ortho");
    total_relations += rep.num_strongly_separating;
    if (l->size() <= 4) {
      std::vector<std::vector<std::uint8_t>> driven;
      for (const LocalityRelation& r : enumerate_strongly_separating(l)) {
        driven.push_back(r.matrix());
      }
      c.expect(driven == oracle_strongly_separating_matrices(l),
               "blind scan agrees at n=" + std::to_string(l->size()));
    }
  }
  c.note(std::to_string(lattices) + " lattices, " +
         std::to_string(total_relations) + " strongly separating relations");
  return c;
}

// --------------------------------------------------------------------------
// 5. The four counterexamples behave exactly as documented.
// --------------------------------------------------------------------------
Criterion criterion_5() {
  Criterion c;

  // (a) disjointedness on the diamond: no greatest polar element
  LocalityRelation wedge = LocalityRelation::disjointedness(make_m3());
  for (int atom : {1, 2, 3}) {
    try {
      greatest_of_polar(wedge, atom);
      c.expect(false, "diamond polar unexpectedly has a greatest element");
    } catch (const Error& e) {
      c.expect(e.code() == Errc::no_greatest_element, "wrong error");
      c.expect(e.witness().size() == 3, "wants two maximal witnesses");
    }
  }
  c.expect(!is_separating(wedge, CheckMode::relaxed).holds,
           "diamond disjointedness must not be separating");
  c.expect(!is_lattice_locality(wedge).holds,
           "diamond disjointedness must not be a lattice locality");

  // (b) everything-with-zero on the four-element Boolean lattice: weak
  //     closedness without closedness
  ClosednessStatus cs = closedness_status(b2_weakly_closed_only(make_b2()));
  c.expect(cs.closednessweak.holds, "weak closedness should hold");
  c.expect(!cs.closedness.holds, "closedness should fail");
  c.expect(!cs.extreme.holds, "extreme should fail with closedness");

  // (c) the bundled F_2^3 relation: the published polar table, separating
  //     but not strongly separating, witnessed at the first axis line
  SubspaceLatticeModel m = enumerate_subspaces(2, 3);
  LocalityRelation bundled = vs_to_lattice_locality(f2_cubed_fixture(), m);
  int e1 = m.index_of(Subspace::span(2, 3, {{1, 0, 0}}));
  int e2 = m.index_of(Subspace::span(2, 3, {{0, 1, 0}}));
  int e3 = m.index_of(Subspace::span(2, 3, {{0, 0, 1}}));
  int e13 = m.index_of(Subspace::span(2, 3, {{1, 0, 0}, {0, 0, 1}}));
  c.expect(bundled.polar_of(0) == ElementSet::full(16), "zero polar");
  c.expect(bundled.polar_of(e1).elements() == std::vector<int>{0, e2},
           "polar of the first axis");
  c.expect(bundled.polar_of(e3).elements() == std::vector<int>{0, e2},
           "polar of the third axis");
  c.expect(bundled.polar_of(e13).elements() == std::vector<int>{0, e2},
           "polar of the plane");
  c.expect(bundled.polar_of(e2) == down_set(m.lattice->poset, e13),
           "polar of the middle axis");
  c.expect(greatest_of_polar(bundled, e2) == e13, "greatest of the middle polar");
  c.expect(is_separating(bundled).holds, "fixture is separating");
  CheckOutcome strong = is_strongly_separating(bundled);
  c.expect(!strong.holds, "fixture must not be strongly separating");
  c.expect(strong.witness.has_value() &&
               strong.witness->elements == std::vector<int>{e1, e13},
           "witnessed at the first axis line");

  // (d) restricting the Boolean relation to the chain {0, a, 1} destroys
  //     strong separation: the polar of a collapses to {0} with a != 1, so
  //     the extreme condition fails as well
  LocalityRelation restricted =
      restrict_to_sublattice(b2_strongly_separating(make_b2()), {0, 1, 3});
  c.expect(is_strongly_separating(b2_strongly_separating(make_b2())).holds,
           "ambient relation is strongly separating");
  c.expect(restricted.polar_of(1).elements() == std::vector<int>{0},
           "polar of a collapses");
  c.expect(!is_strongly_separating(restricted).holds,
           "restriction must not be strongly separating");
  c.expect(!closedness_status(restricted).extreme.holds,
           "restriction fails the extreme condition");

  c.note("diamond, Boolean closedness, F_2^3 fixture, chain restriction");
  return c;
}

// --------------------------------------------------------------------------
// 6. Subspace-lattice facts, pinned against independent counting oracles.
// --------------------------------------------------------------------------
Criterion criterion_6() {
  Criterion c;

  SubspaceLatticeModel m22 = enumerate_subspaces(2, 2);
  SubspaceLatticeModel m32 = enumerate_subspaces(3, 2);
  SubspaceLatticeModel m23 = enumerate_subspaces(2, 3);
  struct {
    const SubspaceLatticeModel* m;
    int expected;
  } counts[] = {{&m22, 5}, {&m32, 6}, {&m23, 16}};
  for (const auto& [model, expected] : counts) {
    long long oracle = 0;
    for (int k = 0; k <= model->n; ++k) {
      oracle += gaussian_binomial(model->n, k, model->q);
    }
    c.expect(static_cast<int>(model->subspaces.size()) == expected,
             "subspace count");
    c.expect(oracle == expected, "Gaussian binomial oracle");
  }

  c.expect(canonical_form(m22.lattice->poset) ==
               canonical_form(make_m3()->poset),
           "binary plane is the diamond");
  c.expect(enumerate_orthocomplementations(m22.lattice).empty(),
           "binary plane admits none");

  std::vector<LocalityRelation> gf32_rels =
      enumerate_strongly_separating(m32.lattice);
  std::vector<Orthocomplementation> gf32_orthos =
      enumerate_orthocomplementations(m32.lattice);
  c.expect(gf32_rels.size() == 3, "ternary plane: three relations");
  c.expect(gf32_orthos.size() == 3, "ternary plane: three maps");
  c.expect(double_factorial_odd(3) == 3, "fixed-point-free involutions on 4");

  // the cube: all 5040 line-to-plane assignments, axioms checked directly
  const Lattice& cube = *m23.lattice;
  std::vector<int> lines, planes;
  for (int i = 0; i < cube.size(); ++i) {
    int d = m23.subspaces[static_cast<std::size_t>(i)].dim();
    if (d == 1) lines.push_back(i);
    if (d == 2) planes.push_back(i);
  }
  int brute = 0;
  std::vector<int> image = planes;
  do {
    std::vector<int> map(16, -1);
    map[static_cast<std::size_t>(cube.bottom)] = cube.top;
    map[static_cast<std::size_t>(cube.top)] = cube.bottom;
    for (std::size_t i = 0; i < 7; ++i) {
      map[static_cast<std::size_t>(lines[i])] = image[i];
      map[static_cast<std::size_t>(image[i])] = lines[i];
    }
    try {
      validate_orthocomplementation(m23.lattice, map);
      ++brute;
    } catch (const Error&) {
    }
  } while (std::next_permutation(image.begin(), image.end()));
  int driven =
      static_cast<int>(enumerate_orthocomplementations(m23.lattice).size());
  int strongly =
      static_cast<int>(enumerate_strongly_separating(m23.lattice).size());
  c.expect(brute == 0, "cube brute-force count");
  c.expect(driven == brute, "cube search vs brute force");
  c.expect(strongly == driven, "cube relations vs maps");

  c.note("counts 5/6/16; plane orthos 0/3; cube 0 by 5040-way brute force");
  return c;
}

// --------------------------------------------------------------------------
// 7. The vector-space / subspace-lattice transports are mutually inverse on
//    the whole battery, and non-degeneracy matches the separating
//    properties, including the degenerate and the merely-separating cases.
// --------------------------------------------------------------------------
Criterion criterion_7() {
  Criterion c;
  long long relations = 0;
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    SubspaceLatticeModel m = enumerate_subspaces(q, n);
    VsRoundtripReport rep = roundtrip_vs_lattice(m);
    relations += rep.num_relations;
    c.expect(rep.vector_roundtrip, "vector round trip q=" + std::to_string(q) +
                                       " n=" + std::to_string(n));
    c.expect(rep.lattice_roundtrip, "lattice round trip q=" +
                                        std::to_string(q) + " n=" +
                                        std::to_string(n));
    c.expect(rep.polar_transport, "polar transport q=" + std::to_string(q) +
                                      " n=" + std::to_string(n));

    long long forms = 1;
    for (int i = 0; i < n * n; ++i) forms *= q;
    for (long long code = 0; code < forms; ++code) {
      BilinearForm f;
      f.q = q;
      f.n = n;
      long long rest = code;
      for (int i = 0; i < n * n; ++i) {
        f.entries.push_back(static_cast<int>(rest % q));
        rest /= q;
      }
      c.expect(check_prop_vgv2(form_locality(f), m).ok,
               "equivalences for form " + std::to_string(code) + " over F_" +
                   std::to_string(q));
    }
  }

  SubspaceLatticeModel m22 = enumerate_subspaces(2, 2);
  Vgv2Report degenerate =
      check_prop_vgv2(form_locality(BilinearForm::identity(2, 2)), m22);
  c.expect(degenerate.ok && !degenerate.degeneracy.nondegenerate,
           "dot product on F_2^2 is degenerate");

  SubspaceLatticeModel m23 = enumerate_subspaces(2, 3);
  Vgv2Report fixture = check_prop_vgv2(f2_cubed_fixture(), m23);
  c.expect(fixture.ok, "fixture equivalences");
  c.expect(fixture.degeneracy.nondegenerate && !fixture.degeneracy.strongly,
           "fixture is non-degenerate but not strongly");
  c.expect(!fixture.strongly_separating,
           "fixture lattice relation is not strongly separating");

  c.note(std::to_string(relations) + " battery relations");
  return c;
}

// --------------------------------------------------------------------------
// 8. Orthogonalization succeeds from every input basis for every strongly
//    non-degenerate form locality in the battery, keeping prefix spans.
// --------------------------------------------------------------------------
Criterion criterion_8() {
  Criterion c;
  long long runs = 0;
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    SubspaceLatticeModel m = enumerate_subspaces(q, n);
    std::vector<VectorLocality> strong;
    long long forms = 1;
    for (int i = 0; i < n * n; ++i) forms *= q;
    for (long long code = 0; code < forms; ++code) {
      BilinearForm f;
      f.q = q;
      f.n = n;
      long long rest = code;
      for (int i = 0; i < n * n; ++i) {
        f.entries.push_back(static_cast<int>(rest % q));
        rest /= q;
      }
      VectorLocality v = form_locality(f);
      if (vs_nondegeneracy(v, &m).strongly) strong.push_back(std::move(v));
    }
    if (q == 2) {
      // no anisotropic pairing exists on these binary spaces
      c.expect(strong.empty(),
               "unexpected strongly non-degenerate form over F_2");
      continue;
    }
    c.expect(!strong.empty(), "expected strongly non-degenerate forms");

    // every ordered basis of the space
    std::vector<std::vector<FpVector>> bases;
    int num = m.num_vectors;
    std::vector<int> pick;
    auto extend = [&](auto&& self) -> void {
      if (static_cast<int>(pick.size()) == n) {
        std::vector<FpVector> basis;
        for (int idx : pick) basis.push_back(decode_vector(q, n, idx));
        if (static_cast<int>(rref(q, basis).size()) == n) {
          bases.push_back(std::move(basis));
        }
        return;
      }
      for (int idx = 1; idx < num; ++idx) {
        pick.push_back(idx);
        self(self);
        pick.pop_back();
      }
    };
    extend(extend);

    for (const VectorLocality& v : strong) {
      for (const std::vector<FpVector>& basis : bases) {
        std::vector<FpVector> out = locality_basis_gram_schmidt(v, basis, m);
        ++runs;
        c.expect(is_locality_basis(v, out), "output is a locality basis");
        for (int k = 1; k <= n; ++k) {
          std::vector<FpVector> prefix_in(basis.begin(), basis.begin() + k);
          std::vector<FpVector> prefix_out(out.begin(), out.begin() + k);
          c.expect(rref(q, prefix_in) == rref(q, prefix_out),
                   "span invariant at step " + std::to_string(k));
        }
      }
    }
  }
  c.note(std::to_string(runs) + " orthogonalizations");
  return c;
}

// --------------------------------------------------------------------------
// 9. The weak correspondences: antitone-map and atom-relation round trips,
//    plus sup-to-inf duality over every subset, across the corpus and the
//    subspace fixtures.
// --------------------------------------------------------------------------
Criterion criterion_9() {
  Criterion c;
  int qualifying = 0;
  for (const LatticePtr& l : corpus(6)) {
    // exhaustive through n = 5; sampled plus structured at n = 6
    AppendixReport rep = check_appendix_correspondences(l, 5);
    c.expect(rep.antitone_roundtrip,
             "antitone round trip at n=" + std::to_string(rep.n));
    c.expect(rep.sup_inf_duality,
             "sup-inf duality at n=" + std::to_string(rep.n));
    c.expect(rep.atom_roundtrip,
             "atom round trip at n=" + std::to_string(rep.n));
    qualifying += rep.num_qualifying;
    if (rep.atomistic_host && l->size() <= 5) {
      c.expect(rep.num_qualifying == rep.num_atom_relations,
               "atom-relation bijection at n=" + std::to_string(l->size()));
    }
  }
  SubspaceLatticeModel m32 = enumerate_subspaces(3, 2);
  AppendixReport gf32 = check_appendix_correspondences(m32.lattice, 6);
  c.expect(gf32.ok, "ternary plane");
  c.expect(gf32.num_qualifying == gf32.num_atom_relations,
           "ternary plane atom-relation bijection");
  SubspaceLatticeModel m23 = enumerate_subspaces(2, 3);
  AppendixReport gf23 = check_appendix_correspondences(m23.lattice);
  c.expect(gf23.ok, "cube");
  qualifying += gf32.num_qualifying + gf23.num_qualifying;

  // the bundled separating-but-not-strongly relation runs through both weak
  // correspondences and the duality as well
  LocalityRelation bundled = vs_to_lattice_locality(f2_cubed_fixture(), m23);
  AntitoneMap weak_map = antitone_from_poset_locality(bundled);
  c.expect(poset_locality_from_antitone(weak_map) == bundled,
           "fixture antitone round trip");
  AtomRelation atoms_of_bundled = atom_relation_from_lattice_locality(bundled);
  c.expect(lattice_locality_from_atom_relation(atoms_of_bundled) == bundled,
           "fixture atom round trip");
  const Lattice& cube = *m23.lattice;
  bool duality = true;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << 16); ++bits) {
    int sup = cube.bottom;
    int inf_images = cube.top;
    for (int x = 0; x < 16; ++x) {
      if (bits & (std::uint32_t{1} << x)) {
        sup = cube.join(sup, x);
        inf_images = cube.meet(inf_images, weak_map.image(x));
      }
    }
    if (weak_map.image(sup) != inf_images) {
      duality = false;
      break;
    }
  }
  c.expect(duality, "fixture sup-inf duality");
  ++qualifying;

  c.note(std::to_string(qualifying) + " qualifying structures");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const Entry entries[] = {
      {"forbidden-sublattice characterizations (n <= 7)", criterion_1},
      {"cancellation-law correspondences (n <= 7)", criterion_2},
      {"definition equivalences (exhaustive n <= 4, sampled n = 5, 6)",
       criterion_3},
      {"locality/orthocomplementation bijection (n <= 6)", criterion_4},
      {"counterexamples reproduced exactly", criterion_5},
      {"subspace-lattice counts and searches", criterion_6},
      {"vector/lattice locality round trips and equivalences", criterion_7},
      {"orthogonalization over every basis", criterion_8},
      {"weak correspondences and duality", criterion_9},
  };
  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Criterion result = entry.run();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] criterion %d: %s —%s (%lld ms)\n",
                result.pass ? "PASS" : "FAIL", index, entry.name,
                result.detail.str().c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    if (!result.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %d criteria passed\n", index);
  return 0;
}
