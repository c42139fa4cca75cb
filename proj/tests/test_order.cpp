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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "common.hpp"
#include "ortholoc/order.hpp"

using namespace ortholoc;
using namespace ortholoc::testing;

namespace {

Poset antichain(int n) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return validate_poset(n, std::move(m));
}

Poset permuted(const Poset& p, const std::vector<int>& perm) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(p.n) * p.n, 0);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (p.less_equal(i, j)) {
        m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * p.n +
          perm[static_cast<std::size_t>(j)]] = 1;
      }
    }
  }
  return validate_poset(p.n, std::move(m));
}

}  // namespace

TEST_CASE("validate_poset accepts antichains and the diamond order") {
  CHECK(antichain(3).n == 3);
  CHECK(make_m3()->size() == 5);
}

TEST_CASE("validate_poset rejects each axiom violation with a witness") {
  // missing reflexivity
  std::vector<std::uint8_t> m(9, 0);
  m[0 * 3 + 0] = 1;
  m[1 * 3 + 1] = 1;
  CHECK_THROWS_AS(validate_poset(3, m), Error);

  // antisymmetry: 0 <= 1 and 1 <= 0
  m[2 * 3 + 2] = 1;
  m[0 * 3 + 1] = 1;
  m[1 * 3 + 0] = 1;
  try {
    validate_poset(3, m);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::antisymmetry_violation);
    CHECK(e.witness() == std::vector<int>{0, 1});
  }

  // transitivity: 0 <= 1 <= 2 but not 0 <= 2
  m[1 * 3 + 0] = 0;
  m[1 * 3 + 2] = 1;
  try {
    validate_poset(3, m);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::transitivity_violation);
    CHECK(e.witness() == std::vector<int>{0, 1, 2});
  }

  CHECK_THROWS_AS(validate_poset(0, {}), Error);
}

TEST_CASE("down sets and ideals") {
  LatticePtr m3 = make_m3();
  CHECK(down_set(m3->poset, 4).count() == 5);
  CHECK(down_set(m3->poset, 1).elements() == std::vector<int>{0, 1});

  LatticePtr n5 = make_n5();
  CHECK(down_set(n5->poset, 2).elements() == std::vector<int>{0, 1, 2});

  ElementSet ideal(5);
  ideal.insert(0);
  ideal.insert(1);
  CHECK(is_poset_ideal(m3->poset, ideal));
  ElementSet not_ideal(5);
  not_ideal.insert(1);
  CHECK_FALSE(is_poset_ideal(m3->poset, not_ideal));
  ElementSet n5_ideal(5);
  n5_ideal.insert(0);
  n5_ideal.insert(1);
  n5_ideal.insert(3);
  CHECK(is_poset_ideal(n5->poset, n5_ideal));

  // principal ideals are ideals, on every corpus lattice
  for (int n = 1; n <= 5; ++n) {
    for (const LatticePtr& l : enumerate_lattices(n)) {
      for (int a = 0; a < l->size(); ++a) {
        CHECK(is_poset_ideal(l->poset, down_set(l->poset, a)));
      }
    }
  }
}

TEST_CASE("intervals") {
  LatticePtr n5 = make_n5();
  CHECK(interval(n5->poset, 0, 2).elements() == std::vector<int>{0, 1, 2});
  CHECK(interval(n5->poset, 3, 3).elements() == std::vector<int>{3});
  LatticePtr m3 = make_m3();
  CHECK(interval(m3->poset, 0, 4).count() == 5);
  CHECK_THROWS_AS(interval(m3->poset, 1, 2), Error);

  // [bottom, top] is the whole carrier on every bounded poset
  for (int n = 1; n <= 6; ++n) {
    for (const LatticePtr& l : enumerate_lattices(n)) {
      CHECK(interval(l->poset, l->bottom, l->top).count() == l->size());
    }
  }
}

TEST_CASE("atoms") {
  CHECK(atoms(make_m3()->poset).elements() == std::vector<int>{1, 2, 3});
  CHECK(atoms(make_chain(3)->poset).elements() == std::vector<int>{1});
  CHECK(atoms(make_div4()->poset).elements() == std::vector<int>{1});
  CHECK_THROWS_AS(atoms(antichain(2)), Error);

  // every atom has only the bottom strictly below it
  for (const LatticePtr& l : enumerate_lattices(6)) {
    for (int x : atoms(l->poset).elements()) {
      for (int y = 0; y < l->size(); ++y) {
        if (l->poset.less(y, x)) CHECK(y == l->bottom);
      }
    }
  }
}

TEST_CASE("bounds") {
  PosetBounds b = bounds(make_m3()->poset);
  CHECK(b.bottom == 0);
  CHECK(b.top == 4);
  PosetBounds none = bounds(antichain(2));
  CHECK_FALSE(none.bottom.has_value());
  CHECK_FALSE(none.top.has_value());
  PosetBounds n5b = bounds(make_n5()->poset);
  CHECK(n5b.bottom == 0);
  CHECK(n5b.top == 4);
}

TEST_CASE("covers") {
  auto chain_covers = covers(make_chain(3)->poset);
  CHECK(chain_covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(covers(make_m3()->poset).size() == 6);
  CHECK(covers(make_n5()->poset).size() == 5);
}

TEST_CASE("canonical form separates isomorphism classes") {
  LatticePtr m3 = make_m3();
  Poset relabeled = permuted(m3->poset, {0, 3, 1, 2, 4});
  CHECK(canonical_form(m3->poset) == canonical_form(relabeled));
  CHECK(canonical_form(m3->poset) != canonical_form(make_n5()->poset));
  CHECK(canonical_form(make_chain(3)->poset) != canonical_form(antichain(3)));
}

TEST_CASE("canonical form is permutation invariant") {
  std::mt19937 rng(12345);
  std::vector<Poset> pool;
  for (int n = 2; n <= 7; ++n) {
    for (const LatticePtr& l : enumerate_lattices(n)) pool.push_back(l->poset);
  }
  pool.push_back(antichain(5));
  for (int trial = 0; trial < 1000; ++trial) {
    const Poset& p = pool[rng() % pool.size()];
    std::vector<int> perm(static_cast<std::size_t>(p.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(p) == canonical_form(permuted(p, perm)));
  }
}

TEST_CASE("poset_from_covers closes transitively and rejects cycles") {
  Poset p = poset_from_covers(3, {{0, 1}, {1, 2}});
  CHECK(p.less_equal(0, 2));
  CHECK_THROWS_AS(poset_from_covers(2, {{0, 1}, {1, 0}}), Error);
}
