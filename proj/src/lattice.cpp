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

#include "ortholoc/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "ortholoc/caps.hpp"
#include "ortholoc/error.hpp"

namespace ortholoc {

namespace {

// Greatest element of `candidates` (everything must lie below it), or -1.
int greatest_of(const Poset& p, const ElementSet& candidates) {
  for (int g : candidates.elements()) {
    bool dominates = true;
    for (int x : candidates.elements()) {
      if (!p.less_equal(x, g)) {
        dominates = false;
        break;
      }
    }
    if (dominates) return g;
  }
  return -1;
}

int least_of(const Poset& p, const ElementSet& candidates) {
  for (int g : candidates.elements()) {
    bool below_all = true;
    for (int x : candidates.elements()) {
      if (!p.less_equal(g, x)) {
        below_all = false;
        break;
      }
    }
    if (below_all) return g;
  }
  return -1;
}

struct TableBuild {
  bool ok = false;
  std::vector<int> meet, join;
  int bad_a = 0, bad_b = 0;
  bool missing_meet = false;
};

TableBuild try_tables(const Poset& p) {
  TableBuild t;
  int n = p.n;
  t.meet.assign(static_cast<std::size_t>(n) * n, -1);
  t.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      ElementSet lower(n), upper(n);
      for (int x = 0; x < n; ++x) {
        if (p.less_equal(x, a) && p.less_equal(x, b)) lower.insert(x);
        if (p.less_equal(a, x) && p.less_equal(b, x)) upper.insert(x);
      }
      int m = greatest_of(p, lower);
      if (m < 0) {
        t.bad_a = a;
        t.bad_b = b;
        t.missing_meet = true;
        return t;
      }
      int j = least_of(p, upper);
      if (j < 0) {
        t.bad_a = a;
        t.bad_b = b;
        t.missing_meet = false;
        return t;
      }
      t.meet[static_cast<std::size_t>(a) * n + b] = m;
      t.meet[static_cast<std::size_t>(b) * n + a] = m;
      t.join[static_cast<std::size_t>(a) * n + b] = j;
      t.join[static_cast<std::size_t>(b) * n + a] = j;
    }
  }
  t.ok = true;
  return t;
}

}  // namespace

LatticePtr build_lattice(Poset p) {
  TableBuild t = try_tables(p);
  if (!t.ok) {
    fail(Errc::not_a_lattice,
         std::string("pair (") + std::to_string(t.bad_a) + ", " +
             std::to_string(t.bad_b) + ") has no " +
             (t.missing_meet ? "meet" : "join"),
         {t.bad_a, t.bad_b});
  }
  auto l = std::make_shared<Lattice>();
  l->poset = std::move(p);
  l->meet_table = std::move(t.meet);
  l->join_table = std::move(t.join);
  // A finite lattice is bounded: 0 = meet of everything, 1 = join.
  int bottom = 0, top = 0;
  for (int x = 1; x < l->poset.n; ++x) {
    bottom = l->meet(bottom, x);
    top = l->join(top, x);
  }
  l->bottom = bottom;
  l->top = top;
  return l;
}

bool same_host(const Lattice& a, const Lattice& b) {
  return &a == &b || (a.poset.n == b.poset.n && a.poset.leq == b.poset.leq);
}

PropertyCheck is_distributive(const Lattice& l) {
  int n = l.size();
  PropertyCheck out;
  bool dual_holds = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          if (out.holds) {
            out.holds = false;
            out.witness = TripleWitness{a, b, c};
          }
        }
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), l.join(a, c))) {
          dual_holds = false;
        }
      }
    }
  }
  internal_check(out.holds == dual_holds,
                 "distributive identity disagrees with its dual");
  return out;
}

PropertyCheck is_modular(const Lattice& l) {
  int n = l.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!l.leq(c, a)) continue;
        if (l.join(l.meet(a, b), c) != l.meet(a, l.join(b, c))) {
          return {false, TripleWitness{a, b, c}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

CancellationResult cancellation_laws(const Lattice& l) {
  int n = l.size();
  CancellationResult out;
  for (int a = 0; a < n && (out.cancellation || out.modular_cancellation);
       ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a == b) continue;
        if (l.meet(a, c) != l.meet(b, c) || l.join(a, c) != l.join(b, c)) {
          continue;
        }
        if (out.cancellation) {
          out.cancellation = false;
          out.cancellation_witness = TripleWitness{a, b, c};
        }
        if (out.modular_cancellation && l.leq(a, b)) {
          out.modular_cancellation = false;
          out.modular_cancellation_witness = TripleWitness{a, b, c};
        }
      }
    }
  }
  return out;
}

namespace {

bool incomparable(const Lattice& l, int a, int b) {
  return !l.leq(a, b) && !l.leq(b, a);
}

}  // namespace

std::optional<SublatticeWitness> find_forbidden_sublattice(
    const Lattice& l, SublatticeKind kind) {
  int n = l.size();
  if (kind == SublatticeKind::pentagon) {
    for (int lower = 0; lower < n; ++lower) {
      for (int upper = 0; upper < n; ++upper) {
        if (!l.leq(lower, upper) || lower == upper) continue;
        for (int side = 0; side < n; ++side) {
          if (!incomparable(l, side, lower) || !incomparable(l, side, upper)) {
            continue;
          }
          int z = l.meet(side, lower);
          if (l.meet(side, upper) != z) continue;
          int o = l.join(side, lower);
          if (l.join(side, upper) != o) continue;
          SublatticeWitness w{SublatticeKind::pentagon,
                              {z, lower, upper, side, o}};
          internal_check(z != lower && z != side && o != upper && o != side,
                         "pentagon witness roles collapsed");
          return w;
        }
      }
    }
    return std::nullopt;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!incomparable(l, x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (!incomparable(l, x, z) || !incomparable(l, y, z)) continue;
        int m = l.meet(x, y);
        if (l.meet(x, z) != m || l.meet(y, z) != m) continue;
        int o = l.join(x, y);
        if (l.join(x, z) != o || l.join(y, z) != o) continue;
        return SublatticeWitness{SublatticeKind::diamond, {m, x, y, z, o}};
      }
    }
  }
  return std::nullopt;
}

ElementSet complements_of(const Lattice& l, int a) {
  ElementSet out(l.size());
  for (int x = 0; x < l.size(); ++x) {
    if (l.meet(a, x) == l.bottom && l.join(a, x) == l.top) out.insert(x);
  }
  return out;
}

namespace {

// Complement of x within [a, b], if any.
bool has_relative_complement(const Lattice& l, int a, int b, int x) {
  for (int y = 0; y < l.size(); ++y) {
    if (l.meet(x, y) == a && l.join(x, y) == b) return true;
  }
  return false;
}

}  // namespace

Complementedness complementedness(const Lattice& l) {
  int n = l.size();
  Complementedness out;
  out.complemented = true;
  for (int a = 0; a < n && out.complemented; ++a) {
    if (!has_relative_complement(l, l.bottom, l.top, a)) out.complemented = false;
  }
  out.sectionally = true;
  for (int b = 0; b < n && out.sectionally; ++b) {
    for (int a = 0; a < n && out.sectionally; ++a) {
      if (!l.leq(a, b)) continue;
      if (!has_relative_complement(l, l.bottom, b, a)) out.sectionally = false;
    }
  }
  out.relatively = true;
  for (int a = 0; a < n && out.relatively; ++a) {
    for (int b = 0; b < n && out.relatively; ++b) {
      if (!l.leq(a, b)) continue;
      for (int x : interval(l.poset, a, b).elements()) {
        if (!has_relative_complement(l, a, b, x)) {
          out.relatively = false;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

// Quantifies sup/inf existence over every subset; feasible for small n only.
bool complete_by_quantification(const Lattice& l) {
  int n = l.size();
  std::vector<std::uint32_t> up(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> down(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (l.leq(x, y)) {
        up[static_cast<std::size_t>(x)] |= std::uint32_t{1} << y;
        down[static_cast<std::size_t>(y)] |= std::uint32_t{1} << x;
      }
    }
  }
  std::uint32_t all = (n == 32) ? ~std::uint32_t{0}
                                : ((std::uint32_t{1} << n) - 1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::uint32_t ub = all, lb = all;
    for (int x = 0; x < n; ++x) {
      if (s & (std::uint64_t{1} << x)) {
        ub &= up[static_cast<std::size_t>(x)];
        lb &= down[static_cast<std::size_t>(x)];
      }
    }
    bool sup = false, inf = false;
    for (int x = 0; x < n && !(sup && inf); ++x) {
      std::uint32_t bit = std::uint32_t{1} << x;
      if ((ub & bit) && (ub & ~up[static_cast<std::size_t>(x)]) == 0) sup = true;
      if ((lb & bit) && (lb & ~down[static_cast<std::size_t>(x)]) == 0) inf = true;
    }
    if (!sup || !inf) return false;
  }
  return true;
}

}  // namespace

Atomicity atomicity(const Lattice& l) {
  Atomicity out;
  ElementSet atom_set = atoms(l.poset);
  out.atomic = true;
  for (int a = 0; a < l.size(); ++a) {
    if (a == l.bottom) continue;
    bool bounded_below = false;
    for (int p : atom_set.elements()) {
      if (l.leq(p, a)) {
        bounded_below = true;
        break;
      }
    }
    if (!bounded_below) {
      out.atomic = false;
      break;
    }
  }
  out.atomistic = true;
  for (int a = 0; a < l.size(); ++a) {
    int j = l.bottom;
    for (int p : atom_set.elements()) {
      if (l.leq(p, a)) j = l.join(j, p);
    }
    if (j != a) {
      out.atomistic = false;
      break;
    }
  }
  out.complete = l.size() <= kCompletenessQuantifyLimit
                     ? complete_by_quantification(l)
                     : true;  // every finite lattice is complete
  return out;
}

namespace {

LatticePtr try_bounded_lattice(int n, const std::vector<std::uint16_t>& mid_down,
                               int m) {
  // Index layout: 0 is the bottom, middle i maps to i + 1, n - 1 is the top.
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  auto set = [&](int a, int b) { leq[static_cast<std::size_t>(a) * n + b] = 1; };
  for (int a = 0; a < n; ++a) {
    set(a, a);
    set(0, a);
    set(a, n - 1);
  }
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      if (mid_down[static_cast<std::size_t>(j)] & (std::uint16_t{1} << i)) {
        set(i + 1, j + 1);
      }
    }
  }
  Poset p;
  p.n = n;
  p.leq = std::move(leq);
  TableBuild t = try_tables(p);
  if (!t.ok) return nullptr;
  auto l = std::make_shared<Lattice>();
  l->poset = std::move(p);
  l->meet_table = std::move(t.meet);
  l->join_table = std::move(t.join);
  l->bottom = 0;
  l->top = n - 1;
  return l;
}

// Enumerates every labeled poset on m elements whose identity labeling is a
// linear extension: each element is maximal when inserted, its strict
// down-set a down-closed subset of what exists so far.
template <typename Fn>
void middle_poset_dfs(int m, int k, std::vector<std::uint16_t>& down, Fn&& emit) {
  if (k == m) {
    emit(down);
    return;
  }
  std::uint16_t universe = static_cast<std::uint16_t>((1u << k) - 1);
  for (std::uint32_t d = 0;; ++d) {
    std::uint16_t ds = static_cast<std::uint16_t>(d);
    bool closed = true;
    for (int j = 0; j < k && closed; ++j) {
      if ((ds & (std::uint16_t{1} << j)) &&
          (down[static_cast<std::size_t>(j)] & ~ds)) {
        closed = false;
      }
    }
    if (closed) {
      down.push_back(static_cast<std::uint16_t>(ds | (1u << k)));
      middle_poset_dfs(m, k + 1, down, emit);
      down.pop_back();
    }
    if (ds == universe) break;
  }
}

}  // namespace

std::vector<LatticePtr> enumerate_lattices(int n) {
  require(n >= 1 && n <= enumeration_cap(), Errc::size_cap_exceeded,
          "lattice enumeration capped at n <= " +
              std::to_string(enumeration_cap()));
  std::map<std::vector<std::uint8_t>, LatticePtr> classes;
  if (n <= 2) {
    std::vector<std::uint16_t> empty;
    LatticePtr l = try_bounded_lattice(n, empty, 0);
    internal_check(l != nullptr, "tiny chain failed to build");
    classes.emplace(canonical_form(l->poset), l);
  } else {
    int m = n - 2;
    std::vector<std::uint16_t> down;
    middle_poset_dfs(m, 0, down, [&](const std::vector<std::uint16_t>& mid) {
      LatticePtr l = try_bounded_lattice(n, mid, m);
      if (l == nullptr) return;
      classes.emplace(canonical_form(l->poset), l);
    });
  }
  std::vector<LatticePtr> out;
  out.reserve(classes.size());
  for (auto& [key, value] : classes) out.push_back(value);
  return out;
}

}  // namespace ortholoc
