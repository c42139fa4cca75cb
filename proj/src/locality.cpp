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

#include "ortholoc/locality.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ortholoc/caps.hpp"
#include "ortholoc/error.hpp"

namespace ortholoc {

LocalityRelation::LocalityRelation(LatticePtr host,
                                   std::vector<std::uint8_t> rel)
    : host_(std::move(host)), rel_(std::move(rel)) {
  require(host_ != nullptr, Errc::precondition_failed,
          "locality relation needs a host lattice");
  int n = host_->size();
  require(rel_.size() == static_cast<std::size_t>(n) * n, Errc::parse_error,
          "relation matrix is not n*n");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::uint8_t ij = rel_[static_cast<std::size_t>(i) * n + j];
      std::uint8_t ji = rel_[static_cast<std::size_t>(j) * n + i];
      require((ij != 0) == (ji != 0), Errc::not_symmetric,
              "relation is not symmetric", {i, j});
    }
  }
  polars_.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    ElementSet s(n);
    for (int b = 0; b < n; ++b) {
      if (related(a, b)) s.insert(b);
    }
    polars_.push_back(std::move(s));
  }
}

LocalityRelation LocalityRelation::from_pairs(
    LatticePtr host, const std::vector<std::pair<int, int>>& pairs) {
  require(host != nullptr, Errc::precondition_failed,
          "locality relation needs a host lattice");
  int n = host->size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [i, j] : pairs) {
    require(i >= 0 && i < n && j >= 0 && j < n, Errc::index_out_of_range,
            "relation pair out of range", {i, j});
    rel[static_cast<std::size_t>(i) * n + j] = 1;
    rel[static_cast<std::size_t>(j) * n + i] = 1;
  }
  return LocalityRelation(std::move(host), std::move(rel));
}

LocalityRelation LocalityRelation::disjointedness(LatticePtr host) {
  require(host != nullptr, Errc::precondition_failed,
          "locality relation needs a host lattice");
  int n = host->size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (host->meet(a, b) == host->bottom) {
        rel[static_cast<std::size_t>(a) * n + b] = 1;
      }
    }
  }
  return LocalityRelation(std::move(host), std::move(rel));
}

LocalityRelation LocalityRelation::all_true(LatticePtr host) {
  require(host != nullptr, Errc::precondition_failed,
          "locality relation needs a host lattice");
  int n = host->size();
  return LocalityRelation(std::move(host),
                          std::vector<std::uint8_t>(
                              static_cast<std::size_t>(n) * n, 1));
}

ElementSet LocalityRelation::polar(const ElementSet& s) const {
  ElementSet out = ElementSet::full(size());
  for (int x : s.elements()) out &= polar_of(x);
  return out;
}

ElementSet LocalityRelation::kernel() const {
  ElementSet out(size());
  for (int a = 0; a < size(); ++a) {
    if (related(a, a)) out.insert(a);
  }
  return out;
}

namespace {

struct GreatestSearch {
  int greatest = -1;       // -1 when absent
  int max_first = -1;      // two maximal incomparable members, when absent
  int max_second = -1;
};

GreatestSearch find_greatest(const Poset& p, const ElementSet& s) {
  GreatestSearch out;
  std::vector<int> maximal;
  for (int x : s.elements()) {
    bool is_maximal = true;
    for (int y : s.elements()) {
      if (p.less(x, y)) {
        is_maximal = false;
        break;
      }
    }
    if (is_maximal) maximal.push_back(x);
  }
  if (maximal.size() == 1) {
    out.greatest = maximal[0];
  } else if (maximal.size() >= 2) {
    out.max_first = maximal[0];
    out.max_second = maximal[1];
  }
  return out;
}

}  // namespace

CheckOutcome is_poset_locality(const LocalityRelation& r) {
  const Poset& p = r.host().poset;
  int n = r.size();

  // (antitone) a <= b implies polar(b) inside polar(a).
  bool antitone = true;
  for (int a = 0; a < n && antitone; ++a) {
    for (int b = 0; b < n && antitone; ++b) {
      if (p.less_equal(a, b) && !r.polar_of(b).is_subset_of(r.polar_of(a))) {
        antitone = false;
      }
    }
  }

  // (ideal) every polar set is downward closed.
  CheckOutcome out;
  for (int c = 0; c < n && out.holds; ++c) {
    const ElementSet& pol = r.polar_of(c);
    for (int x = 0; x < n && out.holds; ++x) {
      if (!pol.contains(x)) continue;
      for (int y = 0; y < n; ++y) {
        if (p.less_equal(y, x) && !pol.contains(y)) {
          out.holds = false;
          out.witness = Witness{"polar_not_downward_closed", {c, x, y}};
          break;
        }
      }
    }
  }

  // (double polar) the down-set of a sits inside the double polar of a.
  bool double_polar = true;
  for (int a = 0; a < n && double_polar; ++a) {
    if (!down_set(p, a).is_subset_of(r.polar(r.polar_of(a)))) {
      double_polar = false;
    }
  }

  internal_check(antitone == out.holds && out.holds == double_polar,
                 "the three poset-locality conditions disagree");
  return out;
}

CheckOutcome is_lattice_locality(const LocalityRelation& r) {
  const Lattice& l = r.host();
  int n = r.size();
  for (int a = 0; a < n; ++a) {
    const ElementSet& pol = r.polar_of(a);
    if (pol.empty()) {
      return {false, Witness{"polar_empty", {a}}};
    }
    for (int x = 0; x < n; ++x) {
      if (!pol.contains(x)) continue;
      for (int y = 0; y < n; ++y) {
        if (l.leq(y, x) && !pol.contains(y)) {
          return {false, Witness{"polar_not_downward_closed", {a, x, y}}};
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!pol.contains(x)) continue;
      for (int y = x; y < n; ++y) {
        if (!pol.contains(y)) continue;
        int j = l.join(x, y);
        if (!pol.contains(j)) {
          return {false, Witness{"polar_not_join_closed", {a, x, y, j}}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool check_join_polar(const LocalityRelation& r) {
  require(is_poset_locality(r).holds, Errc::precondition_failed,
          "join-polar identity needs a poset locality");
  const Lattice& l = r.host();
  int n = r.size();
  // Empty index set: the empty join is the bottom and the empty intersection
  // is everything, so the bottom's polar must be the full carrier.
  if (!(r.polar_of(l.bottom) == ElementSet::full(n))) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      ElementSet rhs = r.polar_of(a) & r.polar_of(b);
      if (!(r.polar_of(l.join(a, b)) == rhs)) return false;
    }
  }
  return true;
}

CheckOutcome is_separating(const LocalityRelation& r, CheckMode mode) {
  if (mode == CheckMode::chained) {
    require(is_lattice_locality(r).holds, Errc::precondition_failed,
            "separating check needs a lattice locality");
  }
  const Lattice& l = r.host();
  int n = r.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (r.related(a, b) && l.meet(a, b) != l.bottom) {
        return {false, Witness{"related_pair_meets_above_bottom", {a, b}}};
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    GreatestSearch g = find_greatest(l.poset, r.polar_of(a));
    if (g.greatest < 0) {
      Witness w{"polar_has_no_greatest_element", {a}};
      if (g.max_first >= 0) {
        w.elements.push_back(g.max_first);
        w.elements.push_back(g.max_second);
      }
      return {false, std::move(w)};
    }
  }
  return {true, std::nullopt};
}

int greatest_of_polar(const LocalityRelation& r, int a) {
  require(a >= 0 && a < r.size(), Errc::index_out_of_range,
          "element index out of range", {a});
  GreatestSearch g = find_greatest(r.host().poset, r.polar_of(a));
  if (g.greatest < 0) {
    std::vector<int> witness{a};
    if (g.max_first >= 0) {
      witness.push_back(g.max_first);
      witness.push_back(g.max_second);
    }
    fail(Errc::no_greatest_element,
         "polar set of " + std::to_string(a) + " has no greatest element",
         std::move(witness));
  }
  if (is_poset_locality(r).holds) {
    internal_check(r.polar_of(g.greatest) == r.polar(r.polar_of(a)),
                   "polar of greatest differs from polar of the polar set");
  }
  return g.greatest;
}

CheckOutcome is_strongly_separating(const LocalityRelation& r, CheckMode mode) {
  if (mode == CheckMode::chained) {
    require(is_separating(r, CheckMode::chained).holds,
            Errc::precondition_failed,
            "strong separation needs a separating locality");
  }
  const Lattice& l = r.host();
  CheckOutcome out;
  for (int a = 0; a < r.size(); ++a) {
    ElementSet dbl = r.polar(r.polar_of(a));
    GreatestSearch g = find_greatest(l.poset, dbl);
    bool greatest_is_a = g.greatest == a;
    bool inside_down = dbl.is_subset_of(down_set(l.poset, a));
    internal_check(greatest_is_a == inside_down,
                   "double-polar formulations disagree");
    if (!greatest_is_a) {
      out.holds = false;
      out.witness = g.greatest >= 0
                        ? Witness{"double_polar_greatest_mismatch",
                                  {a, g.greatest}}
                        : Witness{"double_polar_has_no_greatest", {a}};
      return out;
    }
  }
  return out;
}

CheckOutcome is_nondegenerate(const LocalityRelation& r, CheckMode mode) {
  if (mode == CheckMode::chained) {
    require(is_lattice_locality(r).holds, Errc::precondition_failed,
            "non-degeneracy check needs a lattice locality");
  }
  const Lattice& l = r.host();
  CheckOutcome kernel_form;
  for (int a = 0; a < r.size(); ++a) {
    if (r.related(a, a) && a != l.bottom) {
      kernel_form = {false, Witness{"self_related", {a}}};
      break;
    }
  }
  if (mode == CheckMode::chained) {
    bool pairwise = true;
    for (int a = 0; a < r.size() && pairwise; ++a) {
      for (int b = a; b < r.size(); ++b) {
        if (r.related(a, b) && l.meet(a, b) != l.bottom) {
          pairwise = false;
          break;
        }
      }
    }
    internal_check(kernel_form.holds == pairwise,
                   "non-degeneracy formulations disagree");
  }
  return kernel_form;
}

ClosednessStatus closedness_status(const LocalityRelation& r, CheckMode mode) {
  if (mode == CheckMode::chained) {
    require(is_separating(r, CheckMode::chained).holds,
            Errc::precondition_failed,
            "closedness status needs a separated locality lattice");
  }
  const Lattice& l = r.host();
  int n = r.size();
  ElementSet only_bottom(n);
  only_bottom.insert(l.bottom);
  ElementSet everything = ElementSet::full(n);

  ClosednessStatus out;
  for (int a = 0; a < n && out.extreme.holds; ++a) {
    if ((r.polar_of(a) == only_bottom) != (a == l.top)) {
      out.extreme = {false, Witness{"extreme", {a}}};
    }
  }
  for (int a = 0; a < n && out.closedness.holds; ++a) {
    GreatestSearch g = find_greatest(l.poset, r.polar_of(a));
    if (g.greatest < 0) {
      out.closedness = {false, Witness{"polar_has_no_greatest_element", {a}}};
      break;
    }
    if (l.meet(a, g.greatest) != l.bottom || l.join(a, g.greatest) != l.top) {
      out.closedness = {false, Witness{"not_closed", {a, g.greatest}}};
    }
  }
  for (int a = 0; a < n && out.closednessweak.holds; ++a) {
    if ((r.polar_of(a) == everything) != (a == l.bottom)) {
      out.closednessweak = {false, Witness{"closednessweak", {a}}};
    }
  }
  if (mode == CheckMode::chained) {
    internal_check(out.extreme.holds == out.closedness.holds,
                   "extreme and closedness disagree on a separated locality");
    internal_check(!out.closedness.holds || out.closednessweak.holds,
                   "closedness holds but weak closedness fails");
  }
  return out;
}

LocalityRelation intersect(const LocalityRelation& r1,
                           const LocalityRelation& r2) {
  require(same_host(r1.host(), r2.host()), Errc::host_mismatch,
          "relations live on different hosts");
  int n = r1.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t k = 0; k < rel.size(); ++k) {
    rel[k] = static_cast<std::uint8_t>(r1.matrix()[k] & r2.matrix()[k]);
  }
  LocalityRelation out(r1.host_ptr(), std::move(rel));
  if (is_lattice_locality(r1).holds && is_lattice_locality(r2).holds) {
    internal_check(is_lattice_locality(out).holds,
                   "intersection of lattice localities is not one");
  }
  return out;
}

namespace {

// All antitone involutions of the host, found by pairing elements whose
// (down, up) degree profiles are dual and checking antitonicity against the
// pairs assigned so far. Fixed points are allowed here; later axioms reject
// them where they must.
void antitone_involutions(const Lattice& l, const std::vector<int>& down_count,
                          const std::vector<int>& up_count,
                          std::vector<int>& psi,
                          std::vector<std::vector<int>>& out) {
  int n = l.size();
  int a = -1;
  for (int i = 0; i < n; ++i) {
    if (psi[static_cast<std::size_t>(i)] < 0) {
      a = i;
      break;
    }
  }
  if (a < 0) {
    out.push_back(psi);
    return;
  }
  for (int b = a; b < n; ++b) {
    if (psi[static_cast<std::size_t>(b)] >= 0) continue;
    if (down_count[static_cast<std::size_t>(b)] !=
            up_count[static_cast<std::size_t>(a)] ||
        up_count[static_cast<std::size_t>(b)] !=
            down_count[static_cast<std::size_t>(a)]) {
      continue;
    }
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      int d = psi[static_cast<std::size_t>(c)];
      if (d < 0 && c != a && c != b) continue;
      int dc = (c == a) ? b : (c == b ? a : d);
      for (auto [x, fx] : {std::pair{a, b}, std::pair{b, a}}) {
        if (l.leq(c, x) && !l.leq(fx, dc)) ok = false;
        if (l.leq(x, c) && !l.leq(dc, fx)) ok = false;
      }
    }
    if (!ok) continue;
    psi[static_cast<std::size_t>(a)] = b;
    psi[static_cast<std::size_t>(b)] = a;
    antitone_involutions(l, down_count, up_count, psi, out);
    psi[static_cast<std::size_t>(a)] = -1;
    psi[static_cast<std::size_t>(b)] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> all_antitone_involutions(const Lattice& l) {
  int n = l.size();
  std::vector<int> down_count(static_cast<std::size_t>(n)),
      up_count(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    down_count[static_cast<std::size_t>(i)] = down_set(l.poset, i).count();
    up_count[static_cast<std::size_t>(i)] = up_set(l.poset, i).count();
  }
  std::vector<std::vector<int>> out;
  std::vector<int> psi(static_cast<std::size_t>(n), -1);
  antitone_involutions(l, down_count, up_count, psi, out);
  return out;
}

std::vector<LocalityRelation> enumerate_strongly_separating(LatticePtr host) {
  require(host != nullptr, Errc::precondition_failed, "missing host lattice");
  int n = host->size();
  require(n <= kSearchCap, Errc::size_cap_exceeded,
          "relation search capped at n <= " + std::to_string(kSearchCap));
  std::vector<std::vector<int>> candidates = all_antitone_involutions(*host);

  std::map<std::vector<std::uint8_t>, LocalityRelation> found;
  for (const auto& cand : candidates) {
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (host->leq(b, cand[static_cast<std::size_t>(a)])) {
          rel[static_cast<std::size_t>(a) * n + b] = 1;
        }
      }
    }
    bool symmetric = true;
    for (int i = 0; i < n && symmetric; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rel[static_cast<std::size_t>(i) * n + j] !=
            rel[static_cast<std::size_t>(j) * n + i]) {
          symmetric = false;
          break;
        }
      }
    }
    if (!symmetric) continue;
    LocalityRelation r(host, std::move(rel));
    if (!is_poset_locality(r).holds) continue;
    if (!is_lattice_locality(r).holds) continue;
    if (!is_separating(r).holds) continue;
    if (!is_strongly_separating(r).holds) continue;
    found.emplace(r.matrix(), std::move(r));
  }
  std::vector<LocalityRelation> out;
  out.reserve(found.size());
  for (auto& [key, value] : found) out.push_back(std::move(value));
  return out;
}

LocalityClass classify(const LocalityRelation& r, CheckMode mode) {
  LocalityClass out;
  out.mode = mode;
  out.poset_locality = is_poset_locality(r);
  out.lattice_locality = is_lattice_locality(r);
  if (out.poset_locality->holds) out.join_polar = check_join_polar(r);
  if (mode == CheckMode::chained) {
    if (!out.lattice_locality->holds) return out;
    out.nondegenerate = is_nondegenerate(r, mode);
    out.separating = is_separating(r, mode);
    if (!out.separating->holds) return out;
    out.strongly_separating = is_strongly_separating(r, mode);
    ClosednessStatus cs = closedness_status(r, mode);
    out.extreme = cs.extreme;
    out.closedness = cs.closedness;
    out.closednessweak = cs.closednessweak;
    return out;
  }
  out.nondegenerate = is_nondegenerate(r, mode);
  out.separating = is_separating(r, mode);
  out.strongly_separating = is_strongly_separating(r, mode);
  ClosednessStatus cs = closedness_status(r, mode);
  out.extreme = cs.extreme;
  out.closedness = cs.closedness;
  out.closednessweak = cs.closednessweak;
  return out;
}

LocalityRelation restrict_to_sublattice(const LocalityRelation& r,
                                        const std::vector<int>& carrier) {
  const Lattice& l = r.host();
  int m = static_cast<int>(carrier.size());
  require(m >= 1, Errc::precondition_failed, "empty carrier");
  std::vector<int> position(static_cast<std::size_t>(l.size()), -1);
  for (int i = 0; i < m; ++i) {
    int e = carrier[static_cast<std::size_t>(i)];
    require(e >= 0 && e < l.size(), Errc::index_out_of_range,
            "carrier element out of range", {e});
    position[static_cast<std::size_t>(e)] = i;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int a = carrier[static_cast<std::size_t>(i)];
      int b = carrier[static_cast<std::size_t>(j)];
      require(position[static_cast<std::size_t>(l.meet(a, b))] >= 0 &&
                  position[static_cast<std::size_t>(l.join(a, b))] >= 0,
              Errc::precondition_failed,
              "carrier is not closed under meet and join", {a, b});
    }
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::string> labels;
  if (!l.poset.labels.empty()) labels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!l.poset.labels.empty()) {
      labels.push_back(l.poset.label(carrier[static_cast<std::size_t>(i)]));
    }
    for (int j = 0; j < m; ++j) {
      int a = carrier[static_cast<std::size_t>(i)];
      int b = carrier[static_cast<std::size_t>(j)];
      if (l.leq(a, b)) leq[static_cast<std::size_t>(i) * m + j] = 1;
      if (r.related(a, b)) rel[static_cast<std::size_t>(i) * m + j] = 1;
    }
  }
  LatticePtr sub = build_lattice(validate_poset(m, std::move(leq), labels));
  return LocalityRelation(std::move(sub), std::move(rel));
}

}  // namespace ortholoc
