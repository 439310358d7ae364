#pragma once

// Cycle factors in the odd graph and the middle levels graph over the ground
// set {1,...,2k+1}. Every zero-flaw path spans one column of the two-flip
// step; reading the column's paths (and the intermediate one-flip paths) as
// subsets yields a cycle of length 2k+1 in the odd graph, and doubling that
// cycle through complements yields one of length 4k+2 in the middle levels
// graph. verify_factor certifies a factor against the target graph.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "flawshift/generator.hpp"
#include "flawshift/oracle.hpp"

namespace flawshift {

// Sorted subset of a small integer ground set. A 64-bit mask backs the
// disjointness/containment tests whenever all elements fit.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (int e : elems_) {
      assert(e >= 1);
      if (e <= 64)
        mask_ |= std::uint64_t{1} << (e - 1);
      else
        compact_ = false;
    }
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }

  bool contains(int e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
  }

  bool disjoint_with(const VertexSet& o) const {
    if (compact_ && o.compact_) return (mask_ & o.mask_) == 0;
    for (int e : elems_)
      if (o.contains(e)) return false;
    return true;
  }

  bool strict_subset_of(const VertexSet& o) const {
    if (size() >= o.size()) return false;
    if (compact_ && o.compact_) return (mask_ & ~o.mask_) == 0;
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
  }

  VertexSet complement_in(int ground) const {
    std::vector<int> out;
    out.reserve(ground - size());
    for (int e = 1; e <= ground; ++e)
      if (!contains(e)) out.push_back(e);
    return VertexSet(std::move(out));
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(elems_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.elems_ == b.elems_; }
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.elems_ <=> b.elems_; }

 private:
  std::vector<int> elems_;
  std::uint64_t mask_ = 0;
  bool compact_ = true;
};

enum class GraphKind { odd, middle_levels };

struct FactorCycle {
  std::vector<VertexSet> vertices;
};

struct CycleFactor {
  std::vector<FactorCycle> cycles;
  GraphKind kind = GraphKind::odd;
  int k = 0;
};

// The subset encoded by a path: element i is present iff step i is an
// Up-step.
inline VertexSet path_to_set(const LatticePath& x) {
  std::vector<int> elems;
  elems.reserve(x.up_count());
  for (int i = 1; i <= x.size(); ++i)
    if (x.step(i) == Step::Up) elems.push_back(i);
  return VertexSet(std::move(elems));
}

// The odd-graph cycle of a zero-flaw path x: alternate the column paths
// x^0, x^1, ..., x^k (as k-subsets of [2k]) with the complements of the
// intermediate one-flip paths, each topped up with the extra element 2k+1.
// Consecutive vertices are disjoint, cyclically: the column ends at the
// mirror path, whose subset is the complement of x^0 within [2k].
inline FactorCycle odd_cycle(const LatticePath& origin) {
  if (!origin.balanced() || origin.flaws() != 0)
    throw domain_error("odd_cycle: path must have zero flaws");
  const int n = origin.size();
  FactorCycle cycle;
  cycle.vertices.reserve(n + 1);

  std::vector<char> member(n + 1, 0);
  for (int i = 1; i <= n; ++i) member[i] = origin.step(i) == Step::Up;
  auto current = [&]() {
    std::vector<int> elems;
    for (int i = 1; i <= n; ++i)
      if (member[i]) elems.push_back(i);
    return VertexSet(std::move(elems));
  };

  cycle.vertices.push_back(current());
  ColumnIterator it(origin);
  while (auto delta = it.next()) {
    member[delta->down_flip] = 1;  // intermediate path, one Up-step richer
    std::vector<int> elems;
    elems.reserve(n / 2 + 1);
    for (int i = 1; i <= n; ++i)
      if (!member[i]) elems.push_back(i);
    elems.push_back(n + 1);
    cycle.vertices.push_back(VertexSet(std::move(elems)));
    member[delta->up_flip] = 0;
    cycle.vertices.push_back(current());
  }
  return cycle;
}

// One cycle per zero-flaw path: C_k vertex-disjoint cycles of length 2k+1
// covering every k-subset of [2k+1].
inline CycleFactor odd_factor(int k) {
  if (k < 1) throw domain_error("odd_factor: k must be at least 1");
  CycleFactor fac;
  fac.kind = GraphKind::odd;
  fac.k = k;
  RowOrder rows = lex_zero_flaw_order(k);
  while (auto x0 = rows()) fac.cycles.push_back(odd_cycle(*x0));
  return fac;
}

// Doubles an odd-length cycle (x^1,...,x^l) of the odd graph into the
// length-2l middle-levels cycle that walks the cycle twice, complementing
// every second vertex: (x^1, ~x^2, x^3, ..., x^l, ~x^1, x^2, ..., ~x^l).
// Odd length makes the complemented positions cover each vertex exactly once
// across the two rounds.
inline FactorCycle middle_levels_double(const FactorCycle& c) {
  const std::size_t len = c.vertices.size();
  if (len < 3 || len % 2 == 0)
    throw domain_error("middle_levels_double: cycle length must be odd and at least 3");
  const int k = c.vertices.front().size();
  const int ground = 2 * k + 1;
  FactorCycle out;
  out.vertices.reserve(2 * len);
  for (std::size_t j = 0; j < 2 * len; ++j) {
    const VertexSet& v = c.vertices[j % len];
    out.vertices.push_back(j % 2 == 0 ? v : v.complement_in(ground));
  }
  return out;
}

// C_k cycles of length 4k+2 covering all k- and (k+1)-subsets of [2k+1].
inline CycleFactor middle_factor(int k) {
  CycleFactor fac = odd_factor(k);
  fac.kind = GraphKind::middle_levels;
  for (FactorCycle& c : fac.cycles) c = middle_levels_double(c);
  return fac;
}

inline bool factor_adjacent(GraphKind kind, const VertexSet& a, const VertexSet& b) {
  return kind == GraphKind::odd ? a.disjoint_with(b)
                                : a.strict_subset_of(b) || b.strict_subset_of(a);
}

// Full coverage verification builds one presence bit per vertex of the
// graph, so it is only offered up to this k; beyond it verify_factor checks
// per-cycle properties and the vertex count arithmetic only.
inline constexpr int kCoverageCheckMaxK = 12;

struct FactorReport {
  bool pass = false;
  std::size_t cycle_count = 0;
  std::size_t cycle_length = 0;  // uniform length; 0 when cycles disagree
  bool coverage_checked = false;
  std::uint64_t vertices_seen = 0;
  std::uint64_t graph_order = 0;
  std::string first_violation;  // empty when pass

  std::string summary() const {
    std::string out = pass ? "pass" : "fail";
    out += ": " + std::to_string(cycle_count) + " cycles x length " +
           std::to_string(cycle_length) + ", ";
    out += coverage_checked ? "coverage " : "count ";
    out += std::to_string(vertices_seen) + "/" + std::to_string(graph_order);
    if (!coverage_checked) out += " (coverage map skipped at this k)";
    if (!pass) out += "; " + first_violation;
    return out;
  }
};

// Checks cycle-length uniformity, adjacency of consecutive vertices
// (cyclically) in the target graph, global vertex distinctness, and coverage
// of the full vertex set. Violations are reported, not thrown.
inline FactorReport verify_factor(const CycleFactor& fac) {
  FactorReport rep;
  rep.cycle_count = fac.cycles.size();
  const int k = fac.k;
  const int ground = 2 * k + 1;
  const bool middle = fac.kind == GraphKind::middle_levels;
  rep.graph_order = (middle ? 2 : 1) * binomial_exact(ground, k);
  rep.coverage_checked = k <= kCoverageCheckMaxK;

  auto fail = [&](std::string msg) {
    if (rep.first_violation.empty()) rep.first_violation = std::move(msg);
  };

  // Pascal table for the colex rank of a sorted subset; ranks index the
  // per-size presence bitmaps.
  std::vector<std::vector<std::uint64_t>> pascal;
  std::vector<std::vector<bool>> seen(2);
  if (rep.coverage_checked) {
    pascal.assign(ground + 1, std::vector<std::uint64_t>(k + 2, 0));
    for (int n = 0; n <= ground; ++n) {
      pascal[n][0] = 1;
      for (int r = 1; r <= k + 1 && r <= n; ++r)
        pascal[n][r] = pascal[n - 1][r - 1] + (r <= n - 1 ? pascal[n - 1][r] : 0);
    }
    seen[0].assign(binomial_exact(ground, k), false);
    if (middle) seen[1].assign(binomial_exact(ground, k + 1), false);
  }
  auto rank_of = [&](const VertexSet& v) {
    std::uint64_t r = 0;
    const auto& e = v.elements();
    for (std::size_t i = 0; i < e.size(); ++i) r += pascal[e[i] - 1][i + 1];
    return r;
  };

  for (std::size_t ci = 0; ci < fac.cycles.size(); ++ci) {
    const auto& verts = fac.cycles[ci].vertices;
    if (ci == 0)
      rep.cycle_length = verts.size();
    else if (verts.size() != rep.cycle_length)
      fail("cycle " + std::to_string(ci) + " has length " + std::to_string(verts.size()) +
           ", expected " + std::to_string(rep.cycle_length));

    for (std::size_t vi = 0; vi < verts.size(); ++vi) {
      const VertexSet& v = verts[vi];
      const bool size_ok = middle ? (v.size() == k || v.size() == k + 1) : v.size() == k;
      if (!size_ok || (!v.elements().empty() && v.elements().back() > ground)) {
        fail("cycle " + std::to_string(ci) + " vertex " + v.to_string() +
             " is not a vertex of the graph");
        continue;
      }
      const VertexSet& next = verts[(vi + 1) % verts.size()];
      if (!factor_adjacent(fac.kind, v, next))
        fail("cycle " + std::to_string(ci) + ": " + v.to_string() + " and " + next.to_string() +
             " are not adjacent");
      ++rep.vertices_seen;
      if (rep.coverage_checked) {
        auto& bitmap = seen[v.size() == k ? 0 : 1];
        const std::uint64_t r = rank_of(v);
        if (bitmap[r])
          fail("vertex " + v.to_string() + " appears more than once");
        else
          bitmap[r] = true;
      }
    }
    if (!rep.coverage_checked) {
      // per-cycle distinctness still holds without the global bitmap
      std::vector<VertexSet> sorted(verts);
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end())
        fail("cycle " + std::to_string(ci) + " repeats vertex " + dup->to_string());
    }
  }

  if (rep.vertices_seen != rep.graph_order)
    fail("factor has " + std::to_string(rep.vertices_seen) + " vertices, graph has " +
         std::to_string(rep.graph_order));
  rep.pass = rep.first_violation.empty();
  return rep;
}

}  // namespace flawshift
