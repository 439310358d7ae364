#pragma once

// Property checks tying the implementations back to the brute-force oracle.
// Each check enumerates the relevant path space exhaustively (or samples it
// at large k), stops at the first violation, and reports what it covered.
// The CLI `verify` command prints one row per check; the acceptance suite
// composes the same checks with its own parameters.

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "flawshift/factors.hpp"
#include "flawshift/flip_sequence.hpp"
#include "flawshift/generator.hpp"
#include "flawshift/oracle.hpp"

namespace flawshift {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // coverage summary, or the first violation
};

namespace detail {

inline void fail(CheckResult& r, std::string msg) {
  if (r.pass) r.detail = std::move(msg);
  r.pass = false;
}

inline std::vector<std::string> sorted_strings(const std::vector<LatticePath>& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool up_touching(const LatticePath& p, int i, int level) {
  return p.step(i) == Step::Up && (p.height(i - 1) == level || p.height(i) == level);
}

inline bool down_touching(const LatticePath& p, int i, int level) {
  return p.step(i) == Step::Down && (p.height(i - 1) == level || p.height(i) == level);
}

}  // namespace detail

// Uniformly random path with k Up- and k Down-steps.
inline LatticePath random_lattice_path(int k, std::mt19937_64& rng) {
  std::vector<Step> s(2 * k, Step::Down);
  std::fill(s.begin(), s.begin() + k, Step::Up);
  std::shuffle(s.begin(), s.end(), rng);
  return LatticePath(std::move(s));
}

// Random zero-flaw path: shuffle a balanced word, then rotate it to start
// right after a minimum of its height profile.
inline LatticePath random_zero_flaw_path(int k, std::mt19937_64& rng) {
  std::vector<Step> s(2 * k, Step::Down);
  std::fill(s.begin(), s.begin() + k, Step::Up);
  std::shuffle(s.begin(), s.end(), rng);
  int h = 0, lowest = 0, cut = 0;
  for (int i = 0; i < 2 * k; ++i) {
    h += rise(s[i]);
    if (h < lowest) {
      lowest = h;
      cut = i + 1;
    }
  }
  std::rotate(s.begin(), s.begin() + cut, s.end());
  return LatticePath(std::move(s));
}

// Enumeration count matches the closed-form binomial, and the cycle-factor
// arithmetic (2k+1)C_k = binomial(2k+1,k) holds.
inline CheckResult check_counting(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "counting", .pass = true, .detail = ""};
  const auto paths = enumerate_lattice_paths(k, cap);
  const std::uint64_t expected = binomial_exact(2 * k, k);
  if (paths.size() != expected)
    detail::fail(r, "enumerated " + std::to_string(paths.size()) + " paths, expected " +
                        std::to_string(expected));
  if (!std::is_sorted(paths.begin(), paths.end()))
    detail::fail(r, "enumeration is not in lexicographic order");
  if ((2 * k + 1) * catalan(k) != binomial_exact(2 * k + 1, k))
    detail::fail(r, "(2k+1)*C_k != binomial(2k+1,k)");
  if (r.pass) r.detail = std::to_string(paths.size()) + " paths";
  return r;
}

// Every flaw class has exactly C_k elements.
inline CheckResult check_flaw_classes(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "flaw-classes", .pass = true, .detail = ""};
  const auto rep = verify_chung_feller(k, cap);
  for (std::size_t e = 0; e < rep.partition.classes.size(); ++e)
    if (rep.partition.classes[e].size() != rep.expected_class_size)
      detail::fail(r, "class e=" + std::to_string(e) + " has " +
                          std::to_string(rep.partition.classes[e].size()) + " paths, expected " +
                          std::to_string(rep.expected_class_size));
  if (r.pass)
    r.detail = std::to_string(k + 1) + " classes x " + std::to_string(rep.expected_class_size);
  return r;
}

// mirror and reversed_complement are involutions, mirroring complements the
// flaw count, text round-trips, and the canonical decomposition reassembles.
inline CheckResult check_symmetries(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "symmetry-maps", .pass = true, .detail = ""};
  const auto paths = enumerate_lattice_paths(k, cap);
  for (const auto& x : paths) {
    if (x.mirrored().mirrored() != x || x.reversed_complement().reversed_complement() != x)
      detail::fail(r, "involution broken at " + x.to_string());
    if (x.mirrored().flaws() != k - x.flaws())
      detail::fail(r, "flaw complement broken at " + x.to_string());
    if (x.reversed_complement().flaws() != x.flaws())
      detail::fail(r, "reversed complement changes flaws of " + x.to_string());
    if (LatticePath::parse(x.to_string()) != x || LatticePath::parse(x.to_string(true)) != x)
      detail::fail(r, "text round-trip broken at " + x.to_string());
    int up_total = 0;
    for (int c = -k; c <= k; ++c) up_total += x.up_count_at(c);
    if (up_total != k) detail::fail(r, "up-step start counts do not sum to k at " + x.to_string());
    if (x.flaws() == 0 && k >= 1) {
      const auto d = canonical_decomposition(x);
      std::vector<Step> glued{Step::Up};
      glued.insert(glued.end(), d.inner.steps().begin(), d.inner.steps().end());
      glued.push_back(Step::Down);
      glued.insert(glued.end(), d.suffix.steps().begin(), d.suffix.steps().end());
      if (LatticePath(glued) != x || d.inner.flaws() != 0 || d.suffix.flaws() != 0)
        detail::fail(r, "canonical decomposition broken at " + x.to_string());
    }
    if (!r.pass) break;
  }
  if (r.pass) r.detail = std::to_string(paths.size()) + " paths";
  return r;
}

// The two inverse pairs of single-flip maps, both ways round.
inline CheckResult check_single_flip_inverses(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "single-flip-inverses", .pass = true, .detail = ""};
  const auto lower = enumerate_lattice_paths(k, cap);
  for (const auto& x : lower) {
    if (x.flaws() < k) {
      const auto up = apply_g(x);
      if (up.path.final_height() != 2 || apply_h_prime(up.path).path != x)
        detail::fail(r, "h' does not invert g at " + x.to_string());
    }
    if (x.flaws() > 0) {
      const auto up = apply_g_prime(x);
      if (up.path.final_height() != 2 || apply_h(up.path).path != x)
        detail::fail(r, "h does not invert g' at " + x.to_string());
    }
    if (!r.pass) break;
  }
  for (const auto& y : enumerate_paths(2 * k, k + 1, cap)) {
    const auto down = apply_h(y);
    if (down.path.flaws() == 0 || apply_g_prime(down.path).path != y)
      detail::fail(r, "g' does not invert h at " + y.to_string());
    const auto down2 = apply_h_prime(y);
    if (down2.path.flaws() == k || apply_g(down2.path).path != y)
      detail::fail(r, "g does not invert h' at " + y.to_string());
    if (!r.pass) break;
  }
  if (r.pass) r.detail = "both inverse pairs, both directions";
  return r;
}

// The two flipped positions are as close as possible: the Up-flip comes
// first, with no Up-step touching y=1 strictly between them (applying g then
// h), and symmetrically no Down-step touching y=0 strictly between when
// applying h then g. The h-then-g direction only applies when the image of h
// still has a successor; the excluded cases are counted.
inline CheckResult check_flip_orderings(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "flip-pair-ordering", .pass = true, .detail = ""};
  std::uint64_t excluded = 0;
  for (const auto& x : enumerate_lattice_paths(k, cap)) {
    if (x.flaws() == k) continue;
    const auto up = apply_g(x);
    const int b = up.position;
    const auto down = apply_h(up.path);
    const int a = down.position;
    if (a >= b) detail::fail(r, "up-flip not left of down-flip at " + x.to_string());
    for (int i = a + 1; i < b && r.pass; ++i)
      if (detail::up_touching(x, i, 1) || detail::up_touching(up.path, i, 1))
        detail::fail(r, "up-step touching y=1 strictly between flips of " + x.to_string());
    if (!r.pass) break;
  }
  for (const auto& y : enumerate_paths(2 * k, k + 1, cap)) {
    const auto down = apply_h(y);
    if (down.path.flaws() == k) {
      ++excluded;  // g undefined on the image; nothing to compare
      continue;
    }
    const auto up = apply_g(down.path);
    if (down.position >= up.position)
      detail::fail(r, "flip pair not ascending after h at " + y.to_string());
    for (int i = down.position + 1; i < up.position && r.pass; ++i)
      if (detail::down_touching(down.path, i, 0))
        detail::fail(r, "down-step touching y=0 strictly between flips after h at " + y.to_string());
    if (!r.pass) break;
  }
  if (r.pass) r.detail = "ok; " + std::to_string(excluded) + " max-flaw images excluded";
  return r;
}

// The two-flip step maps each flaw class bijectively onto the next one,
// changes exactly two positions, never shifts a step up, and is undone by
// its inverse.
inline CheckResult check_step_bijection(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "two-flip-step", .pass = true, .detail = ""};
  const auto rep = verify_chung_feller(k, cap);
  const auto& classes = rep.partition.classes;
  for (int e = 0; e + 1 <= k && r.pass; ++e) {
    std::vector<std::string> images;
    images.reserve(classes[e].size());
    for (const auto& x : classes[e]) {
      const auto step = apply_f(x);
      if (step.path.flaws() != e + 1)
        detail::fail(r, "flaw count not raised by one at " + x.to_string());
      if (hamming(x, step.path) != 2)
        detail::fail(r, "more than two positions changed at " + x.to_string());
      if (step.up_flip >= step.down_flip)
        detail::fail(r, "flip pair not ascending at " + x.to_string());
      if (x.step(step.up_flip) != Step::Up || x.step(step.down_flip) != Step::Down)
        detail::fail(r, "flip pair has wrong step kinds at " + x.to_string());
      for (int i = 1; i <= x.size(); ++i)
        if (i != step.up_flip && i != step.down_flip && step.path.height(i) > x.height(i))
          detail::fail(r, "a step was shifted up at " + x.to_string());
      const auto back = apply_f_inverse(step.path);
      if (back.path != x || back.up_flip != step.up_flip || back.down_flip != step.down_flip)
        detail::fail(r, "inverse does not undo the step at " + x.to_string());
      images.push_back(step.path.to_string());
      if (!r.pass) break;
    }
    std::sort(images.begin(), images.end());
    if (r.pass && images != detail::sorted_strings(classes[e + 1]))
      detail::fail(r, "image of class e=" + std::to_string(e) + " is not class e+1");
  }
  if (r.pass) r.detail = "bijective on all " + std::to_string(k) + " class pairs";
  return r;
}

// recover_origin names exactly the positions in which a path differs from
// its zero-flaw origin, and the literal two-flip step reproduces the path.
inline CheckResult check_origin_recovery(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "origin-recovery", .pass = true, .detail = ""};
  const auto paths = enumerate_lattice_paths(k, cap);
  for (const auto& x : paths) {
    const int e = x.flaws();
    const auto w = recover_origin(x);
    if (static_cast<int>(w.up_positions.size()) != e ||
        static_cast<int>(w.down_positions.size()) != e)
      detail::fail(r, "witness sets do not have size e at " + x.to_string());
    if (w.origin.flaws() != 0) detail::fail(r, "origin has flaws at " + x.to_string());
    std::vector<char> flagged(x.size() + 1, 0);
    for (int p : w.up_positions) flagged[p] = 1;
    for (int p : w.down_positions) flagged[p] = 1;
    for (int i = 1; i <= x.size(); ++i)
      if ((x.step(i) != w.origin.step(i)) != static_cast<bool>(flagged[i]))
        detail::fail(r, "witness positions are not exactly the difference at " + x.to_string());
    LatticePath cur = w.origin;
    for (int i = 0; i < e; ++i) cur = apply_f(cur).path;
    if (cur != x) detail::fail(r, "origin does not walk back to the path at " + x.to_string());
    if (!r.pass) break;
  }
  if (r.pass) r.detail = std::to_string(paths.size()) + " paths";
  return r;
}

// The flip order of every zero-flaw path is an alternating permutation, the
// linear-time computation matches the literal one within its O(k) work
// budget, and the full column ends at the mirror image.
inline CheckResult check_flip_order_properties(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "flip-order", .pass = true, .detail = ""};
  if (k > cap) throw domain_error("check_flip_order_properties: k exceeds the enumeration cap");
  std::uint64_t covered = 0;
  RowOrder rows = lex_zero_flaw_order(k);
  while (auto x0 = rows()) {
    ++covered;
    const auto p = pi_direct(*x0);
    std::vector<char> seen(2 * k + 1, 0);
    for (int v : p.entries) {
      if (v < 1 || v > 2 * k || seen[v]) detail::fail(r, "not a permutation at " + x0->to_string());
      if (v >= 1 && v <= 2 * k) seen[v] = 1;
    }
    if (!is_alternating(p)) detail::fail(r, "flip order not alternating at " + x0->to_string());
    PiStats stats;
    if (pi_recursive(*x0, &stats) != p)
      detail::fail(r, "recursive flip order differs at " + x0->to_string());
    if (stats.stack_items > 4 * static_cast<std::uint64_t>(k) + 2)
      detail::fail(r, "recursive flip order exceeded its work budget at " + x0->to_string());
    LatticePath cur = *x0;
    for (int i = 0; i < k; ++i) cur = apply_f(cur).path;
    if (cur != x0->mirrored()) detail::fail(r, "full column does not end at the mirror of " + x0->to_string());
    if (!r.pass) break;
  }
  if (r.pass) r.detail = std::to_string(covered) + " zero-flaw paths";
  return r;
}

// Randomized version of the flip-order and origin-recovery checks for k far
// beyond the enumeration cap.
inline CheckResult check_flip_order_random(int k, int samples, std::uint64_t seed) {
  CheckResult r{.name = "flip-order-random-k" + std::to_string(k), .pass = true, .detail = ""};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && r.pass; ++s) {
    const LatticePath x0 = random_zero_flaw_path(k, rng);
    const auto p = pi_direct(x0);
    PiStats stats;
    if (pi_recursive(x0, &stats) != p)
      detail::fail(r, "recursive flip order differs at sample " + std::to_string(s));
    if (!is_alternating(p)) detail::fail(r, "flip order not alternating at sample " + std::to_string(s));
    if (stats.stack_items > 4 * static_cast<std::uint64_t>(k) + 2)
      detail::fail(r, "work budget exceeded at sample " + std::to_string(s));

    const LatticePath x = random_lattice_path(k, rng);
    const auto w = recover_origin(x);
    const int e = x.flaws();
    if (static_cast<int>(w.up_positions.size()) != e ||
        static_cast<int>(w.down_positions.size()) != e || w.origin.flaws() != 0)
      detail::fail(r, "origin witness malformed at sample " + std::to_string(s));
    LatticePath cur = w.origin;
    for (int i = 0; i < e; ++i) cur = apply_f(cur).path;
    if (cur != x) detail::fail(r, "origin does not walk back at sample " + std::to_string(s));
  }
  if (r.pass) r.detail = std::to_string(samples) + " samples at k=" + std::to_string(k);
  return r;
}

// Positions of every Dyck subpath occupy a consecutive block of the flip
// order, equal to the subpath's own flip order at even levels and to its
// reversed-complement mirror at odd levels.
inline CheckResult check_subpath_restriction(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "subpath-blocks", .pass = true, .detail = ""};
  std::unordered_map<std::string, FlipPermutation> memo;
  auto pi_of = [&](const LatticePath& p) -> const FlipPermutation& {
    auto [it, fresh] = memo.try_emplace(p.to_string());
    if (fresh) it->second = pi_direct(p);
    return it->second;
  };
  std::uint64_t blocks = 0;
  RowOrder rows = lex_zero_flaw_order(k);
  if (k > cap)
    throw domain_error("check_subpath_restriction: k exceeds the enumeration cap");
  while (auto x0 = rows()) {
    const auto p = pi_of(*x0);
    for (const auto& sub : dyck_subpaths(*x0)) {
      ++blocks;
      std::vector<int> inside;
      int first_index = -1;
      for (int i = 0; i < p.size(); ++i) {
        if (p.entries[i] < sub.first || p.entries[i] > sub.last) continue;
        if (first_index == -1) first_index = i;
        if (i != first_index + static_cast<int>(inside.size())) {
          detail::fail(r, "subpath positions not consecutive in " + x0->to_string());
          break;
        }
        inside.push_back(p.entries[i] - (sub.first - 1));
      }
      const LatticePath piece = x0->subpath(sub.first, sub.last);
      std::vector<int> expected;
      if (sub.level % 2 == 0) {
        expected = pi_of(piece).entries;
      } else {
        for (int v : pi_of(piece.reversed_complement()).entries)
          expected.push_back(piece.size() + 1 - v);
      }
      if (inside != expected)
        detail::fail(r, "subpath restriction mismatch in " + x0->to_string() + " at [" +
                            std::to_string(sub.first) + "," + std::to_string(sub.last) + "]");
      if (!r.pass) break;
    }
    if (!r.pass) break;
  }
  if (r.pass) r.detail = std::to_string(blocks) + " subpath blocks";
  return r;
}

// Column iteration replays the literal two-flip step, from the top of the
// column and from any path inside it, with constant work per yield.
inline CheckResult check_column_replay(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "column-replay", .pass = true, .detail = ""};
  std::uint64_t max_ops = 0;
  for (const auto& x : enumerate_lattice_paths(k, cap)) {
    const int e = x.flaws();
    ColumnIterator it(x);
    if (it.remaining() != k - e)
      detail::fail(r, "iterator yields wrong count at " + x.to_string());
    LatticePath cur = x;
    while (auto delta = it.next()) {
      max_ops = std::max(max_ops, it.last_op_count());
      const auto step = apply_f(cur);
      if (step.up_flip != delta->up_flip || step.down_flip != delta->down_flip ||
          step.path.flaws() != delta->resulting_flaws)
        detail::fail(r, "delta differs from the literal step at " + cur.to_string());
      cur = step.path;
      if (it.snapshot() != cur) detail::fail(r, "working path differs from the literal step at " + x.to_string());
      if (!r.pass) break;
    }
    if (r.pass && e == 0) {
      const auto col = enumerate_column(x);
      if (static_cast<int>(col.size()) != k + 1 || col.back() != x.mirrored())
        detail::fail(r, "column shape wrong at " + x.to_string());
      for (std::size_t i = 1; i < col.size() && r.pass; ++i)
        if (hamming(col[i - 1], col[i]) != 2)
          detail::fail(r, "consecutive column paths differ in more than two positions at " +
                              x.to_string());
    }
    if (!r.pass) break;
  }
  if (r.pass) r.detail = "max ops per yield " + std::to_string(max_ops);
  return r;
}

// The saw-tooth stream emits every path exactly once and keeps the two-flip
// guarantee inside every column.
inline CheckResult check_sawtooth(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "sawtooth-cover", .pass = true, .detail = ""};
  if (k > cap) throw domain_error("check_sawtooth: k exceeds the enumeration cap");
  std::vector<std::string> seen;
  std::string prev;
  sawtooth_enumerate(k, [&](const SawtoothEvent& ev) {
    std::string cur(ev.path.size(), 'D');
    int ups = 0;
    for (std::size_t i = 0; i < ev.path.size(); ++i)
      if (ev.path[i] == Step::Up) {
        cur[i] = 'U';
        ++ups;
      }
    if (ups != k) detail::fail(r, "emitted path does not have k up-steps: " + cur);
    if (!ev.column_start) {
      int differing = 0;
      for (std::size_t i = 0; i < cur.size(); ++i) differing += cur[i] != prev[i];
      if (differing != 2)
        detail::fail(r, "column move changed " + std::to_string(differing) + " positions at " + cur);
      if (cur[ev.up_flip - 1] == prev[ev.up_flip - 1] || cur[ev.down_flip - 1] == prev[ev.down_flip - 1])
        detail::fail(r, "reported flip positions did not change at " + cur);
    }
    prev = cur;
    seen.push_back(std::move(cur));
  });
  const std::uint64_t expected = binomial_exact(2 * k, k);
  if (seen.size() != expected)
    detail::fail(r, "emitted " + std::to_string(seen.size()) + " paths, expected " +
                        std::to_string(expected));
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    detail::fail(r, "a path was emitted twice");
  if (r.pass) r.detail = std::to_string(seen.size()) + " paths, each exactly once";
  return r;
}

// The subpath-swapping baseline is also a bijection between consecutive
// classes.
inline CheckResult check_classic_bijection(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "classic-bijection", .pass = true, .detail = ""};
  const auto rep = verify_chung_feller(k, cap);
  const auto& classes = rep.partition.classes;
  for (int e = 0; e + 1 <= k && r.pass; ++e) {
    std::vector<std::string> images;
    for (const auto& x : classes[e]) {
      const LatticePath y = apply_f_classic(x);
      if (y.flaws() != e + 1)
        detail::fail(r, "classic map does not raise flaws by one at " + x.to_string());
      images.push_back(y.to_string());
    }
    std::sort(images.begin(), images.end());
    if (r.pass && images != detail::sorted_strings(classes[e + 1]))
      detail::fail(r, "classic image of class e=" + std::to_string(e) + " is not class e+1");
  }
  if (r.pass) r.detail = "bijective on all " + std::to_string(k) + " class pairs";
  return r;
}

// Some input moves more than two positions under the classic map (this is
// what the two-flip step improves on). Reports the worst case found.
inline CheckResult check_classic_contrast(int k, int cap = kDefaultEnumerationCap) {
  CheckResult r{.name = "classic-contrast", .pass = true, .detail = ""};
  int worst = 0;
  std::string witness;
  for (const auto& x : enumerate_lattice_paths(k, cap)) {
    if (x.flaws() == k) continue;
    const int d = hamming(x, apply_f_classic(x));
    if (d > worst) {
      worst = d;
      witness = x.to_string();
    }
  }
  r.detail = "max changed positions " + std::to_string(worst) + " at " + witness;
  if (worst <= 2) detail::fail(r, "no input changes more than two positions; max is " +
                                      std::to_string(worst));
  return r;
}

inline CheckResult check_odd_factor(int k) {
  CheckResult r{.name = "odd-factor", .pass = true, .detail = ""};
  const auto fac = odd_factor(k);
  const auto rep = verify_factor(fac);
  if (!rep.pass) detail::fail(r, rep.first_violation);
  if (rep.cycle_count != catalan(k))
    detail::fail(r, "expected C_k cycles, got " + std::to_string(rep.cycle_count));
  if (rep.cycle_length != static_cast<std::size_t>(2 * k + 1))
    detail::fail(r, "cycle length is not 2k+1");
  if (r.pass) r.detail = rep.summary();
  return r;
}

inline CheckResult check_middle_factor(int k) {
  CheckResult r{.name = "middle-factor", .pass = true, .detail = ""};
  const auto fac = middle_factor(k);
  const auto rep = verify_factor(fac);
  if (!rep.pass) detail::fail(r, rep.first_violation);
  if (rep.cycle_count != catalan(k))
    detail::fail(r, "expected C_k cycles, got " + std::to_string(rep.cycle_count));
  if (rep.cycle_length != static_cast<std::size_t>(4 * k + 2))
    detail::fail(r, "cycle length is not 4k+2");
  for (const auto& c : fac.cycles)
    for (std::size_t j = 0; j < c.vertices.size(); ++j)
      if (c.vertices[j].size() != (j % 2 == 0 ? k : k + 1)) {
        detail::fail(r, "set sizes do not alternate k, k+1");
        break;
      }
  if (r.pass) r.detail = rep.summary();
  return r;
}

// The full table behind the CLI `verify` command: one row per property at
// the given k. jobs > 1 runs rows concurrently (every check is pure).
inline std::vector<CheckResult> run_verification(int k, int cap = kDefaultEnumerationCap,
                                                 int jobs = 1) {
  std::vector<std::function<CheckResult()>> tasks = {
      [=] { return check_counting(k, cap); },
      [=] { return check_flaw_classes(k, cap); },
      [=] { return check_symmetries(k, cap); },
      [=] { return check_single_flip_inverses(k, cap); },
      [=] { return check_flip_orderings(k, cap); },
      [=] { return check_step_bijection(k, cap); },
      [=] { return check_origin_recovery(k, cap); },
      [=] { return check_flip_order_properties(k, cap); },
      [=] { return check_subpath_restriction(k, cap); },
      [=] { return check_column_replay(k, cap); },
      [=] { return check_sawtooth(k, cap); },
      [=] { return check_classic_bijection(k, cap); },
      [=] { return check_odd_factor(k); },
      [=] { return check_middle_factor(k); },
  };
  if (k >= 3) tasks.push_back([=] { return check_classic_contrast(k, cap); });

  std::vector<CheckResult> out(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < tasks.size();) out[i] = tasks[i]();
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace flawshift
