// Acceptance suite: every release-gating property in one binary, one
// pass/fail line per criterion. Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "flawshift/flawshift.hpp"

namespace {

using namespace flawshift;
using clock_type = std::chrono::steady_clock;

std::uint64_t g_sink = 0;  // defeats dead-code elimination in timing loops

double ns_since(clock_type::time_point t0) {
  return static_cast<double>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(clock_type::now() - t0).count());
}

struct Criterion {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

std::vector<Criterion> g_rows;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  g_rows.push_back({id, title, pass, detail});
}

void merge(int id, const std::string& title, const std::vector<CheckResult>& results,
           std::string extra = "") {
  bool pass = true;
  std::string detail;
  for (const auto& r : results) {
    if (r.pass) continue;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += r.name + ": " + r.detail;
  }
  if (pass) detail = extra.empty() ? "zero violations" : extra;
  report(id, title, pass, detail);
}

// 1. Every flaw class of the 2k-step paths has exactly C_k members, k=1..10,
//    in under 30 seconds total.
void criterion_flaw_classes() {
  const auto t0 = clock_type::now();
  std::vector<CheckResult> results;
  for (int k = 1; k <= 10; ++k) results.push_back(check_flaw_classes(k, 10));
  const double seconds = ns_since(t0) / 1e9;
  char buf[96];
  std::snprintf(buf, sizeof buf, "k=1..10 in %.2f s (limit 30 s)", seconds);
  results.push_back({"runtime", seconds < 30.0, buf});
  merge(1, "flaw classes all of size C_k (k=1..10)", results, buf);
}

// 2. The five flip orders of the zero-flaw paths of length 6, pinned
//    exactly, via both computations.
void criterion_length6_flip_orders() {
  const std::pair<const char*, std::vector<int>> fixtures[] = {
      {"UUUDDD", {6, 2, 4, 3, 5, 1}}, {"UUDUDD", {6, 4, 5, 2, 3, 1}},
      {"UUDDUD", {4, 2, 3, 1, 6, 5}}, {"UDUUDD", {2, 1, 6, 4, 5, 3}},
      {"UDUDUD", {2, 1, 4, 3, 6, 5}},
  };
  bool pass = true;
  std::string detail = "all five orders exact";
  for (const auto& [text, entries] : fixtures) {
    const LatticePath x = LatticePath::parse(text);
    const FlipPermutation expected{entries};
    if (pi_direct(x) != expected || pi_recursive(x) != expected) {
      pass = false;
      detail = std::string("mismatch at ") + text;
      break;
    }
  }
  report(2, "length-6 flip orders", pass, detail);
}

// 3. The two-flip step is a bijection between consecutive flaw classes that
//    changes exactly two positions, raises the flaw count by one, and is
//    undone by its inverse; exhaustive for k<=8.
void criterion_two_flip_step() {
  std::vector<CheckResult> results;
  for (int k = 1; k <= 8; ++k) results.push_back(check_step_bijection(k, 10));
  merge(3, "two-flip step bijection (k<=8)", results);
}

// 4. The single-flip maps form two inverse pairs and flip positions as close
//    together as possible; exhaustive for k<=8.
void criterion_single_flip_maps() {
  std::vector<CheckResult> results;
  for (int k = 1; k <= 8; ++k) {
    results.push_back(check_single_flip_inverses(k, 10));
    results.push_back(check_flip_orderings(k, 10));
  }
  merge(4, "single-flip inverse pairs and flip ordering (k<=8)", results);
}

// 5. Origin recovery and the flip-order properties, exhaustive for k<=8 and
//    randomized at k=50 and k=200.
void criterion_origin_and_flip_order() {
  std::vector<CheckResult> results;
  for (int k = 1; k <= 8; ++k) {
    results.push_back(check_origin_recovery(k, 10));
    results.push_back(check_flip_order_properties(k, 10));
  }
  results.push_back(check_flip_order_random(50, 1000, 0x5eed0050));
  results.push_back(check_flip_order_random(200, 1000, 0x5eed0200));
  merge(5, "origin recovery and flip order (k<=8, random k=50/200)", results);
}

// 6. Dyck subpaths occupy consecutive blocks of the flip order and restrict
//    by the even/odd level rule; exhaustive for k<=6.
void criterion_subpath_blocks() {
  std::vector<CheckResult> results;
  for (int k = 1; k <= 6; ++k) results.push_back(check_subpath_restriction(k, 10));
  merge(6, "subpath blocks of the flip order (k<=6)", results);
}

double yield_ns_best(const LatticePath& origin, int passes) {
  double best = 1e300;
  for (int p = 0; p < passes; ++p) {
    ColumnIterator it(origin);
    const auto t0 = clock_type::now();
    std::uint64_t yields = 0;
    while (auto d = it.next()) {
      g_sink += static_cast<std::uint64_t>(d->up_flip);
      ++yields;
    }
    if (yields) best = std::min(best, ns_since(t0) / static_cast<double>(yields));
  }
  return best;
}

double init_ns_median(const LatticePath& origin, int reps) {
  std::vector<double> times;
  for (int rep = 0; rep < reps; ++rep) {
    const auto t0 = clock_type::now();
    ColumnIterator it(origin);
    times.push_back(ns_since(t0));
    g_sink += it.last_op_count();
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

// 7. Constant-time yields: the per-yield operation count has a k-independent
//    bound (identical measured maximum at k=1e3 and k=1e6), per-yield wall
//    clock at k=1e6 stays within 3x of k=1e3, initialization scales linearly
//    (within 2x of proportional) from 1e5 to 1e6, and a full k=1e6 delta
//    stream finishes in well under a minute.
void criterion_constant_time_yields() {
  std::mt19937_64 rng(0xC0FFEE);
  const LatticePath small = random_zero_flaw_path(1000, rng);
  const LatticePath large = random_zero_flaw_path(1000000, rng);
  const LatticePath mid = random_zero_flaw_path(100000, rng);

  auto max_ops = [](const LatticePath& origin) {
    ColumnIterator it(origin);
    std::uint64_t worst = 0;
    while (it.next()) worst = std::max(worst, it.last_op_count());
    return worst;
  };
  const std::uint64_t ops_small = max_ops(small);
  const std::uint64_t ops_large = max_ops(large);

  const double small_ns = yield_ns_best(small, 300);
  const double large_ns = yield_ns_best(large, 3);
  const double yield_ratio = large_ns / small_ns;

  const double init_mid = init_ns_median(mid, 15);
  const double init_large = init_ns_median(large, 7);
  const double init_ratio = init_large / init_mid;

  // full delta stream, formatted as it would be printed
  const auto t0 = clock_type::now();
  ColumnIterator stream(large);
  char line[32];
  while (auto d = stream.next()) {
    const int len = std::snprintf(line, sizeof line, "%d %d\n", d->up_flip, d->down_flip);
    g_sink += static_cast<std::uint64_t>(line[0]) + static_cast<std::uint64_t>(len);
  }
  const double stream_s = ns_since(t0) / 1e9;

  const bool pass = ops_small == ops_large && yield_ratio <= 3.0 && init_ratio >= 5.0 &&
                    init_ratio <= 20.0 && stream_s < 60.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "ops/yield %llu vs %llu; yield %.2f ns vs %.2f ns (ratio %.2f, limit 3); "
                "init ratio 1e5->1e6 %.1f (limit [5,20]); 1e6 delta stream %.2f s (limit 60)",
                static_cast<unsigned long long>(ops_small),
                static_cast<unsigned long long>(ops_large), small_ns, large_ns, yield_ratio,
                init_ratio, stream_s);
  report(7, "constant-time column yields", pass, buf);
}

// 8. The odd-graph and middle-levels cycle factors verify for k<=6, with the
//    k=2 shape pinned: two cycles of length 5 and two of length 10.
void criterion_cycle_factors() {
  std::vector<CheckResult> results;
  for (int k = 1; k <= 6; ++k) {
    results.push_back(check_odd_factor(k));
    results.push_back(check_middle_factor(k));
  }
  CheckResult shape{.name = "k2-shape", .pass = true, .detail = ""};
  const auto odd2 = odd_factor(2);
  const auto mid2 = middle_factor(2);
  if (odd2.cycles.size() != 2 || odd2.cycles[0].vertices.size() != 5 ||
      odd2.cycles[1].vertices.size() != 5)
    shape = {"k2-shape", false, "odd factor at k=2 is not 2 cycles of length 5"};
  else if (mid2.cycles.size() != 2 || mid2.cycles[0].vertices.size() != 10 ||
           mid2.cycles[1].vertices.size() != 10)
    shape = {"k2-shape", false, "middle factor at k=2 is not 2 cycles of length 10"};
  results.push_back(shape);
  merge(8, "odd and middle-levels cycle factors (k<=6)", results);
}

// 9. The subpath-swapping baseline is a bijection between consecutive
//    classes for k<=6, and for every k in 2..6 some input changes more than
//    two positions. The second half is stated for k>=2; exhaustive search
//    shows the smallest witnesses have k=3 (at k=2 every image differs in
//    exactly two positions), so the k=2 part cannot pass and is reported as
//    the honest failure it is.
void criterion_classic_baseline() {
  std::vector<CheckResult> results;
  for (int k = 1; k <= 6; ++k) results.push_back(check_classic_bijection(k, 10));
  for (int k = 2; k <= 6; ++k) {
    CheckResult r = check_classic_contrast(k, 10);
    r.name += "-k" + std::to_string(k);
    results.push_back(r);
  }
  merge(9, "classic baseline: bijective, and multi-position flips exist (k=2..6)", results);
}

}  // namespace

int main() {
  criterion_flaw_classes();
  criterion_length6_flip_orders();
  criterion_two_flip_step();
  criterion_single_flip_maps();
  criterion_origin_and_flip_order();
  criterion_subpath_blocks();
  criterion_constant_time_yields();
  criterion_cycle_factors();
  criterion_classic_baseline();

  int failures = 0;
  for (const auto& row : g_rows) {
    std::printf("[%s] %d %s: %s\n", row.pass ? "PASS" : "FAIL", row.id, row.title.c_str(),
                row.detail.c_str());
    failures += row.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed (sink %llu)\n", static_cast<int>(g_rows.size()) - failures,
              g_rows.size(), static_cast<unsigned long long>(g_sink));
  return failures;
}
