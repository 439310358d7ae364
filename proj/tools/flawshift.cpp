// Command-line front end: column/grid generation, flip orders, origin
// recovery, cycle-factor export, the verification table, and a small
// benchmark. All output is line-oriented text.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flawshift/flawshift.hpp"

namespace {

using namespace flawshift;

int enumeration_cap() {
  if (const char* env = std::getenv("FLAWSHIFT_MAX_K")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return kDefaultEnumerationCap;
}

// "-" reads the path from standard input (first line that is not a
// '#'-comment), since paths beyond argv limits are perfectly normal here.
std::string read_path_text(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line[0] == '#') continue;
    return line;
  }
  throw domain_error("no path line on standard input");
}

void print_steps(std::span<const Step> steps, bool bits) {
  std::string line(steps.size(), '\0');
  for (std::size_t i = 0; i < steps.size(); ++i)
    line[i] = steps[i] == Step::Up ? (bits ? '1' : 'U') : (bits ? '0' : 'D');
  std::fputs(line.c_str(), stdout);
  std::fputc('\n', stdout);
}

int run_column(const std::string& text, bool delta, bool bits) {
  const LatticePath start = LatticePath::parse(text);
  ColumnIterator it(start);
  print_steps(start.steps(), bits);
  while (auto d = it.next()) {
    if (delta)
      std::printf("%d %d\n", d->up_flip, d->down_flip);
    else
      print_steps(it.working(), bits);
  }
  return 0;
}

int run_grid(int k, bool delta, bool bits) {
  sawtooth_enumerate(k, [&](const SawtoothEvent& ev) {
    if (!delta)
      print_steps(ev.path, bits);
    else if (ev.column_start)
      print_steps(ev.path, bits);
    else
      std::printf("%d %d\n", ev.up_flip, ev.down_flip);
  });
  return 0;
}

int run_pi(const std::string& text) {
  const LatticePath x = LatticePath::parse(text);
  std::puts(pi_recursive(x).to_string().c_str());
  return 0;
}

int run_origin(const std::string& text, bool bits) {
  const OriginWitness w = recover_origin(LatticePath::parse(text));
  print_steps(w.origin.steps(), bits);
  auto set_line = [](const char* label, const std::vector<int>& xs) {
    std::string line = std::string(label) + "={";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) line += ',';
      line += std::to_string(xs[i]);
    }
    std::puts((line + "}").c_str());
  };
  set_line("U", w.up_positions);
  set_line("D", w.down_positions);
  return 0;
}

// Streams one cycle at a time so large factors never sit in memory whole.
int run_factor(int k, bool middle, bool dot, const char* name) {
  static const char* palette[] = {"red",    "blue",  "forestgreen", "orange",
                                  "purple", "brown", "deepskyblue", "magenta"};
  if (dot) std::printf("graph %s_%d {\n  node [shape=box];\n", name, k);
  RowOrder rows = lex_zero_flaw_order(k);
  std::size_t ci = 0;
  while (auto x0 = rows()) {
    FactorCycle cycle = odd_cycle(*x0);
    if (middle) cycle = middle_levels_double(cycle);
    const auto& verts = cycle.vertices;
    if (dot) {
      for (std::size_t i = 0; i < verts.size(); ++i)
        std::printf("  \"%s\" -- \"%s\" [color=%s];\n", verts[i].to_string().c_str(),
                    verts[(i + 1) % verts.size()].to_string().c_str(), palette[ci % 8]);
    } else {
      std::string line;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) line += ' ';
        line += verts[i].to_string();
      }
      std::puts(line.c_str());
    }
    ++ci;
  }
  if (dot) std::puts("}");
  return 0;
}

int run_verify(int k, int jobs) {
  const auto rows = run_verification(k, enumeration_cap(), jobs);
  bool all = true;
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  for (const auto& row : rows) {
    std::printf("%-*s  %s  %s\n", static_cast<int>(width), row.name.c_str(),
                row.pass ? "pass" : "FAIL", row.detail.c_str());
    all = all && row.pass;
  }
  std::printf("%-*s  %s\n", static_cast<int>(width), "overall", all ? "pass" : "FAIL");
  return all ? 0 : 1;
}

int run_bench(int k, int reps) {
  using clock = std::chrono::steady_clock;
  auto ns_since = [](clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
  };
  std::mt19937_64 rng(20160828);
  const LatticePath origin = random_zero_flaw_path(k, rng);

  std::vector<double> init_ms, yield_ns;
  std::uint64_t checksum = 0;
  for (int rep = 0; rep < reps; ++rep) {
    const auto t0 = clock::now();
    ColumnIterator it(origin);
    init_ms.push_back(static_cast<double>(ns_since(t0)) / 1e6);
    const auto t1 = clock::now();
    std::uint64_t yields = 0;
    while (auto d = it.next()) {
      checksum += static_cast<std::uint64_t>(d->up_flip) ^ (static_cast<std::uint64_t>(d->down_flip) << 20);
      ++yields;
    }
    yield_ns.push_back(static_cast<double>(ns_since(t1)) / static_cast<double>(std::max<std::uint64_t>(yields, 1)));
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };

  // Contrast: the subpath-swapping map recomputes whole paths, so one
  // application costs O(k). Bounded by a global work budget at large k.
  const int budget = std::max(1, static_cast<int>(10'000'000 / std::max(1, 2 * k)));
  std::uint64_t applications = 0;
  LatticePath cur = origin;
  const auto t0 = clock::now();
  while (applications < static_cast<std::uint64_t>(budget)) {
    if (cur.flaws() == cur.k()) cur = origin;
    cur = apply_f_classic(cur);
    ++applications;
  }
  const double classic_ns = static_cast<double>(ns_since(t0)) / static_cast<double>(applications);

  std::printf("k %d\n", k);
  std::printf("reps %d\n", reps);
  std::printf("column_yields %d\n", k);
  std::printf("init_ms_med %.3f\n", median(init_ms));
  std::printf("init_ms_min %.3f\n", *std::min_element(init_ms.begin(), init_ms.end()));
  std::printf("init_ms_max %.3f\n", *std::max_element(init_ms.begin(), init_ms.end()));
  std::printf("yield_ns_med %.2f\n", median(yield_ns));
  std::printf("yield_ns_min %.2f\n", *std::min_element(yield_ns.begin(), yield_ns.end()));
  std::printf("yield_ns_max %.2f\n", *std::max_element(yield_ns.begin(), yield_ns.end()));
  std::printf("classic_apply_ns_avg %.1f\n", classic_ns);
  std::printf("classic_applications %llu\n", static_cast<unsigned long long>(applications));
  std::printf("checksum %llu\n", static_cast<unsigned long long>(checksum));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck paths with flaws: two-flip bijection between flaw classes, constant-time "
               "column generation, and cycle factors in odd / middle levels graphs"};
  app.require_subcommand(1);

  std::string path_text;
  int k = 0, reps = 1, jobs = 1;
  bool delta = false, bits = false, dot = false;

  auto* column = app.add_subcommand("column", "walk a flaw column from the given path");
  column->add_option("path", path_text, "start path over U/D (or 1/0); '-' reads stdin")->required();
  column->add_flag("--delta", delta, "after the start path, print 'up down' flip pairs");
  column->add_flag("--bits", bits, "print paths as 1/0 instead of U/D");

  auto* grid = app.add_subcommand("grid", "saw-tooth stream of all paths with k up-steps");
  grid->add_option("k", k, "half-length")->required()->check(CLI::NonNegativeNumber);
  grid->add_flag("--delta", delta, "full path at each column start, flip pairs within columns");
  grid->add_flag("--bits", bits, "print paths as 1/0 instead of U/D");

  auto* pi = app.add_subcommand("pi", "flip order of a zero-flaw path");
  pi->add_option("path", path_text, "zero-flaw path; '-' reads stdin")->required();

  auto* origin = app.add_subcommand("origin", "zero-flaw origin of a path and the flipped positions");
  origin->add_option("path", path_text, "path over U/D (or 1/0); '-' reads stdin")->required();
  origin->add_flag("--bits", bits, "print the origin as 1/0");

  auto* oddf = app.add_subcommand("oddfactor", "cycle factor of the odd graph, one cycle per line");
  oddf->add_option("k", k, "subset size")->required()->check(CLI::PositiveNumber);
  oddf->add_flag("--dot", dot, "emit a DOT graph with cycle edges colored by cycle");

  auto* midf = app.add_subcommand("middlefactor",
                                  "cycle factor of the middle levels graph, one cycle per line");
  midf->add_option("k", k, "subset size")->required()->check(CLI::PositiveNumber);
  midf->add_flag("--dot", dot, "emit a DOT graph with cycle edges colored by cycle");

  auto* verify = app.add_subcommand("verify", "run the property table at the given k");
  verify->add_option("k", k, "half-length")->required()->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "run property rows concurrently")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "time column initialization and per-path yields");
  bench->add_option("k", k, "half-length")->required()->check(CLI::PositiveNumber);
  bench->add_option("reps", reps, "repetitions")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (column->parsed()) return run_column(read_path_text(path_text), delta, bits);
    if (grid->parsed()) return run_grid(k, delta, bits);
    if (pi->parsed()) return run_pi(read_path_text(path_text));
    if (origin->parsed()) return run_origin(read_path_text(path_text), bits);
    if (oddf->parsed()) return run_factor(k, false, dot, "odd_factor");
    if (midf->parsed()) return run_factor(k, true, dot, "middle_factor");
    if (verify->parsed()) return run_verify(k, jobs);
    if (bench->parsed()) return run_bench(k, reps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
