#pragma once

// Brute-force ground truth: exhaustive enumeration of small path spaces,
// exact Catalan/binomial counting with overflow detection, and the flaw-class
// partition behind the equal-cardinality theorem. Everything here is
// deliberately independent of the bijection implementations it is used to
// check.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "flawshift/path.hpp"

namespace flawshift {

inline constexpr int kDefaultEnumerationCap = 10;

// Exact binomial coefficient; throws std::overflow_error instead of wrapping.
inline std::uint64_t binomial_exact(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial_exact: binomial(" + std::to_string(n) + "," +
                                std::to_string(r) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t catalan(int k) {
  return binomial_exact(2 * k, k) / static_cast<std::uint64_t>(k + 1);
}

// All step sequences of the given length with exactly `ups` Up-steps, in
// ascending lexicographic order (Up < Down). The cap guards against
// accidentally exponential calls and must be raised explicitly.
inline std::vector<LatticePath> enumerate_paths(int length, int ups,
                                                int cap = kDefaultEnumerationCap) {
  if (length > 2 * cap)
    throw domain_error("enumerate_paths: length " + std::to_string(length) +
                       " exceeds the enumeration cap of 2*" + std::to_string(cap) +
                       " steps; pass a larger cap to proceed");
  std::vector<LatticePath> out;
  if (ups < 0 || ups > length) return out;
  std::vector<Step> buf(length, Step::Down);
  auto rec = [&](auto&& self, int i, int ups_left) -> void {
    if (i == length) {
      out.emplace_back(buf);
      return;
    }
    if (ups_left > 0) {
      buf[i] = Step::Up;
      self(self, i + 1, ups_left - 1);
    }
    if (length - i > ups_left) {  // a Down-step still leaves room for all Ups
      buf[i] = Step::Down;
      self(self, i + 1, ups_left);
    }
  };
  rec(rec, 0, ups);
  return out;
}

// All of L_{2k,k}.
inline std::vector<LatticePath> enumerate_lattice_paths(int k, int cap = kDefaultEnumerationCap) {
  return enumerate_paths(2 * k, k, cap);
}

// The 2k-step paths split by flaw count; classes[e] holds all paths with
// exactly e flaws.
struct FlawPartition {
  std::vector<std::vector<LatticePath>> classes;
};

struct ChungFellerReport {
  FlawPartition partition;
  std::uint64_t expected_class_size = 0;  // C_k
  bool pass = false;
};

// Partitions all binomial(2k,k) paths by flaw count and checks that every
// one of the k+1 classes has exactly C_k elements.
inline ChungFellerReport verify_chung_feller(int k, int cap = kDefaultEnumerationCap) {
  ChungFellerReport rep;
  rep.partition.classes.assign(k + 1, {});
  for (LatticePath& x : enumerate_lattice_paths(k, cap)) {
    const int e = x.flaws();
    rep.partition.classes[e].push_back(std::move(x));
  }
  rep.expected_class_size = catalan(k);
  rep.pass = true;
  for (const auto& cls : rep.partition.classes)
    if (cls.size() != rep.expected_class_size) rep.pass = false;
  return rep;
}

// Number of positions in which two equal-length paths differ.
inline int hamming(const LatticePath& a, const LatticePath& b) {
  if (a.size() != b.size()) throw domain_error("hamming: paths have different lengths");
  int out = 0;
  for (int i = 1; i <= a.size(); ++i) out += a.step(i) != b.step(i);
  return out;
}

}  // namespace flawshift
