#pragma once

// Column generation. A column is the orbit x, f(x), ..., up to the all-flaw
// mirror path, where f is the two-flip step. ColumnIterator walks a column
// in worst-case constant time per path after linear-time setup; the
// saw-tooth enumerator stitches all columns together to visit every path
// with k Up-steps exactly once.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "flawshift/flip_sequence.hpp"

namespace flawshift {

// The two positions flipped by one application of the two-flip step, plus
// the flaw count of the resulting path.
struct FlipDelta {
  int up_flip = 0;
  int down_flip = 0;
  int resulting_flaws = 0;
};

// Walks the rest of a column from any starting path. Setup recovers the
// column's zero-flaw origin and its full flip order in O(k) time and space;
// after that every next() flips two steps of one working buffer in place and
// never touches more than a constant number of words.
class ColumnIterator {
 public:
  explicit ColumnIterator(const LatticePath& start) {
    if (!start.balanced()) throw domain_error("ColumnIterator: path must end on y=0");
    flaws_ = start.flaws();
    total_pairs_ = start.k();
    cursor_ = flaws_;
    working_.assign(start.steps().begin(), start.steps().end());
    perm_ = pi_recursive(recover_origin(start).origin);
  }

  // Applies one more two-flip step; nullopt once the mirror path is reached.
  std::optional<FlipDelta> next() {
    ops_last_ = 1;
    if (cursor_ >= total_pairs_) return std::nullopt;
    const int down = perm_.entries[2 * cursor_];     // Down-step that flips up
    const int up = perm_.entries[2 * cursor_ + 1];   // Up-step that flips down
    working_[down - 1] = Step::Up;
    working_[up - 1] = Step::Down;
    ++cursor_;
    ++flaws_;
    ops_last_ += 6;  // two permutation reads, two step writes, two counters
    return FlipDelta{up, down, flaws_};
  }

  // Read access to the working path; valid until the next call of next().
  std::span<const Step> working() const { return working_; }

  LatticePath snapshot() const {
    return LatticePath(std::vector<Step>(working_.begin(), working_.end()));
  }

  int remaining() const { return total_pairs_ - cursor_; }
  int flaws() const { return flaws_; }
  const FlipPermutation& permutation() const { return perm_; }

  // Basic operations performed by the most recent next() call. The constant-
  // time guarantee is that this count has a bound independent of k.
  std::uint64_t last_op_count() const { return ops_last_; }

 private:
  std::vector<Step> working_;
  FlipPermutation perm_;
  int cursor_ = 0;  // 0-based pair index into perm_
  int total_pairs_ = 0;
  int flaws_ = 0;
  std::uint64_t ops_last_ = 0;
};

// The whole column of a zero-flaw path as materialized snapshots:
// [x, f(x), ..., f^k(x)]; the last entry is the mirror image of x.
inline std::vector<LatticePath> enumerate_column(const LatticePath& origin) {
  if (!origin.balanced() || origin.flaws() != 0)
    throw domain_error("enumerate_column: path must have zero flaws");
  std::vector<LatticePath> out;
  out.reserve(origin.k() + 1);
  out.push_back(origin);
  ColumnIterator it(origin);
  while (it.next()) out.push_back(it.snapshot());
  return out;
}

// Supplier of zero-flaw paths, one per call; nullopt when exhausted. Any
// injective supplier works as a row order for the saw-tooth enumeration.
using RowOrder = std::function<std::optional<LatticePath>()>;

// Zero-flaw paths of length 2k in ascending lexicographic order (Up < Down),
// from Up^k Down^k to (Up Down)^k. Successor computation is O(k) per path.
inline RowOrder lex_zero_flaw_order(int k) {
  struct State {
    std::vector<Step> word;
    std::vector<std::int32_t> height;  // prefix heights of `word`
    bool started = false;
    bool done = false;
  };
  auto st = std::make_shared<State>();
  return [st, k]() -> std::optional<LatticePath> {
    if (st->done) return std::nullopt;
    auto& w = st->word;
    if (!st->started) {
      st->started = true;
      w.assign(2 * k, Step::Down);
      for (int i = 0; i < k; ++i) w[i] = Step::Up;
      st->height.resize(2 * k + 1);
      if (k == 0) st->done = true;
      return LatticePath(w);
    }
    auto& h = st->height;
    h[0] = 0;
    for (int i = 0; i < 2 * k; ++i) h[i + 1] = h[i] + rise(w[i]);
    // Rightmost Up-step that can flip to Down without dipping below the
    // line; everything after it is refilled with Ups first.
    for (int i = 2 * k - 1; i >= 0; --i) {
      if (w[i] != Step::Up || h[i] - 1 < 0) continue;
      const int slots = 2 * k - i - 1;
      const int ups = (slots - (h[i] - 1)) / 2;
      if (ups < 0 || slots - ups < 0) continue;
      w[i] = Step::Down;
      for (int j = 0; j < slots; ++j) w[i + 1 + j] = j < ups ? Step::Up : Step::Down;
      return LatticePath(w);
    }
    st->done = true;
    return std::nullopt;
  };
}

// One emitted path of the saw-tooth stream. Row moves start a new column
// (`column_start`); all other paths arise from the previous one by flipping
// exactly the two reported positions.
struct SawtoothEvent {
  std::span<const Step> path;
  bool column_start = false;
  int up_flip = 0;
  int down_flip = 0;
};

// Emits every path with k Up- and k Down-steps exactly once: down the first
// column via the two-flip step, a row move along the bottom, up the next
// column via the inverse step, a row move along the top, and so on. Within a
// column consecutive paths differ in exactly two positions; row moves under
// the default lexicographic order carry no minimum-change guarantee.
// Returns the number of emitted paths.
inline std::uint64_t sawtooth_enumerate(int k, const RowOrder& row_order,
                                        const std::function<void(const SawtoothEvent&)>& visit) {
  RowOrder rows = row_order ? row_order : lex_zero_flaw_order(k);
  std::uint64_t emitted = 0;
  bool downward = true;
  while (auto row = rows()) {
    const LatticePath& x0 = *row;
    if (x0.size() != 2 * k || !x0.balanced() || x0.flaws() != 0)
      throw domain_error("sawtooth_enumerate: row order must yield zero-flaw paths of length " +
                         std::to_string(2 * k));
    const FlipPermutation perm = pi_recursive(x0);
    std::vector<Step> w(x0.steps().begin(), x0.steps().end());
    if (!downward)
      for (Step& s : w) s = flipped(s);  // enter this column at its mirror path
    visit({w, true, 0, 0});
    ++emitted;
    for (int c = 1; c <= k; ++c) {
      const int pair = downward ? c : k - c + 1;
      const int down = perm.down_flip(pair);
      const int up = perm.up_flip(pair);
      w[down - 1] = flipped(w[down - 1]);
      w[up - 1] = flipped(w[up - 1]);
      visit({w, false, up, down});
      ++emitted;
    }
    downward = !downward;
  }
  return emitted;
}

inline std::uint64_t sawtooth_enumerate(int k,
                                        const std::function<void(const SawtoothEvent&)>& visit) {
  return sawtooth_enumerate(k, lex_zero_flaw_order(k), visit);
}

}  // namespace flawshift
