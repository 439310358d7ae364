#pragma once

// Lattice paths over {Up, Down} steps with a cached height profile.
//
// Positions are 1-based throughout the public interface: step(i) is the i-th
// step and height(i) is the y-coordinate after i steps, with height(0) == 0.
// A path with as many Up- as Down-steps ends on the line y=0; its flaws are
// the Down-steps lying below that line, i.e. those starting at height <= 0.
// Paths are immutable values; editing operations return new paths.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flawshift {

enum class Step : std::uint8_t { Up = 0, Down = 1 };

constexpr Step flipped(Step s) { return s == Step::Up ? Step::Down : Step::Up; }
constexpr int rise(Step s) { return s == Step::Up ? 1 : -1; }

// Input outside an operation's domain (wrong balance, wrong flaw count, ...).
class domain_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The flaw-raising maps are undefined on paths that already have k flaws.
class no_successor : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The flaw-lowering maps are undefined on paths with zero flaws.
class no_predecessor : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}

  // 1-based position of the offending character.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class LatticePath {
 public:
  LatticePath() { init(); }

  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) { init(); }

  // Accepts 'U'/'D' and the bitstring aliases '1'/'0' (1 = Up).
  static LatticePath parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'U':
        case '1':
          steps.push_back(Step::Up);
          break;
        case 'D':
        case '0':
          steps.push_back(Step::Down);
          break;
        default:
          throw parse_error("invalid step character '" + std::string(1, text[i]) +
                                "' at index " + std::to_string(i + 1),
                            i + 1);
      }
    }
    return LatticePath(std::move(steps));
  }

  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  int k() const { return size() / 2; }

  Step step(int i) const {
    assert(1 <= i && i <= size());
    return steps_[i - 1];
  }

  int height(int i) const {
    assert(0 <= i && i <= size());
    return heights_[i];
  }

  std::span<const Step> steps() const { return steps_; }

  int up_count() const { return up_count_; }
  int final_height() const { return heights_.back(); }

  // Membership in L_{2k,k}: equally many Up- and Down-steps.
  bool balanced() const { return final_height() == 0; }

  // Number of Down-steps below the line y=0.
  int flaws() const {
    if (!balanced()) throw domain_error("flaws: path does not end on y=0");
    return below_downs_;
  }

  // u_c / d_c: number of Up-/Down-steps starting on the line y=level.
  int up_count_at(int level) const { return count_starting_at(Step::Up, level); }
  int down_count_at(int level) const { return count_starting_at(Step::Down, level); }

  // Ascending positions of steps of `kind` that start or end on y=level.
  std::vector<int> touching_positions(Step kind, int level) const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i)
      if (steps_[i - 1] == kind && touches(i, level)) out.push_back(i);
    return out;
  }

  // Position of the n-th step of `kind` touching y=level (n >= 1), or 0 if
  // there are fewer than n such steps.
  int nth_touching(Step kind, int level, int n) const {
    for (int i = 1; i <= size(); ++i)
      if (steps_[i - 1] == kind && touches(i, level) && --n == 0) return i;
    return 0;
  }

  LatticePath with_flipped(int pos) const {
    assert(1 <= pos && pos <= size());
    std::vector<Step> s = steps_;
    s[pos - 1] = flipped(s[pos - 1]);
    return LatticePath(std::move(s));
  }

  // Mirror image at the line y=0: every step flipped. Maps a path with e
  // flaws to one with k-e flaws.
  LatticePath mirrored() const {
    std::vector<Step> s = steps_;
    for (Step& x : s) x = flipped(x);
    return LatticePath(std::move(s));
  }

  // Mirror image at the vertical line through the midpoint: the step
  // sequence reversed and complemented. Preserves the flaw count.
  LatticePath reversed_complement() const {
    std::vector<Step> s(steps_.rbegin(), steps_.rend());
    for (Step& x : s) x = flipped(x);
    return LatticePath(std::move(s));
  }

  // Steps lo..hi re-based to the origin; empty when lo > hi.
  LatticePath subpath(int lo, int hi) const {
    assert(1 <= lo && hi <= size());
    if (lo > hi) return LatticePath();
    return LatticePath(std::vector<Step>(steps_.begin() + (lo - 1), steps_.begin() + hi));
  }

  std::string to_string(bool bits = false) const {
    std::string out(steps_.size(), '\0');
    for (std::size_t i = 0; i < steps_.size(); ++i)
      out[i] = steps_[i] == Step::Up ? (bits ? '1' : 'U') : (bits ? '0' : 'D');
    return out;
  }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }

  // Lexicographic with Up < Down.
  friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b) {
    return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(),
                                                  b.steps_.begin(), b.steps_.end());
  }

 private:
  void init() {
    heights_.resize(steps_.size() + 1);
    heights_[0] = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      heights_[i + 1] = heights_[i] + rise(steps_[i]);
      if (steps_[i] == Step::Up)
        ++up_count_;
      else if (heights_[i] <= 0)
        ++below_downs_;
    }
  }

  bool touches(int pos, int level) const {
    return heights_[pos - 1] == level || heights_[pos] == level;
  }

  int count_starting_at(Step kind, int level) const {
    int n = 0;
    for (int i = 0; i < size(); ++i) n += steps_[i] == kind && heights_[i] == level;
    return n;
  }

  std::vector<Step> steps_;
  std::vector<std::int32_t> heights_;  // size() + 1 prefix heights
  int up_count_ = 0;
  int below_downs_ = 0;
};

// Split of a zero-flaw path at its first Down-step touching y=0:
// the path equals Up ∘ inner ∘ Down ∘ suffix with the Down-step at
// position `split`. Both parts are zero-flaw paths after re-basing.
struct CanonicalDecomposition {
  int split = 0;
  LatticePath inner;   // positions 2..split-1
  LatticePath suffix;  // positions split+1..2k
};

inline CanonicalDecomposition canonical_decomposition(const LatticePath& x) {
  if (!x.balanced() || x.flaws() != 0)
    throw domain_error("canonical_decomposition: path must have zero flaws");
  if (x.empty()) throw domain_error("canonical_decomposition: path must be non-empty");
  const int b = x.nth_touching(Step::Down, 0, 1);
  assert(b >= 2);
  return {b, x.subpath(2, b - 1), x.subpath(b + 1, x.size())};
}

}  // namespace flawshift
