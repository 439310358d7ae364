#pragma once

// The flip order of a column: applying the two-flip step repeatedly to a
// zero-flaw path flips every position exactly once, in an alternating order.
// This header computes that order two ways (a quadratic reference and a
// linear-time traversal over the hill structure), and recovers the zero-flaw
// origin of an arbitrary path of the column.

#include <cstdint>
#include <string>
#include <vector>

#include "flawshift/bijections.hpp"

namespace flawshift {

// Sequence of the 2k positions in the order they are flipped. Entries at odd
// indices (1-based) are Down-flips, entries at even indices Up-flips; each
// pair descends and consecutive pairs ascend.
struct FlipPermutation {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }

  // 1-based access to pair c = (entries[2c-1], entries[2c]).
  int pairs() const { return size() / 2; }
  int down_flip(int pair) const { return entries[2 * pair - 2]; }
  int up_flip(int pair) const { return entries[2 * pair - 1]; }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries[i]);
    }
    return out + ")";
  }

  friend bool operator==(const FlipPermutation&, const FlipPermutation&) = default;
};

// Descent at every even index, ascent at every odd index >= 3.
inline bool is_alternating(const FlipPermutation& p) {
  for (int i = 2; i <= p.size(); ++i) {
    const int prev = p.entries[i - 2];
    const int cur = p.entries[i - 1];
    if (i % 2 == 0 ? prev <= cur : prev >= cur) return false;
  }
  return true;
}

// Pairing of every Up-step of a zero-flaw path with the Down-step that first
// returns to its start level: the bidirectional pointers below the hills.
// Built by one left-to-right scan with a position stack.
class HillMatching {
 public:
  explicit HillMatching(const LatticePath& x) {
    if (!x.balanced() || x.flaws() != 0)
      throw domain_error("HillMatching: path must have zero flaws");
    partner_.assign(x.size() + 1, 0);
    std::vector<std::int32_t> open;
    open.reserve(x.k());
    for (int i = 1; i <= x.size(); ++i) {
      if (x.step(i) == Step::Up) {
        open.push_back(i);
      } else {
        const std::int32_t j = open.back();
        open.pop_back();
        partner_[j] = i;
        partner_[i] = j;
      }
    }
    assert(open.empty());
  }

  int partner(int i) const {
    assert(1 <= i && i < static_cast<int>(partner_.size()));
    return partner_[i];
  }

 private:
  std::vector<std::int32_t> partner_;
};

// Reference computation, O(k^2): literally apply the two single-step flips k
// times and record the flipped positions.
inline FlipPermutation pi_direct(const LatticePath& x) {
  if (!x.balanced() || x.flaws() != 0) throw domain_error("pi_direct: path must have zero flaws");
  FlipPermutation out;
  out.entries.reserve(x.size());
  LatticePath cur = x;
  for (int i = 0; i < x.k(); ++i) {
    FlipResult down = apply_g(cur);
    FlipResult up = apply_h(down.path);
    out.entries.push_back(down.position);
    out.entries.push_back(up.position);
    cur = std::move(up.path);
  }
  return out;
}

struct PiStats {
  std::uint64_t frames = 0;       // non-empty subpath frames expanded
  std::uint64_t stack_items = 0;  // total work items processed (bounded by 4k+2)
};

// O(k) computation of the flip order. Works on an explicit stack of frames
// (lo, hi, direction) over the original index space. A forward frame for the
// subpath at lo..hi emits
//   split, <inner backward>, lo, <suffix forward>
// where split = partner(lo) is its canonical split; a backward frame emits
// the same subpath mirrored at its vertical axis,
//   partner(hi), <middle forward>, hi, <prefix backward>,
// which realizes the entries hi+1-pi(reversed complement) without ever
// materializing a re-based subpath. The direction alternates with the nesting
// parity of the hills.
inline FlipPermutation pi_recursive(const LatticePath& x, PiStats* stats = nullptr) {
  if (!x.balanced() || x.flaws() != 0)
    throw domain_error("pi_recursive: path must have zero flaws");
  const HillMatching hills(x);

  struct Item {
    std::int32_t a = 0, b = 0;  // frame bounds; emitted value in `a` for kEmit
    enum class Kind : std::uint8_t { kEmit, kForward, kBackward } kind = Kind::kEmit;
  };
  using Kind = Item::Kind;

  FlipPermutation out;
  out.entries.reserve(x.size());
  PiStats counters;

  std::vector<Item> stack;
  stack.push_back({1, x.size(), Kind::kForward});
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    ++counters.stack_items;
    if (item.kind == Kind::kEmit) {
      out.entries.push_back(item.a);
      continue;
    }
    if (item.a > item.b) continue;
    ++counters.frames;
    if (item.kind == Kind::kForward) {
      const std::int32_t split = hills.partner(item.a);
      stack.push_back({split + 1, item.b, Kind::kForward});
      stack.push_back({item.a, 0, Kind::kEmit});
      stack.push_back({item.a + 1, split - 1, Kind::kBackward});
      stack.push_back({split, 0, Kind::kEmit});
    } else {
      const std::int32_t split = hills.partner(item.b);
      stack.push_back({item.a, split - 1, Kind::kBackward});
      stack.push_back({item.b, 0, Kind::kEmit});
      stack.push_back({split + 1, item.b - 1, Kind::kForward});
      stack.push_back({split, 0, Kind::kEmit});
    }
  }
  assert(static_cast<int>(out.entries.size()) == x.size());
  if (stats) *stats = counters;
  return out;
}

// The zero-flaw origin of a path and the two position sets in which they
// differ: up_positions are the Up-steps of x below y=0, down_positions the
// Down-steps below y=-1 together with the first d_0(x) Down-steps touching
// y=0. Applying the two-flip step flaws(x) times to the origin yields x.
struct OriginWitness {
  std::vector<int> up_positions;
  std::vector<int> down_positions;
  LatticePath origin;
};

inline OriginWitness recover_origin(const LatticePath& x) {
  if (!x.balanced()) throw domain_error("recover_origin: path must end on y=0");
  OriginWitness w;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.step(i) == Step::Up) {
      if (x.height(i) <= 0) w.up_positions.push_back(i);
    } else if (x.height(i - 1) <= -1) {
      w.down_positions.push_back(i);
    }
  }
  int remaining = x.down_count_at(0);
  for (int i = 1; i <= x.size() && remaining > 0; ++i) {
    if (x.step(i) == Step::Down && (x.height(i - 1) == 0 || x.height(i) == 0)) {
      w.down_positions.push_back(i);
      --remaining;
    }
  }
  std::sort(w.down_positions.begin(), w.down_positions.end());

  std::vector<Step> steps(x.steps().begin(), x.steps().end());
  for (int p : w.up_positions) steps[p - 1] = Step::Down;
  for (int p : w.down_positions) steps[p - 1] = Step::Up;
  w.origin = LatticePath(std::move(steps));
  assert(w.origin.flaws() == 0);
  return w;
}

// An interval of a zero-flaw path that starts and ends on the line y=level
// without dipping below it; every such interval is a run of consecutive
// sibling hills.
struct DyckSubpath {
  int first = 0;
  int last = 0;
  int level = 0;

  friend bool operator==(const DyckSubpath&, const DyckSubpath&) = default;
};

inline std::vector<DyckSubpath> dyck_subpaths(const LatticePath& x) {
  if (!x.balanced() || x.flaws() != 0)
    throw domain_error("dyck_subpaths: path must have zero flaws");
  const HillMatching hills(x);
  std::vector<DyckSubpath> out;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.step(i) != Step::Up) continue;
    const int level = x.height(i - 1);
    int j = hills.partner(i);
    out.push_back({i, j, level});
    // extend over sibling hills to the right
    while (j + 1 <= x.size() && x.step(j + 1) == Step::Up) {
      j = hills.partner(j + 1);
      out.push_back({i, j, level});
    }
  }
  return out;
}

}  // namespace flawshift
