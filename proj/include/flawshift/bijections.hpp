#pragma once

// The single-flip maps between the path families L_{2k,k} (ending on y=0)
// and L_{2k,k+1} (ending on y=2), and their compositions:
//
//   apply_g        flips a Down-step up; defined while flaws < k
//   apply_h        flips an Up-step down; total on L_{2k,k+1}
//   apply_g_prime  inverse of apply_h
//   apply_h_prime  inverse of apply_g
//   apply_f        = apply_h ∘ apply_g: raises the flaw count by one while
//                    changing exactly two step positions
//   apply_f_inverse = apply_h_prime ∘ apply_g_prime
//   apply_f_classic  the subpath-swapping map; also raises the flaw count by
//                    one but may change many positions (contrast baseline)

#include <string>

#include "flawshift/path.hpp"

namespace flawshift {

// Image of a single-flip map together with the 1-based position where input
// and image differ.
struct FlipResult {
  LatticePath path;
  int position = 0;
};

// Image of the two-flip step. Positions are named by the flaw-raising
// direction: at `down_flip` a Down-step became an Up-step, at `up_flip` an
// Up-step became a Down-step, and the part in between moved down by two
// units; up_flip < down_flip always. The inverse step reports the same pair
// it undoes.
struct FStepResult {
  LatticePath path;
  int up_flip = 0;
  int down_flip = 0;
};

namespace detail {

inline void require_lower(const LatticePath& x, const char* who) {
  if (!x.balanced()) throw domain_error(std::string(who) + ": path must end on y=0");
}

inline void require_upper(const LatticePath& x, const char* who) {
  if (x.final_height() != 2) throw domain_error(std::string(who) + ": path must end on y=2");
}

}  // namespace detail

// Flips the (d_0(x)+1)-th Down-step touching y=0, i.e. the first one that is
// not itself below the line. The image ends on y=2.
inline FlipResult apply_g(const LatticePath& x) {
  detail::require_lower(x, "apply_g");
  if (x.flaws() == x.k()) throw no_successor("apply_g: every Down-step is already below y=0");
  const int pos = x.nth_touching(Step::Down, 0, x.down_count_at(0) + 1);
  assert(pos != 0);
  return {x.with_flipped(pos), pos};
}

// Flips the u_1(x)-th Up-step touching y=1. The image ends on y=0 and has at
// least one flaw.
inline FlipResult apply_h(const LatticePath& x) {
  detail::require_upper(x, "apply_h");
  const int pos = x.nth_touching(Step::Up, 1, x.up_count_at(1));
  assert(pos != 0);
  return {x.with_flipped(pos), pos};
}

// Flips the d_0(x)-th Down-step touching y=0, the last one below the line;
// undoes apply_h.
inline FlipResult apply_g_prime(const LatticePath& x) {
  detail::require_lower(x, "apply_g_prime");
  if (x.flaws() == 0) throw no_predecessor("apply_g_prime: path has no flaws");
  const int pos = x.nth_touching(Step::Down, 0, x.down_count_at(0));
  assert(pos != 0);
  return {x.with_flipped(pos), pos};
}

// Flips the (u_1(x)+1)-th Up-step touching y=1; undoes apply_g.
inline FlipResult apply_h_prime(const LatticePath& x) {
  detail::require_upper(x, "apply_h_prime");
  const int pos = x.nth_touching(Step::Up, 1, x.up_count_at(1) + 1);
  assert(pos != 0);
  return {x.with_flipped(pos), pos};
}

// One step along a flaw column: the result has one more flaw and differs
// from the input in exactly the two returned positions.
inline FStepResult apply_f(const LatticePath& x) {
  FlipResult down = apply_g(x);
  FlipResult up = apply_h(down.path);
  return {std::move(up.path), up.position, down.position};
}

inline FStepResult apply_f_inverse(const LatticePath& x) {
  FlipResult up = apply_g_prime(x);
  FlipResult down = apply_h_prime(up.path);
  return {std::move(down.path), up.position, down.position};
}

// The subpath-swapping map: writing x = u ∘ Up ∘ v ∘ Down ∘ w, where the
// Up-step at position a is the first to rise above y=0 and the Down-step at
// position b the first after it to return to y=0, the image is
// v ∘ Down ∘ u ∘ Up ∘ w. Raises the flaw count by one, but swapping u and v
// can change many positions.
inline LatticePath apply_f_classic(const LatticePath& x) {
  detail::require_lower(x, "apply_f_classic");
  if (x.flaws() == x.k())
    throw no_successor("apply_f_classic: every Down-step is already below y=0");
  int a = 0;
  for (int i = 1; i <= x.size(); ++i)
    if (x.height(i) > 0) {
      a = i;
      break;
    }
  assert(a != 0 && x.step(a) == Step::Up && x.height(a) == 1);
  int b = 0;
  for (int i = a + 1; i <= x.size(); ++i)
    if (x.step(i) == Step::Down && x.height(i) == 0) {
      b = i;
      break;
    }
  assert(b != 0);

  const auto s = x.steps();
  std::vector<Step> out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + a, s.begin() + (b - 1));  // v
  out.push_back(Step::Down);
  out.insert(out.end(), s.begin(), s.begin() + (a - 1));  // u
  out.push_back(Step::Up);
  out.insert(out.end(), s.begin() + b, s.end());  // w
  return LatticePath(std::move(out));
}

}  // namespace flawshift
