#pragma once

// Signature defect, twist-number inequalities, and the volume intervals they
// imply for sufficiently complicated positive braids.

#include <map>
#include <vector>

#include "braidsig/braid.hpp"

namespace braidsig {

/// Volumes of the regular ideal tetrahedron (v3) and octahedron (v8).
struct Constants {
  double v3;
  double v8;

  /// v3 = Cl2(pi/3), v8 = 4 * Catalan, to double precision.
  static constexpr Constants extended() { return {1.01494160640965362502, 3.66386237670887606022}; }
  /// Five significant digits, as usually quoted.
  static constexpr Constants printed() { return {1.0149, 3.6638}; }
};

/// Half-open interval [lo, hi).
struct VolumeInterval {
  double lo = 0;
  double hi = 0;
  bool contains(double v) const { return lo <= v && v < hi; }
};

/// b1 - sigma for the closure of w.
int signature_defect(const BraidWord& w);

/// [v8 * ds / 3, 105 * v3 * ds). Throws Error(Inconsistent) for ds <= 0.
VolumeInterval defect_volume_bounds(int delta_sigma, const Constants& k = Constants::extended());

/// [2 * v8 * t / 3, 10 * v3 * (t - 1)). Throws Error(Precondition) for t < 2.
VolumeInterval twist_volume_bounds(int twist, const Constants& k = Constants::extended());

/// ds / 2 <= t <= 21 ds / 2, in integers.
bool twist_defect_check(int delta_sigma, int twist);

/// The surface obtained by cutting every twist region off from its
/// predecessor: a disjoint union of connected sums of T(2, k) fiber surfaces.
struct CutDecomposition {
  std::map<int, std::vector<int>> regions;  // column -> exponents, in syllable order
  int betti_sub = 0;                        // sum of (k - 1)
  int betti_full = 0;                       // b1 of the uncut fiber surface
  int delta_betti = 0;                      // betti_full - betti_sub = t - n + s
  int boundary_defect = 0;                  // sum of the T(2, k) defects, computed
};

/// Uses the cyclic normal form of s.
CutDecomposition cut_decomposition(const SyllableWord& s);

struct CutBound {
  int delta_sigma = 0;
  int delta_betti = 0;
  int twist = 0;
  bool ok = false;       // ds <= 2 * delta_betti
  bool twist_ok = false; // ds <= 2 * t
};

CutBound cut_bound_check(const BraidWord& w);

}  // namespace braidsig
