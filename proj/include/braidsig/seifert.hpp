#pragma once

// Homology of the canonical fiber surface of a positive braid closure:
// n Seifert disks joined by one twisted band per letter.
//
// Basis: one "brick" loop per pair of consecutive crossings in a column.
// Seifert form in that basis, for bricks x != y:
//
//   V(x, x)  = -1
//   V(x, y)  = +1   same column, x.upper == y.lower
//   V(x, y)  = +1   x in column i, y in column i+1, x.lower < y.lower < x.upper < y.upper
//   V(x, y)  = -1   x in column i, y in column i+1, y.lower < x.lower < y.upper < x.upper
//
// every other entry is zero. The table reproduces det(tV - V^T) = reduced
// Burau Alexander polynomial and Brieskorn torus-link signatures; see
// tests/unit/test_seifert.cpp. In this convention positive braids have
// negative signature, so link_inertia() reports the negated form.

#include <cstddef>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/inertia.hpp"
#include "braidsig/matrix.hpp"

namespace braidsig {

struct Brick {
  int column = 1;
  std::size_t lower = 0;  // letter positions, lower < upper
  std::size_t upper = 0;
  friend bool operator==(const Brick&, const Brick&) = default;
};

struct SurfaceData {
  int betti = 0;               // b1 = s - n + c
  int surface_components = 1;  // s
  int euler = 0;               // chi = n - c
};

SurfaceData surface_data(const BraidWord& w);

/// Bricks ordered by column, then by lower position.
std::vector<Brick> bricks(const BraidWord& w);

enum class SplitPolicy {
  Blockwise,  // split surfaces give a block diagonal matrix
  Reject,     // throw Error(Precondition) unless every column is used
};

struct SeifertMatrix {
  std::vector<Brick> bricks;
  IntMatrix entries;

  std::size_t size() const noexcept { return bricks.size(); }
  IntMatrix symmetrized() const { return entries + entries.transposed(); }
};

SeifertMatrix seifert_matrix(const BraidWord& w, SplitPolicy policy = SplitPolicy::Blockwise);

/// Inertia of the link form, oriented so that positive braids have
/// non-negative signature (sigma of the Hopf link "1^2" is +1).
SignatureTriple link_inertia(const BraidWord& w);
int link_signature(const BraidWord& w);

}  // namespace braidsig
