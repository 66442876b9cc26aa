#pragma once

// Exact inertia of symmetric integer forms by congruence diagonalization.

#include "braidsig/matrix.hpp"

namespace braidsig {

struct SignatureTriple {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const noexcept { return positive - negative; }
  int dimension() const noexcept { return positive + negative + zero; }
  SignatureTriple operator+(const SignatureTriple& o) const {
    return {positive + o.positive, negative + o.negative, zero + o.zero};
  }
  /// Inertia of the negated form.
  SignatureTriple flipped() const { return {negative, positive, zero}; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Throws Error(Argument) for a non-symmetric matrix. Elimination runs in
/// checked 64-bit integers and falls back to arbitrary precision on overflow.
SignatureTriple inertia(const IntMatrix& m);

int signature(const IntMatrix& m);

}  // namespace braidsig
