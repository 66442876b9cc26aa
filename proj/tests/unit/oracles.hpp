#pragma once

// Reference computations used only by the tests. None of them goes through
// the congruence elimination or the brick basis they are compared with.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/inertia.hpp"
#include "braidsig/matrix.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
/// Coefficients, constant term first.
using Poly = std::vector<BigInt>;

/// Characteristic polynomial det(x I - M) by Faddeev-LeVerrier.
Poly characteristic_polynomial(const braidsig::IntMatrix& m);

/// Inertia from Descartes' rule of signs on the characteristic polynomial,
/// exact because a symmetric matrix has only real eigenvalues.
braidsig::SignatureTriple descartes_inertia(const braidsig::IntMatrix& m);

/// Strips powers of t and makes the leading coefficient positive.
Poly normalize_unit(Poly p);

/// det(t V - V^T), normalized.
Poly alexander_from_seifert(const braidsig::IntMatrix& v);

/// (1 - t) det(I - Burau_reduced(beta)) / (1 - t^n), normalized.
Poly alexander_from_burau(const braidsig::BraidWord& w);

/// Signature of the torus link T(p, q) from the Brieskorn count of pairs
/// (i, j), 0 < i < p, 0 < j < q, by the position of i/p + j/q relative to
/// 1/2 and 3/2. Positive for positive torus links.
int brieskorn_signature(int p, int q);

/// (s1 s2 ... s_{p-1})^q in B_p.
braidsig::BraidWord torus_braid(int p, int q);

}  // namespace oracle
