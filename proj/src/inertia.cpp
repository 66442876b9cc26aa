#include "braidsig/inertia.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>

#include "braidsig/error.hpp"

namespace braidsig {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Int64Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Int64Overflow{};
  return out;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Int64Overflow{};
  return out;
}
std::int64_t neg(std::int64_t a) { return sub(0, a); }
std::int64_t abs_of(std::int64_t a) { return a < 0 ? neg(a) : a; }
std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt neg(const BigInt& a) { return -a; }
BigInt abs_of(const BigInt& a) { return boost::multiprecision::abs(a); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Symmetric congruence elimination. Each step replaces the remaining block
// by an integer multiple of the Schur complement, with the multiplier's sign
// folded in, then strips the positive content so entries stay small.
template <class Int>
SignatureTriple eliminate(const IntMatrix& m) {
  const std::size_t d = m.size();
  std::vector<Int> w(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) w[r * d + c] = Int(m(r, c));
  }
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return w[r * d + c]; };

  std::vector<std::size_t> active(d);
  std::iota(active.begin(), active.end(), std::size_t{0});
  SignatureTriple out;

  auto reduce_content = [&] {
    Int g = 0;
    for (std::size_t i : active) {
      for (std::size_t j : active) g = gcd_of(g, abs_of(at(i, j)));
    }
    if (g > 1) {
      for (std::size_t i : active) {
        for (std::size_t j : active) at(i, j) /= g;
      }
    }
  };

  while (!active.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t k : active) {
      if (at(k, k) == 0) continue;
      if (!pivot || abs_of(at(k, k)) > abs_of(at(*pivot, *pivot))) pivot = k;
    }

    if (pivot) {
      const std::size_t k = *pivot;
      const Int a = at(k, k);
      const bool positive = a > 0;
      (positive ? out.positive : out.negative) += 1;
      std::erase(active, k);
      for (std::size_t ii = 0; ii < active.size(); ++ii) {
        for (std::size_t jj = ii; jj < active.size(); ++jj) {
          const std::size_t i = active[ii], j = active[jj];
          Int v = sub(mul(a, at(i, j)), mul(at(i, k), at(j, k)));
          if (!positive) v = neg(v);
          at(i, j) = v;
          at(j, i) = v;
        }
      }
      reduce_content();
      continue;
    }

    // Every remaining diagonal entry is zero: split off a hyperbolic plane.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t ii = 0; ii < active.size() && !pair; ++ii) {
      for (std::size_t jj = ii + 1; jj < active.size(); ++jj) {
        if (at(active[ii], active[jj]) != 0) {
          pair = std::pair{active[ii], active[jj]};
          break;
        }
      }
    }
    if (!pair) {
      out.zero += static_cast<int>(active.size());
      break;
    }
    const auto [k, l] = *pair;
    const Int b = at(k, l);
    const bool positive = b > 0;
    out.positive += 1;
    out.negative += 1;
    std::erase(active, k);
    std::erase(active, l);
    for (std::size_t ii = 0; ii < active.size(); ++ii) {
      for (std::size_t jj = ii; jj < active.size(); ++jj) {
        const std::size_t i = active[ii], j = active[jj];
        Int v = sub(sub(mul(b, at(i, j)), mul(at(i, k), at(j, l))), mul(at(i, l), at(j, k)));
        if (!positive) v = neg(v);
        at(i, j) = v;
        at(j, i) = v;
      }
    }
    reduce_content();
  }
  return out;
}

}  // namespace

SignatureTriple inertia(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::Argument, "inertia requires a symmetric matrix");
  try {
    return eliminate<std::int64_t>(m);
  } catch (const Int64Overflow&) {
    return eliminate<BigInt>(m);
  }
}

int signature(const IntMatrix& m) { return inertia(m).signature(); }

}  // namespace braidsig
