#include "braidsig/seifert.hpp"

#include "braidsig/error.hpp"

namespace braidsig {

namespace {

// Exactly one endpoint of `b` lies strictly inside `a`, with `a` starting first.
bool interleaves_after(const Brick& a, const Brick& b) {
  return a.lower < b.lower && b.lower < a.upper && a.upper < b.upper;
}

}  // namespace

SurfaceData surface_data(const BraidWord& w) {
  const int n = w.strands();
  const int c = static_cast<int>(w.length());
  // Disks i and i+1 are joined iff column i is used; the graph is a path.
  const int s = n - (n - 1 - static_cast<int>(w.unused_columns().size()));
  return {s - n + c, s, n - c};
}

std::vector<Brick> bricks(const BraidWord& w) {
  std::vector<std::vector<std::size_t>> positions(w.strands());
  const auto letters = w.letters();
  for (std::size_t p = 0; p < letters.size(); ++p) positions[letters[p]].push_back(p);

  std::vector<Brick> out;
  for (int col = 1; col < w.strands(); ++col) {
    const auto& at = positions[col];
    for (std::size_t k = 0; k + 1 < at.size(); ++k) out.push_back({col, at[k], at[k + 1]});
  }
  return out;
}

SeifertMatrix seifert_matrix(const BraidWord& w, SplitPolicy policy) {
  if (policy == SplitPolicy::Reject && !w.uses_all_columns()) {
    throw Error(ErrorCode::Precondition, "fiber surface of '" + w.to_string() + "' is disconnected");
  }
  SeifertMatrix out{bricks(w), IntMatrix{}};
  const std::size_t d = out.bricks.size();
  out.entries = IntMatrix(d);
  for (std::size_t a = 0; a < d; ++a) {
    const Brick& x = out.bricks[a];
    out.entries(a, a) = -1;
    for (std::size_t b = 0; b < d; ++b) {
      const Brick& y = out.bricks[b];
      if (y.column == x.column && x.upper == y.lower) {
        out.entries(a, b) = 1;
      } else if (y.column == x.column + 1) {
        if (interleaves_after(x, y)) out.entries(a, b) = 1;
        if (interleaves_after(y, x)) out.entries(a, b) = -1;
      }
    }
  }
  return out;
}

SignatureTriple link_inertia(const BraidWord& w) {
  return inertia(seifert_matrix(w).symmetrized()).flipped();
}

int link_signature(const BraidWord& w) { return link_inertia(w).signature(); }

}  // namespace braidsig
