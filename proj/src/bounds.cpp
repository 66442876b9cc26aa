#include "braidsig/bounds.hpp"

#include "braidsig/error.hpp"
#include "braidsig/seifert.hpp"

namespace braidsig {

int signature_defect(const BraidWord& w) { return surface_data(w).betti - link_signature(w); }

VolumeInterval defect_volume_bounds(int delta_sigma, const Constants& k) {
  if (delta_sigma <= 0) {
    throw Error(ErrorCode::Inconsistent,
                "signature defect " + std::to_string(delta_sigma) + " leaves no volume interval");
  }
  return {k.v8 * delta_sigma / 3.0, 105.0 * k.v3 * delta_sigma};
}

VolumeInterval twist_volume_bounds(int twist, const Constants& k) {
  if (twist < 2) throw Error(ErrorCode::Precondition, "twist number " + std::to_string(twist) + " < 2");
  return {2.0 * k.v8 * twist / 3.0, 10.0 * k.v3 * (twist - 1)};
}

bool twist_defect_check(int delta_sigma, int twist) {
  return delta_sigma <= 2 * twist && 2 * twist <= 21 * delta_sigma;
}

CutDecomposition cut_decomposition(const SyllableWord& s) {
  const SyllableWord nf = normalize_far_commutation(s.cyclic ? s : syllables(s.expand(), true));
  CutDecomposition out;
  for (const auto& syl : nf.syllables) {
    out.regions[syl.column].push_back(syl.exponent);
    out.betti_sub += syl.exponent - 1;
    out.boundary_defect += signature_defect(BraidWord(2, std::vector<int>(syl.exponent, 1)));
  }
  out.betti_full = surface_data(nf.expand()).betti;
  out.delta_betti = out.betti_full - out.betti_sub;
  return out;
}

CutBound cut_bound_check(const BraidWord& w) {
  CutBound out;
  out.delta_sigma = signature_defect(w);
  out.delta_betti = cut_decomposition(syllables(w, true)).delta_betti;
  out.twist = twist_number(w);
  out.ok = out.delta_sigma <= 2 * out.delta_betti;
  out.twist_ok = out.delta_sigma <= 2 * out.twist;
  return out;
}

}  // namespace braidsig
