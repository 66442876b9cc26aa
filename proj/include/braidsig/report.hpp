#pragma once

// Per-word invariant report and the text/JSON renderings shared by the C API
// and the command line tool.

#include <optional>
#include <string>

#include "braidsig/bounds.hpp"
#include "braidsig/braid.hpp"
#include "braidsig/certificate.hpp"
#include "braidsig/inertia.hpp"

namespace braidsig {

struct ReportOptions {
  bool exhaustive_twist = false;
  Constants constants = Constants::extended();
};

struct ReportFlags {
  bool positive = true;
  bool sufficiently_complicated = false;
  bool hyperbolicity_criterion = false;
  bool split = false;  // some column unused
};

struct InvariantReport {
  std::string word;
  int strands = 2;
  int letters = 0;
  int components = 0;
  int b1 = 0;
  SignatureTriple inertia;
  int sigma = 0;
  int delta_sigma = 0;
  std::optional<int> genus;
  int twist = 0;
  ReportFlags flags;
  std::optional<VolumeInterval> thm1;
  std::optional<VolumeInterval> thm2;
  bool thm3_ok = false;
  CutDecomposition cut;
  bool cut_ok = false;
  bool cut_twist_ok = false;
  int dots = 0;
  int best_residue = 0;
  int best_class_dots = 0;
  int subword_count = 0;
  /// Same extraction with RunRule::Deletion, a diagnostic only.
  int deletion_subword_count = 0;
  bool certificate_lower_ok = false;
  bool certificate_defect_ok = false;
  ThreeBraidBound three_braid;
  /// (t - 3) / 4 for 3-braids, a diagnostic only.
  std::optional<double> three_braid_estimate;

  /// Both hypotheses of the twist/defect inequality hold.
  bool qualifies() const { return flags.sufficiently_complicated && flags.hyperbolicity_criterion; }
};

InvariantReport invariant_report(const BraidWord& w, const ReportOptions& options = {});

/// Round half to even at four decimals.
double round4(double v);
/// round4 formatted with exactly four decimals.
std::string format4(double v);

std::string render_invariants(const InvariantReport& r, bool json);
std::string render_matrix(const BraidWord& w, bool json, bool with_inertia);
std::string render_extract(const BraidWord& w, bool json);
std::string render_bounds(int delta_sigma, int twist, const Constants& k, bool json);

}  // namespace braidsig
