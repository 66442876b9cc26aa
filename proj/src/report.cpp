#include "braidsig/report.hpp"

#include <cmath>
#include <cstdio>
#include "json.hpp"
#include <sstream>

#include "braidsig/error.hpp"
#include "braidsig/seifert.hpp"

namespace braidsig {

using nlohmann::json;

namespace {

json interval_json(const std::optional<VolumeInterval>& v) {
  if (!v) return nullptr;
  return json{{"lo", round4(v->lo)}, {"hi", round4(v->hi)}};
}

std::string interval_text(const std::optional<VolumeInterval>& v) {
  if (!v) return "none";
  return "[" + format4(v->lo) + ", " + format4(v->hi) + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

double round4(double v) { return std::nearbyint(v * 1e4) / 1e4; }

std::string format4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", round4(v));
  return buf;
}

InvariantReport invariant_report(const BraidWord& w, const ReportOptions& options) {
  InvariantReport r;
  const SyllableWord nf = normal_form(w);
  const SurfaceData surface = surface_data(w);

  r.word = w.to_string();
  r.strands = w.strands();
  r.letters = static_cast<int>(w.length());
  r.components = components(w);
  r.b1 = surface.betti;
  r.inertia = link_inertia(w);
  r.sigma = r.inertia.signature();
  r.delta_sigma = r.b1 - r.sigma;
  if (r.components == 1) r.genus = r.b1 / 2;
  r.twist = twist_number(w, options.exhaustive_twist);

  r.flags.split = !w.uses_all_columns();
  r.flags.sufficiently_complicated = is_sufficiently_complicated(nf);
  r.flags.hyperbolicity_criterion = hyperbolicity_criterion(nf);

  if (r.delta_sigma >= 1) r.thm1 = defect_volume_bounds(r.delta_sigma, options.constants);
  if (r.twist >= 2) r.thm2 = twist_volume_bounds(r.twist, options.constants);
  r.thm3_ok = twist_defect_check(r.delta_sigma, r.twist);

  r.cut = cut_decomposition(nf);
  r.cut_ok = r.delta_sigma <= 2 * r.cut.delta_betti;
  r.cut_twist_ok = r.delta_sigma <= 2 * r.twist;

  const DotPlacement dots = place_dots(nf);
  const StringClass cls = best_class(dots.dots, w.strands());
  r.dots = static_cast<int>(dots.dots.size());
  r.best_residue = cls.residue;
  r.best_class_dots = cls.dot_count;
  r.subword_count = static_cast<int>(extract_subwords(nf, cls).count());
  r.deletion_subword_count = static_cast<int>(extract_subwords(nf, cls, RunRule::Deletion).count());
  r.certificate_lower_ok = 21 * r.subword_count >= r.twist;
  r.certificate_defect_ok = 2 * r.subword_count <= r.delta_sigma;

  r.three_braid = three_braid_bound(nf);
  if (w.strands() == 3) r.three_braid_estimate = (r.twist - 3) / 4.0;
  return r;
}

std::string render_invariants(const InvariantReport& r, bool json_out) {
  if (json_out) {
    json j;
    j["word"] = r.word;
    j["strands"] = r.strands;
    j["letters"] = r.letters;
    j["components"] = r.components;
    j["b1"] = r.b1;
    j["sigma"] = r.sigma;
    j["delta_sigma"] = r.delta_sigma;
    j["genus"] = r.genus ? json(*r.genus) : json(nullptr);
    j["twist"] = r.twist;
    j["flags"] = {{"positive", r.flags.positive},
                  {"sufficiently_complicated", r.flags.sufficiently_complicated},
                  {"hyperbolicity_criterion", r.flags.hyperbolicity_criterion},
                  {"split", r.flags.split}};
    j["thm1"] = interval_json(r.thm1);
    j["thm2"] = interval_json(r.thm2);
    j["thm3_ok"] = r.thm3_ok;
    j["cut"] = {{"betti_sub", r.cut.betti_sub},
                {"betti_full", r.cut.betti_full},
                {"delta_betti", r.cut.delta_betti},
                {"ok", r.cut_ok}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "word                      " << r.word << "\n"
     << "strands                   " << r.strands << "\n"
     << "letters                   " << r.letters << "\n"
     << "components                " << r.components << "\n"
     << "b1                        " << r.b1 << "\n"
     << "inertia (p, q, z)         (" << r.inertia.positive << ", " << r.inertia.negative << ", "
     << r.inertia.zero << ")\n"
     << "sigma                     " << r.sigma << "\n"
     << "delta_sigma               " << r.delta_sigma << "\n"
     << "genus                     " << (r.genus ? std::to_string(*r.genus) : "n/a") << "\n"
     << "twist                     " << r.twist << "\n"
     << "sufficiently_complicated  " << yes_no(r.flags.sufficiently_complicated) << "\n"
     << "hyperbolicity_criterion   " << yes_no(r.flags.hyperbolicity_criterion) << "\n"
     << "split                     " << yes_no(r.flags.split) << "\n"
     << "volume from delta_sigma   " << interval_text(r.thm1) << "\n"
     << "volume from twist         " << interval_text(r.thm2) << "\n"
     << "twist/defect inequality   " << yes_no(r.thm3_ok) << "\n"
     << "cut betti sub/full/delta  " << r.cut.betti_sub << " / " << r.cut.betti_full << " / "
     << r.cut.delta_betti << "\n"
     << "cut bound                 " << yes_no(r.cut_ok) << "\n"
     << "dots                      " << r.dots << "\n"
     << "best class                j=" << r.best_residue << " (" << r.best_class_dots << " dots)\n"
     << "subwords                  " << r.subword_count << "\n"
     << "subwords, deletion rule   " << r.deletion_subword_count << "\n"
     << "certificate 21*count>=t   " << yes_no(r.certificate_lower_ok) << "\n"
     << "certificate 2*count<=ds   " << yes_no(r.certificate_defect_ok) << "\n";
  if (r.three_braid_estimate) os << "(t - 3) / 4               " << format4(*r.three_braid_estimate) << "\n";
  return os.str();
}

std::string render_matrix(const BraidWord& w, bool json_out, bool with_inertia) {
  const SeifertMatrix v = seifert_matrix(w);
  const IntMatrix sym = v.symmetrized();
  const SignatureTriple raw = inertia(sym);
  if (json_out) {
    json bricks = json::array();
    for (const Brick& b : v.bricks) bricks.push_back({{"column", b.column}, {"lower", b.lower}, {"upper", b.upper}});
    json entries = json::array();
    for (std::size_t r = 0; r < v.size(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < v.size(); ++c) row.push_back(v.entries(r, c));
      entries.push_back(row);
    }
    json j{{"size", v.size()}, {"bricks", bricks}, {"entries", entries}};
    if (with_inertia) j["inertia"] = {{"p", raw.positive}, {"q", raw.negative}, {"z", raw.zero}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "V\n" << v.entries.to_grid() << "V+V^T\n" << sym.to_grid();
  if (with_inertia) os << "(" << raw.positive << ", " << raw.negative << ", " << raw.zero << ")\n";
  return os.str();
}

std::string render_extract(const BraidWord& w, bool json_out) {
  const SyllableWord nf = normal_form(w);
  const DotPlacement dots = place_dots(nf);
  const StringClass cls = best_class(dots.dots, w.strands());
  const SubwordCertificate cert = extract_subwords(nf, cls);
  const std::size_t deletion = extract_subwords(nf, cls, RunRule::Deletion).count();

  std::array<int, 3> per_class{};
  for (const Dot& d : dots.dots) ++per_class[d.string % 3];

  if (json_out) {
    json jd = json::array();
    for (const Dot& d : dots.dots) jd.push_back({{"between", {d.first, d.second}}, {"string", d.string}});
    json classes = json::array();
    for (int j = 0; j < 3; ++j) {
      json strings = json::array();
      for (int m = 1; m <= w.strands(); ++m) {
        if (m % 3 == j) strings.push_back(m);
      }
      classes.push_back({{"j", j}, {"strings", strings}, {"dots", per_class[j]}});
    }
    json occ = json::array();
    for (const Occurrence& o : cert.occurrences) {
      occ.push_back({{"central_string", o.central_string}, {"positions", o.positions}});
    }
    json j{{"normal_form", nf.to_string()},
           {"dots", jd},
           {"dots_at_least_twist", dots.at_least_twist},
           {"classes", classes},
           {"class", cls.residue},
           {"occurrences", occ},
           {"count", cert.count()},
           {"deletion_count", deletion}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "normal form: " << nf.to_string() << "\n";
  os << "dots (" << dots.dots.size() << (dots.at_least_twist ? ", >= t" : ", < t") << "):\n";
  for (const Dot& d : dots.dots) os << "  " << d.first << " -> " << d.second << "  string " << d.string << "\n";
  os << "classes:\n";
  for (int j = 0; j < 3; ++j) {
    os << "  j=" << j << "  strings {";
    bool first = true;
    for (int m = 1; m <= w.strands(); ++m) {
      if (m % 3 != j) continue;
      os << (first ? "" : ",") << m;
      first = false;
    }
    os << "}  dots " << per_class[j] << (j == cls.residue ? "  *" : "") << "\n";
  }
  os << "occurrences (" << cert.count() << "):\n";
  for (const Occurrence& o : cert.occurrences) {
    os << "  string " << o.central_string << "  positions " << o.positions[0] << " " << o.positions[1] << " "
       << o.positions[2] << " " << o.positions[3] << "\n";
  }
  os << "deletion-rule count: " << deletion << "\n";
  return os.str();
}

std::string render_bounds(int delta_sigma, int twist, const Constants& k, bool json_out) {
  std::optional<VolumeInterval> by_defect, by_twist;
  if (delta_sigma >= 1) by_defect = defect_volume_bounds(delta_sigma, k);
  if (twist >= 2) by_twist = twist_volume_bounds(twist, k);
  const bool ineq = twist_defect_check(delta_sigma, twist);
  if (json_out) {
    json j{{"delta_sigma", delta_sigma},
           {"twist", twist},
           {"thm1", interval_json(by_defect)},
           {"thm2", interval_json(by_twist)},
           {"thm3_ok", ineq}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "delta_sigma               " << delta_sigma << "\n"
     << "twist                     " << twist << "\n"
     << "volume from delta_sigma   " << interval_text(by_defect) << "\n"
     << "volume from twist         " << interval_text(by_twist) << "\n"
     << "twist/defect inequality   " << yes_no(ineq) << "\n";
  return os.str();
}

}  // namespace braidsig
