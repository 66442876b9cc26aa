#include "braidsig/braidsig.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "braidsig/bounds.hpp"
#include "braidsig/certificate.hpp"
#include "braidsig/error.hpp"
#include "braidsig/report.hpp"
#include "braidsig/seifert.hpp"
#include "braidsig/sweep.hpp"
#include "json.hpp"

struct braidsig_word {
  braidsig::BraidWord word;
};

struct braidsig_sweep {
  braidsig::SweepReport report;
};

namespace {

thread_local std::string last_error;

struct NullArgument {};

braidsig_status to_status(braidsig::ErrorCode code) {
  using braidsig::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return BRAIDSIG_E_PARSE;
    case ErrorCode::IndexRange: return BRAIDSIG_E_INDEX_RANGE;
    case ErrorCode::Precondition: return BRAIDSIG_E_PRECONDITION;
    case ErrorCode::Inconsistent: return BRAIDSIG_E_INCONSISTENT;
    case ErrorCode::Argument: return BRAIDSIG_E_ARGUMENT;
    case ErrorCode::Overflow: return BRAIDSIG_E_OVERFLOW;
  }
  return BRAIDSIG_E_INTERNAL;
}

template <class F>
braidsig_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return BRAIDSIG_OK;
  } catch (const NullArgument&) {
    last_error = "null argument";
    return BRAIDSIG_E_ARGUMENT;
  } catch (const braidsig::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BRAIDSIG_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BRAIDSIG_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return BRAIDSIG_E_INTERNAL;
  }
}

template <class... Ptr>
void require(const Ptr*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

braidsig::Constants constants(int printed) {
  return printed ? braidsig::Constants::printed() : braidsig::Constants::extended();
}

bool want_json(braidsig_format f) {
  if (f == BRAIDSIG_FORMAT_CSV) throw braidsig::Error(braidsig::ErrorCode::Argument, "CSV is only for sweeps");
  return f == BRAIDSIG_FORMAT_JSON;
}

braidsig::EnumerationSpec to_spec(const braidsig_sweep_spec& in) {
  braidsig::EnumerationSpec spec;
  spec.strands = {in.strands_min, in.strands_max};
  spec.syllable_count = {in.syllables_min, in.syllables_max};
  if (in.exponent_count > 0) require(in.exponents);
  spec.exponents.assign(in.exponents, in.exponents + in.exponent_count);
  spec.cyclic_dedup = in.cyclic_dedup != 0;
  spec.require_sufficiently_complicated = in.require_sufficiently_complicated != 0;
  spec.require_hyperbolic = in.require_hyperbolic != 0;
  if (in.limit) spec.limit = in.limit;
  if (in.random_count) spec.random_count = in.random_count;
  spec.seed = in.seed;
  return spec;
}

const int kDefaultExponents[] = {3};

}  // namespace

extern "C" {

const char* braidsig_version(void) { return "0.1.0"; }

const char* braidsig_last_error(void) { return last_error.c_str(); }

void braidsig_string_free(char* s) { std::free(s); }

void braidsig_sweep_spec_init(braidsig_sweep_spec* spec) {
  if (!spec) return;
  *spec = braidsig_sweep_spec{};
  spec->strands_min = spec->strands_max = 3;
  spec->syllables_min = spec->syllables_max = 4;
  spec->exponents = kDefaultExponents;
  spec->exponent_count = 1;
  spec->cyclic_dedup = 1;
  spec->seed = 1;
}

braidsig_status braidsig_word_parse(const char* text, int strands, braidsig_word** out) {
  return guarded([&] {
    require(text, out);
    std::optional<int> n;
    if (strands > 0) n = strands;
    *out = new braidsig_word{braidsig::parse_braid(text, n)};
  });
}

void braidsig_word_free(braidsig_word* w) { delete w; }

int braidsig_word_strands(const braidsig_word* w) { return w ? w->word.strands() : 0; }

size_t braidsig_word_length(const braidsig_word* w) { return w ? w->word.length() : 0; }

braidsig_status braidsig_word_letters(const braidsig_word* w, int* letters, size_t capacity) {
  return guarded([&] {
    require(w, letters);
    const auto src = w->word.letters();
    if (capacity < src.size()) throw braidsig::Error(braidsig::ErrorCode::Argument, "letter buffer too small");
    std::copy(src.begin(), src.end(), letters);
  });
}

braidsig_status braidsig_word_text(const braidsig_word* w, char** out) {
  return guarded([&] {
    require(w, out);
    *out = duplicate(w->word.to_string());
  });
}

braidsig_status braidsig_word_normal_form(const braidsig_word* w, char** out) {
  return guarded([&] {
    require(w, out);
    *out = duplicate(braidsig::normal_form(w->word).to_string());
  });
}

braidsig_status braidsig_components(const braidsig_word* w, int* out) {
  return guarded([&] {
    require(w, out);
    *out = braidsig::components(w->word);
  });
}

braidsig_status braidsig_twist_number(const braidsig_word* w, int exhaustive, int* out) {
  return guarded([&] {
    require(w, out);
    *out = braidsig::twist_number(w->word, exhaustive != 0);
  });
}

braidsig_status braidsig_sufficiently_complicated(const braidsig_word* w, int* out) {
  return guarded([&] {
    require(w, out);
    *out = braidsig::is_sufficiently_complicated(braidsig::normal_form(w->word)) ? 1 : 0;
  });
}

braidsig_status braidsig_hyperbolicity_criterion(const braidsig_word* w, int* out) {
  return guarded([&] {
    require(w, out);
    *out = braidsig::hyperbolicity_criterion(braidsig::normal_form(w->word)) ? 1 : 0;
  });
}

braidsig_status braidsig_betti(const braidsig_word* w, int* b1, int* surface_components) {
  return guarded([&] {
    require(w, b1);
    const auto s = braidsig::surface_data(w->word);
    *b1 = s.betti;
    if (surface_components) *surface_components = s.surface_components;
  });
}

braidsig_status braidsig_seifert_matrix(const braidsig_word* w, int64_t* entries, size_t capacity, size_t* size) {
  return guarded([&] {
    require(w, size);
    const auto v = braidsig::seifert_matrix(w->word);
    *size = v.size();
    if (!entries) return;
    if (capacity < v.size() * v.size()) {
      throw braidsig::Error(braidsig::ErrorCode::Argument, "matrix buffer too small");
    }
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (std::size_t c = 0; c < v.size(); ++c) entries[r * v.size() + c] = v.entries(r, c);
    }
  });
}

braidsig_status braidsig_link_inertia(const braidsig_word* w, braidsig_triple* out) {
  return guarded([&] {
    require(w, out);
    const auto t = braidsig::link_inertia(w->word);
    *out = {t.positive, t.negative, t.zero};
  });
}

braidsig_status braidsig_signature(const braidsig_word* w, int* out) {
  return guarded([&] {
    require(w, out);
    *out = braidsig::link_signature(w->word);
  });
}

braidsig_status braidsig_signature_defect(const braidsig_word* w, int* out) {
  return guarded([&] {
    require(w, out);
    *out = braidsig::signature_defect(w->word);
  });
}

braidsig_status braidsig_inertia(const int64_t* entries, size_t dim, braidsig_triple* out) {
  return guarded([&] {
    require(out);
    if (dim > 0) require(entries);
    braidsig::IntMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = entries[r * dim + c];
    }
    const auto t = braidsig::inertia(m);
    *out = {t.positive, t.negative, t.zero};
  });
}

braidsig_status braidsig_defect_volume_bounds(int delta_sigma, int printed_constants, braidsig_interval* out) {
  return guarded([&] {
    require(out);
    const auto v = braidsig::defect_volume_bounds(delta_sigma, constants(printed_constants));
    *out = {v.lo, v.hi};
  });
}

braidsig_status braidsig_twist_volume_bounds(int twist, int printed_constants, braidsig_interval* out) {
  return guarded([&] {
    require(out);
    const auto v = braidsig::twist_volume_bounds(twist, constants(printed_constants));
    *out = {v.lo, v.hi};
  });
}

int braidsig_twist_defect_check(int delta_sigma, int twist) {
  return braidsig::twist_defect_check(delta_sigma, twist) ? 1 : 0;
}

braidsig_status braidsig_cut_bound(const braidsig_word* w, braidsig_cut* out) {
  return guarded([&] {
    require(w, out);
    const auto cut = braidsig::cut_decomposition(braidsig::syllables(w->word, true));
    const auto bound = braidsig::cut_bound_check(w->word);
    *out = {cut.betti_sub, cut.betti_full, cut.delta_betti, bound.ok ? 1 : 0, bound.twist_ok ? 1 : 0};
  });
}

braidsig_status braidsig_certificate_check(const braidsig_word* w, braidsig_certificate* out) {
  return guarded([&] {
    require(w, out);
    const auto nf = braidsig::normal_form(w->word);
    const auto dots = braidsig::place_dots(nf);
    const auto cls = braidsig::best_class(dots.dots, w->word.strands());
    const auto check = braidsig::certificate_check(w->word);
    *out = {check.dots, cls.residue, cls.dot_count, check.count, check.ok_lower ? 1 : 0, check.ok_defect ? 1 : 0};
  });
}

braidsig_status braidsig_render_invariants(const braidsig_word* w, int exhaustive_twist, braidsig_format format,
                                           char** out) {
  return guarded([&] {
    require(w, out);
    const bool json = want_json(format);
    braidsig::ReportOptions options;
    options.exhaustive_twist = exhaustive_twist != 0;
    *out = duplicate(braidsig::render_invariants(braidsig::invariant_report(w->word, options), json));
  });
}

braidsig_status braidsig_render_matrix(const braidsig_word* w, int with_inertia, braidsig_format format, char** out) {
  return guarded([&] {
    require(w, out);
    *out = duplicate(braidsig::render_matrix(w->word, want_json(format), with_inertia != 0));
  });
}

braidsig_status braidsig_render_extract(const braidsig_word* w, braidsig_format format, char** out) {
  return guarded([&] {
    require(w, out);
    *out = duplicate(braidsig::render_extract(w->word, want_json(format)));
  });
}

braidsig_status braidsig_render_bounds(int delta_sigma, int twist, int printed_constants, braidsig_format format,
                                       char** out) {
  return guarded([&] {
    require(out);
    *out = duplicate(braidsig::render_bounds(delta_sigma, twist, constants(printed_constants), want_json(format)));
  });
}

braidsig_status braidsig_enumerate(const braidsig_sweep_spec* spec, braidsig_format format, char** out) {
  return guarded([&] {
    require(spec, out);
    const bool json = want_json(format);
    nlohmann::json list = nlohmann::json::array();
    std::ostringstream text;
    braidsig::for_each_word(to_spec(*spec), [&](const braidsig::SyllableWord& sw) {
      const std::string word = sw.expand().to_string();
      if (json) {
        list.push_back({{"word", word}, {"strands", sw.strands}});
      } else {
        text << word << "\n";
      }
    });
    *out = duplicate(json ? list.dump(2) + "\n" : text.str());
  });
}

braidsig_status braidsig_sweep_run(const braidsig_sweep_spec* spec, braidsig_sweep** out) {
  return guarded([&] {
    require(spec, out);
    braidsig::SweepOptions options;
    options.exhaustive_twist = spec->exhaustive_twist != 0;
    options.threads = spec->threads;
    *out = new braidsig_sweep{braidsig::verify_sweep(to_spec(*spec), options)};
  });
}

void braidsig_sweep_free(braidsig_sweep* sweep) { delete sweep; }

size_t braidsig_sweep_rows(const braidsig_sweep* sweep) { return sweep ? sweep->report.rows.size() : 0; }

size_t braidsig_sweep_qualifying(const braidsig_sweep* sweep) { return sweep ? sweep->report.qualifying : 0; }

size_t braidsig_sweep_failures(const braidsig_sweep* sweep) {
  if (!sweep) return 0;
  size_t n = 0;
  for (const auto& row : sweep->report.rows) n += row.failures.empty() ? 0 : 1;
  return n;
}

braidsig_status braidsig_sweep_render(const braidsig_sweep* sweep, braidsig_format format, char** out) {
  return guarded([&] {
    require(sweep, out);
    std::ostringstream os;
    switch (format) {
      case BRAIDSIG_FORMAT_CSV: braidsig::write_csv(sweep->report, os); break;
      case BRAIDSIG_FORMAT_JSON: braidsig::write_json(sweep->report, os); break;
      default: os << braidsig::sweep_summary(sweep->report); break;
    }
    *out = duplicate(os.str());
  });
}

}  // extern "C"
