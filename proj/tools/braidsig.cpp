// braidsig: command line front end over the braidsig C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidsig/braidsig.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { braidsig_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct WordDeleter {
  void operator()(braidsig_word* w) const { braidsig_word_free(w); }
};
using OwnedWord = std::unique_ptr<braidsig_word, WordDeleter>;

struct SweepDeleter {
  void operator()(braidsig_sweep* s) const { braidsig_sweep_free(s); }
};
using OwnedSweep = std::unique_ptr<braidsig_sweep, SweepDeleter>;

void check(braidsig_status status) {
  if (status != BRAIDSIG_OK) throw UsageError{braidsig_last_error()};
}

OwnedWord parse_word(const std::string& text, int strands) {
  braidsig_word* w = nullptr;
  check(braidsig_word_parse(text.c_str(), strands, &w));
  return OwnedWord(w);
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError{std::string("bad ") + what + " range '" + text + "' (expected N or A..B)"};
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"cannot open '" + path + "' for writing"};
  out << text;
}

struct FamilyOptions {
  std::string strands = "3";
  std::string syllables = "4";
  std::vector<int> exponents{3};
  bool no_dedup = false;
  bool require_sc = false;
  bool require_hyp = false;
  bool no_filter = false;
  std::size_t limit = 0;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool exhaustive_twist = false;
  bool json = false;
  std::string out;
};

void add_family_options(CLI::App* cmd, FamilyOptions& o, bool filters_default_on) {
  cmd->add_option("--strands", o.strands, "braid index N or range A..B")->capture_default_str();
  cmd->add_option("--syllables", o.syllables, "syllable count N or range A..B")->capture_default_str();
  cmd->add_option("--exponents", o.exponents, "exponent set, comma separated")->delimiter(',');
  cmd->add_flag("--no-dedup", o.no_dedup, "keep every rotation of a syllable sequence");
  if (filters_default_on) {
    cmd->add_flag("--no-filter", o.no_filter, "keep words failing the hypotheses (reported, not asserted)");
  } else {
    cmd->add_flag("--require-sc", o.require_sc, "keep sufficiently complicated words only");
    cmd->add_flag("--require-hyp", o.require_hyp, "keep words passing the hyperbolicity criterion only");
  }
  cmd->add_option("--limit", o.limit, "stop after this many words");
  cmd->add_option("--random", o.random, "draw this many random words instead of enumerating");
  cmd->add_option("--seed", o.seed, "seed for --random");
  cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  cmd->add_flag("--exhaustive-twist", o.exhaustive_twist, "cross-check the twist number by exhaustive search");
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_option("--out", o.out, "write rows to this file");
}

braidsig_sweep_spec to_spec(const FamilyOptions& o, bool filters_default_on) {
  braidsig_sweep_spec spec;
  braidsig_sweep_spec_init(&spec);
  std::tie(spec.strands_min, spec.strands_max) = parse_range(o.strands, "strands");
  std::tie(spec.syllables_min, spec.syllables_max) = parse_range(o.syllables, "syllables");
  spec.exponents = o.exponents.data();
  spec.exponent_count = o.exponents.size();
  spec.cyclic_dedup = o.no_dedup ? 0 : 1;
  const bool filter = filters_default_on ? !o.no_filter : false;
  spec.require_sufficiently_complicated = filter || o.require_sc;
  spec.require_hyperbolic = filter || o.require_hyp;
  spec.limit = o.limit;
  spec.random_count = o.random;
  spec.seed = o.seed;
  spec.exhaustive_twist = o.exhaustive_twist ? 1 : 0;
  spec.threads = o.threads;
  return spec;
}

int run(int argc, char** argv) {
  CLI::App app{"Invariants of positive braid closures: signature, signature defect, twist number, volume bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", braidsig_version());

  std::string word;
  int strands = 0;
  bool json = false;
  bool exhaustive_twist = false;
  std::string out;

  auto add_word_options = [&](CLI::App* cmd, bool word_required) {
    auto* opt = cmd->add_option("word", word, "braid word, e.g. \"1^3 2^3 1^3 2^3\"");
    if (word_required) opt->required();
    cmd->add_option("--strands", strands, "braid index (default: max index + 1)");
    cmd->add_flag("--json", json, "JSON output");
    cmd->add_option("--out", out, "write output to this file");
  };

  auto* invariants = app.add_subcommand("invariants", "full invariant report for one word");
  add_word_options(invariants, true);
  invariants->add_flag("--exhaustive-twist", exhaustive_twist, "minimize the twist number by exhaustive search");

  bool with_inertia = false;
  auto* matrix = app.add_subcommand("matrix", "Seifert matrix V and V+V^T over the brick basis");
  add_word_options(matrix, true);
  matrix->add_flag("--inertia", with_inertia, "also print the inertia (p, q, z) of V+V^T");

  auto* extract = app.add_subcommand("extract", "dots, string classes and alternating subwords");
  add_word_options(extract, true);

  std::optional<int> delta_sigma, twist;
  bool printed = false;
  auto* bounds = app.add_subcommand("bounds", "volume intervals and the twist/defect inequality");
  add_word_options(bounds, false);
  bounds->add_option("--delta-sigma", delta_sigma, "signature defect (instead of a word)");
  bounds->add_option("--twist", twist, "twist number (instead of a word)");
  bounds->add_flag("--printed-constants", printed, "use v3 = 1.0149, v8 = 3.6638");
  bounds->add_flag("--exhaustive-twist", exhaustive_twist, "minimize the twist number by exhaustive search");

  FamilyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "exhaustive or random verification sweep");
  add_family_options(verify, verify_opts, true);

  FamilyOptions enum_opts;
  enum_opts.syllables = "1..4";
  auto* enumerate = app.add_subcommand("enumerate", "list a braid family");
  add_family_options(enumerate, enum_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const braidsig_format format = json ? BRAIDSIG_FORMAT_JSON : BRAIDSIG_FORMAT_TEXT;
  char* raw = nullptr;

  if (invariants->parsed()) {
    auto w = parse_word(word, strands);
    check(braidsig_render_invariants(w.get(), exhaustive_twist, format, &raw));
    emit(OwnedString(raw).get(), out);
    return kExitOk;
  }
  if (matrix->parsed()) {
    auto w = parse_word(word, strands);
    check(braidsig_render_matrix(w.get(), with_inertia, format, &raw));
    emit(OwnedString(raw).get(), out);
    return kExitOk;
  }
  if (extract->parsed()) {
    auto w = parse_word(word, strands);
    check(braidsig_render_extract(w.get(), format, &raw));
    emit(OwnedString(raw).get(), out);
    return kExitOk;
  }
  if (bounds->parsed()) {
    if (word.empty() == !(delta_sigma && twist)) {
      throw UsageError{"bounds takes either a word or both --delta-sigma and --twist"};
    }
    int ds = delta_sigma.value_or(0), t = twist.value_or(0);
    if (!word.empty()) {
      auto w = parse_word(word, strands);
      check(braidsig_signature_defect(w.get(), &ds));
      check(braidsig_twist_number(w.get(), exhaustive_twist, &t));
    }
    check(braidsig_render_bounds(ds, t, printed, format, &raw));
    emit(OwnedString(raw).get(), out);
    return kExitOk;
  }
  if (enumerate->parsed()) {
    const auto spec = to_spec(enum_opts, false);
    check(braidsig_enumerate(&spec, enum_opts.json ? BRAIDSIG_FORMAT_JSON : BRAIDSIG_FORMAT_TEXT, &raw));
    emit(OwnedString(raw).get(), enum_opts.out);
    return kExitOk;
  }
  if (verify->parsed()) {
    const auto spec = to_spec(verify_opts, true);
    braidsig_sweep* sweep_raw = nullptr;
    check(braidsig_sweep_run(&spec, &sweep_raw));
    OwnedSweep sweep(sweep_raw);
    if (!verify_opts.out.empty()) {
      check(braidsig_sweep_render(sweep.get(), verify_opts.json ? BRAIDSIG_FORMAT_JSON : BRAIDSIG_FORMAT_CSV, &raw));
      emit(OwnedString(raw).get(), verify_opts.out);
    } else if (verify_opts.json) {
      check(braidsig_sweep_render(sweep.get(), BRAIDSIG_FORMAT_JSON, &raw));
      emit(OwnedString(raw).get(), "");
    }
    check(braidsig_sweep_render(sweep.get(), BRAIDSIG_FORMAT_TEXT, &raw));
    (verify_opts.json && verify_opts.out.empty() ? std::cerr : std::cout) << OwnedString(raw).get();
    return braidsig_sweep_failures(sweep.get()) == 0 ? kExitOk : kExitAssertion;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "braidsig: " << e.message << "\n";
    return kExitUsage;
  }
}
