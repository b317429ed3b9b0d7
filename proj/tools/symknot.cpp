#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symknot/bounds.hpp"
#include "symknot/bracket.hpp"
#include "symknot/error.hpp"
#include "symknot/knot_data.hpp"
#include "symknot/pipeline.hpp"
#include "symknot/reproduce.hpp"
#include "symknot/seifert.hpp"
#include "symknot/signature.hpp"
#include "symknot/symmetric_union.hpp"

#ifndef SYMKNOT_DEFAULT_DATA_DIR
#define SYMKNOT_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace symknot;
using json = nlohmann::ordered_json;

struct CliConfig {
  std::string data_dir = SYMKNOT_DEFAULT_DATA_DIR;
  int precision = 64;
  std::size_t cap = std::size_t{1} << 22;
  bool json = false;

  BracketOptions bracket() const { return BracketOptions{cap}; }
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kResourceLimit:
    case ErrorKind::kFingerprintMismatch:
      return 1;
    default:
      return 2;
  }
}

void progress(const std::string& msg) { std::cerr << "[symknot] " << msg << std::endl; }

DataSet load(const CliConfig& cfg) {
  DataSet data = load_data(cfg.data_dir, cfg.bracket());
  for (const LoadIssue& issue : data.skipped)
    std::cerr << "[symknot] warning: knots.csv line " << issue.line << " skipped: " << issue.message << "\n";
  return data;
}

json profile_json(const SignatureProfile& p) {
  json arr = json::array();
  for (const ProfileRecord& r : p.records()) {
    json e;
    e["angle"] = r.angle;
    e["kind"] = r.jump ? "jump" : "arc";
    e["sigma"] = r.sigma;
    if (r.jump) e["multiplicity"] = r.multiplicity;
    arr.push_back(e);
  }
  return arr;
}

int cmd_invariants(const CliConfig& cfg, const std::string& name, const std::string& pd_file) {
  if (name.empty() == pd_file.empty()) throw Error(ErrorKind::kInvalidArgument, "give a knot name or --pd FILE");
  DataSet data = load(cfg);
  const BracketOptions bo = cfg.bracket();

  Diagram d;
  std::string label;
  const KnotRecord* braid_source = nullptr;
  std::string braid_note;
  if (!name.empty()) {
    const KnotRecord& r = data.registry.lookup(name);
    d = r.pd ? *r.pd : braid_closure(r.braid);
    label = r.name;
    braid_source = &r;
    braid_note = serialize_braid(r.braid);
  } else {
    d = parse_pd(read_text_file(pd_file));
    const ValidationReport vr = validate(d);
    if (!vr.ok())
      throw Error(ErrorKind::kLabelConsistency, vr.violations.front().rule + ": " + vr.violations.front().description);
    label = pd_file;
  }
  const int components = component_count(d);
  const JonesPoly jp = jones(d, bo);

  json out;
  out["knot"] = label;
  out["crossings"] = d.crossing_count();
  out["components"] = components;
  out["jones"] = jp.str();
  std::optional<LaurentPoly> alex;
  std::optional<BigInt> det;
  if (components == 1) {
    if (braid_source) {
      const SeifertMatrix v = seifert_matrix(braid_source->braid);
      alex = alexander(v);
      det = determinant(v);
    } else {
      alex = alexander(d);
      det = determinant(d);
      // Signatures need a Seifert matrix, which comes from a registry braid
      // whose invariants match this diagram.
      const Fingerprint fp{jp.poly, *alex, *det};
      for (const auto& r : data.registry.records()) {
        if (!r.jones || !r.alexander || !r.determinant) continue;
        if (fingerprint_difference(fp, reference_fingerprint(r)).empty()) {
          braid_source = &r;
          braid_note = serialize_braid(r.braid) + " of " + r.name + " (invariant-level match)";
          break;
        }
      }
    }
    out["alexander"] = to_string(*alex);
    out["determinant"] = det->str();
  }
  std::optional<SignatureProfile> profile;
  if (braid_source) {
    profile = signature_profile(seifert_matrix(braid_source->braid));
    json sig;
    sig["braid"] = braid_note;
    sig["max_abs"] = profile->max_abs();
    sig["profile"] = profile_json(*profile);
    out["signature"] = sig;
  } else {
    out["signature"] = nullptr;
  }

  if (cfg.json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "knot: " << label << "\n"
            << "crossings: " << d.crossing_count() << "\n"
            << "components: " << components << "\n"
            << "jones: " << jp.str() << "\n";
  if (alex) std::cout << "alexander: " << to_string(*alex) << "\n" << "determinant: " << *det << "\n";
  if (profile) {
    std::cout << "signature profile (braid " << braid_note << ", max |sigma| = " << profile->max_abs() << "):\n";
    for (const ProfileRecord& r : profile->records()) {
      std::cout << "  " << (r.jump ? "jump " : "arc  ") << r.angle << "  sigma " << r.sigma;
      if (r.jump) std::cout << "  multiplicity " << r.multiplicity;
      std::cout << "\n";
    }
  } else if (components == 1) {
    std::cout << "signature profile: unavailable (no registry braid matches this diagram)\n";
  }
  return 0;
}

int cmd_bounds(const CliConfig& cfg, const std::string& knot, const std::string& presentation, int copies) {
  DataSet data = load(cfg);
  BoundsRequest req;
  req.knot = knot;
  req.copies = copies;
  req.bracket = cfg.bracket();
  if (!presentation.empty())
    req.presentations = load_presentations(presentation, data.registry, cfg.bracket());
  if (copies > 1) progress("building the " + std::to_string(copies) + "-fold axis sum");
  const BoundReport r = knot_bounds(data, req);
  std::cout << (cfg.json ? r.json() : r.text());
  return r.contradiction ? 1 : 0;
}

int cmd_su(const CliConfig& cfg, const std::string& action, const std::string& file, int region) {
  const SymUnionSpec spec = parse_spec(read_text_file(file));
  if (action == "band") {
    const SymUnionSpec next = band_move(spec, TwistRegionRef{region});
    if (cfg.json) {
      json out;
      out["spec"] = serialize_spec(next);
      out["mu"] = next.mu;
      out["twist_regions"] = twist_region_count(next);
      out["components"] = component_count(build(next));
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << serialize_spec(next) << "mu: " << next.mu << "\n"
                << "twist regions: " << twist_region_count(next) << "\n"
                << "components: " << component_count(build(next)) << "\n";
    }
    return 0;
  }
  const Diagram d = action == "resolve" ? infinity_resolution(spec) : build(spec);
  const int components = component_count(d);
  if (cfg.json) {
    json out;
    out["pd"] = serialize_pd(d);
    out["crossings"] = d.crossing_count();
    out["components"] = components;
    if (action == "resolve") out["expected_components"] = spec.mu + twist_region_count(spec);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << serialize_pd(d) << "\n"
              << "crossings: " << d.crossing_count() << "\n"
              << "components: " << components << "\n";
  }
  return 0;
}

int cmd_reproduce(const CliConfig& cfg, const std::vector<std::string>& only, int copies) {
  DataSet data = load(cfg);
  ReproduceOptions opts;
  opts.only = only;
  opts.max_copies = copies;
  opts.bracket = cfg.bracket();
  opts.progress = progress;
  const auto results = reproduce(data, opts);
  std::cout << (cfg.json ? results_json(results) : results_table(results));
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric unions, knot invariants and doubly slice genus bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--data-dir", cfg.data_dir, "Directory with knots.csv, known_bounds.csv, presentations/")
      ->envname("SYMKNOT_DATA_DIR");
  const CLI::Range precision_range(64, 1 << 20);
  auto* precision = app.add_option("--precision", cfg.precision,
                                   "Starting precision in bits (signatures are exact); env SYMKNOT_PRECISION")
                        ->check(precision_range);
  app.add_option("--cap", cfg.cap, "Largest number of boundary states in the bracket engine")
      ->check(CLI::Range(std::size_t{1} << 16, std::size_t{1} << 40));
  app.add_flag("--json", cfg.json, "Structured output");

  std::string inv_name, inv_pd;
  auto* inv = app.add_subcommand("invariants", "Jones, Alexander, determinant and signature profile");
  inv->add_option("knot", inv_name, "Registry name");
  inv->add_option("--pd", inv_pd, "File holding a PD code");

  std::string b_knot, b_pres;
  int b_copies = 0;
  auto* bounds = app.add_subcommand("bounds", "Certified bounds on gds, tw and 2 g4");
  bounds->add_option("knot", b_knot, "Registry name")->required();
  bounds->add_option("--presentation", b_pres, "Symmetric-union presentation file or directory");
  bounds->add_option("--N", b_copies, "Report for the N-fold connected sum")->check(CLI::Range(1, 64));

  std::string su_action, su_file;
  int su_region = 1;
  auto* su = app.add_subcommand("su", "Build, resolve or band a symmetric union");
  su->add_option("action", su_action, "build | resolve | band")
      ->required()
      ->check(CLI::IsMember({"build", "resolve", "band"}));
  su->add_option("file", su_file, "Spec file")->required();
  su->add_option("--region", su_region, "Twist region for band (1-based)");

  std::vector<std::string> r_only;
  int r_copies = 5;
  auto* rep = app.add_subcommand("reproduce", "Run the acceptance criteria");
  rep->add_option("--only", r_only, "Criterion numbers or ids");
  rep->add_option("--N", r_copies, "Largest N for the scaling criterion")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
    const char* env_precision = std::getenv("SYMKNOT_PRECISION");
    if (precision->count() == 0 && env_precision && *env_precision) {
      const std::string why = precision_range(std::string(env_precision));
      if (!why.empty()) throw CLI::ValidationError("SYMKNOT_PRECISION", why);
      cfg.precision = std::stoi(env_precision);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inv) return cmd_invariants(cfg, inv_name, inv_pd);
    if (*bounds) return cmd_bounds(cfg, b_knot, b_pres, b_copies);
    if (*su) return cmd_su(cfg, su_action, su_file, su_region);
    if (*rep) return cmd_reproduce(cfg, r_only, r_copies);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
