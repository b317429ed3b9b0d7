#include "symknot/pipeline.hpp"

#include "symknot/error.hpp"
#include "symknot/seifert.hpp"

namespace symknot {

namespace fs = std::filesystem;

std::vector<const PresentationRecord*> DataSet::presentations_of(const std::string& knot) const {
  std::vector<const PresentationRecord*> out;
  for (const auto& p : presentations)
    if (p.target == knot) out.push_back(&p);
  return out;
}

DataSet load_data(const fs::path& dir, const BracketOptions& opts) {
  DataSet data;
  data.dir = dir;
  const fs::path knots = dir / "knots.csv";
  if (!fs::exists(knots))
    throw Error(ErrorKind::kMissingFixture, "no knots.csv in " + dir.string());
  KnotTable table = load_knot_table(knots);
  data.skipped = std::move(table.skipped);
  data.registry = Registry(std::move(table.records));
  if (fs::exists(dir / "known_bounds.csv")) data.known_bounds = load_known_bounds(dir / "known_bounds.csv");
  if (fs::exists(dir / "presentations"))
    data.presentations = load_presentations(dir / "presentations", data.registry, opts);
  return data;
}

BoundReport knot_bounds(const DataSet& data, const BoundsRequest& req) {
  const KnotRecord& record = data.registry.lookup(req.knot);
  std::vector<const PresentationRecord*> pres;
  if (!req.presentations.empty()) {
    for (const auto& p : req.presentations)
      if (p.target == req.knot) pres.push_back(&p);
    if (pres.empty())
      throw Error(ErrorKind::kMissingFixture, "no presentation of " + req.knot + " in the given file");
  } else {
    pres = data.presentations_of(req.knot);
  }

  if (req.copies >= 1) {
    ScaleInputs in;
    in.record = &record;
    in.spec = pres.empty() ? nullptr : &pres.front()->spec;
    in.bracket = req.bracket;
    return scale_connected_sum(in, req.copies);
  }

  std::vector<BoundCert> certs;
  const SignatureProfile profile = signature_profile(seifert_matrix(record.braid));
  BoundCert sig = sig_lower_gds(req.knot, profile);
  certs.push_back(sig);
  certs.push_back(tw_lower_from_gds(sig));
  certs.push_back(classical_g4_lower(req.knot, profile));
  if (is_prime_table_name(req.knot)) certs.push_back(prime_tw_lower(req.knot));
  for (const BoundCert& e : external_bounds_for(data.known_bounds, req.knot)) {
    certs.push_back(e);
    if (e.quantity == Quantity::kGds && e.kind == BoundKind::kLower) certs.push_back(tw_lower_from_gds(e));
  }
  for (const PresentationRecord* p : pres) {
    BoundCert tw = tw_upper_from_spec(req.knot, p->spec, p->fingerprint);
    BoundCert gds = gds_upper_from_tw(tw);
    certs.push_back(tw);
    certs.push_back(gds);
    certs.push_back(g4x2_upper_from_gds(gds));
    certs.push_back(gds_upper_from_band_moves(req.knot, p->spec));
  }
  return compile_report(req.knot, std::move(certs));
}

}  // namespace symknot
