#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symknot/knot_data.hpp"
#include "symknot/signature.hpp"
#include "symknot/symmetric_union.hpp"

namespace symknot {

// gds: doubly slice genus; tw: twisting number; g4x2: twice the smooth
// four-genus.
enum class Quantity { kGds, kTw, kG4x2 };
enum class BoundKind { kLower, kUpper };

// Closed set of inference rules.
//   signature-bound            |sigma_omega(K)| <= gds(K), any omega != 1
//   twist-region-count         tw(K) <= l for an l-twist symmetric union of K
//   tw-bounds-gds              gds(K) <= tw(K), used in both directions
//   band-moves-from-resolution gds(K) <= t when K is t band moves from a
//                              weakly doubly slice link such as L_inf
//   classical-g4               |sigma_omega| <= 2 g4 <= gds off the roots of Delta
//   external                   value taken from the known-bounds table
//   prime-tw-ge-1              tw(K) >= 1 for prime K
enum class Rule {
  kSignature,
  kTwistRegions,
  kTwBoundsGds,
  kBandMoves,
  kClassicalG4,
  kExternal,
  kPrimeTw,
};

const char* to_string(Quantity q);
const char* to_string(BoundKind k);
const char* to_string(Rule r);
Quantity parse_quantity(std::string_view s);

struct BoundCert {
  std::string id;
  std::string knot;
  Quantity quantity = Quantity::kGds;
  BoundKind kind = BoundKind::kLower;
  int value = 0;
  Rule rule = Rule::kSignature;
  // Ordered key/value payload; required keys depend on the rule.
  std::vector<std::pair<std::string, std::string>> evidence;
  std::vector<std::string> parents;

  std::string evidence_value(const std::string& key) const;
};

// Throws schema when the evidence keys or parents do not fit the rule.
void check_cert(const BoundCert& c);

BoundCert sig_lower_gds(const std::string& knot, const SignatureProfile& profile);
// Arc values only: the classical chain needs omega off the roots of Delta.
BoundCert classical_g4_lower(const std::string& knot, const SignatureProfile& profile);
// The caller certifies (by fingerprint) that build(spec) represents knot.
BoundCert tw_upper_from_spec(const std::string& knot, const SymUnionSpec& spec,
                             const Fingerprint& fp);
BoundCert gds_upper_from_tw(const BoundCert& tw_upper);
BoundCert tw_lower_from_gds(const BoundCert& gds_lower);
BoundCert g4x2_upper_from_gds(const BoundCert& gds_upper);

enum class WitnessKind { kInfinityResolution, kAsserted };
struct WeaklyDoublySliceWitness {
  WitnessKind kind = WitnessKind::kInfinityResolution;
  // Spec hash for an infinity resolution, citation key otherwise.
  std::string reference;
};
BoundCert gds_upper_from_band_moves(const std::string& knot, int t,
                                    const WeaklyDoublySliceWitness& witness);
// The l band moves taking L_inf of spec back to the knot.
BoundCert gds_upper_from_band_moves(const std::string& knot, const SymUnionSpec& spec);
BoundCert external_bound(const std::vector<KnownBound>& table, const std::string& knot,
                         const std::string& citation, Quantity q, BoundKind kind, int value);
std::vector<BoundCert> external_bounds_for(const std::vector<KnownBound>& table,
                                           const std::string& knot);
// Table names such as 8_20 or 12n_553 denote prime knots.
bool is_prime_table_name(const std::string& knot);
BoundCert prime_tw_lower(const std::string& knot);

struct Interval {
  int lower = 0;
  std::optional<int> upper;
  bool determined() const { return upper && *upper == lower; }
  bool contradictory() const { return upper && *upper < lower; }
  std::string str() const;
};

struct BoundReport {
  std::string knot;
  std::vector<BoundCert> certs;
  std::map<Quantity, Interval> intervals;
  bool contradiction = false;

  const Interval& interval(Quantity q) const { return intervals.at(q); }
  std::string text() const;
  std::string json() const;
};

// Certificates are sorted by rule identifier, then quantity, kind and value,
// and renumbered c1, c2, ... with parent references rewritten.
BoundReport compile_report(const std::string& knot, std::vector<BoundCert> certs);

struct ScaleInputs {
  const KnotRecord* record = nullptr;
  const SymUnionSpec* spec = nullptr;
  BracketOptions bracket;
  // Skip building the N-fold diagram (the fingerprint check is then limited
  // to the single-copy spec).
  bool verify_sum_diagram = true;
};

std::string connected_power_name(const std::string& knot, int n);
// Report for the N-fold connected sum: signature bound from the N-fold
// block sum at each profile point, upper bound from the N-fold axis sum.
BoundReport scale_connected_sum(const ScaleInputs& in, int n);

}  // namespace symknot
