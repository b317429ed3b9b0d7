#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symknot/bracket.hpp"
#include "symknot/diagram.hpp"
#include "symknot/laurent.hpp"
#include "symknot/number.hpp"
#include "symknot/symmetric_union.hpp"

namespace symknot {

// sigma at omega = exp(i pi * angle).
struct SignatureSample {
  Rational angle;
  int value = 0;
  bool operator==(const SignatureSample&) const = default;
};

// "1/3=-1;1/2=-2"
std::vector<SignatureSample> parse_signature_samples(std::string_view text);
std::string serialize_signature_samples(const std::vector<SignatureSample>& samples);

struct KnotRecord {
  std::string name;
  BraidWord braid;
  std::optional<Diagram> pd;
  std::optional<LaurentPoly> jones;
  std::optional<LaurentPoly> alexander;
  std::optional<BigInt> determinant;
  std::vector<SignatureSample> signature_samples;
  std::string provenance;
};

struct LoadIssue {
  int line = 0;
  std::string message;
};

struct KnotTable {
  std::vector<KnotRecord> records;
  std::vector<LoadIssue> skipped;
};

// Columns: name,braid_strands,braid_word,pd,jones,alexander,determinant,
// signature_samples,provenance. Fields containing commas are double-quoted.
// Invalid rows are skipped and reported; a wrong header is a schema error.
KnotTable parse_knot_table(std::string_view text);
KnotTable load_knot_table(const std::filesystem::path& path);

// Invariants used to match a diagram against a named knot. Equality is an
// invariant-level match, not a recognition proof.
struct Fingerprint {
  LaurentPoly jones;
  LaurentPoly alexander;
  BigInt determinant;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Diagram& knot, const BracketOptions& opts = {});
// Reference values of a record; throws missing-fixture when one is absent.
Fingerprint reference_fingerprint(const KnotRecord& r);
// Name of the first differing invariant, or an empty string.
std::string fingerprint_difference(const Fingerprint& built, const Fingerprint& target);
std::string fingerprint_summary(const Fingerprint& f);

class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<KnotRecord> records);

  const KnotRecord& lookup(std::string_view name) const;
  const KnotRecord* find(std::string_view name) const;
  // Names within a small edit distance, closest first.
  std::vector<std::string> near_misses(std::string_view name) const;
  const std::vector<KnotRecord>& records() const { return records_; }

 private:
  std::vector<KnotRecord> records_;
};

struct PresentationRecord {
  std::string name;
  SymUnionSpec spec;
  std::string target;
  std::string provenance;
  Fingerprint fingerprint;
  std::string source;
};

// Reads SU blocks that carry target and provenance keys, builds each one
// and compares its fingerprint with the target's reference values. A
// mismatch throws fingerprint-mismatch naming the invariant.
std::vector<PresentationRecord> parse_presentations(std::string_view text, const Registry& registry,
                                                    const std::string& source = {},
                                                    const BracketOptions& opts = {});
// A single .su file, or every .su file of a directory in name order.
std::vector<PresentationRecord> load_presentations(const std::filesystem::path& path,
                                                   const Registry& registry,
                                                   const BracketOptions& opts = {});

struct KnownBound {
  std::string knot;
  std::string quantity;
  std::string kind;
  int value = 0;
  std::string citation;
};

// Columns: knot,quantity,kind,value,citation.
std::vector<KnownBound> parse_known_bounds(std::string_view text);
std::vector<KnownBound> load_known_bounds(const std::filesystem::path& path);

// Splits one CSV line, honouring double quotes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace symknot
