#include "symknot/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symknot/error.hpp"
#include "symknot/seifert.hpp"

namespace symknot {

namespace {

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 8);
}

BoundCert make(const std::string& knot, Quantity q, BoundKind k, int value, Rule r,
               std::vector<std::pair<std::string, std::string>> evidence,
               std::vector<std::string> parents = {}) {
  if (value < 0) throw Error(ErrorKind::kInvalidArgument, "bound values are nonnegative");
  BoundCert c;
  c.knot = knot;
  c.quantity = q;
  c.kind = k;
  c.value = value;
  c.rule = r;
  c.evidence = std::move(evidence);
  c.parents = std::move(parents);
  std::string key = knot + "|" + to_string(q) + "|" + to_string(k) + "|" + std::to_string(value) +
                    "|" + to_string(r);
  for (auto& [a, b] : c.evidence) key += "|" + a + "=" + b;
  for (auto& p : c.parents) key += "|^" + p;
  c.id = std::string(to_string(r)) + "-" + fnv_hex(key);
  return c;
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::kGds: return "gds";
    case Quantity::kTw: return "tw";
    case Quantity::kG4x2: return "g4x2";
  }
  return "?";
}

const char* to_string(BoundKind k) { return k == BoundKind::kLower ? "lower" : "upper"; }

const char* to_string(Rule r) {
  switch (r) {
    case Rule::kSignature: return "signature-bound";
    case Rule::kTwistRegions: return "twist-region-count";
    case Rule::kTwBoundsGds: return "tw-bounds-gds";
    case Rule::kBandMoves: return "band-moves-from-resolution";
    case Rule::kClassicalG4: return "classical-g4";
    case Rule::kExternal: return "external";
    case Rule::kPrimeTw: return "prime-tw-ge-1";
  }
  return "?";
}

Quantity parse_quantity(std::string_view s) {
  if (s == "gds") return Quantity::kGds;
  if (s == "tw") return Quantity::kTw;
  if (s == "g4x2") return Quantity::kG4x2;
  throw Error(ErrorKind::kSchema, "unknown quantity " + std::string(s));
}

std::string BoundCert::evidence_value(const std::string& key) const {
  for (auto& [k, v] : evidence)
    if (k == key) return v;
  return {};
}

void check_cert(const BoundCert& c) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kSchema, "certificate " + c.id + " (" + to_string(c.rule) + "): " + why);
  };
  auto need = [&](std::initializer_list<const char*> keys) {
    if (c.evidence.size() != keys.size()) fail("unexpected evidence fields");
    std::size_t i = 0;
    for (const char* k : keys)
      if (c.evidence[i++].first != k) fail(std::string("missing evidence ") + k);
  };
  auto shape = [&](Quantity q, BoundKind k) {
    if (c.quantity != q || c.kind != k)
      fail(std::string("must be a ") + to_string(q) + " " + to_string(k) + " bound");
  };
  if (c.value < 0) fail("negative value");
  switch (c.rule) {
    case Rule::kSignature:
      shape(Quantity::kGds, BoundKind::kLower);
      need({"angle", "sigma", "point"});
      if (!c.parents.empty()) fail("takes no parents");
      break;
    case Rule::kClassicalG4:
      if (c.kind == BoundKind::kLower) {
        shape(Quantity::kG4x2, BoundKind::kLower);
        need({"angle", "sigma", "point"});
        if (!c.parents.empty()) fail("takes no parents");
      } else {
        shape(Quantity::kG4x2, BoundKind::kUpper);
        need({"from"});
        if (c.parents.size() != 1) fail("needs one parent");
      }
      break;
    case Rule::kTwistRegions:
      shape(Quantity::kTw, BoundKind::kUpper);
      need({"spec", "spec_hash", "twist_regions", "fingerprint", "match"});
      if (!c.parents.empty()) fail("takes no parents");
      break;
    case Rule::kTwBoundsGds:
      if (!((c.quantity == Quantity::kGds && c.kind == BoundKind::kUpper) ||
            (c.quantity == Quantity::kTw && c.kind == BoundKind::kLower)))
        fail("must be a gds upper or tw lower bound");
      need({"from"});
      if (c.parents.size() != 1) fail("needs one parent");
      break;
    case Rule::kBandMoves:
      shape(Quantity::kGds, BoundKind::kUpper);
      need({"band_moves", "witness", "reference"});
      if (!c.parents.empty()) fail("takes no parents");
      break;
    case Rule::kExternal:
      need({"citation"});
      if (!c.parents.empty()) fail("takes no parents");
      break;
    case Rule::kPrimeTw:
      shape(Quantity::kTw, BoundKind::kLower);
      need({"table_name"});
      if (c.value != 1) fail("value must be 1");
      break;
  }
}

BoundCert sig_lower_gds(const std::string& knot, const SignatureProfile& profile) {
  SignatureProfile::Witness w = profile.argmax();
  return make(knot, Quantity::kGds, BoundKind::kLower, std::abs(w.sigma), Rule::kSignature,
              {{"angle", w.angle}, {"sigma", std::to_string(w.sigma)},
               {"point", w.jump ? "jump" : "arc"}});
}

BoundCert classical_g4_lower(const std::string& knot, const SignatureProfile& profile) {
  SignatureProfile::Witness w = profile.arc_argmax();
  return make(knot, Quantity::kG4x2, BoundKind::kLower, std::abs(w.sigma), Rule::kClassicalG4,
              {{"angle", w.angle}, {"sigma", std::to_string(w.sigma)}, {"point", "arc"}});
}

BoundCert tw_upper_from_spec(const std::string& knot, const SymUnionSpec& spec,
                             const Fingerprint& fp) {
  check_spec(spec);
  if (spec.mu != 1)
    throw Error(ErrorKind::kInvalidArgument, "twist-region bound needs a spec with mu = 1");
  const int l = twist_region_count(spec);
  return make(knot, Quantity::kTw, BoundKind::kUpper, l, Rule::kTwistRegions,
              {{"spec", spec.name},
               {"spec_hash", spec_hash(spec)},
               {"twist_regions", std::to_string(l)},
               {"fingerprint", fingerprint_summary(fp)},
               {"match", "invariant-level"}});
}

BoundCert gds_upper_from_tw(const BoundCert& c) {
  if (c.quantity != Quantity::kTw || c.kind != BoundKind::kUpper)
    throw Error(ErrorKind::kInvalidArgument, "expected an upper bound on tw");
  return make(c.knot, Quantity::kGds, BoundKind::kUpper, c.value, Rule::kTwBoundsGds,
              {{"from", c.id}}, {c.id});
}

BoundCert tw_lower_from_gds(const BoundCert& c) {
  if (c.quantity != Quantity::kGds || c.kind != BoundKind::kLower)
    throw Error(ErrorKind::kInvalidArgument, "expected a lower bound on gds");
  return make(c.knot, Quantity::kTw, BoundKind::kLower, c.value, Rule::kTwBoundsGds,
              {{"from", c.id}}, {c.id});
}

BoundCert g4x2_upper_from_gds(const BoundCert& c) {
  if (c.quantity != Quantity::kGds || c.kind != BoundKind::kUpper)
    throw Error(ErrorKind::kInvalidArgument, "expected an upper bound on gds");
  return make(c.knot, Quantity::kG4x2, BoundKind::kUpper, c.value, Rule::kClassicalG4,
              {{"from", c.id}}, {c.id});
}

BoundCert gds_upper_from_band_moves(const std::string& knot, int t,
                                    const WeaklyDoublySliceWitness& w) {
  if (t < 0) throw Error(ErrorKind::kInvalidArgument, "band move count must be nonnegative");
  if (w.reference.empty())
    throw Error(ErrorKind::kInvalidArgument, "weakly doubly slice witness needs a reference");
  const char* kind = nullptr;
  switch (w.kind) {
    case WitnessKind::kInfinityResolution: kind = "infinity-resolution"; break;
    case WitnessKind::kAsserted: kind = "asserted"; break;
  }
  if (!kind) throw Error(ErrorKind::kInvalidArgument, "unsupported witness kind");
  return make(knot, Quantity::kGds, BoundKind::kUpper, t, Rule::kBandMoves,
              {{"band_moves", std::to_string(t)}, {"witness", kind}, {"reference", w.reference}});
}

BoundCert gds_upper_from_band_moves(const std::string& knot, const SymUnionSpec& spec) {
  check_spec(spec);
  if (spec.mu != 1)
    throw Error(ErrorKind::kInvalidArgument, "band-move bound needs a spec with mu = 1");
  const int l = twist_region_count(spec);
  Diagram resolved = infinity_resolution(spec);
  if (component_count(resolved) != 1 + l)
    throw std::logic_error("infinity resolution has the wrong number of components");
  return gds_upper_from_band_moves(knot, l,
                                   {WitnessKind::kInfinityResolution, spec_hash(spec)});
}

BoundCert external_bound(const std::vector<KnownBound>& table, const std::string& knot,
                         const std::string& citation, Quantity q, BoundKind kind, int value) {
  for (const KnownBound& b : table)
    if (b.knot == knot && b.citation == citation && parse_quantity(b.quantity) == q &&
        b.kind == to_string(kind) && b.value == value)
      return make(knot, q, kind, value, Rule::kExternal, {{"citation", citation}});
  throw Error(ErrorKind::kUnknownName,
              "no known bound for " + knot + " under citation " + citation);
}

std::vector<BoundCert> external_bounds_for(const std::vector<KnownBound>& table,
                                           const std::string& knot) {
  std::vector<BoundCert> out;
  for (const KnownBound& b : table)
    if (b.knot == knot)
      out.push_back(external_bound(table, knot, b.citation, parse_quantity(b.quantity),
                                   b.kind == "lower" ? BoundKind::kLower : BoundKind::kUpper,
                                   b.value));
  return out;
}

bool is_prime_table_name(const std::string& knot) {
  static const std::regex pattern(R"(([0-9]+)[an]?_[0-9]+)");
  std::smatch m;
  if (!std::regex_match(knot, m, pattern)) return false;
  return std::stoi(m[1].str()) >= 3;
}

BoundCert prime_tw_lower(const std::string& knot) {
  if (!is_prime_table_name(knot))
    throw Error(ErrorKind::kInvalidArgument, knot + " is not a prime knot table entry");
  return make(knot, Quantity::kTw, BoundKind::kLower, 1, Rule::kPrimeTw, {{"table_name", knot}});
}

std::string Interval::str() const {
  return "[" + std::to_string(lower) + ", " + (upper ? std::to_string(*upper) : "inf") + "]";
}

BoundReport compile_report(const std::string& knot, std::vector<BoundCert> certs) {
  std::map<std::string, const BoundCert*> by_id;
  std::vector<BoundCert> unique;
  for (BoundCert& c : certs) {
    if (c.knot != knot)
      throw Error(ErrorKind::kInvalidArgument,
                  "certificate for " + c.knot + " given to the report for " + knot);
    check_cert(c);
    if (std::none_of(unique.begin(), unique.end(), [&](const BoundCert& u) { return u.id == c.id; }))
      unique.push_back(std::move(c));
  }
  for (const BoundCert& c : unique) by_id[c.id] = &c;
  for (const BoundCert& c : unique)
    for (const std::string& p : c.parents) {
      auto it = by_id.find(p);
      if (it == by_id.end())
        throw Error(ErrorKind::kSchema, "certificate " + c.id + " cites missing parent " + p);
      const BoundCert& parent = *it->second;
      bool fits = false;
      if (c.rule == Rule::kTwBoundsGds && c.quantity == Quantity::kGds)
        fits = parent.quantity == Quantity::kTw && parent.kind == BoundKind::kUpper;
      if (c.rule == Rule::kTwBoundsGds && c.quantity == Quantity::kTw)
        fits = parent.quantity == Quantity::kGds && parent.kind == BoundKind::kLower;
      if (c.rule == Rule::kClassicalG4)
        fits = parent.quantity == Quantity::kGds && parent.kind == BoundKind::kUpper;
      if (!fits || parent.value != c.value)
        throw Error(ErrorKind::kSchema, "certificate " + c.id + " does not follow from " + p);
    }
  // Parents always point at a different quantity or direction, but check
  // acyclicity explicitly.
  std::map<std::string, int> state;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    int& s = state[id];
    if (s == 2) return;
    if (s == 1) throw Error(ErrorKind::kSchema, "certificate graph has a cycle through " + id);
    s = 1;
    for (const std::string& p : by_id[id]->parents) visit(p);
    state[id] = 2;
  };
  for (const BoundCert& c : unique) visit(c.id);

  std::sort(unique.begin(), unique.end(), [](const BoundCert& a, const BoundCert& b) {
    auto key = [](const BoundCert& c) {
      return std::make_tuple(std::string(to_string(c.rule)), static_cast<int>(c.quantity),
                             static_cast<int>(c.kind), c.value, c.id);
    };
    return key(a) < key(b);
  });
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < unique.size(); ++i) rename[unique[i].id] = "c" + std::to_string(i + 1);
  BoundReport r;
  r.knot = knot;
  for (BoundCert c : unique) {
    c.id = rename[c.id];
    for (std::string& p : c.parents) p = rename[p];
    for (auto& [k, v] : c.evidence)
      if (k == "from") v = rename[v];
    r.certs.push_back(std::move(c));
  }
  for (Quantity q : {Quantity::kGds, Quantity::kTw, Quantity::kG4x2}) {
    Interval iv;
    for (const BoundCert& c : r.certs) {
      if (c.quantity != q) continue;
      if (c.kind == BoundKind::kLower) iv.lower = std::max(iv.lower, c.value);
      else iv.upper = iv.upper ? std::min(*iv.upper, c.value) : c.value;
    }
    if (iv.contradictory()) r.contradiction = true;
    r.intervals[q] = iv;
  }
  return r;
}

std::string BoundReport::text() const {
  std::ostringstream out;
  out << "knot: " << knot << "\n";
  out << std::left << std::setw(10) << "quantity" << std::setw(8) << "lower" << std::setw(8)
      << "upper" << "status\n";
  for (Quantity q : {Quantity::kGds, Quantity::kTw, Quantity::kG4x2}) {
    const Interval& iv = intervals.at(q);
    std::string status = iv.contradictory() ? "contradiction" : iv.determined() ? "determined" : "open";
    out << std::left << std::setw(10) << to_string(q) << std::setw(8) << iv.lower << std::setw(8)
        << (iv.upper ? std::to_string(*iv.upper) : "inf") << status << "\n";
  }
  if (contradiction) out << "WARNING: contradictory bounds (convention or data error)\n";
  out << "certificates:\n";
  for (const BoundCert& c : certs) {
    out << "  " << c.id << "  " << to_string(c.quantity) << (c.kind == BoundKind::kLower ? " >= " : " <= ")
        << c.value << "  rule=" << to_string(c.rule);
    for (auto& [k, v] : c.evidence) out << "  " << k << "=\"" << v << "\"";
    out << "\n";
  }
  return out.str();
}

std::string BoundReport::json() const {
  nlohmann::ordered_json j;
  j["knot"] = knot;
  nlohmann::ordered_json iv = nlohmann::ordered_json::object();
  for (Quantity q : {Quantity::kGds, Quantity::kTw, Quantity::kG4x2}) {
    const Interval& i = intervals.at(q);
    nlohmann::ordered_json e;
    e["lower"] = i.lower;
    e["upper"] = i.upper ? nlohmann::ordered_json(*i.upper) : nlohmann::ordered_json(nullptr);
    e["determined"] = i.determined();
    iv[to_string(q)] = e;
  }
  j["intervals"] = iv;
  j["contradiction"] = contradiction;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const BoundCert& c : certs) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["quantity"] = to_string(c.quantity);
    e["kind"] = to_string(c.kind);
    e["value"] = c.value;
    e["rule"] = to_string(c.rule);
    nlohmann::ordered_json ev = nlohmann::ordered_json::object();
    for (auto& [k, v] : c.evidence) ev[k] = v;
    e["evidence"] = ev;
    e["parents"] = c.parents;
    cs.push_back(e);
  }
  j["certificates"] = cs;
  return j.dump(2) + "\n";
}

std::string connected_power_name(const std::string& knot, int n) {
  return n == 1 ? knot : "#^" + std::to_string(n) + "(" + knot + ")";
}

BoundReport scale_connected_sum(const ScaleInputs& in, int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "N must be positive");
  if (!in.record) throw Error(ErrorKind::kMissingFixture, "no knot record");
  const KnotRecord& rec = *in.record;
  const std::string name = connected_power_name(rec.name, n);
  SeifertMatrix v = seifert_matrix(rec.braid);
  SeifertMatrix sum = v;
  for (int i = 1; i < n; ++i) sum = block_sum(sum, v);
  SignatureProfile prof = signature_profile(sum);
  std::vector<BoundCert> certs;
  BoundCert lower = sig_lower_gds(name, prof);
  certs.push_back(lower);
  certs.push_back(classical_g4_lower(name, prof));
  certs.push_back(tw_lower_from_gds(lower));
  if (n == 1 && is_prime_table_name(rec.name)) certs.push_back(prime_tw_lower(rec.name));
  if (in.spec) {
    SymUnionSpec s = axis_power(*in.spec, n);
    s.name = connected_power_name(in.spec->name, n);
    Fingerprint expected = reference_fingerprint(rec);
    Fingerprint target{expected.jones.pow(n), expected.alexander.pow(n),
                       boost::multiprecision::pow(expected.determinant, n)};
    Fingerprint fp = target;
    if (in.verify_sum_diagram || n == 1) {
      fp = fingerprint(build(s), in.bracket);
      std::string diff = fingerprint_difference(fp, target);
      if (!diff.empty())
        throw Error(ErrorKind::kFingerprintMismatch,
                    "axis sum " + s.name + ": " + diff + " differs from the " +
                        std::to_string(n) + "-fold sum of " + rec.name);
    }
    BoundCert tw_up = tw_upper_from_spec(name, s, fp);
    BoundCert gds_up = gds_upper_from_tw(tw_up);
    certs.push_back(tw_up);
    certs.push_back(gds_up);
    certs.push_back(gds_upper_from_band_moves(name, s));
    certs.push_back(g4x2_upper_from_gds(gds_up));
  }
  return compile_report(name, std::move(certs));
}

}  // namespace symknot
