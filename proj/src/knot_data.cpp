#include "symknot/knot_data.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "symknot/error.hpp"
#include "symknot/seifert.hpp"

namespace symknot {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(v);
    }
    std::string a = trim(s.substr(0, slash)), b = trim(s.substr(slash + 1));
    long long p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    long long q = std::stoll(b, &used);
    if (used != b.size() || q == 0) throw std::invalid_argument(s);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::kSyntax, "bad rational '" + s + "'");
  }
}

int edit_distance(std::string_view a, std::string_view b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

const std::vector<std::string> kTableHeader = {"name",       "braid_strands", "braid_word",
                                               "pd",         "jones",         "alexander",
                                               "determinant", "signature_samples", "provenance"};
const std::vector<std::string> kBoundsHeader = {"knot", "quantity", "kind", "value", "citation"};

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorKind::kSyntax, "unterminated quote");
  out.push_back(cur);
  return out;
}

std::vector<SignatureSample> parse_signature_samples(std::string_view text) {
  std::vector<SignatureSample> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::kSyntax, "signature sample without '='");
    Rational a = parse_rational(trim(item.substr(0, eq)));
    if (a <= 0 || a >= 2) throw Error(ErrorKind::kSyntax, "sample angle outside (0, 2)");
    std::string v = trim(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      int value = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      out.push_back({a, value});
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kSyntax, "bad signature value '" + v + "'");
    }
  }
  return out;
}

std::string serialize_signature_samples(const std::vector<SignatureSample>& samples) {
  std::string out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i) out += ";";
    out += samples[i].angle.str() + "=" + std::to_string(samples[i].value);
  }
  return out;
}

KnotTable parse_knot_table(std::string_view text) {
  KnotTable table;
  std::vector<std::string> lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) return table;
  std::vector<std::string> header = split_csv_line(lines[i]);
  for (std::string& h : header) h = trim(h);
  if (header != kTableHeader)
    throw Error(ErrorKind::kSchema, "knot table header must be: name,braid_strands,braid_word,pd,"
                                    "jones,alexander,determinant,signature_samples,provenance");
  for (++i; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (trim(lines[i]).empty() || trim(lines[i]).front() == '#') continue;
    try {
      std::vector<std::string> f = split_csv_line(lines[i]);
      if (f.size() != kTableHeader.size())
        throw Error(ErrorKind::kSchema, "expected 9 fields, found " + std::to_string(f.size()));
      for (std::string& x : f) x = trim(x);
      KnotRecord r;
      r.name = f[0];
      if (r.name.empty()) throw Error(ErrorKind::kSchema, "empty name");
      r.braid = parse_braid("braid[" + f[1] + "]" + f[2]);
      int cycles = braid_cycle_count(r.braid);
      if (cycles != 1)
        throw Error(ErrorKind::kInvalidArgument,
                    "braid closure has " + std::to_string(cycles) + " components, expected a knot");
      if (!f[3].empty()) {
        Diagram d = parse_pd(f[3]);
        d.name = r.name;
        ValidationReport rep = validate(d);
        if (!rep.ok()) throw Error(ErrorKind::kLabelConsistency, rep.violations.front().description);
        if (component_count(d) != 1) throw Error(ErrorKind::kInvalidArgument, "pd is not a knot");
        r.pd = d;
      }
      auto poly_field = [&](int col, const char* column) {
        try {
          return parse_laurent(f[col]);
        } catch (const Error& e) {
          throw Error(e.kind(), std::string(column) + ": " + e.what());
        }
      };
      if (!f[4].empty()) r.jones = poly_field(4, "jones");
      if (!f[5].empty()) r.alexander = poly_field(5, "alexander");
      if (!f[6].empty()) {
        try {
          r.determinant = BigInt(f[6]);
        } catch (const std::exception&) {
          throw Error(ErrorKind::kSyntax, "bad determinant '" + f[6] + "'");
        }
      }
      r.signature_samples = parse_signature_samples(f[7]);
      r.provenance = f[8];
      table.records.push_back(std::move(r));
    } catch (const Error& e) {
      table.skipped.push_back({line_no, std::string(to_string(e.kind())) + ": " + e.what()});
    }
  }
  return table;
}

KnotTable load_knot_table(const std::filesystem::path& path) {
  return parse_knot_table(read_text_file(path));
}

Fingerprint fingerprint(const Diagram& knot, const BracketOptions& opts) {
  if (component_count(knot) != 1)
    throw Error(ErrorKind::kInvalidArgument, "fingerprints are defined for knots");
  Fingerprint f;
  f.jones = jones(knot, opts).poly;
  f.alexander = alexander(knot);
  f.determinant = determinant(knot);
  return f;
}

Fingerprint reference_fingerprint(const KnotRecord& r) {
  if (!r.jones || !r.alexander || !r.determinant)
    throw Error(ErrorKind::kMissingFixture,
                "knot " + r.name + " lacks reference jones, alexander or determinant");
  return {*r.jones, *r.alexander, *r.determinant};
}

std::string fingerprint_difference(const Fingerprint& built, const Fingerprint& target) {
  if (built.determinant != target.determinant) return "determinant";
  if (built.alexander != target.alexander) return "alexander";
  if (built.jones != target.jones) return "jones";
  return {};
}

std::string fingerprint_summary(const Fingerprint& f) {
  return "jones=" + to_string(f.jones) + "; alexander=" + to_string(f.alexander) +
         "; det=" + f.determinant.str();
}

Registry::Registry(std::vector<KnotRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (records_[i].name == records_[j].name)
        throw Error(ErrorKind::kSchema, "duplicate knot " + records_[i].name);
}

const KnotRecord* Registry::find(std::string_view name) const {
  for (const KnotRecord& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

const KnotRecord& Registry::lookup(std::string_view name) const {
  if (const KnotRecord* r = find(name)) return *r;
  std::string msg = "unknown knot " + std::string(name);
  std::vector<std::string> near = near_misses(name);
  if (!near.empty()) {
    msg += " (did you mean";
    for (std::size_t i = 0; i < near.size(); ++i) msg += (i ? ", " : " ") + near[i];
    msg += "?)";
  }
  throw Error(ErrorKind::kUnknownName, msg);
}

std::vector<std::string> Registry::near_misses(std::string_view name) const {
  std::vector<std::pair<int, std::string>> scored;
  for (const KnotRecord& r : records_) {
    int d = edit_distance(name, r.name);
    if (d <= 2) scored.push_back({d, r.name});
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (auto& [d, n] : scored) out.push_back(n);
  return out;
}

std::vector<PresentationRecord> parse_presentations(std::string_view text, const Registry& registry,
                                                    const std::string& source,
                                                    const BracketOptions& opts) {
  std::vector<PresentationRecord> out;
  for (SpecBlock& block : parse_spec_blocks(text)) {
    PresentationRecord p;
    p.name = block.spec.name;
    p.source = source;
    auto target = block.extra.find("target");
    auto prov = block.extra.find("provenance");
    if (target == block.extra.end() || prov == block.extra.end())
      throw Error(ErrorKind::kSchema, "presentation " + p.name + " needs target and provenance");
    p.target = target->second;
    p.provenance = prov->second;
    p.spec = std::move(block.spec);
    if (p.spec.mu != 1)
      throw Error(ErrorKind::kInvalidArgument, "presentation " + p.name + " must have mu = 1");
    Diagram d = build(p.spec);
    ValidationReport rep = validate(d);
    if (!rep.ok())
      throw Error(ErrorKind::kNonPlanar,
                  "presentation " + p.name + ": " + rep.violations.front().description);
    p.fingerprint = fingerprint(d, opts);
    const KnotRecord& t = registry.lookup(p.target);
    std::string diff = fingerprint_difference(p.fingerprint, reference_fingerprint(t));
    if (!diff.empty())
      throw Error(ErrorKind::kFingerprintMismatch,
                  "presentation " + p.name + ": " + diff + " of the built diagram differs from " +
                      p.target);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PresentationRecord> load_presentations(const std::filesystem::path& path,
                                                   const Registry& registry,
                                                   const BracketOptions& opts) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".su") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<PresentationRecord> out;
  for (const auto& f : files) {
    std::vector<PresentationRecord> part =
        parse_presentations(read_text_file(f), registry, f.filename().string(), opts);
    for (auto& p : part) out.push_back(std::move(p));
  }
  return out;
}

std::vector<KnownBound> parse_known_bounds(std::string_view text) {
  std::vector<KnownBound> out;
  std::vector<std::string> lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) return out;
  std::vector<std::string> header = split_csv_line(lines[i]);
  for (std::string& h : header) h = trim(h);
  if (header != kBoundsHeader)
    throw Error(ErrorKind::kSchema, "known-bounds header must be: knot,quantity,kind,value,citation");
  for (++i; i < lines.size(); ++i) {
    if (trim(lines[i]).empty() || trim(lines[i]).front() == '#') continue;
    std::vector<std::string> f = split_csv_line(lines[i]);
    const std::string where = "known bounds line " + std::to_string(i + 1);
    if (f.size() != 5) throw Error(ErrorKind::kSchema, where + ": expected 5 fields");
    for (std::string& x : f) x = trim(x);
    KnownBound b{f[0], f[1], f[2], 0, f[4]};
    try {
      std::size_t used = 0;
      b.value = std::stoi(f[3], &used);
      if (used != f[3].size() || b.value < 0) throw std::invalid_argument(f[3]);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kSchema, where + ": value must be a nonnegative integer");
    }
    if (b.quantity != "gds" && b.quantity != "tw" && b.quantity != "g4x2")
      throw Error(ErrorKind::kSchema, where + ": quantity must be gds, tw or g4x2");
    if (b.kind != "lower" && b.kind != "upper")
      throw Error(ErrorKind::kSchema, where + ": kind must be lower or upper");
    if (b.citation.empty()) throw Error(ErrorKind::kSchema, where + ": missing citation");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<KnownBound> load_known_bounds(const std::filesystem::path& path) {
  return parse_known_bounds(read_text_file(path));
}

}  // namespace symknot
