#include "symknot/symmetric_union.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

#include "symknot/error.hpp"
#include "symknot/strand_graph.hpp"

namespace symknot {

namespace {

bool is_unknot_base(const Diagram& d) { return d.crossing_count() == 0; }

// Counterclockwise slots of the reflected copy of a crossing.
int mirror_position(int p) { return (4 - p) % 4; }

struct Frame {
  int top_left = -1;
  int bottom_left = -1;
};

int lowest_mark(const SymUnionSpec& s) { return *std::min_element(s.marks.begin(), s.marks.end()); }

std::vector<Frame> frames(const StrandGraph& g, const SymUnionSpec& s) {
  int face_count = 0;
  std::vector<int> face = g.faces(&face_count);
  auto left_of = [&](int label) { return face[g.edge(label - 1).to]; };
  auto right_of = [&](int label) { return face[g.edge(label - 1).from]; };
  auto touches_all = [&](int f) {
    return std::all_of(s.marks.begin(), s.marks.end(),
                       [&](int m) { return left_of(m) == f || right_of(m) == f; });
  };
  const int e0 = lowest_mark(s);
  int axis = -1;
  switch (s.side) {
    case AxisSide::kLeft: axis = left_of(e0); break;
    case AxisSide::kRight: axis = right_of(e0); break;
    case AxisSide::kAuto:
      axis = touches_all(left_of(e0)) ? left_of(e0) : right_of(e0);
      break;
  }
  if (!touches_all(axis))
    throw Error(ErrorKind::kNonPlanar, "marked edges do not share a face adjacent to the axis");
  std::vector<Frame> out;
  for (int m : s.marks) {
    const StrandGraph::Edge& e = g.edge(m - 1);
    bool axis_on_left = left_of(m) == axis;
    if (m == e0 && s.side == AxisSide::kRight) axis_on_left = false;
    // Travelling with the axis on the left means travelling downward.
    if (axis_on_left)
      out.push_back({e.from, e.to});
    else
      out.push_back({e.to, e.from});
  }
  return out;
}

StrandGraph mirrored(const StrandGraph& g) {
  StrandGraph m;
  for (int c = 0; c < g.crossing_count(); ++c) m.add_crossing();
  auto ms = [](int s) {
    return StrandGraph::slot(StrandGraph::crossing_of(s),
                             mirror_position(StrandGraph::position_of(s)));
  };
  for (int e = 0; e < g.edge_capacity(); ++e) m.add_edge(ms(g.edge(e).from), ms(g.edge(e).to));
  return m;
}

Diagram build_with(const SymUnionSpec& spec, int mu, const std::vector<int>& twists) {
  if (is_unknot_base(spec.base)) {
    Diagram d;
    d.free_loops = 1;
    d.name = spec.name;
    return d;
  }
  StrandGraph g = StrandGraph::from_diagram(spec.base);
  std::vector<Frame> fr = frames(g, spec);
  StrandGraph full = g;
  auto [coff, eoff] = full.append(mirrored(g));
  const int soff = 4 * coff;
  auto reflect = [&](int s) {
    return soff + StrandGraph::slot(StrandGraph::crossing_of(s),
                                    mirror_position(StrandGraph::position_of(s)));
  };
  for (std::size_t i = 0; i < spec.marks.size(); ++i) {
    int id = spec.marks[i] - 1;
    full.remove_edge(id);
    full.remove_edge(eoff + id);
    int tl = fr[i].top_left, bl = fr[i].bottom_left;
    int tr = reflect(tl), br = reflect(bl);
    if (static_cast<int>(i) < mu) {
      full.add_edge(tl, tr);
      full.add_edge(bl, br);
      continue;
    }
    int n = twists[i - mu];
    // Corner positions: NE, NW, SW, SE.
    std::array<int, 4> pos = n > 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{3, 0, 1, 2};
    int up_left = tl, up_right = tr;
    for (int j = 0; j < std::abs(n); ++j) {
      int c = full.add_crossing();
      full.add_edge(up_left, StrandGraph::slot(c, pos[1]));
      full.add_edge(up_right, StrandGraph::slot(c, pos[0]));
      up_left = StrandGraph::slot(c, pos[2]);
      up_right = StrandGraph::slot(c, pos[3]);
    }
    full.add_edge(up_left, bl);
    full.add_edge(up_right, br);
  }
  if (!full.planar())
    throw Error(ErrorKind::kNonPlanar, "surgery produced a non-planar diagram");
  int seed = 0;
  while (seed < full.edge_capacity() && !full.alive(seed)) ++seed;
  Diagram d = full.to_diagram({{seed, false}});
  d.name = spec.name;
  return d;
}

std::string side_name(AxisSide s) {
  switch (s) {
    case AxisSide::kLeft: return "left";
    case AxisSide::kRight: return "right";
    case AxisSide::kAuto: break;
  }
  return "auto";
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string canonical_key(const SymUnionSpec& s) {
  std::vector<int> inf(s.marks.begin(), s.marks.begin() + s.mu);
  std::sort(inf.begin(), inf.end());
  std::vector<std::pair<int, int>> tw;
  for (std::size_t i = s.mu; i < s.marks.size(); ++i) tw.push_back({s.marks[i], s.twists[i - s.mu]});
  std::sort(tw.begin(), tw.end());
  std::string out = serialize_pd(s.base) + "|" + side_name(s.side) + "|" + join_ints(inf) + "|";
  for (auto [m, n] : tw) out += std::to_string(m) + ":" + std::to_string(n) + ",";
  return out;
}

}  // namespace

void check_spec(const SymUnionSpec& s) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::kInvalidArgument, why); };
  if (component_count(s.base) != 1) fail("base diagram must be a knot");
  if (s.marks.empty()) fail("at least one mark is required");
  const int edges = s.base.edge_count();
  std::set<int> seen;
  for (int m : s.marks) {
    if (is_unknot_base(s.base) ? m != 1 : (m < 1 || m > edges))
      fail("mark " + std::to_string(m) + " is not an edge label of the base");
    if (!seen.insert(m).second) fail("mark " + std::to_string(m) + " repeated");
  }
  if (s.mu < 1 || s.mu > static_cast<int>(s.marks.size()))
    fail("mu must lie between 1 and the number of marks");
  if (s.twists.size() != s.marks.size() - s.mu)
    fail("expected " + std::to_string(s.marks.size() - s.mu) + " twist values, got " +
         std::to_string(s.twists.size()));
  for (int n : s.twists)
    if (n == 0) fail("twist values must be nonzero");
  if (!is_unknot_base(s.base)) {
    ValidationReport r = validate(s.base);
    if (!r.ok()) fail("base diagram invalid: " + r.violations.front().description);
  }
}

Diagram build(const SymUnionSpec& spec) {
  check_spec(spec);
  return build_with(spec, spec.mu, spec.twists);
}

Diagram infinity_resolution(const SymUnionSpec& spec) {
  check_spec(spec);
  Diagram d = build_with(spec, static_cast<int>(spec.marks.size()), {});
  d.name = spec.name.empty() ? std::string() : spec.name + "(inf)";
  return d;
}

SymUnionSpec band_move(const SymUnionSpec& spec, TwistRegionRef r) {
  check_spec(spec);
  const int l = twist_region_count(spec);
  if (r.index < 1 || r.index > l)
    throw Error(ErrorKind::kInvalidArgument,
                "twist region " + std::to_string(r.index) + " outside 1.." + std::to_string(l));
  SymUnionSpec out = spec;
  const int at = spec.mu - 1 + r.index;
  int mark = out.marks[at];
  out.marks.erase(out.marks.begin() + at);
  out.marks.insert(out.marks.begin() + spec.mu, mark);
  out.twists.erase(out.twists.begin() + (r.index - 1));
  out.mu = spec.mu + 1;
  if (!spec.name.empty()) out.name = spec.name + "/band" + std::to_string(r.index);
  return out;
}

int twist_region_count(const SymUnionSpec& spec) {
  return static_cast<int>(spec.marks.size()) - spec.mu;
}

SymUnionSpec axis_connected_sum(const SymUnionSpec& a, const SymUnionSpec& b) {
  check_spec(a);
  check_spec(b);
  if (a.mu != 1 || b.mu != 1)
    throw Error(ErrorKind::kInvalidArgument, "axis connected sum needs mu = 1 on both operands");
  std::string name = a.name + "#" + b.name;
  if (is_unknot_base(a.base)) {
    SymUnionSpec out = b;
    out.name = name;
    return out;
  }
  if (is_unknot_base(b.base)) {
    SymUnionSpec out = a;
    out.name = name;
    return out;
  }
  StrandGraph ga = StrandGraph::from_diagram(a.base);
  StrandGraph gb = StrandGraph::from_diagram(b.base);
  std::vector<Frame> fa = frames(ga, a), fb = frames(gb, b);
  StrandGraph g = ga;
  auto [coff, eoff] = g.append(gb);
  const int soff = 4 * coff;
  g.remove_edge(a.marks[0] - 1);
  g.remove_edge(eoff + b.marks[0] - 1);
  g.add_edge(fa[0].bottom_left, soff + fb[0].top_left);
  int axis_edge = g.add_edge(fa[0].top_left, soff + fb[0].bottom_left);
  std::vector<int> label_of;
  SymUnionSpec out;
  out.base = g.to_diagram({{axis_edge, false}}, &label_of);
  out.base.name = a.base.name + "#" + b.base.name;
  out.name = name;
  out.mu = 1;
  out.marks.push_back(label_of[axis_edge]);
  for (std::size_t i = 1; i < a.marks.size(); ++i) out.marks.push_back(label_of[a.marks[i] - 1]);
  for (std::size_t i = 1; i < b.marks.size(); ++i)
    out.marks.push_back(label_of[eoff + b.marks[i] - 1]);
  out.twists = a.twists;
  out.twists.insert(out.twists.end(), b.twists.begin(), b.twists.end());
  // The new axis edge runs downward with the axis on its left; express the
  // same face relative to the lowest-labelled mark.
  StrandGraph ng = StrandGraph::from_diagram(out.base);
  int face_count = 0;
  std::vector<int> face = ng.faces(&face_count);
  int axis_face = face[ng.edge(out.marks[0] - 1).to];
  int e0 = lowest_mark(out);
  out.side = face[ng.edge(e0 - 1).to] == axis_face ? AxisSide::kLeft : AxisSide::kRight;
  return out;
}

SymUnionSpec axis_power(const SymUnionSpec& s, int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "power must be positive");
  SymUnionSpec out = s;
  for (int i = 1; i < n; ++i) out = axis_connected_sum(out, s);
  if (!s.name.empty()) out.name = n == 1 ? s.name : std::to_string(n) + "*" + s.name;
  return out;
}

bool equivalent(const SymUnionSpec& a, const SymUnionSpec& b) {
  if (a.mu != b.mu || a.marks.size() != b.marks.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::string serialize_spec(const SymUnionSpec& s) {
  std::ostringstream out;
  out << "SU {\n";
  if (!s.name.empty()) out << "  name: \"" << s.name << "\";\n";
  out << "  base: " << serialize_pd(s.base) << ";\n";
  out << "  marks: " << join_ints(s.marks) << ";\n";
  out << "  mu: " << s.mu << ";\n";
  out << "  twists: " << join_ints(s.twists) << ";\n";
  if (s.side != AxisSide::kAuto) out << "  side: " << side_name(s.side) << ";\n";
  out << "}\n";
  return out.str();
}

std::string spec_hash(const SymUnionSpec& spec) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_key(spec)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class BlockReader {
 public:
  explicit BlockReader(std::string_view t) : text_(t) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kSyntax, "line " + std::to_string(line_) + ": " + what);
  }

  void expect(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string key() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Raw text up to the next top-level ';' or '}', comments removed.
  std::string value() {
    std::string out;
    int depth = 0;
    bool quoted = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (quoted) {
        out += c;
        ++pos_;
        if (c == '\\' && pos_ < text_.size()) out += text_[pos_++];
        else if (c == '"') quoted = false;
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (depth == 0 && (c == ';' || c == '}')) break;
      if (c == '\n') ++line_;
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '"') quoted = true;
      out += c;
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("unterminated block");
    std::size_t a = out.find_first_not_of(" \t\r\n");
    std::size_t b = out.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : out.substr(a, b - a + 1);
  }

  int line() const { return line_; }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::vector<int> parse_int_list(const std::string& v, const BlockReader& r) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') r.fail("expected a bracketed list");
  std::vector<int> out;
  std::string body = v.substr(1, v.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
      if (body.find_first_not_of(" \t\r\n") == std::string::npos) break;
      r.fail("empty list entry");
    }
    item = item.substr(a, item.find_last_not_of(" \t\r\n") - a + 1);
    try {
      std::size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size()) r.fail("bad integer '" + item + "'");
      out.push_back(x);
    } catch (const std::logic_error&) {
      r.fail("bad integer '" + item + "'");
    }
  }
  return out;
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
    std::string out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      if (v[i] == '\\' && i + 2 < v.size()) ++i;
      out += v[i];
    }
    return out;
  }
  return v;
}

}  // namespace

std::vector<SpecBlock> parse_spec_blocks(std::string_view text) {
  std::vector<SpecBlock> out;
  BlockReader r(text);
  while (!r.at_end()) {
    r.expect("SU");
    SpecBlock block;
    block.line = r.line();
    if (!r.accept('{')) r.fail("expected '{'");
    std::set<std::string> keys;
    while (!r.accept('}')) {
      std::string k = r.key();
      if (!r.accept(':')) r.fail("expected ':' after " + k);
      std::string v = r.value();
      r.accept(';');
      if (!keys.insert(k).second) r.fail("duplicate key " + k);
      if (k == "base") {
        try {
          block.spec.base = parse_pd(v);
        } catch (const Error& e) {
          r.fail(std::string("base: ") + e.what());
        }
      } else if (k == "marks") {
        block.spec.marks = parse_int_list(v, r);
      } else if (k == "twists") {
        block.spec.twists = parse_int_list(v, r);
      } else if (k == "mu") {
        try {
          std::size_t used = 0;
          block.spec.mu = std::stoi(v, &used);
          if (used != v.size()) r.fail("bad mu");
        } catch (const std::logic_error&) {
          r.fail("bad mu");
        }
      } else if (k == "name") {
        block.spec.name = unquote(v);
      } else if (k == "side") {
        std::string s = unquote(v);
        if (s == "left") block.spec.side = AxisSide::kLeft;
        else if (s == "right") block.spec.side = AxisSide::kRight;
        else if (s == "auto") block.spec.side = AxisSide::kAuto;
        else r.fail("side must be left, right or auto");
      } else if (k == "target" || k == "provenance") {
        block.extra[k] = unquote(v);
      } else {
        r.fail("unknown key " + k);
      }
    }
    if (!keys.count("base")) r.fail("block without base");
    if (!keys.count("marks")) r.fail("block without marks");
    block.spec.base.name = block.spec.name;
    check_spec(block.spec);
    out.push_back(std::move(block));
  }
  return out;
}

SymUnionSpec parse_spec(std::string_view text) {
  std::vector<SpecBlock> blocks = parse_spec_blocks(text);
  if (blocks.size() != 1)
    throw Error(ErrorKind::kSyntax, "expected exactly one SU block, found " +
                                        std::to_string(blocks.size()));
  return blocks.front().spec;
}

}  // namespace symknot
