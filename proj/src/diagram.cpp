#include "symknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "symknot/error.hpp"
#include "symknot/strand_graph.hpp"

namespace symknot {

int Diagram::component_of(int label) const {
  for (size_t i = 0; i < components.size(); ++i)
    if (label >= components[i].first && label <= components[i].last) return static_cast<int>(i);
  return -1;
}

int Diagram::successor(int label) const {
  int c = component_of(label);
  if (c < 0) return -1;
  return label == components[c].last ? components[c].first : label + 1;
}

int Diagram::predecessor(int label) const {
  int c = component_of(label);
  if (c < 0) return -1;
  return label == components[c].first ? components[c].last : label - 1;
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, int free_loops, std::string name) {
  Diagram d;
  d.crossings = std::move(crossings);
  d.free_loops = free_loops;
  d.name = std::move(name);
  const int edges = d.edge_count();
  std::vector<int> count(edges + 1, 0);
  for (const Crossing& x : d.crossings)
    for (int label : x) {
      if (label < 1 || label > edges)
        throw Error(ErrorKind::kLabelConsistency,
                    "label " + std::to_string(label) + " outside 1.." + std::to_string(edges));
      ++count[label];
    }
  for (int label = 1; label <= edges; ++label)
    if (count[label] != 2)
      throw Error(ErrorKind::kLabelConsistency, "label " + std::to_string(label) + " appears " +
                                                    std::to_string(count[label]) + " times");
  // Strand continuation links a-c and b-d at every crossing.
  std::vector<std::vector<int>> link(edges + 1);
  for (const Crossing& x : d.crossings) {
    link[x[0]].push_back(x[2]);
    link[x[2]].push_back(x[0]);
    link[x[1]].push_back(x[3]);
    link[x[3]].push_back(x[1]);
  }
  std::vector<char> seen(edges + 1, 0);
  for (int start = 1; start <= edges; ++start) {
    if (seen[start]) continue;
    int lo = start, hi = start, prev = -1, cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      lo = std::min(lo, cur);
      hi = std::max(hi, cur);
      int nxt = link[cur][0] == prev && link[cur][1] != prev ? link[cur][1] : link[cur][0];
      if (link[cur][0] == prev && link[cur][1] == prev) nxt = prev;
      prev = cur;
      cur = nxt;
    }
    d.components.push_back({lo, hi});
  }
  return d;
}

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, const char* what) : text_(text), what_(what) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }
  long long integer(bool allow_sign) {
    skip();
    size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail(allow_sign ? "integer" : "positive integer");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("integer below 10^9");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw Error(ErrorKind::kSyntax, std::string(what_) + ": expected " + expected +
                                        " at position " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  const char* what_;
  size_t pos_ = 0;
};

std::vector<Crossing> sorted_crossings(std::vector<Crossing> xs) {
  std::sort(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) {
    int ma = *std::min_element(a.begin(), a.end());
    int mb = *std::min_element(b.begin(), b.end());
    if (ma != mb) return ma < mb;
    return a < b;
  });
  return xs;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  Scanner sc(text, "PD");
  sc.expect("PD");
  sc.expect("[");
  std::vector<Crossing> xs;
  if (!sc.accept("]")) {
    do {
      sc.expect("X");
      sc.expect("[");
      Crossing x{};
      for (int p = 0; p < 4; ++p) {
        if (p) sc.expect(",");
        long long v = sc.integer(false);
        if (v < 1) sc.fail("positive label");
        x[p] = static_cast<int>(v);
      }
      sc.expect("]");
      xs.push_back(x);
    } while (sc.accept(","));
    sc.expect("]");
  }
  int loops = xs.empty() ? 1 : 0;
  if (sc.accept("+")) {
    sc.expect("O");
    long long k = sc.integer(false);
    if (k < 1) sc.fail("loop count of at least 1");
    loops = static_cast<int>(k);
  }
  if (!sc.at_end()) sc.fail("end of input");
  return Diagram::from_crossings(std::move(xs), loops);
}

std::string serialize_pd(const Diagram& d) {
  std::string out = "PD[";
  bool first = true;
  for (const Crossing& x : sorted_crossings(d.crossings)) {
    if (!first) out += ",";
    first = false;
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
  }
  out += "]";
  bool implied = d.crossings.empty() && d.free_loops == 1;
  if (d.free_loops > 0 && !implied) out += " + O" + std::to_string(d.free_loops);
  return out;
}

BraidWord parse_braid(std::string_view text) {
  Scanner sc(text, "braid");
  sc.expect("braid");
  sc.expect("[");
  long long strands = sc.integer(false);
  if (strands < 1) sc.fail("strand count of at least 1");
  sc.expect("]");
  sc.expect("{");
  BraidWord w;
  w.strands = static_cast<int>(strands);
  if (!sc.accept("}")) {
    do {
      long long v = sc.integer(true);
      if (v == 0) sc.fail("nonzero letter");
      if (std::llabs(v) >= strands)
        throw Error(ErrorKind::kInvalidArgument,
                    "braid letter " + std::to_string(v) + " out of range for " +
                        std::to_string(strands) + " strands");
      w.letters.push_back(static_cast<int>(v));
    } while (sc.accept(","));
    sc.expect("}");
  }
  if (!sc.at_end()) sc.fail("end of input");
  return w;
}

std::string serialize_braid(const BraidWord& w) {
  std::string out = "braid[" + std::to_string(w.strands) + "]{";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.letters[i]);
  }
  return out + "}";
}

int braid_cycle_count(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int x : w.letters) std::swap(perm[std::abs(x) - 1], perm[std::abs(x)]);
  std::vector<char> seen(w.strands, 0);
  int cycles = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return cycles;
}

Diagram braid_closure(const BraidWord& w) {
  for (int x : w.letters)
    if (x == 0 || std::abs(x) >= w.strands)
      throw Error(ErrorKind::kInvalidArgument, "braid letter out of range");
  // Strands run upward; each crossing lists its slots counterclockwise
  // from the incoming under-strand.
  StrandGraph g;
  std::vector<int> first_in(w.strands, -1), open_out(w.strands, -1);
  auto enter = [&](int position, int slot) {
    if (open_out[position] < 0)
      first_in[position] = slot;
    else
      g.add_edge(open_out[position], slot);
  };
  for (int x : w.letters) {
    int i = std::abs(x) - 1;
    int c = g.add_crossing();
    auto s = [&](int p) { return StrandGraph::slot(c, p); };
    if (x > 0) {
      enter(i + 1, s(0));
      enter(i, s(3));
      open_out[i + 1] = s(1);
      open_out[i] = s(2);
    } else {
      enter(i, s(0));
      enter(i + 1, s(1));
      open_out[i + 1] = s(2);
      open_out[i] = s(3);
    }
  }
  int loops = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (first_in[i] < 0)
      ++loops;
    else
      g.add_edge(open_out[i], first_in[i]);
  }
  g.set_free_loops(loops);
  return g.to_diagram();
}

BraidWord mirror(const BraidWord& w) {
  BraidWord m = w;
  for (int& x : m.letters) x = -x;
  return m;
}

BraidWord braid_sum(const BraidWord& a, const BraidWord& b) {
  BraidWord s;
  s.strands = a.strands + b.strands - 1;
  s.letters = a.letters;
  for (int x : b.letters) s.letters.push_back(x > 0 ? x + a.strands - 1 : x - a.strands + 1);
  return s;
}

int component_count(const Diagram& d) {
  return static_cast<int>(d.components.size()) + d.free_loops;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport r;
  std::vector<int> out_slot, in_slot;
  if (d.crossings.empty()) {
    if (d.free_loops < 1)
      r.violations.push_back({"empty-diagram", "diagram has no components"});
    return r;
  }
  if (!orient_labels(d, out_slot, in_slot, &r.violations)) {
    if (r.has("label-multiplicity") || r.has("label-range")) return r;
  }
  // Ranges must be contiguous and match the strand cycles.
  std::vector<int> owner(d.edge_count() + 1, -1);
  for (size_t c = 0; c < d.components.size(); ++c)
    for (int l = d.components[c].first; l <= d.components[c].last; ++l) {
      if (l < 1 || l > d.edge_count() || owner[l] != -1) {
        r.violations.push_back({"label-cyclicity", "component ranges overlap or overflow"});
        return r;
      }
      owner[l] = static_cast<int>(c);
    }
  for (int l = 1; l <= d.edge_count(); ++l)
    if (owner[l] < 0) {
      r.violations.push_back(
          {"label-cyclicity", "label " + std::to_string(l) + " belongs to no component"});
      return r;
    }
  if (r.ok()) {
    for (int l = 1; l <= d.edge_count(); ++l) {
      int leave = StrandGraph::across(in_slot[l]);
      int next = d.crossings[StrandGraph::crossing_of(leave)][StrandGraph::position_of(leave)];
      if (next != d.successor(l)) {
        r.violations.push_back({"label-cyclicity", "label " + std::to_string(l) +
                                                       " is followed by " +
                                                       std::to_string(next)});
        break;
      }
    }
  }
  // Planarity only needs the unoriented pairing of slots.
  std::vector<std::vector<int>> where(d.edge_count() + 1);
  for (int i = 0; i < d.crossing_count(); ++i)
    for (int p = 0; p < 4; ++p) where[d.crossings[i][p]].push_back(StrandGraph::slot(i, p));
  StrandGraph g;
  for (int i = 0; i < d.crossing_count(); ++i) g.add_crossing();
  for (int l = 1; l <= d.edge_count(); ++l) g.add_edge(where[l][0], where[l][1]);
  if (!g.planar()) {
    int faces = 0;
    g.faces(&faces);
    r.violations.push_back({"euler-formula", "V - E + F = " +
                                                 std::to_string(d.crossing_count() -
                                                                d.edge_count() + faces) +
                                                 " over the whole diagram; planar pieces need 2"});
  }
  return r;
}

int crossing_sign(const Diagram& d, int index) {
  std::vector<int> out_slot, in_slot;
  if (!orient_labels(d, out_slot, in_slot, nullptr))
    throw Error(ErrorKind::kLabelConsistency, "cannot orient diagram");
  int over_in = in_slot[d.crossings[index][3]];
  return over_in == StrandGraph::slot(index, 3) ? 1 : -1;
}

int writhe(const Diagram& d) {
  std::vector<int> out_slot, in_slot;
  if (!orient_labels(d, out_slot, in_slot, nullptr))
    throw Error(ErrorKind::kLabelConsistency, "cannot orient diagram");
  int w = 0;
  for (int i = 0; i < d.crossing_count(); ++i)
    w += in_slot[d.crossings[i][3]] == StrandGraph::slot(i, 3) ? 1 : -1;
  return w;
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (Crossing& x : m.crossings) std::swap(x[1], x[3]);
  if (!d.name.empty()) m.name = "mirror(" + d.name + ")";
  return m;
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2, int e1, int e2) {
  auto check = [](const Diagram& d, int e, const char* which) {
    if (d.crossings.empty()) {
      if (d.free_loops < 1 || e != 0)
        throw Error(ErrorKind::kInvalidArgument,
                    std::string(which) + ": crossingless operand takes edge 0");
    } else if (e < 1 || e > d.edge_count()) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(which) + ": edge " + std::to_string(e) + " does not exist");
    }
  };
  check(d1, e1, "first operand");
  check(d2, e2, "second operand");
  if (d1.crossings.empty() || d2.crossings.empty()) {
    const bool first_empty = d1.crossings.empty();
    Diagram r = first_empty ? d2 : d1;
    r.free_loops += (first_empty ? d1 : d2).free_loops - 1;
    r.name.clear();
    return r;
  }
  StrandGraph g = StrandGraph::from_diagram(d1);
  const int eoff = g.append(StrandGraph::from_diagram(d2)).second;
  StrandGraph::Edge a = g.edge(e1 - 1), b = g.edge(eoff + e2 - 1);
  g.remove_edge(e1 - 1);
  g.remove_edge(eoff + e2 - 1);
  g.add_edge(a.from, b.to);
  g.add_edge(b.from, a.to);
  return g.to_diagram();
}

Diagram canonical_relabel(const Diagram& d) {
  if (d.crossings.empty()) {
    Diagram r = d;
    r.name.clear();
    return r;
  }
  StrandGraph g = StrandGraph::from_diagram(d);
  const int m = static_cast<int>(d.components.size());
  double combos = 1;
  for (int f = 2; f <= m; ++f) combos *= f;
  for (const ComponentRange& c : d.components) combos *= 2.0 * (c.last - c.first + 1);
  if (combos > 2e5)
    throw Error(ErrorKind::kResourceLimit, "canonical relabeling needs too many traversals");
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Crossing> best;
  std::vector<ComponentRange> best_ranges;
  std::vector<StrandGraph::Seed> seeds(m);
  std::vector<int> choice(m, 0);
  do {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (int k = 0; k < m; ++k) {
        const ComponentRange& c = d.components[order[k]];
        seeds[k] = {c.first - 1 + choice[k] / 2, (choice[k] % 2) != 0};
      }
      Diagram cand = g.to_diagram(seeds);
      std::vector<Crossing> xs = sorted_crossings(cand.crossings);
      if (best.empty() || std::tie(xs, cand.components) < std::tie(best, best_ranges)) {
        best = std::move(xs);
        best_ranges = cand.components;
      }
      int k = 0;
      for (; k < m; ++k) {
        const ComponentRange& c = d.components[order[k]];
        if (++choice[k] < 2 * (c.last - c.first + 1)) break;
        choice[k] = 0;
      }
      if (k == m) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  Diagram r;
  r.crossings = std::move(best);
  r.components = std::move(best_ranges);
  r.free_loops = d.free_loops;
  return r;
}

bool label_isomorphic(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.free_loops != b.free_loops ||
      a.components.size() != b.components.size())
    return false;
  Diagram ca = canonical_relabel(a), cb = canonical_relabel(b);
  return ca.crossings == cb.crossings && ca.components == cb.components;
}

}  // namespace symknot
