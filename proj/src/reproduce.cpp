#include "symknot/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symknot/bracket.hpp"
#include "symknot/error.hpp"
#include "symknot/oracles/oracles.hpp"
#include "symknot/seifert.hpp"
#include "symknot/signature.hpp"
#include "symknot/strand_graph.hpp"
#include "symknot/symmetric_union.hpp"

namespace symknot {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures; the first few are kept for the detail line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 3) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  int total() const { return total_; }
  std::string detail() const {
    std::ostringstream os;
    if (failed_ == 0) {
      os << total_ << " checks";
    } else {
      os << failed_ << " of " << total_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) os << (i ? "; " : "") << failures_[i];
    }
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int min_len, int max_len) {
  BraidWord w;
  w.strands = uniform(rng, 2, max_strands);
  const int len = uniform(rng, min_len, max_len);
  for (int i = 0; i < len; ++i) {
    int g = uniform(rng, 1, w.strands - 1);
    w.letters.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return w;
}

BraidWord random_knot_braid(std::mt19937_64& rng, int max_strands, int min_len, int max_len) {
  for (;;) {
    BraidWord w = random_braid(rng, max_strands, min_len, max_len);
    if (braid_cycle_count(w) == 1) return w;
  }
}

// Marks along one face of the base so that the axis can run through it.
SymUnionSpec random_spec(std::mt19937_64& rng, const Diagram& base) {
  StrandGraph g = StrandGraph::from_diagram(base);
  int face_count = 0;
  std::vector<int> face = g.faces(&face_count);
  std::vector<int> out_slot, in_slot;
  orient_labels(base, out_slot, in_slot, nullptr);
  const int edges = base.edge_count();
  for (;;) {
    const int f = uniform(rng, 0, face_count - 1);
    std::vector<int> on_face;
    for (int label = 1; label <= edges; ++label)
      if (face[out_slot[label]] == f || face[in_slot[label]] == f) on_face.push_back(label);
    if (on_face.empty()) continue;
    std::shuffle(on_face.begin(), on_face.end(), rng);
    const int k = uniform(rng, 1, std::min<int>(4, static_cast<int>(on_face.size())));
    SymUnionSpec s;
    s.base = base;
    s.marks.assign(on_face.begin(), on_face.begin() + k);
    s.mu = uniform(rng, 1, k);
    for (int i = s.mu; i < k; ++i) {
      int n = uniform(rng, 1, 3);
      s.twists.push_back(uniform(rng, 0, 1) ? n : -n);
    }
    const int lowest = *std::min_element(s.marks.begin(), s.marks.end());
    s.side = face[in_slot[lowest]] == f ? AxisSide::kLeft : AxisSide::kRight;
    s.name = "random";
    return s;
  }
}

std::string brief(const std::string& s) { return s.size() > 60 ? s.substr(0, 57) + "..." : s; }

std::vector<UnitCirclePoint> probe_points(const std::vector<const SignatureProfile*>& profiles) {
  std::vector<UnitCirclePoint> pts;
  for (const SignatureProfile* p : profiles) {
    for (const auto& j : p->jumps) {
      pts.push_back(j.point);
      pts.push_back(j.point.conjugate());
    }
    for (const auto& a : p->arcs) {
      pts.push_back(UnitCirclePoint::from_angle(a.label_angle));
      pts.push_back(UnitCirclePoint::from_angle(Rational(2) - a.label_angle));
    }
  }
  return pts;
}

// 1
void sigma_820(const DataSet& data, Check& c) {
  const KnotRecord& k = data.registry.lookup("8_20");
  int nullity = 0;
  const int s = lt_signature_at(seifert_matrix(k.braid), UnitCirclePoint::from_angle(1, 3), &nullity);
  c.expect(s == 1, "sigma(8_20) at 1/3 pi is " + std::to_string(s));
  c.note("sigma = " + std::to_string(s) + ", nullity " + std::to_string(nullity));
}

// 2
void scaling(const DataSet& data, const ReproduceOptions& opts, Check& c) {
  std::ostringstream got;
  for (int n = 1; n <= opts.max_copies; ++n) {
    if (opts.progress) opts.progress("bounds 8_20 --N " + std::to_string(n));
    BoundsRequest req;
    req.knot = "8_20";
    req.copies = n;
    req.bracket = opts.bracket;
    BoundReport r = knot_bounds(data, req);
    const Interval& gds = r.interval(Quantity::kGds);
    const Interval& tw = r.interval(Quantity::kTw);
    c.expect(gds.determined() && gds.lower == n, "N=" + std::to_string(n) + " gds " + gds.str());
    c.expect(tw.determined() && tw.lower == n, "N=" + std::to_string(n) + " tw " + tw.str());
    got << (n > 1 ? " " : "") << "N=" << n << ":" << tw.str();
  }
  c.note("tw " + got.str());
}

// 3
void twelve_n_pair(const DataSet& data, const ReproduceOptions& opts, Check& c) {
  // Re-verify the presentation fingerprints as part of the timed run.
  std::vector<PresentationRecord> pres =
      load_presentations(data.dir / "presentations", data.registry, opts.bracket);
  for (const std::string knot : {"12n_553", "12n_556"}) {
    BoundsRequest req;
    req.knot = knot;
    for (const auto& p : pres)
      if (p.target == knot) req.presentations.push_back(p);
    c.expect(!req.presentations.empty(), "no presentation of " + knot);
    if (req.presentations.empty()) continue;
    BoundReport r = knot_bounds(data, req);
    const Interval& gds = r.interval(Quantity::kGds);
    const Interval& tw = r.interval(Quantity::kTw);
    c.expect(gds.determined() && gds.lower == 1, knot + " gds " + gds.str());
    c.expect(tw.determined() && tw.lower == 1, knot + " tw " + tw.str());
    c.note(knot + " gds " + gds.str() + " tw " + tw.str());
  }
}

// 4
void double_zero(const DataSet& data, Check& c) {
  for (const std::string name : {"3_1", "4_1", "8_20"}) {
    const KnotRecord& k = data.registry.lookup(name);
    const SeifertMatrix v = seifert_matrix(k.braid);
    const SeifertMatrix vv = block_sum(v, mirror(v));
    const SeifertMatrix vd = seifert_matrix(braid_sum(k.braid, mirror(k.braid)));
    const SignatureProfile pj = signature_profile(v);
    std::vector<UnitCirclePoint> pts;
    for (int i = 1; i <= 50; ++i) pts.push_back(UnitCirclePoint::from_angle(2 * i - 1, 50));
    for (const auto& j : pj.jumps) {
      pts.push_back(j.point);
      pts.push_back(j.point.conjugate());
    }
    const SignatureForm fv(vv), fd(vd);
    const auto a = signatures_at(fv, pts);
    const auto b = signatures_at(fd, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      c.expect(a[i].signature == 0, name + " block sum at " + pts[i].label());
      c.expect(b[i].signature == 0, name + " braid sum at " + pts[i].label());
    }
    c.expect(signature_profile(vd).max_abs() == 0, name + " profile of J # -J not identically 0");
  }
}

void resolution_checks(const SymUnionSpec& s, const std::string& tag, Check& c) {
  const int l = twist_region_count(s);
  c.expect(component_count(build(s)) == s.mu, tag + ": build components");
  c.expect(component_count(infinity_resolution(s)) == s.mu + l, tag + ": resolution components");
  SymUnionSpec cur = s;
  for (int i = 1; i <= l; ++i) {
    cur = band_move(cur, TwistRegionRef{1});
    c.expect(component_count(build(cur)) == s.mu + i,
             tag + ": after " + std::to_string(i) + " band moves");
  }
}

// 5
void resolution(const DataSet& data, std::mt19937_64& rng, Check& c) {
  int shipped = 0;
  for (const auto& p : data.presentations) {
    if (p.spec.mu != 1) continue;
    ++shipped;
    resolution_checks(p.spec, p.name, c);
  }
  int random_specs = 0;
  while (random_specs < 200) {
    const Diagram base = braid_closure(random_knot_braid(rng, 4, 2, 7));
    const SymUnionSpec s = random_spec(rng, base);
    ++random_specs;
    try {
      resolution_checks(s, brief(serialize_pd(base)), c);
    } catch (const Error& e) {
      c.expect(false, "random spec on " + brief(serialize_pd(base)) + ": " + e.what());
    }
  }
  c.note(std::to_string(shipped) + " shipped and " + std::to_string(random_specs) + " random specs");
}

// 6
void no_twist(const ReproduceOptions& opts, std::mt19937_64& rng, Check& c) {
  for (int i = 0; i < 20; ++i) {
    const Diagram base = braid_closure(random_knot_braid(rng, 4, 2, 8));
    SymUnionSpec s;
    s.base = base;
    s.marks = {uniform(rng, 1, base.edge_count())};
    const Fingerprint built = fingerprint(build(s), opts.bracket);
    const Diagram sum = connected_sum(base, mirror(base), s.marks[0], s.marks[0]);
    const Fingerprint expected = fingerprint(sum, opts.bracket);
    const std::string diff = fingerprint_difference(built, expected);
    c.expect(diff.empty(), brief(serialize_pd(base)) + " differs in " + diff);
  }
}

// 7
void oracles(const DataSet& data, const ReproduceOptions& opts, std::mt19937_64& rng, Check& c) {
  std::vector<Diagram> fixtures;
  for (const auto& r : data.registry.records()) {
    if (r.pd) fixtures.push_back(*r.pd);
    fixtures.push_back(braid_closure(r.braid));
  }
  for (const auto& p : data.presentations) {
    fixtures.push_back(build(p.spec));
    fixtures.push_back(infinity_resolution(p.spec));
  }
  int compared = 0;
  for (const Diagram& d : fixtures) {
    if (d.crossing_count() > 10) continue;
    ++compared;
    const LaurentPoly ref = bracket_all_states_serial(d);
    c.expect(bracket_transfer(d, opts.bracket) == ref, "transfer differs on " + brief(serialize_pd(d)));
    c.expect(bracket_all_states(d) == ref, "parallel state sum differs on " + brief(serialize_pd(d)));
  }
  for (int i = 0; i < 100; ++i) {
    const BraidWord w = random_braid(rng, 5, 1, 10);
    const Diagram d = braid_closure(w);
    c.expect(bracket_transfer(d, opts.bracket) == bracket_all_states_serial(d),
             "transfer differs on " + serialize_braid(w));
  }
  for (const auto& r : data.registry.records())
    c.expect(alexander(seifert_matrix(r.braid)) == oracle::burau_alexander(r.braid),
             "Burau Alexander differs on " + r.name);
  c.note(std::to_string(compared) + " fixture diagrams, 100 random braids, " +
         std::to_string(data.registry.records().size()) + " Burau comparisons");
}

// 8
void mirror_additivity(const DataSet& data, const ReproduceOptions& opts, Check& c) {
  std::vector<const KnotRecord*> knots;
  std::vector<SeifertMatrix> vs;
  std::vector<SignatureProfile> ps;
  for (const auto& r : data.registry.records()) {
    knots.push_back(&r);
    vs.push_back(seifert_matrix(r.braid));
    ps.push_back(signature_profile(vs.back()));
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    std::vector<ProfileRecord> expect = ps[i].records();
    for (auto& rec : expect) rec.sigma = -rec.sigma;
    c.expect(signature_profile(mirror(vs[i])).records() == expect, knots[i]->name + ": mirror profile");
    const Diagram d = braid_closure(knots[i]->braid);
    const JonesPoly j = jones(d, opts.bracket);
    const JonesPoly jm = jones(mirror(d), opts.bracket);
    c.expect(jm.poly == j.poly.invert_variable(), knots[i]->name + ": mirror Jones");
  }
  for (std::size_t i = 0; i < knots.size(); ++i)
    for (std::size_t k = i; k < knots.size(); ++k) {
      const SignatureProfile sum = signature_profile(block_sum(vs[i], vs[k]));
      for (const UnitCirclePoint& pt : probe_points({&ps[i], &ps[k], &sum}))
        c.expect(sum.value_at(pt) == ps[i].value_at(pt) + ps[k].value_at(pt),
                 knots[i]->name + " + " + knots[k]->name + " at " + pt.label());
    }
}

// 9
void table(const DataSet& data, const ReproduceOptions& opts, Check& c) {
  for (const auto& r : data.registry.records()) {
    const Diagram d = braid_closure(r.braid);
    const SeifertMatrix v = seifert_matrix(r.braid);
    if (r.jones) {
      const JonesPoly j = jones(d, opts.bracket);
      c.expect(!j.half && j.poly == *r.jones, r.name + ": jones");
    }
    if (r.alexander) c.expect(alexander(v) == *r.alexander, r.name + ": alexander");
    if (r.determinant) {
      c.expect(determinant(v) == *r.determinant, r.name + ": determinant");
      c.expect(oracle::goeritz_determinant(d) == *r.determinant, r.name + ": Goeritz determinant");
    }
    const SignatureForm form(v);
    for (const auto& s : r.signature_samples) {
      const int got = form.at(UnitCirclePoint::from_angle(s.angle)).signature;
      c.expect(got == s.value, r.name + ": signature at " + angle_label(s.angle) + " is " + std::to_string(got));
    }
  }
  c.note(std::to_string(data.registry.records().size()) + " knots");
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "sigma-8_20", "sigma of 8_20 at 1/3 pi equals 1 (under 1 s)"},
      {2, "scaling", "tw = gds = N for the N-fold sum of 8_20, N = 1..5 (under 10 s)"},
      {3, "12n-pair", "gds = tw = 1 for 12n_553 and 12n_556 (under 30 s)"},
      {4, "double-zero", "sigma of J # -J vanishes for 3_1, 4_1, 8_20"},
      {5, "resolution", "component counts of builds, band moves and resolutions"},
      {6, "no-twist", "no-twist symmetric union matches J # -J"},
      {7, "oracles", "transfer bracket and Seifert Alexander agree with oracles"},
      {8, "mirror-additivity", "mirror and block-sum behaviour of profiles and Jones"},
      {9, "table", "reference invariants reproduced from the braid fixtures"},
  };
  return list;
}

std::vector<CriterionResult> reproduce(const DataSet& data, const ReproduceOptions& opts) {
  std::set<int> selected;
  for (const std::string& want : opts.only) {
    bool found = false;
    for (const auto& info : criteria())
      if (want == info.id || want == std::to_string(info.number)) {
        selected.insert(info.number);
        found = true;
      }
    if (!found) {
      std::string ids;
      for (const auto& info : criteria()) ids += (ids.empty() ? "" : ", ") + info.id;
      throw Error(ErrorKind::kInvalidArgument, "unknown criterion '" + want + "' (known: " + ids + ")");
    }
  }
  if (opts.max_copies < 1) throw Error(ErrorKind::kInvalidArgument, "--N must be at least 1");

  std::vector<CriterionResult> out;
  for (const auto& info : criteria()) {
    if (!selected.empty() && !selected.count(info.number)) continue;
    if (opts.progress) opts.progress("criterion " + std::to_string(info.number) + " " + info.id);
    std::mt19937_64 rng(opts.seed + info.number);
    Check c;
    double limit = 0;
    const auto start = Clock::now();
    try {
      switch (info.number) {
        case 1: sigma_820(data, c); limit = 1; break;
        case 2: scaling(data, opts, c); limit = 10; break;
        case 3: twelve_n_pair(data, opts, c); limit = 30; break;
        case 4: double_zero(data, c); break;
        case 5: resolution(data, rng, c); break;
        case 6: no_twist(opts, rng, c); break;
        case 7: oracles(data, opts, rng, c); break;
        case 8: mirror_additivity(data, opts, c); break;
        case 9: table(data, opts, c); break;
      }
    } catch (const Error& e) {
      c.expect(false, std::string(to_string(e.kind())) + ": " + e.what());
    }
    CriterionResult r;
    r.info = info;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << r.seconds << " s against a limit of " << limit << " s";
      c.expect(r.seconds < limit, "runtime " + os.str());
    }
    r.passed = c.ok();
    r.detail = c.detail();
    out.push_back(std::move(r));
  }
  return out;
}

std::string results_table(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.info.number << " " << std::left << std::setw(18)
       << r.info.id << " " << std::right << std::fixed << std::setprecision(3) << std::setw(8) << r.seconds
       << " s  " << r.info.title << "  [" << r.detail << "]\n";
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

std::string results_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["number"] = r.info.number;
    j["id"] = r.info.id;
    j["title"] = r.info.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    arr.push_back(j);
  }
  nlohmann::ordered_json doc;
  doc["criteria"] = arr;
  doc["all_passed"] = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return doc.dump(2) + "\n";
}

}  // namespace symknot
