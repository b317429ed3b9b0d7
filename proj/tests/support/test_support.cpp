#include "test_support.hpp"

#include <algorithm>

#include "symknot/strand_graph.hpp"

namespace testing {

using namespace symknot;

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int min_len, int max_len) {
  BraidWord w;
  w.strands = uniform(rng, 2, max_strands);
  const int len = uniform(rng, min_len, max_len);
  for (int i = 0; i < len; ++i) {
    const int g = uniform(rng, 1, w.strands - 1);
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

SymUnionSpec random_spec(std::mt19937_64& rng, const Diagram& base, int max_marks) {
  StrandGraph g = StrandGraph::from_diagram(base);
  int face_count = 0;
  const std::vector<int> face = g.faces(&face_count);
  std::vector<int> out_slot, in_slot;
  orient_labels(base, out_slot, in_slot, nullptr);
  for (;;) {
    const int f = uniform(rng, 0, face_count - 1);
    std::vector<int> on_face;
    for (int label = 1; label <= base.edge_count(); ++label)
      if (face[out_slot[label]] == f || face[in_slot[label]] == f) on_face.push_back(label);
    if (on_face.empty()) continue;
    std::shuffle(on_face.begin(), on_face.end(), rng);
    const int k = uniform(rng, 1, std::min<int>(max_marks, static_cast<int>(on_face.size())));
    SymUnionSpec s;
    s.base = base;
    s.marks.assign(on_face.begin(), on_face.begin() + k);
    s.mu = uniform(rng, 1, k);
    for (int i = s.mu; i < k; ++i) {
      const int n = uniform(rng, 1, 3);
      s.twists.push_back(uniform(rng, 0, 1) ? n : -n);
    }
    const int lowest = *std::min_element(s.marks.begin(), s.marks.end());
    s.side = face[in_slot[lowest]] == f ? AxisSide::kLeft : AxisSide::kRight;
    return s;
  }
}

}  // namespace testing
