#include "symknot/strand_graph.hpp"

#include <algorithm>
#include <numeric>

#include "symknot/error.hpp"

namespace symknot {

bool orient_labels(const Diagram& d, std::vector<int>& out_slot, std::vector<int>& in_slot,
                   std::vector<Violation>* problems) {
  const int edges = d.edge_count();
  out_slot.assign(edges + 1, -1);
  in_slot.assign(edges + 1, -1);
  std::vector<std::vector<int>> where(edges + 1);
  for (int i = 0; i < d.crossing_count(); ++i)
    for (int p = 0; p < 4; ++p) {
      int label = d.crossings[i][p];
      if (label < 1 || label > edges) {
        if (problems)
          problems->push_back({"label-range", "label " + std::to_string(label) +
                                                  " outside 1.." + std::to_string(edges)});
        return false;
      }
      where[label].push_back(StrandGraph::slot(i, p));
    }
  bool ok = true;
  auto assign = [&](int label, int slot, bool incoming) {
    int& target = incoming ? in_slot[label] : out_slot[label];
    if (target != -1 && target != slot) {
      if (problems)
        problems->push_back({"orientation", "label " + std::to_string(label) + " is " +
                                                (incoming ? "entered" : "left") +
                                                " at two crossings"});
      ok = false;
      return;
    }
    target = slot;
  };
  for (int label = 1; label <= edges; ++label) {
    if (where[label].size() != 2) {
      if (problems)
        problems->push_back({"label-multiplicity", "label " + std::to_string(label) +
                                                       " appears " +
                                                       std::to_string(where[label].size()) +
                                                       " times"});
      ok = false;
    }
  }
  if (!ok) return false;
  // Under-strand slots fix their own direction.
  for (int label = 1; label <= edges; ++label)
    for (int s : where[label]) {
      int p = StrandGraph::position_of(s);
      if (p == 0) assign(label, s, true);
      if (p == 2) assign(label, s, false);
    }
  // Over-strand slots follow label order, with leftovers fixed by the
  // other occurrence of the label.
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < d.crossing_count(); ++i) {
      const Crossing& x = d.crossings[i];
      int b = x[1], dd = x[3];
      int sb = StrandGraph::slot(i, 1), sd = StrandGraph::slot(i, 3);
      if ((in_slot[b] == sb || out_slot[b] == sb) && (in_slot[dd] == sd || out_slot[dd] == sd))
        continue;
      bool d_to_b = d.successor(dd) == b;
      bool b_to_d = d.successor(b) == dd;
      if (d_to_b && b_to_d) {
        if (pass == 0) continue;
        // Two-label component: use whatever the other occurrences decided.
        if (out_slot[b] != -1 && out_slot[b] != sb) {
          d_to_b = false;
        } else {
          b_to_d = false;
        }
      }
      if (d_to_b) {
        assign(dd, sd, true);
        assign(b, sb, false);
      } else if (b_to_d) {
        assign(b, sb, true);
        assign(dd, sd, false);
      } else if (pass == 1) {
        if (problems)
          problems->push_back({"label-cyclicity", "over-strand labels " + std::to_string(b) +
                                                      " and " + std::to_string(dd) +
                                                      " are not consecutive"});
        ok = false;
      }
    }
  }
  if (!ok) return false;
  for (int label = 1; label <= edges; ++label)
    if (in_slot[label] == -1 || out_slot[label] == -1) {
      if (problems)
        problems->push_back(
            {"orientation", "label " + std::to_string(label) + " has no consistent direction"});
      ok = false;
    }
  return ok;
}

StrandGraph StrandGraph::from_diagram(const Diagram& d) {
  std::vector<int> out_slot, in_slot;
  std::vector<Violation> problems;
  if (!orient_labels(d, out_slot, in_slot, &problems))
    throw Error(ErrorKind::kLabelConsistency, problems.empty() ? "cannot orient diagram"
                                                               : problems.front().description);
  StrandGraph g;
  for (int i = 0; i < d.crossing_count(); ++i) g.add_crossing();
  for (int label = 1; label <= d.edge_count(); ++label) g.add_edge(out_slot[label], in_slot[label]);
  g.free_loops_ = d.free_loops;
  return g;
}

int StrandGraph::add_crossing() {
  slot_edge_.insert(slot_edge_.end(), 4, -1);
  return crossing_count() - 1;
}

int StrandGraph::add_edge(int from_slot, int to_slot) {
  const int n = static_cast<int>(slot_edge_.size());
  if (from_slot < 0 || to_slot < 0 || from_slot >= n || to_slot >= n || from_slot == to_slot)
    throw Error(ErrorKind::kInvalidArgument, "edge endpoint out of range");
  if (slot_edge_[from_slot] != -1 || slot_edge_[to_slot] != -1)
    throw Error(ErrorKind::kInvalidArgument, "slot already occupied");
  int id = static_cast<int>(edges_.size());
  edges_.push_back({from_slot, to_slot});
  alive_.push_back(1);
  slot_edge_[from_slot] = id;
  slot_edge_[to_slot] = id;
  return id;
}

void StrandGraph::remove_edge(int id) {
  if (id < 0 || id >= edge_capacity() || !alive(id))
    throw Error(ErrorKind::kInvalidArgument, "no such edge");
  slot_edge_[edges_[id].from] = -1;
  slot_edge_[edges_[id].to] = -1;
  alive_[id] = 0;
}

std::pair<int, int> StrandGraph::append(const StrandGraph& other) {
  const int coff = crossing_count(), eoff = edge_capacity();
  const int soff = 4 * coff;
  for (int s : other.slot_edge_) slot_edge_.push_back(s < 0 ? -1 : s + eoff);
  for (const Edge& e : other.edges_) edges_.push_back({e.from + soff, e.to + soff});
  alive_.insert(alive_.end(), other.alive_.begin(), other.alive_.end());
  free_loops_ += other.free_loops_;
  return {coff, eoff};
}

int StrandGraph::partner(int slot) const {
  const Edge& e = edges_[slot_edge_[slot]];
  return e.from == slot ? e.to : e.from;
}

Diagram StrandGraph::to_diagram(const std::vector<Seed>& seeds, std::vector<int>* label_of,
                                std::vector<char>* reversed) const {
  for (int s = 0; s < static_cast<int>(slot_edge_.size()); ++s)
    if (slot_edge_[s] < 0)
      throw Error(ErrorKind::kInvalidArgument, "crossing slot left unattached");
  std::vector<int> label(edges_.size(), 0);
  std::vector<char> flipped(edges_.size(), 0);
  std::vector<char> incoming(slot_edge_.size(), 0);
  std::vector<ComponentRange> ranges;
  int next = 1;
  auto trace = [&](int start, bool backwards) {
    if (label[start] != 0) return;
    int first = next;
    int e = start;
    int enter = backwards ? edges_[e].from : edges_[e].to;
    while (true) {
      label[e] = next++;
      flipped[e] = edges_[e].to != enter;
      incoming[enter] = 1;
      int leave = across(enter);
      e = slot_edge_[leave];
      if (e == start) break;
      enter = partner(leave);
    }
    ranges.push_back({first, next - 1});
  };
  for (const Seed& s : seeds) {
    if (s.edge < 0 || s.edge >= edge_capacity() || !alive(s.edge))
      throw Error(ErrorKind::kInvalidArgument, "seed edge does not exist");
    trace(s.edge, s.reversed);
  }
  for (int e = 0; e < edge_capacity(); ++e)
    if (alive(e)) trace(e, false);

  Diagram d;
  d.free_loops = free_loops_;
  d.components = std::move(ranges);
  d.crossings.reserve(crossing_count());
  for (int c = 0; c < crossing_count(); ++c) {
    std::array<int, 4> l{};
    for (int p = 0; p < 4; ++p) l[p] = label[slot_edge_[slot(c, p)]];
    if (incoming[slot(c, 0)])
      d.crossings.push_back({l[0], l[1], l[2], l[3]});
    else
      d.crossings.push_back({l[2], l[3], l[0], l[1]});
  }
  if (label_of) *label_of = label;
  if (reversed) *reversed = flipped;
  return d;
}

std::vector<int> StrandGraph::faces(int* face_count) const {
  const int n = static_cast<int>(slot_edge_.size());
  std::vector<int> face(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (face[s] != -1 || slot_edge_[s] < 0) continue;
    int cur = s;
    while (face[cur] == -1) {
      face[cur] = count;
      int t = partner(cur);
      cur = slot(crossing_of(t), (position_of(t) + 1) % 4);
    }
    ++count;
  }
  if (face_count) *face_count = count;
  return face;
}

bool StrandGraph::planar() const {
  const int nc = crossing_count();
  if (nc == 0) return true;
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < edge_capacity(); ++e)
    if (alive(e)) parent[find(crossing_of(edges_[e].from))] = find(crossing_of(edges_[e].to));
  int fcount = 0;
  std::vector<int> face = faces(&fcount);
  std::vector<long> v(nc, 0), f(nc, 0);
  std::vector<char> seen(fcount, 0);
  for (int c = 0; c < nc; ++c) ++v[find(c)];
  for (int s = 0; s < static_cast<int>(face.size()); ++s)
    if (face[s] >= 0 && !seen[face[s]]) {
      seen[face[s]] = 1;
      ++f[find(crossing_of(s))];
    }
  for (int c = 0; c < nc; ++c)
    if (find(c) == c && v[c] - 2 * v[c] + f[c] != 2) return false;
  return true;
}

}  // namespace symknot
