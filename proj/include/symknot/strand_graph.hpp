#pragma once

#include <utility>
#include <vector>

#include "symknot/diagram.hpp"

namespace symknot {

// Mutable planar 4-valent graph used for diagram surgery. A slot is
// 4 * crossing + position, positions counterclockwise with 0 and 2 on the
// under-strand. Each edge joins two slots and carries a tentative direction;
// orientations are re-derived from scratch when converting back to PD.
class StrandGraph {
 public:
  struct Edge {
    int from = -1;
    int to = -1;
  };

  // Start a component trace at `edge`, against its stored direction when
  // `reversed` is set.
  struct Seed {
    int edge = 0;
    bool reversed = false;
  };

  static int slot(int crossing, int position) { return 4 * crossing + position; }
  static int crossing_of(int slot) { return slot / 4; }
  static int position_of(int slot) { return slot % 4; }
  // Slot on the other side of the same strand through the crossing.
  static int across(int slot) { return slot ^ 2; }

  static StrandGraph from_diagram(const Diagram& d);

  int add_crossing();
  int add_edge(int from_slot, int to_slot);
  void remove_edge(int id);
  // Appends a disjoint copy of `other`; returns its crossing and edge offsets.
  std::pair<int, int> append(const StrandGraph& other);

  int crossing_count() const { return static_cast<int>(slot_edge_.size() / 4); }
  int edge_capacity() const { return static_cast<int>(edges_.size()); }
  bool alive(int id) const { return alive_[id] != 0; }
  const Edge& edge(int id) const { return edges_[id]; }
  int edge_at(int slot) const { return slot_edge_[slot]; }
  int partner(int slot) const;
  int free_loops() const { return free_loops_; }
  void set_free_loops(int k) { free_loops_ = k; }

  // Relabels components consecutively, seeds first and then from the lowest
  // unvisited edge in its stored direction. label_of, when given, receives
  // the new label of every edge id (0 for removed edges).
  // reversed, when given, flags edges traced against their stored direction.
  Diagram to_diagram(const std::vector<Seed>& seeds = {}, std::vector<int>* label_of = nullptr,
                     std::vector<char>* reversed = nullptr) const;

  // Face id of the region to the right of the dart leaving each slot.
  std::vector<int> faces(int* face_count) const;
  // Euler characteristic check per connected piece of the projection.
  bool planar() const;

 private:
  std::vector<int> slot_edge_;
  std::vector<Edge> edges_;
  std::vector<char> alive_;
  int free_loops_ = 0;
};

// Orientation of every label of a PD: the slot it leaves and the slot it
// enters. Problems are appended as violations; returns false on failure.
bool orient_labels(const Diagram& d, std::vector<int>& out_slot, std::vector<int>& in_slot,
                   std::vector<Violation>* problems);

}  // namespace symknot
