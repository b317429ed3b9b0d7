#include "symknot/bracket.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "symknot/error.hpp"

namespace symknot {

namespace {

constexpr int kMaxAllStates = 26;
constexpr int kMaxTransfer = 60;

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

// Histogram of states keyed by (#A - #B, loops).
struct StateCounts {
  int n = 0;
  int max_loops = 0;
  std::vector<long long> cells;

  StateCounts(int crossings, int loops)
      : n(crossings), max_loops(loops), cells(static_cast<size_t>(2 * crossings + 1) * (loops + 1), 0) {}
  long long& at(int a_minus_b, int loops) {
    return cells[static_cast<size_t>(a_minus_b + n) * (max_loops + 1) + loops];
  }
};

LaurentPoly fold_counts(StateCounts& counts, int free_loops) {
  LaurentPoly d = loop_value();
  std::vector<LaurentPoly> dpow(counts.max_loops + free_loops + 1);
  dpow[0] = LaurentPoly(1);
  for (size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * d;
  LaurentPoly total;
  for (int s = -counts.n; s <= counts.n; ++s)
    for (int l = 0; l <= counts.max_loops; ++l) {
      long long c = counts.at(s, l);
      if (c == 0) continue;
      total += LaurentPoly::monomial(c, s) * dpow[l + free_loops - 1];
    }
  return total;
}

int count_loops(const Diagram& d, uint64_t state, std::vector<int>& parent) {
  const int edges = d.edge_count();
  for (int i = 0; i <= edges; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int loops = edges;
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --loops;
    }
  };
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings[i];
    if ((state >> i) & 1u) {
      join(x[0], x[3]);
      join(x[1], x[2]);
    } else {
      join(x[0], x[1]);
      join(x[2], x[3]);
    }
  }
  return loops;
}

void check_all_states_size(const Diagram& d) {
  if (d.crossing_count() > kMaxAllStates)
    throw Error(ErrorKind::kResourceLimit, "all-states bracket limited to " +
                                               std::to_string(kMaxAllStates) + " crossings");
}

}  // namespace

LaurentPoly bracket_all_states_serial(const Diagram& d) {
  check_all_states_size(d);
  const int n = d.crossing_count();
  if (n == 0) return loop_value().pow(d.free_loops - 1);
  StateCounts counts(n, d.edge_count());
  std::vector<int> parent(d.edge_count() + 1);
  for (uint64_t state = 0; state < (uint64_t{1} << n); ++state) {
    int b = __builtin_popcountll(state);
    counts.at(n - 2 * b, count_loops(d, state, parent)) += 1;
  }
  return fold_counts(counts, d.free_loops);
}

LaurentPoly bracket_all_states(const Diagram& d) {
  check_all_states_size(d);
  const int n = d.crossing_count();
  if (n == 0) return loop_value().pow(d.free_loops - 1);
  StateCounts total(n, d.edge_count());
  const long long states = 1LL << n;
#pragma omp parallel
  {
    StateCounts local(n, d.edge_count());
    std::vector<int> parent(d.edge_count() + 1);
#pragma omp for schedule(static)
    for (long long state = 0; state < states; ++state) {
      int b = __builtin_popcountll(static_cast<uint64_t>(state));
      local.at(n - 2 * b, count_loops(d, static_cast<uint64_t>(state), parent)) += 1;
    }
#pragma omp critical
    for (size_t i = 0; i < total.cells.size(); ++i) total.cells[i] += local.cells[i];
  }
  return fold_counts(total, d.free_loops);
}

std::vector<int> contraction_order(const Diagram& d, int* max_boundary) {
  const int n = d.crossing_count();
  const int edges = d.edge_count();
  std::vector<std::vector<int>> at(edges + 1);
  for (int i = 0; i < n; ++i)
    for (int label : d.crossings[i]) at[label].push_back(i);
  std::vector<int> best;
  int best_max = 1 << 30;
  long best_sum = 1L << 40;
  for (int start = 0; start < n; ++start) {
    std::vector<char> done(n, 0);
    std::vector<int> touched(edges + 1, 0);
    std::vector<int> order;
    int boundary = 0, worst = 0;
    long sum = 0;
    auto take = [&](int c) {
      done[c] = 1;
      order.push_back(c);
      for (int label : d.crossings[c]) {
        if (++touched[label] == 1)
          ++boundary;
        else
          --boundary;
      }
      // A label listed twice at one crossing opened and closed at once.
      worst = std::max(worst, boundary);
      sum += boundary;
    };
    take(start);
    while (static_cast<int>(order.size()) < n) {
      int pick = -1, pick_delta = 0, pick_shared = -1;
      for (int c = 0; c < n; ++c) {
        if (done[c]) continue;
        int delta = 0, shared = 0;
        for (int label : d.crossings[c]) {
          if (touched[label] == 1) {
            --delta;
            ++shared;
          } else {
            ++delta;
          }
        }
        if (pick < 0 || delta < pick_delta || (delta == pick_delta && shared > pick_shared)) {
          pick = c;
          pick_delta = delta;
          pick_shared = shared;
        }
      }
      take(pick);
      if (worst > best_max) break;
    }
    if (static_cast<int>(order.size()) == n &&
        (worst < best_max || (worst == best_max && sum < best_sum))) {
      best = order;
      best_max = worst;
      best_sum = sum;
    }
  }
  if (max_boundary) *max_boundary = n ? best_max : 0;
  return best;
}

namespace {

using Wide = __int128;

// Polynomial in A with coefficients for A^lo, A^(lo+1), ...
struct RangePoly {
  int lo = 0;
  std::vector<Wide> c;

  void add(const RangePoly& o) {
    if (o.c.empty()) return;
    if (c.empty()) {
      *this = o;
      return;
    }
    int nlo = std::min(lo, o.lo);
    int nhi = std::max(lo + static_cast<int>(c.size()), o.lo + static_cast<int>(o.c.size()));
    if (nlo != lo || nhi != lo + static_cast<int>(c.size())) {
      std::vector<Wide> t(nhi - nlo, 0);
      for (size_t i = 0; i < c.size(); ++i) t[lo - nlo + i] = c[i];
      c.swap(t);
      lo = nlo;
    }
    for (size_t i = 0; i < o.c.size(); ++i) c[o.lo - lo + i] += o.c[i];
  }

  // Multiply by -A^2 - A^-2.
  void times_loop() {
    std::vector<Wide> t(c.size() + 4, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      t[i] -= c[i];
      t[i + 4] -= c[i];
    }
    c.swap(t);
    lo -= 2;
  }
};

BigInt to_big(Wide v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<uint64_t>(u & ~uint64_t{0});
  return neg ? BigInt(-r) : r;
}

}  // namespace

LaurentPoly bracket_transfer(const Diagram& d, const BracketOptions& opts) {
  const int n = d.crossing_count();
  if (n == 0) return loop_value().pow(d.free_loops - 1);
  if (n > kMaxTransfer)
    throw Error(ErrorKind::kResourceLimit,
                "bracket contraction limited to " + std::to_string(kMaxTransfer) + " crossings");
  const int edges = d.edge_count();
  const std::vector<int> order = contraction_order(d);

  // A state is the matching of the sorted boundary labels induced by the
  // processed crossings, stored as partner positions.
  using Key = std::string;
  std::unordered_map<Key, RangePoly> states;
  states.emplace(Key(), RangePoly{0, {1}});
  std::vector<int> touched(edges + 1, 0);
  std::vector<int> boundary;
  std::vector<int> pos_old(edges + 1, -1), pos_new(edges + 1, -1);

  for (int c : order) {
    const Crossing& x = d.crossings[c];
    std::fill(pos_old.begin(), pos_old.end(), -1);
    for (size_t i = 0; i < boundary.size(); ++i) pos_old[boundary[i]] = static_cast<int>(i);
    for (int label : x) ++touched[label];
    std::vector<int> next_boundary;
    for (int label : boundary)
      if (touched[label] == 1) next_boundary.push_back(label);
    for (int label : x)
      if (touched[label] == 1 && pos_old[label] < 0) next_boundary.push_back(label);
    std::sort(next_boundary.begin(), next_boundary.end());
    std::fill(pos_new.begin(), pos_new.end(), -1);
    for (size_t i = 0; i < next_boundary.size(); ++i)
      pos_new[next_boundary[i]] = static_cast<int>(i);

    auto slot_of = [&](int label, int not_slot) {
      for (int p = 0; p < 4; ++p)
        if (x[p] == label && p != not_slot) return p;
      return -1;
    };

    std::vector<std::pair<Key, RangePoly>> items;
    items.reserve(states.size());
    for (auto& kv : states) items.emplace_back(kv.first, std::move(kv.second));
    states.clear();

    const int nthreads = omp_get_max_threads();
    std::vector<std::unordered_map<Key, RangePoly>> partial(nthreads);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long idx = 0; idx < static_cast<long long>(items.size()); ++idx) {
      auto& out = partial[omp_get_thread_num()];
      const Key& key = items[idx].first;
      const RangePoly& poly = items[idx].second;
      auto matched = [&](int label) {
        return boundary[static_cast<unsigned char>(key[pos_old[label]])];
      };
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        // A-smoothing joins slots (0,1),(2,3); B joins (0,3),(1,2).
        auto arc = [&](int p) { return smoothing == 0 ? (p ^ 1) : 3 - p; };
        bool visited[4] = {false, false, false, false};
        // Enter the crossing at slot p and follow the smoothing until a
        // boundary end is reached (its label) or the walk returns to
        // `origin` (0).
        auto walk = [&](int p, int origin) -> int {
          while (true) {
            visited[p] = true;
            int q = arc(p);
            visited[q] = true;
            int label = x[q];
            int next = slot_of(label, q);
            if (next < 0) {
              if (pos_old[label] < 0) return label;
              int m = matched(label);
              next = slot_of(m, -1);
              if (next < 0) return m;
            }
            if (next == origin) return 0;
            p = next;
          }
        };
        Key next_key(next_boundary.size(), '\0');
        for (size_t i = 0; i < next_boundary.size(); ++i) {
          int label = next_boundary[i];
          int end;
          if (pos_old[label] >= 0) {
            int m = matched(label);
            int s = slot_of(m, -1);
            end = s < 0 ? m : walk(s, -1);
          } else {
            end = walk(slot_of(label, -1), -1);
          }
          next_key[i] = static_cast<char>(pos_new[end]);
        }
        RangePoly np = poly;
        np.lo += smoothing == 0 ? 1 : -1;
        for (int p = 0; p < 4; ++p) {
          if (visited[p]) continue;
          walk(p, p);
          np.times_loop();
        }
        auto [it, inserted] = out.try_emplace(next_key, np);
        if (!inserted) it->second.add(np);
      }
    }
    for (auto& part : partial)
      for (auto& [k, v] : part) {
        auto [it, inserted] = states.try_emplace(k, std::move(v));
        if (!inserted) it->second.add(v);
      }
    if (states.size() > opts.max_states)
      throw Error(ErrorKind::kResourceLimit,
                  "bracket contraction exceeded " + std::to_string(opts.max_states) +
                      " boundary states");
    boundary = std::move(next_boundary);
  }

  LaurentPoly acc;
  const RangePoly& fin = states.at(Key());
  for (size_t i = 0; i < fin.c.size(); ++i)
    if (fin.c[i] != 0) acc.add_term(fin.lo + static_cast<int>(i), to_big(fin.c[i]));
  acc *= loop_value().pow(d.free_loops);
  return acc.divide_exact(loop_value());
}

JonesPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  // (-A^3)^(-w) <D>, then A = t^(-1/4), i.e. A^e = (t^(1/2))^(-e/2).
  LaurentPoly f = bracket.shift(-3 * writhe);
  if (writhe % 2 != 0) f = -f;
  JonesPoly j;
  bool integral = true;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw Error(ErrorKind::kInvalidArgument, "bracket has odd A-exponents");
    if ((e / 2) % 2 != 0) integral = false;
  }
  j.half = !integral;
  for (const auto& [e, c] : f.terms()) j.poly.add_term(integral ? -e / 4 : -e / 2, c);
  return j;
}

JonesPoly jones(const Diagram& d, const BracketOptions& opts) {
  return jones_from_bracket(kauffman_bracket(d, opts), writhe(d));
}

}  // namespace symknot
