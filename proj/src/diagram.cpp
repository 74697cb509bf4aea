#include "booklink/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace booklink {

namespace {

class Dsu {
 public:
  explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

PlanarDiagram to_planar_diagram(const BooklinkWord& w) {
  SliceProfile profile = slice_profile(w);
  ComponentTrace tr = trace_components(w);
  const int T = static_cast<int>(w.gens.size());

  PlanarDiagram d;
  d.component_count = tr.component_count;

  int nedge = 0;
  auto fresh = [&nedge]() { return nedge++; };
  std::vector<int> open_end(w.seam_strands + 1);
  std::vector<int> seam_edge(w.seam_strands + 1);
  for (int k = 1; k <= w.seam_strands; ++k) {
    open_end[k] = seam_edge[k] = fresh();
  }

  struct Join {
    int a, b;
  };
  std::vector<Join> joins;
  std::vector<std::array<int, 4>> raw_slots;

  for (int t = 1; t <= T; ++t) {
    const Generator& g = w.gens[t - 1];
    const int i = g.position;
    const int m = profile.counts[t - 1];
    if (g.is_crossing()) {
      const bool over_low = g.kind == GenKind::CrossingPos;
      const int dlow = tr.direction[t - 1][i];
      const int dhigh = tr.direction[t - 1][i + 1];
      const int d_over = over_low ? dlow : dhigh;
      const int d_under = over_low ? dhigh : dlow;
      const int sign = over_low ? -d_over * d_under : d_over * d_under;
      d.crossings.push_back({over_low, sign, dlow, dhigh, t - 1});
      const int e_low = fresh();
      const int e_high = fresh();
      raw_slots.push_back({open_end[i], open_end[i + 1], e_low, e_high});
      open_end[i] = e_low;
      open_end[i + 1] = e_high;
    } else if (g.kind == GenKind::Cap) {
      joins.push_back({open_end[i], open_end[i + 1]});
      for (int k = i + 2; k <= m; ++k) open_end[k - 2] = open_end[k];
      open_end.resize(m - 2 + 1);
    } else {
      open_end.resize(m + 2 + 1);
      for (int k = m; k >= i; --k) open_end[k + 2] = open_end[k];
      const int e = fresh();
      open_end[i] = e;
      open_end[i + 1] = e;  // both ends of a new turn-back arc
    }
  }
  for (int k = 1; k <= w.seam_strands; ++k) joins.push_back({open_end[k], seam_edge[k]});

  Dsu dsu(nedge);
  for (const Join& j : joins) dsu.unite(j.a, j.b);

  std::map<int, int> compact;
  d.slot_edge.resize(d.crossings.size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    for (int s = 0; s < 4; ++s) {
      int root = dsu.find(raw_slots[ci][s]);
      auto [it, inserted] = compact.try_emplace(root, static_cast<int>(compact.size()));
      d.slot_edge[ci][s] = it->second;
    }
  }
  d.edge_count = static_cast<int>(compact.size());
  // free loops: edge classes with no crossing slot
  {
    std::map<int, int> classes;
    for (int e = 0; e < nedge; ++e) classes[dsu.find(e)] = 1;
    d.free_loops = static_cast<int>(classes.size()) - d.edge_count;
  }
  d.writhe = 0;
  for (const Crossing& c : d.crossings) d.writhe += c.sign;
  return d;
}

namespace {

constexpr int kThrough[4] = {3, 2, 1, 0};

struct Traversal {
  // for each (crossing, slot): the (crossing, slot) reached by leaving
  // through the strand and following the arc
  std::vector<std::array<std::pair<int, int>, 4>> next;
};

Traversal build_traversal(const PlanarDiagram& d) {
  std::vector<std::pair<int, int>> first_of_edge(d.edge_count, {-1, -1});
  std::vector<std::array<std::pair<int, int>, 4>> mate(d.crossings.size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    for (int s = 0; s < 4; ++s) {
      const int e = d.slot_edge[ci][s];
      if (first_of_edge[e].first < 0) {
        first_of_edge[e] = {static_cast<int>(ci), s};
      } else {
        auto other = first_of_edge[e];
        mate[ci][s] = other;
        mate[other.first][other.second] = {static_cast<int>(ci), s};
      }
    }
  }
  Traversal tr;
  tr.next.resize(d.crossings.size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    for (int s = 0; s < 4; ++s) {
      tr.next[ci][s] = mate[ci][kThrough[s]];
    }
  }
  return tr;
}

bool slot_is_under(const Crossing& c, int slot) {
  const bool on_low_strand = slot == 0 || slot == 3;
  return on_low_strand != c.over_low;
}

}  // namespace

DTCode dt_code(const BooklinkWord& w) {
  PlanarDiagram d = to_planar_diagram(w);
  if (d.component_count != 1) {
    throw Error(ErrorCode::MultiComponent, "DT code requires a knot, got " +
                                               std::to_string(d.component_count) +
                                               " components");
  }
  const int c = static_cast<int>(d.crossings.size());
  if (c == 0) return {};
  Traversal tr = build_traversal(d);

  DTCode best;
  std::vector<std::pair<int, int>> best_key;
  std::vector<int> visit_a(c), visit_b(c);
  for (int ci0 = 0; ci0 < c; ++ci0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      std::pair<int, int> cur{ci0, s0};
      std::fill(visit_a.begin(), visit_a.end(), 0);
      bool parity_ok = true;
      for (int n = 1; n <= 2 * c; ++n) {
        auto [ci, slot] = cur;
        if (visit_a[ci] == 0) {
          visit_a[ci] = n;
        } else {
          if ((visit_a[ci] % 2) == (n % 2)) {
            parity_ok = false;
            break;
          }
          visit_b[ci] = n;
        }
        cur = tr.next[ci][slot];
      }
      if (!parity_ok) continue;
      std::vector<int> partner(2 * c + 1, 0);
      for (int ci = 0; ci < c; ++ci) {
        const int a = visit_a[ci], b = visit_b[ci];
        const int odd = a % 2 ? a : b;
        const int even = a % 2 ? b : a;
        partner[odd] = even;
      }
      // second pass records whether each odd-numbered pass runs under
      std::pair<int, int> cur2{ci0, s0};
      std::vector<int> odd_under(2 * c + 1, 0);
      for (int n = 1; n <= 2 * c; ++n) {
        auto [ci, slot] = cur2;
        if (n % 2 == 1 && slot_is_under(d.crossings[ci], slot)) odd_under[n] = 1;
        cur2 = tr.next[ci][slot];
      }
      std::vector<int> code;
      std::vector<std::pair<int, int>> key;
      code.reserve(c);
      for (int odd = 1; odd <= 2 * c; odd += 2) {
        int val = partner[odd];
        if (odd_under[odd]) val = -val;
        code.push_back(val);
        key.emplace_back(std::abs(val), val > 0 ? 0 : 1);
      }
      if (best_key.empty() || key < best_key) {
        best_key = key;
        best.pairs = code;
      }
    }
  }
  if (best_key.empty()) {
    throw Error(ErrorCode::InvalidWord, "no odd/even crossing labelling exists");
  }
  return best;
}

}  // namespace booklink
