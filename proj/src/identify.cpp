#include "booklink/identify.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace booklink {

namespace {

// union-find with union-by-size and a rollback stack (no path compression,
// so recorded merges can be undone exactly)
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // returns true when two classes merged
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      trail_.push_back(-1);
      return false;
    }
    if (size_[a] > size_[b]) std::swap(a, b);
    parent_[a] = b;
    size_[b] += size_[a];
    trail_.push_back(a);
    return true;
  }

  void rollback(size_t mark) {
    while (trail_.size() > mark) {
      int a = trail_.back();
      trail_.pop_back();
      if (a >= 0) {
        size_[parent_[a]] -= size_[a];
        parent_[a] = a;
      }
    }
  }

  size_t mark() const { return trail_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> trail_;
};

// histogram of (number of A-smoothings, loop count) over all states
struct StateHistogram {
  int c = 0;
  std::vector<std::int64_t> counts;  // (na * (c+2) + loops)

  void bump(int na, int loops) { ++counts[na * (c + 2) + loops]; }
};

void enumerate_states(const PlanarDiagram& d, int ci, RollbackDsu& dsu, int merges,
                      int na, StateHistogram& hist) {
  const int c = static_cast<int>(d.crossings.size());
  if (ci == c) {
    hist.bump(na, 4 * c - merges);
    return;
  }
  const int base = 4 * ci;
  for (int choice = 0; choice < 2; ++choice) {
    const bool a_side = choice == 0;
    // for CrossingPos (over_low) the A-smoothing is the turn-back (W-W, E-E)
    const bool turnback = d.crossings[ci].over_low ? a_side : !a_side;
    const size_t mark = dsu.mark();
    int m = 0;
    if (turnback) {
      m += dsu.unite(base + 0, base + 1) ? 1 : 0;
      m += dsu.unite(base + 2, base + 3) ? 1 : 0;
    } else {
      m += dsu.unite(base + 0, base + 2) ? 1 : 0;
      m += dsu.unite(base + 1, base + 3) ? 1 : 0;
    }
    enumerate_states(d, ci + 1, dsu, merges + m, na + (a_side ? 1 : 0), hist);
    dsu.rollback(mark);
  }
}

LaurentPolynomial delta_power(int n) {
  LaurentPolynomial delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  LaurentPolynomial out = LaurentPolynomial::one();
  for (int i = 0; i < n; ++i) out = out * delta;
  return out;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const BooklinkWord& w, int max_crossings) {
  PlanarDiagram d = to_planar_diagram(w);
  const int c = static_cast<int>(d.crossings.size());
  if (c > max_crossings) {
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(c) + " crossings exceeds cap " +
                    std::to_string(max_crossings));
  }
  if (c == 0) return delta_power(d.free_loops - 1);

  RollbackDsu dsu(4 * c);
  int arc_merges = 0;
  {
    // connect the two slot occurrences of every edge
    std::vector<int> first_slot(d.edge_count, -1);
    for (int ci = 0; ci < c; ++ci) {
      for (int s = 0; s < 4; ++s) {
        const int e = d.slot_edge[ci][s];
        if (first_slot[e] < 0) {
          first_slot[e] = 4 * ci + s;
        } else {
          arc_merges += dsu.unite(first_slot[e], 4 * ci + s) ? 1 : 0;
        }
      }
    }
  }
  StateHistogram hist;
  hist.c = c;
  hist.counts.assign(static_cast<size_t>(c + 1) * (c + 2) + c + 2, 0);
  enumerate_states(d, 0, dsu, arc_merges, 0, hist);

  std::vector<LaurentPolynomial> delta_powers(c + 2 + d.free_loops);
  for (size_t i = 0; i < delta_powers.size(); ++i) delta_powers[i] = delta_power(static_cast<int>(i));

  LaurentPolynomial out;
  for (int na = 0; na <= c; ++na) {
    for (int loops = 1; loops <= c + 1; ++loops) {
      const std::int64_t n = hist.counts[na * (c + 2) + loops];
      if (n == 0) continue;
      const int shift = na - (c - na);
      for (auto [e, co] : delta_powers[loops - 1 + d.free_loops].terms()) {
        out.add_term(e + shift, co * n);
      }
    }
  }
  return out;
}

LaurentPolynomial jones(const BooklinkWord& w, int max_crossings) {
  LaurentPolynomial br = kauffman_bracket(w, max_crossings);
  const int writhe = to_planar_diagram(w).writhe;
  // V = (-A)^{-3w} <D>, t = A^-4: A-exponent e contributes q^{3w - e}
  LaurentPolynomial out;
  const std::int64_t sign = (writhe % 2 == 0) ? 1 : -1;
  for (auto [e, c] : br.terms()) out.add_term(3 * writhe - e, sign * c);
  return out;
}

IdentifyResult identify(const BooklinkWord& w, std::span<const KnotRecord> table,
                        int max_crossings) {
  if (trace_components(w).component_count != 1) {
    throw Error(ErrorCode::MultiComponent, "identification requires a knot");
  }
  const LaurentPolynomial v = jones(w, max_crossings);
  const LaurentPolynomial vm = v.mirrored();
  IdentifyResult result;
  for (const KnotRecord& rec : table) {
    if (rec.jones == v || rec.jones == vm) result.candidates.push_back(&rec);
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const KnotRecord* a, const KnotRecord* b) {
              return knot_name_less(a->name, b->name);
            });
  return result;
}

}  // namespace booklink
