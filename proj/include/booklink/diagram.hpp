#pragma once

#include <array>
#include <vector>

#include "booklink/word.hpp"

namespace booklink {

// One crossing of the planar diagram.  Slots are numbered
//   0 = W_low, 1 = W_high, 2 = E_low, 3 = E_high
// (W = side of smaller theta, low = nearer the binding).  The two strands
// run 0<->3 and 1<->2; over_low means the 0<->3 strand passes over (a
// CrossingPos generator).  dir_* are the theta-directions of the incoming
// low/high segments, sign is the writhe contribution under those
// orientations.
struct Crossing {
  bool over_low;
  int sign;
  int dir_low;
  int dir_high;
  int gen_index;
};

// Closed 4-valent diagram of a booklink word: caps/cups become turn-back
// arcs and the seam closes strand k to strand k, so edges (arcs) meet only
// crossing slots.  free_loops counts closed components through no crossing.
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  std::vector<std::array<int, 4>> slot_edge;  // crossing -> edge id per slot
  int edge_count = 0;
  int free_loops = 0;
  int writhe = 0;
  int component_count = 0;
};

PlanarDiagram to_planar_diagram(const BooklinkWord& w);

// Dowker-Thistlethwaite code: signed even partner of each odd label
// 1,3,...,2c-1; the even value is negated when the odd-numbered pass runs
// under.  Canonical form minimizes the (|value|, sign) sequence over all 2c
// starting points and both traversal directions.
struct DTCode {
  std::vector<int> pairs;

  bool operator==(const DTCode&) const = default;
};

DTCode dt_code(const BooklinkWord& w);

}  // namespace booklink
