#pragma once

#include <string>
#include <vector>

#include "booklink/laurent.hpp"
#include "booklink/spectrum.hpp"

namespace booklink {

// One row of the bundled knot table.  jones exponents are quarter units of
// t, stored up to mirror (either chirality may be bundled).
struct KnotRecord {
  std::string name;
  int crossings = 0;
  int bridge = 0;
  int braid = 0;
  std::vector<int> dt;
  LaurentPolynomial jones;
  Spectrum expected_spectrum = Spectrum::parse("{1,0}");
  std::string derivation;  // "2-bridge" | "BB" | "witness"
};

// numeric (crossings, index) order: 0_1 < 3_1 < ... < 9_49
bool knot_name_less(const std::string& a, const std::string& b);

}  // namespace booklink
