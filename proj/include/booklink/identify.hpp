#pragma once

#include <span>

#include "booklink/diagram.hpp"
#include "booklink/knot_record.hpp"
#include "booklink/laurent.hpp"
#include "booklink/word.hpp"

namespace booklink {

inline constexpr int kDefaultCrossingCap = 24;

// Exact Kauffman bracket state sum in A: <D> = sum A^(a-b) delta^(loops-1),
// delta = -A^2 - A^-2, <unknot> = 1.  Throws TooManyCrossings above the cap.
LaurentPolynomial kauffman_bracket(const BooklinkWord& w,
                                   int max_crossings = kDefaultCrossingCap);

// Jones polynomial V = (-A)^(-3w) <D> with t = A^-4, exponents in quarter
// units of t.  Components are oriented by trace_components.
LaurentPolynomial jones(const BooklinkWord& w,
                        int max_crossings = kDefaultCrossingCap);

struct IdentifyResult {
  std::vector<const KnotRecord*> candidates;  // ordered by crossing number
  bool unique() const { return candidates.size() == 1; }
};

// All table rows whose Jones matches jones(w) up to t -> 1/t.  An empty
// candidate list means no match within the table's range.
IdentifyResult identify(const BooklinkWord& w, std::span<const KnotRecord> table,
                        int max_crossings = kDefaultCrossingCap);

}  // namespace booklink
