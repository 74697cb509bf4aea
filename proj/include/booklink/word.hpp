#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "booklink/errors.hpp"

namespace booklink {

// Generators of a booklink word, acting on a stack of strands ordered by
// distance from the binding axis (position 1 = innermost).
//   CrossingPos/Neg at i : swap strands i, i+1; Pos = strand i passes over.
//   Cap at i            : strands i, i+1 end in a local theta-maximum.
//   Cup at i            : two new strands appear at positions i, i+1.
enum class GenKind { CrossingPos, CrossingNeg, Cap, Cup };

struct Generator {
  GenKind kind;
  int position = 1;  // 1-based

  bool is_crossing() const {
    return kind == GenKind::CrossingPos || kind == GenKind::CrossingNeg;
  }
  bool operator==(const Generator&) const = default;
};

// A closed booklink cut open at the seam page: applying all generators to
// seam_strands returns to seam_strands, and strand k at the end reconnects
// to strand k at the start.
struct BooklinkWord {
  int seam_strands = 0;
  std::vector<Generator> gens;

  bool operator==(const BooklinkWord&) const = default;
};

// Strand count per slice; counts[0] = counts[T] = seam_strands.
struct SliceProfile {
  std::vector<int> counts;

  int min_count() const;
};

struct Violation {
  ErrorCode code;
  int generator_index;  // -1 for word-level violations
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  SliceProfile profile;
  std::vector<Violation> violations;
};

// Per-segment component ids and theta-directions.  Segment (s,k) lives
// between generator s and s+1 (slice T wraps to slice 0 through the seam),
// 1-based in k; index 0 of each inner vector is unused.
struct ComponentTrace {
  int component_count = 0;
  std::vector<std::vector<int>> component;
  std::vector<std::vector<int>> direction;  // +1 with theta, -1 against
};

BooklinkWord parse_word(std::string_view text);
std::string serialize_word(const BooklinkWord& w);
std::string token_of(const Generator& g);

ValidationReport validate(const BooklinkWord& w);
// Throws Error(InvalidWord) when the word fails validation.
SliceProfile slice_profile(const BooklinkWord& w);

int bridge_index(const BooklinkWord& w);
int braid_count(const BooklinkWord& w);

ComponentTrace trace_components(const BooklinkWord& w);

BooklinkWord mirror(const BooklinkWord& w);
BooklinkWord rotate(const BooklinkWord& w, int k);
BooklinkWord align_min_to_seam(const BooklinkWord& w);

// Disjoint union with w2 riding above w1; both inputs must be min-aligned
// (seam_strands == braid_count).
BooklinkWord split_union(const BooklinkWord& w1, const BooklinkWord& w2);

// Connected sum splicing the cap_site-th Cap of w1 to the cup_site-th Cup of
// w2 (0-based among caps/cups in word order).  Both inputs must be knots.
BooklinkWord connected_sum(const BooklinkWord& w1, const BooklinkWord& w2,
                           int cap_site, int cup_site);

}  // namespace booklink
