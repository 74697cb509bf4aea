#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "booklink/errors.hpp"

namespace booklink {

struct SpectrumViolation {
  ErrorCode code;
  int index;
  std::string message;
};

// The bridge-braid spectrum (b_0, ..., b_D): minimal braid count per bridge
// count, strictly decreasing until the terminal 0, with b_{D-1} = 1 when
// D >= 1.  Stored up to the first zero.
class Spectrum {
 public:
  static std::vector<SpectrumViolation> check(const std::vector<int>& values);
  // Throws Error with the first violation.
  static Spectrum validated(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int bridge_index() const { return static_cast<int>(values_.size()) - 1; }
  int braid_index() const { return values_.front(); }
  int at(int d) const;  // 0 beyond the stored range

  std::string to_string() const;  // {b0,b1,...,0}
  static Spectrum parse(std::string_view text);

  bool operator==(const Spectrum&) const = default;

 private:
  explicit Spectrum(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

Spectrum two_bridge_spectrum(int braid_index);  // (n, 1, 0), n >= 2
Spectrum bb_spectrum(int bridge_index);         // (d, d-1, ..., 1, 0), d >= 1

// Split-union law: b_d = min over d1+d2=d of b_d1 + b_d2 (entries beyond the
// stored range count as 0).
Spectrum split_combine(const Spectrum& s1, const Spectrum& s2);

// Connected-sum law: b_0 = n1 + n2 - 1; for 0 < d < D1+D2-1,
// b_d = min over d1+d2 = d+1, 1 <= di <= Di, of b_d1 + b_d2; 0 afterwards.
Spectrum composite_combine(const Spectrum& s1, const Spectrum& s2);

struct ConcavityReport {
  bool concave = true;
  int violation_index = -1;
};

ConcavityReport is_concave(const Spectrum& s);

}  // namespace booklink
