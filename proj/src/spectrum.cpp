#include "booklink/spectrum.hpp"

#include <algorithm>
#include <charconv>

namespace booklink {

std::vector<SpectrumViolation> Spectrum::check(const std::vector<int>& values) {
  std::vector<SpectrumViolation> out;
  if (values.empty() || values.back() != 0) {
    out.push_back({ErrorCode::NoTerminalZero, static_cast<int>(values.size()) - 1,
                   "spectrum must end in 0"});
    return out;
  }
  for (size_t d = 0; d + 1 < values.size(); ++d) {
    if (values[d] <= values[d + 1]) {
      out.push_back({ErrorCode::NotDecreasing, static_cast<int>(d) + 1,
                     "NotDecreasing at d=" + std::to_string(d + 1)});
    }
    if (values[d] <= 0) {
      out.push_back({ErrorCode::NoTerminalZero, static_cast<int>(d),
                     "only the final entry may be 0"});
    }
  }
  const size_t n = values.size();
  if (n >= 2 && values[n - 2] != 1 && out.empty()) {
    out.push_back({ErrorCode::MissingPenultimateOne, static_cast<int>(n) - 2,
                   "b_{D-1} must be 1, got " + std::to_string(values[n - 2])});
  }
  return out;
}

Spectrum Spectrum::validated(std::vector<int> values) {
  auto violations = check(values);
  if (!violations.empty()) {
    throw Error(violations.front().code, violations.front().message);
  }
  return Spectrum(std::move(values));
}

int Spectrum::at(int d) const {
  if (d < 0) throw Error(ErrorCode::BadIndex, "negative bridge count");
  return d < static_cast<int>(values_.size()) ? values_[d] : 0;
}

std::string Spectrum::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

Spectrum Spectrum::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorCode::ParseError, "spectrum literal must be {a,b,...,0}");
  }
  std::vector<int> values;
  const char* p = text.data() + 1;
  const char* end = text.data() + text.size() - 1;
  while (p < end) {
    int v = 0;
    auto [np, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) {
      throw Error(ErrorCode::ParseError, "bad spectrum entry in '" + std::string(text) + "'");
    }
    values.push_back(v);
    p = np;
    if (p < end) {
      if (*p != ',') {
        throw Error(ErrorCode::ParseError, "expected ',' in spectrum literal");
      }
      ++p;
    }
  }
  return validated(std::move(values));
}

Spectrum two_bridge_spectrum(int braid_index) {
  if (braid_index < 2) {
    throw Error(ErrorCode::BadIndex, "2-bridge spectrum needs braid index >= 2");
  }
  return Spectrum::validated({braid_index, 1, 0});
}

Spectrum bb_spectrum(int bridge_index) {
  if (bridge_index < 1) {
    throw Error(ErrorCode::BadIndex, "BB spectrum needs bridge index >= 1");
  }
  std::vector<int> values(bridge_index + 1);
  for (int d = 0; d <= bridge_index; ++d) values[d] = bridge_index - d;
  return Spectrum::validated(std::move(values));
}

Spectrum split_combine(const Spectrum& s1, const Spectrum& s2) {
  const int d_total = s1.bridge_index() + s2.bridge_index();
  std::vector<int> out(d_total + 1);
  for (int d = 0; d <= d_total; ++d) {
    int best = s1.at(0) + s2.at(d);
    for (int d1 = 0; d1 <= d; ++d1) best = std::min(best, s1.at(d1) + s2.at(d - d1));
    out[d] = best;
  }
  return Spectrum::validated(std::move(out));
}

Spectrum composite_combine(const Spectrum& s1, const Spectrum& s2) {
  const int dd1 = s1.bridge_index(), dd2 = s2.bridge_index();
  if (dd1 < 1 || dd2 < 1) {
    throw Error(ErrorCode::InvalidSpectrum,
                "composite combination needs bridge index >= 1 on both sides");
  }
  const int d_total = dd1 + dd2 - 1;
  std::vector<int> out(d_total + 1, 0);
  out[0] = s1.braid_index() + s2.braid_index() - 1;
  for (int d = 1; d < d_total; ++d) {
    int best = -1;
    for (int d1 = 1; d1 <= dd1; ++d1) {
      const int d2 = d + 1 - d1;
      if (d2 < 1 || d2 > dd2) continue;
      const int v = s1.at(d1) + s2.at(d2);
      if (best < 0 || v < best) best = v;
    }
    out[d] = best;
  }
  return Spectrum::validated(std::move(out));
}

ConcavityReport is_concave(const Spectrum& s) {
  const auto& v = s.values();
  for (size_t d = 1; d + 1 < v.size(); ++d) {
    if (v[d - 1] - v[d] < v[d] - v[d + 1]) {
      return {false, static_cast<int>(d)};
    }
  }
  return {true, -1};
}

}  // namespace booklink
