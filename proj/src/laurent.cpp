#include "booklink/laurent.hpp"

#include <charconv>
#include <stdexcept>

#include "booklink/errors.hpp"

namespace booklink {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPolynomial::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (auto [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (auto [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (auto [ea, ca] : terms_) {
    for (auto [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int delta) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[e + delta] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::negated() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

std::string LaurentPolynomial::pairs_string() const {
  std::string out;
  for (auto [e, c] : terms_) {
    if (!out.empty()) out += ';';
    out += std::to_string(e) + ":" + std::to_string(c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::from_pairs_string(const std::string& text) {
  LaurentPolynomial p;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view pair(text.data() + pos, end - pos);
    size_t colon = pair.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "bad polynomial pair '" + std::string(pair) + "'");
    }
    int e = 0;
    std::int64_t c = 0;
    auto r1 = std::from_chars(pair.data(), pair.data() + colon, e);
    auto r2 = std::from_chars(pair.data() + colon + 1, pair.data() + pair.size(), c);
    if (r1.ec != std::errc() || r2.ec != std::errc() ||
        r1.ptr != pair.data() + colon || r2.ptr != pair.data() + pair.size()) {
      throw Error(ErrorCode::ParseError, "bad polynomial pair '" + std::string(pair) + "'");
    }
    p.add_term(e, c);
    pos = end + 1;
  }
  return p;
}

std::string LaurentPolynomial::pretty(const std::string& var, int denom) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto [e, c] : terms_) {
    if (!out.empty()) {
      out += c > 0 ? " + " : " - ";
    } else if (c < 0) {
      out += "-";
    }
    std::int64_t a = c > 0 ? c : -c;
    std::string expo;
    if (e != 0) {
      if (e % denom == 0) {
        int q = e / denom;
        expo = q == 1 ? var : var + "^" + std::to_string(q);
      } else {
        expo = var + "^(" + std::to_string(e) + "/" + std::to_string(denom) + ")";
      }
    }
    if (expo.empty()) {
      out += std::to_string(a);
    } else if (a == 1) {
      out += expo;
    } else {
      out += std::to_string(a) + expo;
    }
  }
  return out;
}

}  // namespace booklink
