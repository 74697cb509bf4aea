#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace booklink {

// Exact one-variable Laurent polynomial with integer coefficients.
// Stores only nonzero terms.  For Jones polynomials the exponent is in
// quarter units of t (exponent 4 == t^1), which keeps link values integral.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(std::int64_t coeff, int exponent);
  static LaurentPolynomial one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;

  void add_term(int exponent, std::int64_t coeff);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial&) const = default;

  // x -> x^-1
  LaurentPolynomial mirrored() const;
  LaurentPolynomial shifted(int delta) const;
  LaurentPolynomial negated() const;

  const std::map<int, std::int64_t>& terms() const { return terms_; }

  // "e:c;e:c;..." ascending exponents; "0:0" never appears (zero poly = "")
  std::string pairs_string() const;
  static LaurentPolynomial from_pairs_string(const std::string& text);

  // human-readable in variable `var`, exponents divided by `denom`
  std::string pretty(const std::string& var, int denom = 1) const;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace booklink
