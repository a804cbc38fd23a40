#pragma once

#include <map>
#include <optional>
#include <string>

#include "geomcrystal/rational.hpp"

namespace geomcrystal {

// Laurent polynomial in one variable with exact rational coefficients.
// No zero coefficient is ever stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rat& c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Rat(c)) {}

  static LaurentPoly monomial(const Rat& c, int exponent);
  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int exponent) const;
  const std::map<int, Rat>& terms() const { return terms_; }
  std::optional<int> low_degree() const;
  std::optional<int> high_degree() const;

  Rat eval(const Rat& x) const;
  // p(s * var) for a scalar s, e.g. s = -1 sends lambda to -lambda.
  LaurentPoly scale_variable(const Rat& s) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void add_term(int e, const Rat& c);
  std::map<int, Rat> terms_;
};

// Element of the fraction field of Laurent polynomials; kept unreduced.
struct LaurentFraction {
  LaurentPoly num;
  LaurentPoly den = LaurentPoly(1);

  // Order of vanishing: low degree of numerator minus low degree of denominator.
  int order() const;
};

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);

}  // namespace geomcrystal
