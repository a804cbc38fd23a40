#include "geomcrystal/laurent.hpp"

#include <sstream>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

LaurentPoly::LaurentPoly(const Rat& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> LaurentPoly::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::high_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rat LaurentPoly::eval(const Rat& x) const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x == 0) throw DomainError("Laurent polynomial with negative powers evaluated at 0");
    sum += c * rat_pow(x, e);
  }
  return sum;
}

LaurentPoly LaurentPoly::scale_variable(const Rat& s) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * rat_pow(s, e));
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  for (unsigned i = 0; i < e; ++i) result *= *this;
  return result;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

int LaurentFraction::order() const {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) throw DomainError("order of zero is undefined");
  return *num.low_degree() - *den.low_degree();
}

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
  return {a.num * b.num, a.den * b.den};
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
  if (b.num.is_zero()) throw DomainError("division by zero");
  return {a.num * b.den, a.den * b.num};
}

}  // namespace geomcrystal
