#include "gw/linear_form.hpp"

#include <sstream>

#include "gw/errors.hpp"

namespace gw {

LinearForm LinearForm::unit(std::size_t rank, std::size_t i) {
  LinearForm f(rank);
  f.c_[i] = Rational(1);
  return f;
}

bool LinearForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t LinearForm::pivot() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return c_.size();
}

Rational LinearForm::eval(std::span<const Rational> point) const {
  if (point.size() != c_.size()) throw MathError("evaluation point has wrong length");
  Rational acc(0);
  for (std::size_t i = 0; i < c_.size(); ++i) acc += c_[i] * point[i];
  return acc;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (o.rank() != rank()) throw MathError("linear form rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  if (o.rank() != rank()) throw MathError("linear form rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

LinearForm operator-(const LinearForm& a) {
  LinearForm r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r.c_[i] = -a.c_[i];
  return r;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  return a.c_ < b.c_;
}

LinearForm::Normalized LinearForm::normalized() const {
  std::size_t p = pivot();
  if (p == c_.size()) throw MathError("cannot normalize the zero linear form");
  // Common denominator, then gcd of numerators, sign from the pivot.
  mpz_class den(1);
  for (const auto& c : c_) den = lcm(den, c.raw().get_den());
  mpz_class g(0);
  for (const auto& c : c_) g = gcd(g, mpz_class(c.raw().get_num() * (den / c.raw().get_den())));
  Rational scale{mpq_class(g, den)};
  if (c_[p].sign() < 0) scale = -scale;
  LinearForm unit(rank());
  Rational invscale = scale.inv();
  for (std::size_t i = 0; i < c_.size(); ++i) unit.c_[i] = c_[i] * invscale;
  return {std::move(unit), std::move(scale)};
}

bool LinearForm::proportional_to(const LinearForm& o, Rational* factor) const {
  if (rank() != o.rank()) return false;
  std::size_t p = o.pivot();
  if (p == o.rank()) return false;
  Rational q = c_[p] / o.c_[p];
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != q * o.c_[i]) return false;
  if (factor) *factor = q;
  return true;
}

std::string LinearForm::str(std::span<const std::string> names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i].abs();
    if (first) {
      if (c_[i].sign() < 0) os << "-";
      first = false;
    } else {
      os << (c_[i].sign() < 0 ? " - " : " + ");
    }
    if (!a.is_one()) os << a.str() << "*";
    os << (i < names.size() ? names[i] : "u" + std::to_string(i));
  }
  if (first) os << "0";
  return os.str();
}

std::string LinearForm::str() const {
  std::vector<std::string> names;
  names.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) names.push_back("u" + std::to_string(i));
  return str(names);
}

}  // namespace gw
