#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

// Homogeneous linear form c_0*u_0 + ... + c_{k-1}*u_{k-1} in the torus
// generators, with exact rational coefficients. Localization weights, flag
// weights and denominator factors are all values of this type.
class LinearForm {
 public:
  explicit LinearForm(std::size_t rank) : c_(rank) {}
  LinearForm(std::initializer_list<Rational> coeffs) : c_(coeffs) {}
  static LinearForm unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return c_.size(); }
  const Rational& coeff(std::size_t i) const { return c_[i]; }
  void set_coeff(std::size_t i, Rational v) { c_[i] = std::move(v); }

  bool is_zero() const;

  // Index of the first nonzero coefficient; rank() when zero.
  std::size_t pivot() const;

  Rational eval(std::span<const Rational> point) const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& s);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  friend LinearForm operator-(const LinearForm& a);

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
  // Lexicographic; used for canonical multiset ordering.
  friend bool operator<(const LinearForm& a, const LinearForm& b);

  // Splits *this = scale * unit where unit has integer coprime coefficients
  // and positive first nonzero coefficient. Requires a nonzero form.
  struct Normalized {
    LinearForm unit;
    Rational scale;
  };
  Normalized normalized() const;

  // If *this == q * o for a rational q, returns q.
  bool proportional_to(const LinearForm& o, Rational* factor) const;

  std::string str(std::span<const std::string> names) const;
  std::string str() const;  // generic generator names u0, u1, ...

 private:
  std::vector<Rational> c_;
};

}  // namespace gw
