#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "gw/polynomial.hpp"

namespace gw {

// Exact rational function scalar * numerator / prod(denominator factors).
//
// Every denominator the localization formula produces is a product of linear
// forms in the torus generators, so denominators are kept as a multiset of
// linear forms and never expanded. Values are always in canonical form:
//   - each denominator factor has coprime integer coefficients with positive
//     pivot (sign and content folded into the scalar),
//   - the numerator has content 1 and positive leading coefficient,
//   - denominator factors dividing the numerator are cancelled,
//   - zero is (scalar 0, numerator 1, empty denominator).
// Canonical form is unique, so operator== decides equality of functions.
class FactoredRational {
 public:
  explicit FactoredRational(std::size_t rank)
      : scalar_(0), num_(Polynomial::constant(rank, 1)) {}

  static FactoredRational zero(std::size_t rank) { return FactoredRational(rank); }
  static FactoredRational one(std::size_t rank) {
    return from_rational(rank, Rational(1));
  }
  static FactoredRational from_rational(std::size_t rank, Rational c);
  static FactoredRational from_polynomial(Polynomial p);
  static FactoredRational from_linear(const LinearForm& f);
  // 1 / f for a nonzero linear form f.
  static FactoredRational inverse_linear(const LinearForm& f);
  // General constructor; canonicalizes.
  static FactoredRational make(Rational scalar, Polynomial num,
                               const std::map<LinearForm, int>& den);

  std::size_t rank() const { return num_.rank(); }
  bool is_zero() const { return scalar_.is_zero(); }
  bool is_one() const;

  const Rational& scalar() const { return scalar_; }
  const Polynomial& numerator() const { return num_; }
  const std::map<LinearForm, int>& denominator() const { return den_; }
  int denominator_degree() const;

  // Rational value when the function is a constant, nullopt otherwise.
  std::optional<Rational> as_constant() const;
  // scalar * numerator when the denominator is empty, nullopt otherwise.
  std::optional<Polynomial> as_polynomial() const;

  // deg(numerator) - deg(denominator) when the numerator is homogeneous.
  std::optional<int> homogeneous_degree() const;

  // Exact evaluation; throws MathError when a denominator factor vanishes.
  Rational eval(std::span<const Rational> point) const;

  FactoredRational& operator+=(const FactoredRational& o);
  FactoredRational& operator-=(const FactoredRational& o);
  FactoredRational& operator*=(const FactoredRational& o);
  FactoredRational& operator*=(const Rational& s);
  friend FactoredRational operator+(FactoredRational a, const FactoredRational& b) { return a += b; }
  friend FactoredRational operator-(FactoredRational a, const FactoredRational& b) { return a -= b; }
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator*(FactoredRational a, const Rational& s) { return a *= s; }
  friend FactoredRational operator*(const Rational& s, FactoredRational a) { return a *= s; }
  friend FactoredRational operator-(const FactoredRational& a);

  // Reciprocal. The numerator must be constant or linear; the graph sum
  // never inverts anything else (general sums are only ever cleared, not
  // inverted).
  FactoredRational inv() const;

  friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
    return a.scalar_ == b.scalar_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FactoredRational& a, const FactoredRational& b) {
    return !(a == b);
  }

  std::string str(std::span<const std::string> names) const;
  std::string str() const;

 private:
  void canonicalize();

  Rational scalar_;
  Polynomial num_;
  std::map<LinearForm, int> den_;  // normalized form -> multiplicity
};

}  // namespace gw
