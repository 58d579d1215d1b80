#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gw/linear_form.hpp"
#include "gw/rational.hpp"

namespace gw {

// Exponent vector, one entry per torus generator.
using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q. Terms are kept in a map with
// lexicographic exponent order; zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t rank) : rank_(rank) {}
  static Polynomial constant(std::size_t rank, Rational c);
  static Polynomial generator(std::size_t rank, std::size_t i);
  static Polynomial from_linear(const LinearForm& f);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of the constant monomial (0 when absent).
  Rational constant_value() const;
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const;  // -1 for the zero polynomial
  // Degree when all monomials share it, nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  Polynomial pow(unsigned long k) const;

  Rational eval(std::span<const Rational> point) const;

  // Extracts content and sign: afterwards the coefficients are coprime
  // integers and the lexicographically largest monomial has a positive
  // coefficient. Returns the factor removed, so that
  // old == returned * new. Zero polynomial returns 0 and is unchanged.
  Rational extract_content();

  // Exact division by a nonzero linear form; nullopt when not divisible.
  std::optional<Polynomial> divided_by_linear(const LinearForm& f) const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  std::string str(std::span<const std::string> names) const;
  std::string str() const;

 private:
  std::size_t rank_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace gw
