#include "gw/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gw/errors.hpp"

namespace gw {

Polynomial Polynomial::constant(std::size_t rank, Rational c) {
  Polynomial p(rank);
  if (!c.is_zero()) p.terms_.emplace(Exponents(rank, 0), std::move(c));
  return p;
}

Polynomial Polynomial::generator(std::size_t rank, std::size_t i) {
  Polynomial p(rank);
  Exponents e(rank, 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::from_linear(const LinearForm& f) {
  Polynomial p(f.rank());
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    Exponents e(f.rank(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), f.coeff(i));
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree() == 0;
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Exponents(rank_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

static int degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int de = degree_of(e);
    if (!d)
      d = de;
    else if (*d != de)
      return std::nullopt;
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.rank_ != rank_) throw MathError("polynomial rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.rank_ != rank_) throw MathError("polynomial rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.rank_ != b.rank_) throw MathError("polynomial rank mismatch");
  Polynomial r(a.rank_);
  Exponents e(a.rank_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r(a.rank_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial acc = constant(rank_, 1);
  Polynomial b = *this;
  while (k > 0) {
    if (k & 1) acc = acc * b;
    if (k >>= 1) b = b * b;
  }
  return acc;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != rank_) throw MathError("evaluation point has wrong length");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < rank_; ++i)
      if (e[i] > 0) m *= rat_pow(point[i], static_cast<unsigned long>(e[i]));
    acc += m;
  }
  return acc;
}

Rational Polynomial::extract_content() {
  if (terms_.empty()) return Rational(0);
  mpz_class den(1);
  for (const auto& [e, c] : terms_) den = lcm(den, c.raw().get_den());
  mpz_class g(0);
  for (const auto& [e, c] : terms_)
    g = gcd(g, mpz_class(c.raw().get_num() * (den / c.raw().get_den())));
  Rational content{mpq_class(g, den)};
  if (terms_.rbegin()->second.sign() < 0) content = -content;
  Rational inv = content.inv();
  for (auto& [e, c] : terms_) c *= inv;
  return content;
}

std::optional<Polynomial> Polynomial::divided_by_linear(const LinearForm& f) const {
  std::size_t j = f.pivot();
  if (j == f.rank()) throw MathError("division by the zero linear form");
  if (f.rank() != rank_) throw MathError("polynomial rank mismatch");
  if (terms_.empty()) return Polynomial(rank_);
  const Rational& c = f.coeff(j);
  LinearForm rest = f;  // f = c*u_j + rest
  rest.set_coeff(j, Rational(0));
  Polynomial rest_poly = from_linear(rest);

  // Slice by u_j-degree: p = sum_d p_d * u_j^d with p_d free of u_j.
  std::map<int, Polynomial> slices;
  int top = 0;
  for (const auto& [e, coef] : terms_) {
    int d = e[j];
    top = std::max(top, d);
    Exponents r = e;
    r[j] = 0;
    auto [it, ins] = slices.emplace(d, Polynomial(rank_));
    it->second.add_term(r, coef);
  }
  auto slice = [&](int d) -> Polynomial {
    auto it = slices.find(d);
    return it == slices.end() ? Polynomial(rank_) : it->second;
  };

  // Back-substitution: q_{d-1} = (p_d - rest*q_d) / c, remainder p_0 - rest*q_0.
  Rational cinv = c.inv();
  std::map<int, Polynomial> q;
  Polynomial qd(rank_);  // q_d for the current d, starting above the top degree
  for (int d = top; d >= 1; --d) {
    Polynomial num = slice(d) - rest_poly * qd;
    num *= cinv;
    qd = std::move(num);
    q.emplace(d - 1, qd);
  }
  Polynomial remainder = slice(0) - rest_poly * qd;
  if (!remainder.is_zero()) return std::nullopt;

  Polynomial quotient(rank_);
  for (const auto& [d, qp] : q) {
    for (const auto& [e, coef] : qp.terms_) {
      Exponents ee = e;
      ee[j] += d;
      quotient.add_term(ee, coef);
    }
  }
  return quotient;
}

std::string Polynomial::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest monomials first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (!a.is_one() || degree_of(e) == 0) {
      os << a.str();
      printed = true;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << (i < names.size() ? names[i] : "u" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::string Polynomial::str() const {
  std::vector<std::string> names;
  names.reserve(rank_);
  for (std::size_t i = 0; i < rank_; ++i) names.push_back("u" + std::to_string(i));
  return str(names);
}

}  // namespace gw
