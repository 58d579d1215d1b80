#include "gw/factored_rational.hpp"

#include <sstream>

#include "gw/errors.hpp"

namespace gw {

FactoredRational FactoredRational::from_rational(std::size_t rank, Rational c) {
  FactoredRational r(rank);
  r.scalar_ = std::move(c);
  return r;
}

FactoredRational FactoredRational::from_polynomial(Polynomial p) {
  FactoredRational r(p.rank());
  r.scalar_ = Rational(1);
  r.num_ = std::move(p);
  r.canonicalize();
  return r;
}

FactoredRational FactoredRational::from_linear(const LinearForm& f) {
  return from_polynomial(Polynomial::from_linear(f));
}

FactoredRational FactoredRational::inverse_linear(const LinearForm& f) {
  if (f.is_zero()) throw MathError("division by zero linear form");
  auto [unit, scale] = f.normalized();
  FactoredRational r(f.rank());
  r.scalar_ = scale.inv();
  r.den_.emplace(std::move(unit), 1);
  return r;
}

FactoredRational FactoredRational::make(Rational scalar, Polynomial num,
                                        const std::map<LinearForm, int>& den) {
  FactoredRational r(num.rank());
  r.scalar_ = std::move(scalar);
  r.num_ = std::move(num);
  for (const auto& [f, mult] : den) {
    if (mult <= 0) throw MathError("denominator multiplicity must be positive");
    auto [unit, scale] = f.normalized();
    r.scalar_ /= rat_pow(scale, static_cast<unsigned long>(mult));
    r.den_[unit] += mult;
  }
  r.canonicalize();
  return r;
}

void FactoredRational::canonicalize() {
  if (scalar_.is_zero() || num_.is_zero()) {
    scalar_ = Rational(0);
    num_ = Polynomial::constant(rank(), 1);
    den_.clear();
    return;
  }
  scalar_ *= num_.extract_content();
  // Cancel denominator factors that divide the numerator.
  for (auto it = den_.begin(); it != den_.end();) {
    bool advanced = false;
    while (it->second > 0) {
      auto q = num_.divided_by_linear(it->first);
      if (!q) break;
      num_ = std::move(*q);
      scalar_ *= num_.extract_content();
      if (--it->second == 0) {
        it = den_.erase(it);
        advanced = true;
        break;
      }
    }
    if (!advanced) ++it;
  }
}

bool FactoredRational::is_one() const {
  return scalar_.is_one() && den_.empty() && num_.is_constant() &&
         num_.constant_value().is_one();
}

int FactoredRational::denominator_degree() const {
  int d = 0;
  for (const auto& [f, m] : den_) d += m;
  return d;
}

std::optional<Rational> FactoredRational::as_constant() const {
  if (!den_.empty() || !num_.is_constant()) return std::nullopt;
  return scalar_ * num_.constant_value();
}

std::optional<Polynomial> FactoredRational::as_polynomial() const {
  if (!den_.empty()) return std::nullopt;
  return num_ * scalar_;
}

std::optional<int> FactoredRational::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  auto d = num_.homogeneous_degree();
  if (!d) return std::nullopt;
  return *d - denominator_degree();
}

Rational FactoredRational::eval(std::span<const Rational> point) const {
  Rational v = scalar_ * num_.eval(point);
  for (const auto& [f, m] : den_) {
    Rational fv = f.eval(point);
    if (fv.is_zero()) throw MathError("evaluation point lies on a denominator factor");
    v /= rat_pow(fv, static_cast<unsigned long>(m));
  }
  return v;
}

FactoredRational& FactoredRational::operator+=(const FactoredRational& o) {
  if (o.rank() != rank()) throw MathError("rank mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // Common denominator: per-factor maximum of multiplicities.
  std::map<LinearForm, int> common = den_;
  for (const auto& [f, m] : o.den_) {
    auto [it, ins] = common.emplace(f, m);
    if (!ins) it->second = std::max(it->second, m);
  }
  auto complement = [&](const FactoredRational& x) {
    Polynomial p = x.num_ * x.scalar_;
    for (const auto& [f, m] : common) {
      auto it = x.den_.find(f);
      int have = it == x.den_.end() ? 0 : it->second;
      for (int k = have; k < m; ++k) p = p * Polynomial::from_linear(f);
    }
    return p;
  };
  Polynomial num = complement(*this) + complement(o);
  scalar_ = Rational(1);
  num_ = std::move(num);
  den_ = std::move(common);
  canonicalize();
  return *this;
}

FactoredRational& FactoredRational::operator-=(const FactoredRational& o) {
  return *this += -o;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  if (o.rank() != rank()) throw MathError("rank mismatch");
  scalar_ *= o.scalar_;
  if (scalar_.is_zero()) {
    *this = zero(rank());
    return *this;
  }
  num_ = num_ * o.num_;
  for (const auto& [f, m] : o.den_) den_[f] += m;
  canonicalize();
  return *this;
}

FactoredRational& FactoredRational::operator*=(const Rational& s) {
  scalar_ *= s;
  if (scalar_.is_zero()) *this = zero(rank());
  return *this;
}

FactoredRational operator-(const FactoredRational& a) {
  FactoredRational r = a;
  r *= Rational(-1);
  return r;
}

FactoredRational FactoredRational::inv() const {
  if (is_zero()) throw MathError("division by zero");
  FactoredRational r(rank());
  r.scalar_ = scalar_.inv();
  // Old denominator becomes the numerator, expanded.
  Polynomial num = Polynomial::constant(rank(), 1);
  for (const auto& [f, m] : den_)
    for (int k = 0; k < m; ++k) num = num * Polynomial::from_linear(f);
  r.num_ = std::move(num);
  // Old numerator becomes denominator factors.
  if (!num_.is_constant()) {
    auto deg = num_.homogeneous_degree();
    if (deg && *deg == 1) {
      LinearForm f(rank());
      for (const auto& [e, c] : num_.terms()) {
        for (std::size_t i = 0; i < rank(); ++i)
          if (e[i] == 1) f.set_coeff(i, c);
      }
      auto [unit, scale] = f.normalized();
      r.scalar_ /= scale;
      r.den_[unit] += 1;
    } else {
      throw MathError("cannot invert: numerator is not constant or linear");
    }
  } else {
    r.scalar_ /= num_.constant_value();
  }
  r.canonicalize();
  return r;
}

std::string FactoredRational::str(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool unit_num = num_.is_constant() && num_.constant_value().is_one();
  if (!scalar_.is_one() || unit_num) os << scalar_.str();
  if (!unit_num) {
    if (!scalar_.is_one()) os << " * ";
    os << "(" << num_.str(names) << ")";
  }
  for (const auto& [f, m] : den_) {
    os << " / (" << f.str(names) << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

std::string FactoredRational::str() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank(); ++i) names.push_back("u" + std::to_string(i));
  return str(names);
}

}  // namespace gw
