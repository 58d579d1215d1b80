#include "gw/rational.hpp"

#include <ostream>

#include "gw/errors.hpp"

namespace gw {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw MathError("division by zero");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw InputError("bad rational literal: '" + s + "'");
  if (v.get_den() == 0) throw InputError("zero denominator in rational literal: '" + s + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slint_p())
    throw MathError("rational value is not a small integer: " + str());
  return v_.get_num().get_si();
}

Rational Rational::inv() const {
  if (is_zero()) throw MathError("division by zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational rat_binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational rat_pow(const Rational& base, unsigned long k) {
  Rational acc(1);
  Rational b = base;
  unsigned long e = k;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace gw
