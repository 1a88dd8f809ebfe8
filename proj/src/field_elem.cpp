#include <bit>
#include <stdexcept>

#include "sigmagb/coefficients.hpp"

namespace sigmagb {

FieldElem::FieldElem(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  num_ = ParamPoly(c.get_num());
  den_ = ParamPoly(c.get_den());
}

FieldElem FieldElem::normalized(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return FieldElem();
  if (!den.is_one()) {
    const ParamPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    if (sgn(den.leading().coeff) < 0) {
      num = -num;
      den = -den;
    }
  }
  return FieldElem(std::move(num), std::move(den), 0);
}

mpq_class FieldElem::to_rational() const {
  if (!is_rational()) throw std::logic_error("coefficient depends on parameters");
  mpq_class q(num_.constant_value(), den_.constant_value());
  q.canonicalize();
  return q;
}

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_, 0); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return FieldElem(a.num_ + b.num_, a.den_, 0);
  // With one integral operand the sum stays reduced.
  if (a.den_.is_one()) return FieldElem(a.num_ * b.den_ + b.num_, b.den_, 0);
  if (b.den_.is_one()) return FieldElem(a.num_ + b.num_ * a.den_, a.den_, 0);
  if (a.den_ == b.den_) return FieldElem::normalized(a.num_ + b.num_, a.den_);
  const ParamPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0);
  }
  const ParamPoly ad = exact_div(a.den_, g);
  const ParamPoly bd = exact_div(b.den_, g);
  return FieldElem::normalized(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  if (a.den_.is_one() && b.den_.is_one()) return FieldElem(a.num_ * b.num_, a.den_, 0);
  ParamPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    const ParamPoly g1 = gcd(an, bd);
    if (!g1.is_one()) {
      an = exact_div(an, g1);
      bd = exact_div(bd, g1);
    }
  }
  if (!ad.is_one()) {
    const ParamPoly g2 = gcd(bn, ad);
    if (!g2.is_one()) {
      bn = exact_div(bn, g2);
      ad = exact_div(ad, g2);
    }
  }
  return FieldElem(an * bn, ad * bd, 0);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (sgn(num_.leading().coeff) < 0) return FieldElem(-den_, -num_, 0);
  return FieldElem(den_, num_, 0);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

std::string FieldElem::to_string(std::span<const std::string> names, bool atomic) const {
  if (den_.is_one()) {
    std::string s = num_.to_string(names);
    if (atomic && num_.terms().size() > 1) return "(" + s + ")";
    return s;
  }
  std::string n = num_.to_string(names);
  std::string d = den_.to_string(names);
  if (num_.terms().size() > 1 || (atomic && sgn(num_.leading().coeff) < 0)) n = "(" + n + ")";
  const bool single_power = den_.is_monomial() && den_.leading().coeff == 1 &&
                            std::popcount(den_.support()) == 1;
  if (!den_.is_constant() && !single_power) d = "(" + d + ")";
  std::string s = n + "/" + d;
  return atomic ? "(" + s + ")" : s;
}

FieldElem field_add(const FieldElem& a, const FieldElem& b) { return a + b; }
FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem field_neg(const FieldElem& a) { return -a; }
FieldElem field_inv(const FieldElem& a) { return a.inverse(); }
FieldElem normalize(ParamPoly num, ParamPoly den) { return FieldElem::normalized(std::move(num), std::move(den)); }

}  // namespace sigmagb
