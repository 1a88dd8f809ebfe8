#ifndef SIGMAGB_COEFFICIENTS_HPP
#define SIGMAGB_COEFFICIENTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sigmagb {

// Sparse polynomial in the field parameters p_0..p_{k-1} with integer
// coefficients. Exponents are packed 8 bits per parameter with p_0 in the
// most significant byte, so numeric order of the packed word is lex order.
// Terms are kept strictly descending; zero coefficients are never stored.
class ParamPoly {
 public:
  using Exponents = std::uint64_t;
  struct Term {
    Exponents exps;
    mpz_class coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  static constexpr int kMaxParams = 8;
  static constexpr int kMaxExponent = 127;

  ParamPoly() = default;
  ParamPoly(long c);
  ParamPoly(const mpz_class& c);
  static ParamPoly param(int index);
  static ParamPoly monomial(Exponents exps, mpz_class coeff);
  // Terms need not be sorted or combined.
  static ParamPoly from_terms(std::vector<Term> terms);

  static int exponent(Exponents e, int param) {
    return static_cast<int>((e >> (8 * (kMaxParams - 1 - param))) & 0xff);
  }
  static Exponents with_exponent(Exponents e, int param, int value);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  bool is_minus_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  // Constant term value; requires is_constant().
  mpz_class constant_value() const;

  int degree_in(int param) const;
  // Bitmask of parameters that occur.
  unsigned support() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly scaled(const mpz_class& c) const;
  // Exact division of every coefficient by c.
  ParamPoly divided(const mpz_class& c) const;
  ParamPoly times_monomial(Exponents exps) const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  // Renders with the given parameter names, e.g. "2*h^2*tau - 3".
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
};

// Quotient a / b; throws std::domain_error when b does not divide a exactly.
ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);
// Greatest common divisor in Z[params], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
// gcd of all integer coefficients (non-negative).
mpz_class integer_content(const ParamPoly& a);

// Element of Q(p_0..p_{k-1}) as a reduced fraction num/den of integer
// polynomials: gcd(num, den) = 1 in Z[params] and the leading coefficient of
// den is positive. Zero is 0/1, so equality is structural.
class FieldElem {
 public:
  FieldElem() : den_(1) {}
  FieldElem(long c) : num_(c), den_(1) {}
  FieldElem(const mpz_class& c) : num_(c), den_(1) {}
  FieldElem(const mpq_class& q);
  explicit FieldElem(ParamPoly num) : num_(std::move(num)), den_(1) {}
  static FieldElem param(int index) { return FieldElem(ParamPoly::param(index)); }
  // Reduces num/den to canonical form. Throws std::domain_error on den = 0.
  static FieldElem normalized(ParamPoly num, ParamPoly den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  // Requires is_rational().
  mpq_class to_rational() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  // Throws std::domain_error for zero.
  FieldElem inverse() const;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  // Either "num" or "(num)/(den)"; parenthesized when it has several terms and
  // `atomic` is requested.
  std::string to_string(std::span<const std::string> names, bool atomic = false) const;

 private:
  FieldElem(ParamPoly num, ParamPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  ParamPoly num_;
  ParamPoly den_;
};

FieldElem field_add(const FieldElem& a, const FieldElem& b);
FieldElem field_mul(const FieldElem& a, const FieldElem& b);
FieldElem field_neg(const FieldElem& a);
FieldElem field_inv(const FieldElem& a);
FieldElem normalize(ParamPoly num, ParamPoly den);

}  // namespace sigmagb

#endif
