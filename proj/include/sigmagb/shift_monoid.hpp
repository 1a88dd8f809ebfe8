#ifndef SIGMAGB_SHIFT_MONOID_HPP
#define SIGMAGB_SHIFT_MONOID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigmagb {

// Largest supported number of shift generators sigma_1..sigma_r.
inline constexpr int kMaxRank = 6;

// An element of the free commutative monoid generated by sigma_1..sigma_r,
// stored as its exponent vector. The identity is the zero vector.
class ShiftExponent {
 public:
  ShiftExponent() = default;
  explicit ShiftExponent(int rank);
  ShiftExponent(std::initializer_list<int> coords);
  explicit ShiftExponent(std::span<const int> coords);

  int rank() const { return rank_; }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);

  int degree() const;
  bool is_identity() const;
  // Componentwise <=, i.e. this divides other in the monoid.
  bool divides(const ShiftExponent& other) const;

  // Injective 64-bit packing, used as a hash key.
  std::uint64_t pack() const;

  std::string to_string() const;

  friend bool operator==(const ShiftExponent&, const ShiftExponent&) = default;

 private:
  std::uint8_t rank_ = 0;
  std::array<std::uint16_t, kMaxRank> coords_{};
};

ShiftExponent mul(const ShiftExponent& s, const ShiftExponent& t);
ShiftExponent gcd(const ShiftExponent& s, const ShiftExponent& t);
ShiftExponent lcm(const ShiftExponent& s, const ShiftExponent& t);
// Componentwise max(s_i - t_i, 0).
ShiftExponent monus(const ShiftExponent& s, const ShiftExponent& t);

// Element of Sigma-hat = Sigma u {0}; 0 absorbs under product and is neutral
// under the idempotent addition (max).
class WeightValue {
 public:
  WeightValue() = default;  // Zero
  WeightValue(ShiftExponent s) : value_(std::move(s)) {}
  static WeightValue zero() { return {}; }

  bool is_zero() const { return !value_.has_value(); }
  const ShiftExponent& shift() const { return *value_; }

  friend bool operator==(const WeightValue&, const WeightValue&) = default;

 private:
  std::optional<ShiftExponent> value_;
};

// Element of N-hat = N u {-inf}.
class OrderValue {
 public:
  OrderValue() = default;  // -inf
  OrderValue(int n) : value_(n) {}
  static OrderValue neg_infinity() { return {}; }

  bool is_neg_infinity() const { return !value_.has_value(); }
  int value() const { return *value_; }

  friend bool operator==(const OrderValue&, const OrderValue&) = default;
  friend std::strong_ordering operator<=>(const OrderValue& a, const OrderValue& b);

  std::string to_string() const;

 private:
  std::optional<int> value_;
};

OrderValue max(const OrderValue& a, const OrderValue& b);
OrderValue operator+(const OrderValue& a, int d);

OrderValue deg(const WeightValue& w);

enum class SigmaOrderKind { lex, degrevlex };

// Monomial order on Sigma with generator ranking sigma_1 > ... > sigma_r.
struct SigmaOrder {
  SigmaOrderKind kind = SigmaOrderKind::degrevlex;

  std::strong_ordering compare(const ShiftExponent& s, const ShiftExponent& t) const;
  bool less(const ShiftExponent& s, const ShiftExponent& t) const {
    return compare(s, t) == std::strong_ordering::less;
  }
  // Finitely many elements below every element.
  bool is_sequential() const { return kind == SigmaOrderKind::degrevlex; }
  // deg(s) < deg(t) implies s < t.
  bool is_deg_compatible() const { return kind == SigmaOrderKind::degrevlex; }

  friend bool operator==(const SigmaOrder&, const SigmaOrder&) = default;
};

const char* to_string(SigmaOrderKind kind);

// Weight-valued helpers on Sigma-hat.
WeightValue weight_max(const SigmaOrder& order, const WeightValue& a, const WeightValue& b);
WeightValue weight_mul(const WeightValue& a, const WeightValue& b);
// Zero is below every shift.
std::strong_ordering compare(const SigmaOrder& order, const WeightValue& a, const WeightValue& b);

// All shifts s with s <= bound, ascending. Requires a sequential order.
std::vector<ShiftExponent> enumerate_upto(const SigmaOrder& order, const ShiftExponent& bound);
// All shifts of total degree <= d, by degree then ascending degrevlex.
std::vector<ShiftExponent> enumerate_upto_deg(int rank, int d);
// All shifts of total degree exactly d.
std::vector<ShiftExponent> enumerate_deg(int rank, int d);

}  // namespace sigmagb

#endif
