#include "sigmagb/shift_monoid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sigmagb {

namespace {

void check_same_rank(const ShiftExponent& s, const ShiftExponent& t) {
  if (s.rank() != t.rank()) {
    throw std::invalid_argument("shift exponents of different rank: " + s.to_string() + " vs " +
                                t.to_string());
  }
}

void check_rank(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw std::invalid_argument("shift rank must be in [0, " + std::to_string(kMaxRank) + "]");
  }
}

// Fills every exponent vector of exactly degree `remaining` from position pos.
void fill_degree(int rank, int pos, int remaining, ShiftExponent& cur,
                 std::vector<ShiftExponent>& out) {
  if (pos == rank - 1) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.set(pos, v);
    fill_degree(rank, pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

ShiftExponent::ShiftExponent(int rank) {
  check_rank(rank);
  rank_ = static_cast<std::uint8_t>(rank);
}

ShiftExponent::ShiftExponent(std::initializer_list<int> coords)
    : ShiftExponent(std::span<const int>(coords.begin(), coords.size())) {}

ShiftExponent::ShiftExponent(std::span<const int> coords) {
  check_rank(static_cast<int>(coords.size()));
  rank_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) set(static_cast<int>(i), coords[i]);
}

void ShiftExponent::set(int i, int value) {
  if (i < 0 || i >= rank_) throw std::out_of_range("shift coordinate index out of range");
  if (value < 0 || value > std::numeric_limits<std::uint16_t>::max()) {
    throw std::out_of_range("shift coordinate out of range: " + std::to_string(value));
  }
  coords_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(value);
}

int ShiftExponent::degree() const {
  int d = 0;
  for (int i = 0; i < rank_; ++i) d += (*this)[i];
  return d;
}

bool ShiftExponent::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    if ((*this)[i] != 0) return false;
  return true;
}

bool ShiftExponent::divides(const ShiftExponent& other) const {
  check_same_rank(*this, other);
  for (int i = 0; i < rank_; ++i)
    if ((*this)[i] > other[i]) return false;
  return true;
}

std::uint64_t ShiftExponent::pack() const {
  std::uint64_t h = rank_;
  for (int i = 0; i < rank_; ++i) h = (h << 9) ^ static_cast<std::uint64_t>((*this)[i]);
  // Collisions only for coordinates >= 512, which no window reaches.
  return h;
}

std::string ShiftExponent::to_string() const {
  std::string s = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ",";
    s += std::to_string((*this)[i]);
  }
  return s + ")";
}

ShiftExponent mul(const ShiftExponent& s, const ShiftExponent& t) {
  check_same_rank(s, t);
  ShiftExponent u(s.rank());
  for (int i = 0; i < s.rank(); ++i) u.set(i, s[i] + t[i]);
  return u;
}

ShiftExponent gcd(const ShiftExponent& s, const ShiftExponent& t) {
  check_same_rank(s, t);
  ShiftExponent u(s.rank());
  for (int i = 0; i < s.rank(); ++i) u.set(i, std::min(s[i], t[i]));
  return u;
}

ShiftExponent lcm(const ShiftExponent& s, const ShiftExponent& t) {
  check_same_rank(s, t);
  ShiftExponent u(s.rank());
  for (int i = 0; i < s.rank(); ++i) u.set(i, std::max(s[i], t[i]));
  return u;
}

ShiftExponent monus(const ShiftExponent& s, const ShiftExponent& t) {
  check_same_rank(s, t);
  ShiftExponent u(s.rank());
  for (int i = 0; i < s.rank(); ++i) u.set(i, std::max(s[i] - t[i], 0));
  return u;
}

std::strong_ordering operator<=>(const OrderValue& a, const OrderValue& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return static_cast<int>(!a.is_neg_infinity()) <=> static_cast<int>(!b.is_neg_infinity());
  }
  return a.value() <=> b.value();
}

std::string OrderValue::to_string() const {
  return is_neg_infinity() ? std::string("-inf") : std::to_string(value());
}

OrderValue max(const OrderValue& a, const OrderValue& b) { return a < b ? b : a; }

OrderValue operator+(const OrderValue& a, int d) {
  return a.is_neg_infinity() ? a : OrderValue(a.value() + d);
}

OrderValue deg(const WeightValue& w) {
  return w.is_zero() ? OrderValue::neg_infinity() : OrderValue(w.shift().degree());
}

std::strong_ordering SigmaOrder::compare(const ShiftExponent& s, const ShiftExponent& t) const {
  check_same_rank(s, t);
  const int r = s.rank();
  if (kind == SigmaOrderKind::lex) {
    for (int i = 0; i < r; ++i)
      if (s[i] != t[i]) return s[i] <=> t[i];
    return std::strong_ordering::equal;
  }
  if (auto c = s.degree() <=> t.degree(); c != 0) return c;
  // Reverse lexicographic tie-break: a smaller trailing exponent wins.
  for (int i = r - 1; i >= 0; --i)
    if (s[i] != t[i]) return t[i] <=> s[i];
  return std::strong_ordering::equal;
}

const char* to_string(SigmaOrderKind kind) {
  return kind == SigmaOrderKind::lex ? "lex" : "degrevlex";
}

WeightValue weight_max(const SigmaOrder& order, const WeightValue& a, const WeightValue& b) {
  return compare(order, a, b) == std::strong_ordering::less ? b : a;
}

WeightValue weight_mul(const WeightValue& a, const WeightValue& b) {
  if (a.is_zero() || b.is_zero()) return WeightValue::zero();
  return WeightValue(mul(a.shift(), b.shift()));
}

std::strong_ordering compare(const SigmaOrder& order, const WeightValue& a, const WeightValue& b) {
  if (a.is_zero() || b.is_zero()) {
    return static_cast<int>(!a.is_zero()) <=> static_cast<int>(!b.is_zero());
  }
  return order.compare(a.shift(), b.shift());
}

std::vector<ShiftExponent> enumerate_deg(int rank, int d) {
  check_rank(rank);
  std::vector<ShiftExponent> out;
  if (d < 0) return out;
  if (rank == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  ShiftExponent cur(rank);
  fill_degree(rank, 0, d, cur, out);
  const SigmaOrder order{SigmaOrderKind::degrevlex};
  std::sort(out.begin(), out.end(),
            [&](const ShiftExponent& a, const ShiftExponent& b) { return order.less(a, b); });
  return out;
}

std::vector<ShiftExponent> enumerate_upto_deg(int rank, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be non-negative");
  std::vector<ShiftExponent> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = enumerate_deg(rank, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<ShiftExponent> enumerate_upto(const SigmaOrder& order, const ShiftExponent& bound) {
  if (!order.is_sequential()) {
    throw std::invalid_argument("enumerate_upto requires a sequential order on Sigma");
  }
  std::vector<ShiftExponent> out;
  for (int k = 0; k <= bound.degree(); ++k) {
    for (auto& s : enumerate_deg(bound.rank(), k)) {
      if (order.compare(s, bound) != std::strong_ordering::greater) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace sigmagb
