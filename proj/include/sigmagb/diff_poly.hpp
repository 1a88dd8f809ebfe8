#ifndef SIGMAGB_DIFF_POLY_HPP
#define SIGMAGB_DIFF_POLY_HPP

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sigmagb/coefficients.hpp"
#include "sigmagb/shift_monoid.hpp"

namespace sigmagb {

enum class Ranking { weight, index };
enum class InnerOrder { lex, degrevlex };

const char* to_string(Ranking r);
const char* to_string(InnerOrder o);

// Monomial Sigma-ordering: a block ordering over the weight or index
// ranking, built from an order on Sigma and an inner ordering of same-shift
// variables (x_0 > x_1 > ... > t).
struct SigmaOrdering {
  Ranking ranking = Ranking::weight;
  SigmaOrder sigma{};
  InnerOrder inner = InnerOrder::lex;

  friend bool operator==(const SigmaOrdering&, const SigmaOrdering&) = default;
};

struct DiffVariable {
  int index = 0;
  ShiftExponent shift;
  friend bool operator==(const DiffVariable&, const DiffVariable&) = default;
};

// Packed variable. Integer order of keys is the variable ranking of the ring
// that produced them, and Sigma acts by adding a constant.
using VarKey = std::uint64_t;

struct Factor {
  VarKey var;
  std::uint32_t exp;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Product of variables, factors strictly descending by key; empty means 1.
// Arithmetic below only needs the sorted keys, not the ring.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  explicit Monomial(Storage factors) : f_(std::move(factors)) {}

  const Storage& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::size_t size() const { return f_.size(); }
  std::uint32_t exponent(VarKey v) const;
  std::uint64_t total_degree() const;
  std::size_t hash() const;

  // Adds delta to every key (the action of one shift).
  Monomial shifted(VarKey delta) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Storage f_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
// b / a; requires mono_divides(a, b).
Monomial mono_quotient(const Monomial& b, const Monomial& a);
// True when shifting a by delta divides b.
bool mono_divides_shifted(const Monomial& a, VarKey delta, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Ring context: K[X(Sigma)] or its extension by the homogenizer t, with a
// fixed Sigma-ordering and parameter list for K.
class Ring {
 public:
  Ring(int rank, std::vector<std::string> unknowns, std::vector<std::string> params = {},
       SigmaOrdering ordering = {});

  int rank() const { return rank_; }
  int num_unknowns() const { return static_cast<int>(unknowns_.size()); }
  // Unknowns plus the homogenizer when extended.
  int num_indices() const { return num_unknowns() + (extended_ ? 1 : 0); }
  bool is_extended() const { return extended_; }
  int homogenizer_index() const { return num_unknowns(); }
  const std::string& homogenizer_name() const { return hom_name_; }
  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::vector<std::string>& params() const { return params_; }
  const SigmaOrdering& ordering() const { return ordering_; }
  const SigmaOrder& sigma_order() const { return ordering_.sigma; }

  // The ring with the homogenizer t adjoined (t after every unknown).
  Ring extended() const;
  Ring base() const;
  Ring with_ordering(const SigmaOrdering& ordering) const;
  // Same variable encoding and ordering.
  bool compatible(const Ring& other) const;

  VarKey var(int index, const ShiftExponent& shift) const;
  VarKey var(const DiffVariable& v) const { return var(v.index, v.shift); }
  DiffVariable decode(VarKey v) const;
  int index_of(VarKey v) const;
  ShiftExponent shift_of(VarKey v) const;
  int degree_of(VarKey v) const;
  // Integer whose order is the Sigma order of the variable's shift.
  std::uint64_t sigma_key(VarKey v) const;
  bool is_homogenizer(VarKey v) const { return extended_ && index_of(v) == homogenizer_index(); }
  // Key offset realizing the action of s; callers keep shifted coordinates
  // within 255 and degrees within 255.
  VarKey shift_delta(const ShiftExponent& s) const;
  // Whether every coordinate of `to` dominates `from`; fills the shift.
  bool shift_between(VarKey from, VarKey to, ShiftExponent* out) const;
  // Same as shift_between but only checks.
  bool shift_dominates(VarKey from, VarKey to) const;

  Monomial monomial(const std::vector<std::pair<DiffVariable, int>>& powers) const;
  Monomial variable(int index, const ShiftExponent& shift, int exp = 1) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  WeightValue weight(const Monomial& m) const;
  OrderValue ord(const Monomial& m) const;
  Monomial shift(const ShiftExponent& s, const Monomial& m) const;

  std::string var_name(VarKey v) const;
  std::string to_string(const Monomial& m) const;

 private:
  int rank_;
  std::vector<std::string> unknowns_;
  std::vector<std::string> params_;
  SigmaOrdering ordering_;
  bool extended_ = false;
  std::string hom_name_;

  // Bit layout of keys.
  int sigma_shift_ = 0;  // offset of the shift field block
  int index_shift_ = 0;  // offset of the 8-bit inverted index field
  std::uint64_t sigma_mask_ = 0;
  void init_layout();
  int coord_offset(int i) const;
  int degree_offset() const;
};

struct Term {
  FieldElem coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

// Finite sum of terms with nonzero coefficients, strictly descending under
// the ring's ordering; the first term is the leading term.
class DiffPolynomial {
 public:
  DiffPolynomial() = default;
  // Sorts and combines arbitrary terms.
  static DiffPolynomial from_terms(const Ring& ring, std::vector<Term> terms);
  // Terms must already be strictly descending with nonzero coefficients.
  static DiffPolynomial from_sorted(std::vector<Term> terms);
  static DiffPolynomial constant(FieldElem c);
  static DiffPolynomial monomial(FieldElem c, Monomial m);

  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }

  // Leading data; throw std::domain_error on the zero polynomial.
  const Monomial& lm() const;
  const FieldElem& lc() const;
  const Term& lt() const;

  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

 private:
  std::vector<Term> terms_;
};

DiffPolynomial add(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b);
DiffPolynomial sub(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b);
DiffPolynomial neg(const DiffPolynomial& a);
DiffPolynomial scale(const FieldElem& c, const DiffPolynomial& a);
DiffPolynomial mul(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b);
// c * m * a.
DiffPolynomial mul_term(const FieldElem& c, const Monomial& m, const DiffPolynomial& a);
// h - c * u * (shift by delta of g); relies on the ordering being
// multiplicative and Sigma-compatible, so no re-sorting is needed.
DiffPolynomial sub_multiple(const Ring& ring, DiffPolynomial h, const FieldElem& c, const Monomial& u,
                            VarKey delta, const DiffPolynomial& g);
// Scales so that lc = 1 (zero stays zero).
DiffPolynomial make_monic(const DiffPolynomial& f);
// Equal up to a nonzero scalar.
bool associated(const DiffPolynomial& a, const DiffPolynomial& b);

// Action of Sigma.
DiffPolynomial shift(const Ring& ring, const ShiftExponent& s, const DiffPolynomial& f);
WeightValue weight(const Ring& ring, const Monomial& m);
OrderValue ord(const Ring& ring, const Monomial& m);
// Maximum ord over the monomials; throws std::domain_error on zero.
OrderValue topord(const Ring& ring, const DiffPolynomial& f);
// Maximum weight over the monomials; throws std::domain_error on zero.
WeightValue topweight(const Ring& ring, const DiffPolynomial& f);
std::strong_ordering compare_monomials(const Ring& ring, const Monomial& m, const Monomial& n);

// Re-sorts a polynomial of `from` under the ordering of `to`. Both rings
// must have the same unknowns and rank.
DiffPolynomial convert(const Ring& from, const Ring& to, const DiffPolynomial& f);

std::string to_string(const Ring& ring, const DiffPolynomial& f);

// Truncation window on Sigma: either unbounded, bounded by order (shifted
// copies sigma.g with deg(sigma) + topord(g) <= d) or by weight
// (sigma * topweight(g) <= delta).
struct Truncation {
  enum class Kind { none, order, weight };
  Kind kind = Kind::none;
  int order_bound = 0;
  ShiftExponent weight_bound;

  static Truncation unbounded() { return {}; }
  static Truncation by_order(int d);
  static Truncation by_weight(ShiftExponent delta);

  bool is_bounded() const { return kind != Kind::none; }
  std::string to_string() const;
};

// The admissible shifts for one generator under a truncation.
struct ShiftWindow {
  Truncation truncation;
  OrderValue top_order;
  WeightValue top_weight;
  const SigmaOrder* sigma = nullptr;

  static ShiftWindow for_generator(const Ring& ring, const Truncation& t, const DiffPolynomial& g);
  bool admits(const ShiftExponent& s) const;
};

// Every shift s with shift(s, g_lm) dividing target and admitted by the
// window, in order of first discovery. g_lm must not be 1.
std::vector<ShiftExponent> find_sigma_divisors(const Ring& ring, const Monomial& g_lm, const Monomial& target,
                                               const ShiftWindow* window = nullptr);

}  // namespace sigmagb

#endif
