#include "sigmagb/diff_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigmagb {

const char* to_string(Ranking r) { return r == Ranking::weight ? "weight" : "index"; }
const char* to_string(InnerOrder o) { return o == InnerOrder::lex ? "lex" : "degrevlex"; }

// ---- Monomial -------------------------------------------------------------

std::uint32_t Monomial::exponent(VarKey v) const {
  for (const auto& f : f_)
    if (f.var == v) return f.exp;
  return 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : f_) {
    h ^= f.var + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= f.exp + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Monomial Monomial::shifted(VarKey delta) const {
  Monomial m = *this;
  for (auto& f : m.f_) f.var += delta;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial::Storage out;
  out.reserve(a.size() + b.size());
  auto i = a.factors().begin(), ie = a.factors().end();
  auto j = b.factors().begin(), je = b.factors().end();
  while (i != ie && j != je) {
    if (i->var > j->var) {
      out.push_back(*i++);
    } else if (i->var < j->var) {
      out.push_back(*j++);
    } else {
      out.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, ie);
  out.insert(out.end(), j, je);
  return Monomial(std::move(out));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial::Storage out;
  auto i = a.factors().begin(), ie = a.factors().end();
  auto j = b.factors().begin(), je = b.factors().end();
  while (i != ie && j != je) {
    if (i->var > j->var) {
      out.push_back(*i++);
    } else if (i->var < j->var) {
      out.push_back(*j++);
    } else {
      out.push_back({i->var, std::max(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, ie);
  out.insert(out.end(), j, je);
  return Monomial(std::move(out));
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial::Storage out;
  auto i = a.factors().begin(), ie = a.factors().end();
  auto j = b.factors().begin(), je = b.factors().end();
  while (i != ie && j != je) {
    if (i->var > j->var) {
      ++i;
    } else if (i->var < j->var) {
      ++j;
    } else {
      out.push_back({i->var, std::min(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

bool mono_divides_shifted(const Monomial& a, VarKey delta, const Monomial& b) {
  if (a.size() > b.size()) return false;
  auto j = b.factors().begin(), je = b.factors().end();
  for (const auto& f : a.factors()) {
    const VarKey v = f.var + delta;
    while (j != je && j->var > v) ++j;
    if (j == je || j->var != v || j->exp < f.exp) return false;
    ++j;
  }
  return true;
}

bool mono_divides(const Monomial& a, const Monomial& b) { return mono_divides_shifted(a, 0, b); }

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  Monomial::Storage out;
  auto i = a.factors().begin(), ie = a.factors().end();
  for (const auto& f : b.factors()) {
    if (i != ie && i->var == f.var) {
      if (i->exp > f.exp) throw std::domain_error("monomial quotient is not exact");
      if (i->exp < f.exp) out.push_back({f.var, f.exp - i->exp});
      ++i;
    } else {
      out.push_back(f);
    }
  }
  if (i != ie) throw std::domain_error("monomial quotient is not exact");
  return Monomial(std::move(out));
}

// ---- Ring -----------------------------------------------------------------

Ring::Ring(int rank, std::vector<std::string> unknowns, std::vector<std::string> params,
           SigmaOrdering ordering)
    : rank_(rank), unknowns_(std::move(unknowns)), params_(std::move(params)), ordering_(ordering) {
  if (rank < 0 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in [0, " + std::to_string(kMaxRank) + "]");
  }
  if (unknowns_.empty()) throw std::invalid_argument("ring needs at least one unknown");
  if (unknowns_.size() > 250) throw std::invalid_argument("too many unknowns");
  if (static_cast<int>(params_.size()) > ParamPoly::kMaxParams) {
    throw std::invalid_argument("at most " + std::to_string(ParamPoly::kMaxParams) + " parameters");
  }
  hom_name_ = "t";
  auto taken = [&](const std::string& n) {
    return std::find(unknowns_.begin(), unknowns_.end(), n) != unknowns_.end() ||
           std::find(params_.begin(), params_.end(), n) != params_.end();
  };
  while (taken(hom_name_)) hom_name_ = "_" + hom_name_;
  init_layout();
}

void Ring::init_layout() {
  const bool drl = ordering_.sigma.kind == SigmaOrderKind::degrevlex;
  const int sigma_bits = 8 * (rank_ + (drl ? 1 : 0));
  sigma_mask_ = sigma_bits == 0 ? 0 : (sigma_bits >= 64 ? ~0ULL : ((1ULL << sigma_bits) - 1));
  if (ordering_.ranking == Ranking::weight) {
    sigma_shift_ = 8;
    index_shift_ = 0;
  } else {
    sigma_shift_ = 0;
    index_shift_ = sigma_bits;
  }
}

int Ring::coord_offset(int i) const {
  if (ordering_.sigma.kind == SigmaOrderKind::degrevlex) return sigma_shift_ + 8 * i;
  return sigma_shift_ + 8 * (rank_ - 1 - i);
}

int Ring::degree_offset() const { return sigma_shift_ + 8 * rank_; }

Ring Ring::extended() const {
  if (extended_) return *this;
  Ring r = *this;
  r.extended_ = true;
  return r;
}

Ring Ring::base() const {
  Ring r = *this;
  r.extended_ = false;
  return r;
}

Ring Ring::with_ordering(const SigmaOrdering& ordering) const {
  Ring r = *this;
  r.ordering_ = ordering;
  r.init_layout();
  return r;
}

bool Ring::compatible(const Ring& other) const {
  return rank_ == other.rank_ && unknowns_ == other.unknowns_ && ordering_ == other.ordering_;
}

VarKey Ring::var(int index, const ShiftExponent& shift) const {
  if (index < 0 || index >= num_indices()) throw std::out_of_range("unknown index out of range");
  if (shift.rank() != rank_) throw std::invalid_argument("shift rank does not match ring rank");
  const bool drl = ordering_.sigma.kind == SigmaOrderKind::degrevlex;
  VarKey k = static_cast<VarKey>(255 - index) << index_shift_;
  for (int i = 0; i < rank_; ++i) {
    const int c = shift[i];
    if (c > 255) throw std::out_of_range("shift coordinate above 255: " + shift.to_string());
    k |= static_cast<VarKey>(drl ? 255 - c : c) << coord_offset(i);
  }
  if (drl) {
    const int d = shift.degree();
    if (d > 255) throw std::out_of_range("shift degree above 255: " + shift.to_string());
    k |= static_cast<VarKey>(d) << degree_offset();
  }
  return k;
}

int Ring::index_of(VarKey v) const { return 255 - static_cast<int>((v >> index_shift_) & 0xff); }

ShiftExponent Ring::shift_of(VarKey v) const {
  const bool drl = ordering_.sigma.kind == SigmaOrderKind::degrevlex;
  ShiftExponent s(rank_);
  for (int i = 0; i < rank_; ++i) {
    const int raw = static_cast<int>((v >> coord_offset(i)) & 0xff);
    s.set(i, drl ? 255 - raw : raw);
  }
  return s;
}

DiffVariable Ring::decode(VarKey v) const { return {index_of(v), shift_of(v)}; }

int Ring::degree_of(VarKey v) const {
  if (ordering_.sigma.kind == SigmaOrderKind::degrevlex) {
    return static_cast<int>((v >> degree_offset()) & 0xff);
  }
  int d = 0;
  for (int i = 0; i < rank_; ++i) d += static_cast<int>((v >> coord_offset(i)) & 0xff);
  return d;
}

std::uint64_t Ring::sigma_key(VarKey v) const { return (v >> sigma_shift_) & sigma_mask_; }

VarKey Ring::shift_delta(const ShiftExponent& s) const {
  if (s.rank() != rank_) throw std::invalid_argument("shift rank does not match ring rank");
  const bool drl = ordering_.sigma.kind == SigmaOrderKind::degrevlex;
  VarKey d = 0;
  for (int i = 0; i < rank_; ++i) {
    const VarKey part = static_cast<VarKey>(s[i]) << coord_offset(i);
    d = drl ? d - part : d + part;
  }
  if (drl) d += static_cast<VarKey>(s.degree()) << degree_offset();
  return d;
}

bool Ring::shift_dominates(VarKey from, VarKey to) const {
  const bool drl = ordering_.sigma.kind == SigmaOrderKind::degrevlex;
  for (int i = 0; i < rank_; ++i) {
    const int off = coord_offset(i);
    const int a = static_cast<int>((from >> off) & 0xff);
    const int b = static_cast<int>((to >> off) & 0xff);
    if (drl ? b > a : b < a) return false;
  }
  return true;
}

bool Ring::shift_between(VarKey from, VarKey to, ShiftExponent* out) const {
  if (!shift_dominates(from, to)) return false;
  if (out) {
    const ShiftExponent a = shift_of(from), b = shift_of(to);
    ShiftExponent s(rank_);
    for (int i = 0; i < rank_; ++i) s.set(i, b[i] - a[i]);
    *out = s;
  }
  return true;
}

Monomial Ring::monomial(const std::vector<std::pair<DiffVariable, int>>& powers) const {
  Monomial::Storage f;
  for (const auto& [v, e] : powers) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > 0) f.push_back({var(v), static_cast<std::uint32_t>(e)});
  }
  std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return a.var > b.var; });
  Monomial::Storage merged;
  for (const auto& x : f) {
    if (!merged.empty() && merged.back().var == x.var) {
      merged.back().exp += x.exp;
    } else {
      merged.push_back(x);
    }
  }
  return Monomial(std::move(merged));
}

Monomial Ring::variable(int index, const ShiftExponent& shift, int exp) const {
  return monomial({{DiffVariable{index, shift}, exp}});
}

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].var != fb[i].var) return fa[i].var <=> fb[i].var;
    if (fa[i].exp != fb[i].exp) return fa[i].exp <=> fb[i].exp;
  }
  return fa.size() <=> fb.size();
}

}  // namespace

std::strong_ordering Ring::compare(const Monomial& a, const Monomial& b) const {
  if (ordering_.ranking == Ranking::index || ordering_.inner == InnerOrder::lex) return lex_compare(a, b);
  // Block ordering over shifts, degrevlex inside each block.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    const std::uint64_t sa = sigma_key(fa[i].var), sb = sigma_key(fb[j].var);
    if (sa != sb) return sa <=> sb;
    std::size_t i2 = i, j2 = j;
    std::uint64_t da = 0, db = 0;
    while (i2 < fa.size() && sigma_key(fa[i2].var) == sa) da += fa[i2++].exp;
    while (j2 < fb.size() && sigma_key(fb[j2].var) == sb) db += fb[j2++].exp;
    if (da != db) return da <=> db;
    std::size_t p = i2, q = j2;
    while (p > i && q > j) {
      const Factor& x = fa[p - 1];
      const Factor& y = fb[q - 1];
      if (x.var == y.var) {
        if (x.exp != y.exp) return y.exp <=> x.exp;
        --p;
        --q;
      } else {
        // The side holding the smaller variable is smaller.
        return x.var <=> y.var;
      }
    }
    i = i2;
    j = j2;
  }
  return (fa.size() - i) <=> (fb.size() - j);
}

WeightValue Ring::weight(const Monomial& m) const {
  if (m.is_one()) return WeightValue::zero();
  if (ordering_.ranking == Ranking::weight) return shift_of(m.factors().front().var);
  VarKey best = m.factors().front().var;
  for (const auto& f : m.factors())
    if (sigma_key(f.var) > sigma_key(best)) best = f.var;
  return shift_of(best);
}

OrderValue Ring::ord(const Monomial& m) const {
  if (m.is_one()) return OrderValue::neg_infinity();
  int d = 0;
  for (const auto& f : m.factors()) d = std::max(d, degree_of(f.var));
  return d;
}

Monomial Ring::shift(const ShiftExponent& s, const Monomial& m) const {
  if (s.is_identity() || m.is_one()) return m;
  for (const auto& f : m.factors()) {
    const ShiftExponent t = shift_of(f.var);
    for (int i = 0; i < rank_; ++i)
      if (t[i] + s[i] > 255) throw std::out_of_range("shifted coordinate above 255");
    if (t.degree() + s.degree() > 255) throw std::out_of_range("shifted degree above 255");
  }
  return m.shifted(shift_delta(s));
}

std::string Ring::var_name(VarKey v) const {
  const int idx = index_of(v);
  std::string s = idx < num_unknowns() ? unknowns_[static_cast<std::size_t>(idx)] : hom_name_;
  const ShiftExponent sh = shift_of(v);
  s += "[";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ",";
    s += std::to_string(sh[i]);
  }
  return s + "]";
}

std::string Ring::to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += "*";
    s += var_name(f.var);
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

// ---- DiffPolynomial -------------------------------------------------------

DiffPolynomial DiffPolynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  DiffPolynomial p;
  p.terms_ = std::move(out);
  return p;
}

DiffPolynomial DiffPolynomial::from_sorted(std::vector<Term> terms) {
  DiffPolynomial p;
  p.terms_ = std::move(terms);
  return p;
}

DiffPolynomial DiffPolynomial::constant(FieldElem c) {
  DiffPolynomial p;
  if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial()});
  return p;
}

DiffPolynomial DiffPolynomial::monomial(FieldElem c, Monomial m) {
  DiffPolynomial p;
  if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

const Term& DiffPolynomial::lt() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}
const Monomial& DiffPolynomial::lm() const { return lt().mono; }
const FieldElem& DiffPolynomial::lc() const { return lt().coeff; }

namespace {

// a + s * b with s = +1 or -1.
DiffPolynomial merge_add(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b, bool negate) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), ie = a.terms().end();
  auto j = b.terms().begin(), je = b.terms().end();
  while (i != ie && j != je) {
    const auto c = ring.compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({negate ? -j->coeff : j->coeff, j->mono});
      ++j;
    } else {
      FieldElem s = negate ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back({std::move(s), i->mono});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, ie);
  for (; j != je; ++j) out.push_back({negate ? -j->coeff : j->coeff, j->mono});
  return DiffPolynomial::from_sorted(std::move(out));
}

}  // namespace

DiffPolynomial add(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b) {
  return merge_add(ring, a, b, false);
}

DiffPolynomial sub(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b) {
  return merge_add(ring, a, b, true);
}

DiffPolynomial neg(const DiffPolynomial& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({-t.coeff, t.mono});
  return DiffPolynomial::from_sorted(std::move(out));
}

DiffPolynomial scale(const FieldElem& c, const DiffPolynomial& a) {
  if (c.is_zero()) return {};
  if (c.is_one()) return a;
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({c * t.coeff, t.mono});
  return DiffPolynomial::from_sorted(std::move(out));
}

DiffPolynomial mul_term(const FieldElem& c, const Monomial& m, const DiffPolynomial& a) {
  if (c.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({c.is_one() ? t.coeff : c * t.coeff, m * t.mono});
  return DiffPolynomial::from_sorted(std::move(out));
}

DiffPolynomial mul(const Ring& ring, const DiffPolynomial& a, const DiffPolynomial& b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return DiffPolynomial::from_terms(ring, std::move(out));
}

DiffPolynomial sub_multiple(const Ring& ring, DiffPolynomial h, const FieldElem& c, const Monomial& u,
                            VarKey delta, const DiffPolynomial& g) {
  std::vector<Term> out;
  out.reserve(h.size() + g.size());
  auto& ht = h.mutable_terms();
  auto i = ht.begin(), ie = ht.end();
  auto j = g.terms().begin(), je = g.terms().end();
  Monomial gm;
  bool have = false;
  while (i != ie && j != je) {
    if (!have) {
      gm = u * j->mono.shifted(delta);
      have = true;
    }
    const auto cmp = ring.compare(i->mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.push_back({-(c * j->coeff), std::move(gm)});
      ++j;
      have = false;
    } else {
      FieldElem s = i->coeff - c * j->coeff;
      if (!s.is_zero()) out.push_back({std::move(s), std::move(i->mono)});
      ++i;
      ++j;
      have = false;
    }
  }
  out.insert(out.end(), std::make_move_iterator(i), std::make_move_iterator(ie));
  for (; j != je; ++j) {
    if (have) {
      out.push_back({-(c * j->coeff), std::move(gm)});
      have = false;
    } else {
      out.push_back({-(c * j->coeff), u * j->mono.shifted(delta)});
    }
  }
  return DiffPolynomial::from_sorted(std::move(out));
}

DiffPolynomial make_monic(const DiffPolynomial& f) {
  if (f.is_zero() || f.lc().is_one()) return f;
  return scale(f.lc().inverse(), f);
}

bool associated(const DiffPolynomial& a, const DiffPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return make_monic(a) == make_monic(b);
}

DiffPolynomial shift(const Ring& ring, const ShiftExponent& s, const DiffPolynomial& f) {
  if (s.is_identity()) return f;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff, ring.shift(s, t.mono)});
  return DiffPolynomial::from_sorted(std::move(out));
}

WeightValue weight(const Ring& ring, const Monomial& m) { return ring.weight(m); }
OrderValue ord(const Ring& ring, const Monomial& m) { return ring.ord(m); }

OrderValue topord(const Ring& ring, const DiffPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("topord of the zero polynomial");
  OrderValue best = OrderValue::neg_infinity();
  for (const auto& t : f.terms()) best = max(best, ring.ord(t.mono));
  return best;
}

WeightValue topweight(const Ring& ring, const DiffPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("topweight of the zero polynomial");
  WeightValue best = WeightValue::zero();
  for (const auto& t : f.terms()) best = weight_max(ring.sigma_order(), best, ring.weight(t.mono));
  return best;
}

std::strong_ordering compare_monomials(const Ring& ring, const Monomial& m, const Monomial& n) {
  return ring.compare(m, n);
}

DiffPolynomial convert(const Ring& from, const Ring& to, const DiffPolynomial& f) {
  if (from.rank() != to.rank() || from.unknowns() != to.unknowns()) {
    throw std::invalid_argument("rings have different variables");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial::Storage fs;
    for (const auto& x : t.mono.factors()) {
      const DiffVariable v = from.decode(x.var);
      if (v.index >= to.num_indices()) throw std::invalid_argument("target ring lacks the homogenizer");
      fs.push_back({to.var(v), x.exp});
    }
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.var > b.var; });
    out.push_back({t.coeff, Monomial(std::move(fs))});
  }
  return DiffPolynomial::from_terms(to, std::move(out));
}

std::string to_string(const Ring& ring, const DiffPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  const auto& names = ring.params();
  for (const auto& t : f.terms()) {
    FieldElem c = t.coeff;
    bool negative = false;
    if (c.num().is_monomial() && sgn(c.num().leading().coeff) < 0) {
      negative = true;
      c = -c;
    }
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      s += c.to_string(names, true);
    } else if (c.is_one()) {
      s += ring.to_string(t.mono);
    } else {
      s += c.to_string(names, true) + "*" + ring.to_string(t.mono);
    }
  }
  return s;
}

// ---- Truncation -----------------------------------------------------------

Truncation Truncation::by_order(int d) {
  if (d < 0) throw std::invalid_argument("order bound must be non-negative");
  Truncation t;
  t.kind = Kind::order;
  t.order_bound = d;
  return t;
}

Truncation Truncation::by_weight(ShiftExponent delta) {
  Truncation t;
  t.kind = Kind::weight;
  t.weight_bound = delta;
  return t;
}

std::string Truncation::to_string() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::order:
      return "ord=" + std::to_string(order_bound);
    case Kind::weight:
      return "weight=" + weight_bound.to_string();
  }
  return "none";
}

ShiftWindow ShiftWindow::for_generator(const Ring& ring, const Truncation& t, const DiffPolynomial& g) {
  ShiftWindow w;
  w.truncation = t;
  w.sigma = &ring.sigma_order();
  if (!g.is_zero()) {
    w.top_order = topord(ring, g);
    w.top_weight = topweight(ring, g);
  }
  return w;
}

bool ShiftWindow::admits(const ShiftExponent& s) const {
  switch (truncation.kind) {
    case Truncation::Kind::none:
      return true;
    case Truncation::Kind::order:
      return top_order.is_neg_infinity() || s.degree() + top_order.value() <= truncation.order_bound;
    case Truncation::Kind::weight: {
      if (top_weight.is_zero()) return true;
      const SigmaOrder order = sigma ? *sigma : SigmaOrder{};
      return order.compare(mul(s, top_weight.shift()), truncation.weight_bound) <= 0;
    }
  }
  return true;
}

std::vector<ShiftExponent> find_sigma_divisors(const Ring& ring, const Monomial& g_lm, const Monomial& target,
                                               const ShiftWindow* window) {
  if (g_lm.is_one()) throw std::invalid_argument("find_sigma_divisors needs a non-constant monomial");
  std::vector<ShiftExponent> out;
  const Factor& anchor = g_lm.factors().front();
  const int idx = ring.index_of(anchor.var);
  for (const auto& f : target.factors()) {
    if (f.exp < anchor.exp || ring.index_of(f.var) != idx) continue;
    ShiftExponent s;
    if (!ring.shift_between(anchor.var, f.var, &s)) continue;
    if (!mono_divides_shifted(g_lm, f.var - anchor.var, target)) continue;
    if (window && !window->admits(s)) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace sigmagb
