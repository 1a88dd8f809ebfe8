#include <algorithm>
#include <stdexcept>

#include "sigmagb/coefficients.hpp"

#include <optional>

namespace sigmagb {

namespace {

using Exponents = ParamPoly::Exponents;
using Term = ParamPoly::Term;

constexpr Exponents kHighBits = 0x8080808080808080ULL;

Exponents add_exponents(Exponents a, Exponents b) {
  const Exponents s = a + b;
  if (s & kHighBits) throw std::overflow_error("parameter exponent exceeds 127");
  return s;
}

// Fields of a and b never exceed 127, so no borrow crosses a byte.
bool exponents_divide(Exponents b, Exponents a) { return (((a | kHighBits) - b) & kHighBits) == kHighBits; }

Exponents min_exponents(Exponents a, Exponents b) {
  Exponents out = 0;
  for (int i = 0; i < ParamPoly::kMaxParams; ++i) {
    const int e = std::min(ParamPoly::exponent(a, i), ParamPoly::exponent(b, i));
    out = ParamPoly::with_exponent(out, i, e);
  }
  return out;
}

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exps > y.exps; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    mpz_class c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exps == terms[i].exps) c += terms[j++].coeff;
    if (sgn(c) != 0) {
      terms[out].exps = terms[i].exps;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

ParamPoly sign_normalized(ParamPoly p) {
  if (!p.is_zero() && sgn(p.leading().coeff) < 0) return -p;
  return p;
}

// Coefficient of v^k, with v's exponent cleared.
ParamPoly coeff_in(const ParamPoly& p, int v, int k) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (ParamPoly::exponent(t.exps, v) == k) out.push_back({ParamPoly::with_exponent(t.exps, v, 0), t.coeff});
  }
  return ParamPoly::from_terms(std::move(out));
}

std::vector<ParamPoly> coeffs_in(const ParamPoly& p, int v) {
  std::vector<ParamPoly> out(static_cast<std::size_t>(p.degree_in(v) + 1));
  std::vector<std::vector<Term>> parts(out.size());
  for (const auto& t : p.terms()) {
    const int k = ParamPoly::exponent(t.exps, v);
    parts[static_cast<std::size_t>(k)].push_back({ParamPoly::with_exponent(t.exps, v, 0), t.coeff});
  }
  for (std::size_t k = 0; k < parts.size(); ++k) out[k] = ParamPoly::from_terms(std::move(parts[k]));
  return out;
}

Exponents min_exponents_of(const ParamPoly& p) {
  Exponents m = p.terms().front().exps;
  for (const auto& t : p.terms()) m = min_exponents(m, t.exps);
  return m;
}

ParamPoly divide_by_monomial(const ParamPoly& p, Exponents m) {
  if (m == 0) return p;
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back({t.exps - m, t.coeff});
  return ParamPoly::from_terms(std::move(out));
}

bool divide_exact(const ParamPoly& a, const ParamPoly& b, ParamPoly* quotient);

mpz_class max_norm(const ParamPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms())
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  return m;
}

// p with parameter v replaced by the integer x.
ParamPoly evaluate(const ParamPoly& p, int v, const mpz_class& x) {
  std::vector<mpz_class> powers{1};
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    const int e = ParamPoly::exponent(t.exps, v);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * x);
    out.push_back({ParamPoly::with_exponent(t.exps, v, 0), t.coeff * powers[static_cast<std::size_t>(e)]});
  }
  return ParamPoly::from_terms(std::move(out));
}

// Inverse of evaluate for polynomials whose coefficients in v are small
// compared with x: balanced base-x digits become the powers of v.
// Zero when a digit lands above max_degree, which rules the candidate out.
ParamPoly interpolate(const ParamPoly& p, int v, const mpz_class& x, int max_degree) {
  const mpz_class half = x / 2;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff, d;
    for (int k = 0; c != 0; ++k) {
      if (k > max_degree) return ParamPoly();
      mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      if (d > half) d -= x;
      if (d != 0) out.push_back({ParamPoly::with_exponent(t.exps, v, k), d});
      c = (c - d) / x;
    }
  }
  return ParamPoly::from_terms(std::move(out));
}

// Heuristic gcd: evaluate the highest parameter at a large integer, recurse,
// interpolate and confirm by trial division. Empty when every attempt fails.
std::optional<ParamPoly> heuristic_gcd(const ParamPoly& f, const ParamPoly& g) {
  const mpz_class cf = integer_content(f), cg = integer_content(g);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const unsigned supp = f.support() | g.support();
  if (supp == 0) return ParamPoly(c);
  const ParamPoly pf = f.divided(cf), pg = g.divided(cg);
  int v = ParamPoly::kMaxParams - 1;
  while (!(supp & (1u << v))) --v;
  const mpz_class nf = max_norm(pf), ng = max_norm(pg);
  mpz_class x = 2 * (nf < ng ? nf : ng) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const ParamPoly ef = evaluate(pf, v, x), eg = evaluate(pg, v, x);
    if (!ef.is_zero() && !eg.is_zero()) {
      if (auto h = heuristic_gcd(ef, eg)) {
        ParamPoly cand = interpolate(*h, v, x, std::min(pf.degree_in(v), pg.degree_in(v)));
        if (!cand.is_zero()) {
          cand = sign_normalized(cand.divided(integer_content(cand)));
          if (divide_exact(pf, cand, nullptr) && divide_exact(pg, cand, nullptr)) return cand.scaled(c);
        }
      }
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    x = 73794 * x * r / 27011;
  }
  return std::nullopt;
}

ParamPoly gcd_primitive(const ParamPoly& a, const ParamPoly& b);

ParamPoly gcd_fold(ParamPoly g, const std::vector<ParamPoly>& polys) {
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly content_in(const ParamPoly& p, int v) { return gcd_fold(ParamPoly(), coeffs_in(p, v)); }

// Pseudo-remainder of a by b as polynomials in v, up to a factor in Z[others].
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, int v) {
  const int db = b.degree_in(v);
  const ParamPoly lcb = coeff_in(b, v, db);
  while (!a.is_zero()) {
    const int da = a.degree_in(v);
    if (da < db) break;
    const ParamPoly lca = coeff_in(a, v, da);
    const ParamPoly shift = ParamPoly::monomial(ParamPoly::with_exponent(0, v, da - db), 1);
    a = lcb * a - lca * shift * b;
  }
  return a;
}

ParamPoly gcd_primitive(const ParamPoly& a, const ParamPoly& b) {
  const unsigned supp = a.support() | b.support();
  if (supp == 0) return ParamPoly(1);
  int v = 0;
  while (!(supp & (1u << v))) ++v;
  const bool in_a = a.degree_in(v) > 0;
  const bool in_b = b.degree_in(v) > 0;
  if (!in_b) return gcd_fold(b, coeffs_in(a, v));
  if (!in_a) return gcd_fold(a, coeffs_in(b, v));

  const ParamPoly cont_a = content_in(a, v);
  const ParamPoly cont_b = content_in(b, v);
  const ParamPoly cont = gcd(cont_a, cont_b);
  ParamPoly pa = exact_div(a, cont_a);
  ParamPoly pb = exact_div(b, cont_b);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  ParamPoly g;
  for (;;) {
    if (pb.degree_in(v) == 0) {
      g = ParamPoly(1);
      break;
    }
    ParamPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = exact_div(r, content_in(r, v));
  }
  if (g.degree_in(v) > 0) g = exact_div(g, content_in(g, v));
  return sign_normalized(cont * g);
}

}  // namespace

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

ParamPoly::ParamPoly(const mpz_class& c) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

ParamPoly ParamPoly::param(int index) {
  if (index < 0 || index >= kMaxParams) throw std::out_of_range("parameter index out of range");
  return monomial(with_exponent(0, index, 1), 1);
}

ParamPoly ParamPoly::monomial(Exponents exps, mpz_class coeff) {
  ParamPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({exps, std::move(coeff)});
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  sort_and_combine(terms);
  ParamPoly p;
  p.terms_ = std::move(terms);
  return p;
}

ParamPoly::Exponents ParamPoly::with_exponent(Exponents e, int param, int value) {
  if (value < 0 || value > kMaxExponent) throw std::overflow_error("parameter exponent exceeds 127");
  const int sh = 8 * (kMaxParams - 1 - param);
  return (e & ~(Exponents{0xff} << sh)) | (Exponents(value) << sh);
}

bool ParamPoly::is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

bool ParamPoly::is_minus_one() const { return is_constant() && !is_zero() && terms_[0].coeff == -1; }

mpz_class ParamPoly::constant_value() const { return is_zero() ? mpz_class(0) : terms_[0].coeff; }

int ParamPoly::degree_in(int param) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent(t.exps, param));
  return d;
}

unsigned ParamPoly::support() const {
  Exponents all = 0;
  for (const auto& t : terms_) all |= t.exps;
  unsigned mask = 0;
  for (int i = 0; i < kMaxParams; ++i)
    if (exponent(all, i) != 0) mask |= 1u << i;
  return mask;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->exps > j->exps)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exps > i->exps) {
      out.push_back(*j++);
    } else {
      mpz_class c = i->coeff + j->coeff;
      if (sgn(c) != 0) out.push_back({i->exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) { return *this += -other; }

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.times_monomial(b.leading().exps).scaled(b.leading().coeff);
  if (a.is_monomial()) return b.times_monomial(a.leading().exps).scaled(a.leading().coeff);
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back({add_exponents(s.exps, t.exps), s.coeff * t.coeff});
  return ParamPoly::from_terms(std::move(out));
}

ParamPoly ParamPoly::scaled(const mpz_class& c) const {
  if (sgn(c) == 0) return {};
  if (c == 1) return *this;
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

ParamPoly ParamPoly::divided(const mpz_class& c) const {
  if (c == 1) return *this;
  ParamPoly p = *this;
  for (auto& t : p.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw std::domain_error("inexact integer division of polynomial");
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

ParamPoly ParamPoly::times_monomial(Exponents exps) const {
  if (exps == 0) return *this;
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.exps = add_exponents(t.exps, exps);
  return p;
}

std::string ParamPoly::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (sgn(c) < 0) {
      s += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      s += " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kMaxParams; ++i) {
      const int e = exponent(t.exps, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                         : "p" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

mpz_class integer_content(const ParamPoly& a) {
  mpz_class g = 0;
  for (const auto& t : a.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

bool divide_exact(const ParamPoly& a, const ParamPoly& b, ParamPoly* quotient) {
  std::vector<Term> q;
  ParamPoly rem = a;
  const auto& lt = b.leading();
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!exponents_divide(lt.exps, r.exps) || !mpz_divisible_p(r.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) {
      return false;
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
    const Exponents e = r.exps - lt.exps;
    if (b.is_monomial()) {
      rem = ParamPoly::from_terms({rem.terms().begin() + 1, rem.terms().end()});
    } else {
      rem -= b.times_monomial(e).scaled(c);
    }
    q.push_back({e, std::move(c)});
  }
  if (quotient) *quotient = ParamPoly::from_terms(std::move(q));
  return true;
}

}  // namespace

ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  ParamPoly q;
  if (!divide_exact(a, b, &q)) throw std::domain_error("inexact polynomial division");
  return q;
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g = integer_content(a);
    const mpz_class h = integer_content(b);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    return ParamPoly(g);
  }
  if (a == b) return sign_normalized(a);
  const Exponents ma = min_exponents_of(a);
  const Exponents mb = min_exponents_of(b);
  const Exponents mg = min_exponents(ma, mb);
  mpz_class c = integer_content(a);
  {
    const mpz_class cb = integer_content(b);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  }
  if (a.is_monomial() || b.is_monomial()) return ParamPoly::monomial(mg, c);
  ParamPoly pa = divide_by_monomial(a, ma);
  ParamPoly pb = divide_by_monomial(b, mb);
  pa = pa.divided(integer_content(pa));
  pb = pb.divided(integer_content(pb));
  auto h = heuristic_gcd(pa, pb);
  ParamPoly g = h ? std::move(*h) : gcd_primitive(pa, pb);
  return sign_normalized(g.times_monomial(mg).scaled(c));
}

}  // namespace sigmagb
