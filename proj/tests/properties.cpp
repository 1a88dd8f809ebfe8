#include "properties.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <random>
#include <sstream>

#include "sigmagb/gb_engine.hpp"
#include "sigmagb/homogenization.hpp"

namespace sigmagb::testing {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct NamedRing {
  std::string name;
  Ring ring;
};

std::vector<NamedRing> test_rings() {
  const SigmaOrder drl{SigmaOrderKind::degrevlex};
  const SigmaOrder lex{SigmaOrderKind::lex};
  return {
      {"weight/degrevlex/lex r=2", Ring(2, {"x", "y"}, {}, {Ranking::weight, drl, InnerOrder::lex})},
      {"weight/degrevlex/degrevlex r=2", Ring(2, {"x", "y", "z"}, {}, {Ranking::weight, drl, InnerOrder::degrevlex})},
      {"weight/lex/lex r=2", Ring(2, {"x", "y"}, {}, {Ranking::weight, lex, InnerOrder::lex})},
      {"index/degrevlex r=2", Ring(2, {"x", "y"}, {}, {Ranking::index, drl, InnerOrder::lex})},
      {"index/degrevlex r=3", Ring(3, {"p", "u", "v"}, {}, {Ranking::index, drl, InnerOrder::lex})},
      {"index/lex r=2", Ring(2, {"x", "y"}, {}, {Ranking::index, lex, InnerOrder::lex})},
      {"weight/degrevlex/lex r=1", Ring(1, {"x"}, {}, {Ranking::weight, drl, InnerOrder::lex})},
      {"weight/degrevlex/lex r=2 extended", Ring(2, {"x", "y"}, {}, {Ranking::weight, drl, InnerOrder::lex}).extended()},
  };
}

ShiftExponent random_shift(Rng& rng, int rank, int max_coord) {
  ShiftExponent s(rank);
  for (int i = 0; i < rank; ++i) s.set(i, uniform(rng, 0, max_coord));
  return s;
}

ShiftExponent random_shift_of_degree(Rng& rng, int rank, int d) {
  ShiftExponent s(rank);
  int left = d;
  for (int i = 0; i + 1 < rank; ++i) {
    const int c = uniform(rng, 0, left);
    s.set(i, c);
    left -= c;
  }
  s.set(rank - 1, left);
  return s;
}

Monomial random_monomial(Rng& rng, const Ring& ring, int max_factors = 4, int max_coord = 4, int max_exp = 3,
                         bool allow_t = true) {
  const int indices = allow_t ? ring.num_indices() : ring.num_unknowns();
  std::vector<std::pair<DiffVariable, int>> powers;
  const int n = uniform(rng, 0, max_factors);
  for (int k = 0; k < n; ++k) {
    powers.push_back({{uniform(rng, 0, indices - 1), random_shift(rng, ring.rank(), max_coord)},
                      uniform(rng, 1, max_exp)});
  }
  return ring.monomial(powers);
}

DiffPolynomial random_poly(Rng& rng, const Ring& ring, int max_terms = 4, bool allow_t = false) {
  for (;;) {
    std::vector<Term> terms;
    const int n = uniform(rng, 1, max_terms);
    for (int k = 0; k < n; ++k) {
      int c = uniform(rng, -5, 5);
      if (c == 0) c = 1;
      terms.push_back({FieldElem(c) / FieldElem(uniform(rng, 1, 3)), random_monomial(rng, ring, 3, 3, 2, allow_t)});
    }
    DiffPolynomial f = DiffPolynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

// Reference comparison written directly from the block definitions, using
// only decoded variables and the order on Sigma.
std::strong_ordering reference_compare(const Ring& ring, const Monomial& m, const Monomial& n) {
  using Key = std::pair<int, ShiftExponent>;
  auto decode = [&](const Monomial& a) {
    std::vector<std::pair<Key, int>> out;
    for (const auto& f : a.factors()) {
      const DiffVariable v = ring.decode(f.var);
      out.push_back({{v.index, v.shift}, static_cast<int>(f.exp)});
    }
    return out;
  };
  const auto dm = decode(m), dn = decode(n);
  const SigmaOrder& so = ring.sigma_order();
  auto exp_of = [](const std::vector<std::pair<Key, int>>& d, int idx, const ShiftExponent& s) {
    for (const auto& [k, e] : d)
      if (k.first == idx && k.second == s) return e;
    return 0;
  };
  std::vector<ShiftExponent> shifts;
  for (const auto* d : {&dm, &dn})
    for (const auto& [k, e] : *d)
      if (std::find(shifts.begin(), shifts.end(), k.second) == shifts.end()) shifts.push_back(k.second);
  std::sort(shifts.begin(), shifts.end(), [&](const auto& a, const auto& b) { return so.less(b, a); });
  const int indices = ring.num_indices();

  if (ring.ordering().ranking == Ranking::index) {
    for (int i = 0; i < indices; ++i) {
      for (const auto& s : shifts) {
        const int a = exp_of(dm, i, s), b = exp_of(dn, i, s);
        if (a != b) return a <=> b;
      }
    }
    return std::strong_ordering::equal;
  }
  for (const auto& s : shifts) {
    std::vector<int> a(static_cast<std::size_t>(indices)), b(a.size());
    for (int i = 0; i < indices; ++i) {
      a[static_cast<std::size_t>(i)] = exp_of(dm, i, s);
      b[static_cast<std::size_t>(i)] = exp_of(dn, i, s);
    }
    if (a == b) continue;
    if (ring.ordering().inner == InnerOrder::lex) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    } else {
      int da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
  }
  return std::strong_ordering::equal;
}

std::string str(const Ring& ring, const Monomial& m) { return ring.to_string(m); }

struct Check {
  PropertyReport report;
  explicit Check(std::string name) { report.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (report.failures == 0) report.first_failure = what;
      ++report.failures;
    }
  }
};

std::string weight_str(const WeightValue& w) { return w.is_zero() ? "0" : w.shift().to_string(); }

}  // namespace

std::vector<PropertyReport> ordering_properties(std::size_t cases, std::uint64_t seed) {
  std::vector<PropertyReport> out;
  for (const auto& [name, ring] : test_rings()) {
    Rng rng(seed);
    Check ref("ordering matches block definition [" + name + "]");
    Check total("ordering is a total order [" + name + "]");
    Check mult("ordering is multiplicative, 1 is least [" + name + "]");
    Check comp("ordering is Sigma-compatible, m <= s.m [" + name + "]");
    for (std::size_t c = 0; c < cases; ++c) {
      const Monomial m = random_monomial(rng, ring), n = random_monomial(rng, ring), p = random_monomial(rng, ring);
      const auto mn = ring.compare(m, n);
      ref.expect(mn == reference_compare(ring, m, n), str(ring, m) + " vs " + str(ring, n));
      ++ref.report.cases;

      const auto nm = ring.compare(n, m);
      bool ok = (mn == 0) == (m == n) && (mn < 0) == (nm > 0);
      if (mn < 0 && ring.compare(n, p) < 0) ok = ok && ring.compare(m, p) < 0;
      total.expect(ok, str(ring, m) + ", " + str(ring, n) + ", " + str(ring, p));
      ++total.report.cases;

      ok = ring.compare(Monomial(), m) <= 0;
      if (mn < 0) ok = ok && ring.compare(p * m, p * n) < 0;
      mult.expect(ok, str(ring, m) + " < " + str(ring, n) + " times " + str(ring, p));
      ++mult.report.cases;

      const ShiftExponent s = random_shift(rng, ring.rank(), 3);
      ok = ring.compare(m, ring.shift(s, m)) <= 0;
      if (mn < 0) ok = ok && ring.compare(ring.shift(s, m), ring.shift(s, n)) < 0;
      comp.expect(ok, s.to_string() + " on " + str(ring, m) + ", " + str(ring, n));
      ++comp.report.cases;
    }
    out.push_back(ref.report);
    out.push_back(total.report);
    out.push_back(mult.report);
    out.push_back(comp.report);
  }
  return out;
}

std::vector<PropertyReport> grading_properties(std::size_t cases, std::uint64_t seed) {
  std::vector<PropertyReport> out;
  for (const auto& [name, ring] : test_rings()) {
    Rng rng(seed + 1);
    const SigmaOrder& so = ring.sigma_order();
    Check wt("weight laws [" + name + "]");
    Check od("order laws [" + name + "]");
    for (std::size_t c = 0; c < cases; ++c) {
      const Monomial m = random_monomial(rng, ring), n = random_monomial(rng, ring);
      const ShiftExponent s = random_shift(rng, ring.rank(), 3);

      WeightValue ref_w;
      int ref_o = -1;
      for (const auto& f : m.factors()) {
        const ShiftExponent sh = ring.shift_of(f.var);
        if (ref_w.is_zero() || so.less(ref_w.shift(), sh)) ref_w = sh;
        ref_o = std::max(ref_o, sh.degree());
      }
      const WeightValue wm = ring.weight(m), wn = ring.weight(n);
      bool ok = wm == ref_w;
      ok = ok && ring.weight(m * n) == weight_max(so, wm, wn);
      ok = ok && ring.weight(mono_lcm(m, n)) == ring.weight(m * n);
      ok = ok && ring.weight(ring.shift(s, m)) == weight_mul(WeightValue(s), wm);
      ok = ok && (m.is_one() == wm.is_zero());
      wt.expect(ok, str(ring, m) + ", " + str(ring, n) + " w=" + weight_str(wm));
      ++wt.report.cases;

      const OrderValue om = ring.ord(m), on = ring.ord(n);
      ok = om == (ref_o < 0 ? OrderValue::neg_infinity() : OrderValue(ref_o));
      ok = ok && ring.ord(ring.shift(s, m)) == om + s.degree();
      ok = ok && ring.ord(mono_lcm(m, n)) == max(om, on);
      ok = ok && ring.ord(m * n) == max(om, on);
      ok = ok && deg(wm) <= om;
      od.expect(ok, str(ring, m) + ", " + str(ring, n) + " shift " + s.to_string());
      ++od.report.cases;
    }
    out.push_back(wt.report);
    out.push_back(od.report);
  }
  return out;
}

std::vector<PropertyReport> compatibility_properties(std::size_t cases, std::uint64_t seed) {
  std::vector<PropertyReport> out;
  for (const auto& [name, ring] : test_rings()) {
    if (ring.ordering().ranking != Ranking::weight || ring.sigma_order().kind != SigmaOrderKind::degrevlex) continue;
    Rng rng(seed + 2);
    Check chk("gradings refine the ordering [" + name + "]");
    for (std::size_t c = 0; c < cases; ++c) {
      const Monomial m = random_monomial(rng, ring), n = random_monomial(rng, ring);
      bool ok = true;
      if (compare(ring.sigma_order(), ring.weight(m), ring.weight(n)) < 0) ok = ok && ring.less(m, n);
      if (ring.ord(m) < ring.ord(n)) ok = ok && ring.less(m, n);
      chk.expect(ok, str(ring, m) + " vs " + str(ring, n));
      ++chk.report.cases;
    }
    out.push_back(chk.report);
  }
  return out;
}

std::vector<PropertyReport> spoly_properties(std::size_t cases, std::uint64_t seed) {
  std::vector<PropertyReport> out;
  for (const auto& [name, ring] : test_rings()) {
    if (ring.is_extended()) continue;
    Rng rng(seed + 3);
    Check eq("spoly equivariance [" + name + "]");
    Check cancel("spoly cancels leading terms [" + name + "]");
    for (std::size_t c = 0; c < cases; ++c) {
      const DiffPolynomial f = random_poly(rng, ring), g = random_poly(rng, ring);
      const ShiftExponent s = random_shift(rng, ring.rank(), 3);
      const DiffPolynomial h = spoly(ring, f, g);
      const bool ok = spoly(ring, shift(ring, s, f), shift(ring, s, g)) == shift(ring, s, h);
      eq.expect(ok, to_string(ring, f) + " | " + to_string(ring, g) + " | " + s.to_string());
      ++eq.report.cases;

      const Monomial l = mono_lcm(f.lm(), g.lm());
      const bool cancelled = h.is_zero() || ring.less(h.lm(), l);
      const bool anti = spoly(ring, g, f) == neg(h) && spoly(ring, f, f).is_zero();
      cancel.expect(cancelled && anti, to_string(ring, f) + " | " + to_string(ring, g));
      ++cancel.report.cases;
    }
    out.push_back(eq.report);
    out.push_back(cancel.report);
  }
  return out;
}

std::vector<PropertyReport> homogenization_properties(std::size_t cases, std::uint64_t seed) {
  const Ring base(2, {"x", "y"});
  const Ring ext = base.extended();
  const int hidx = ext.homogenizer_index();
  Rng rng(seed + 4);
  Check roundtrip("dehomogenize(homogenize f) = f and lm preserved");
  Check idem("nf mod N is idempotent and normal");
  Check normal("is_normal_mod_N matches the normality predicate");
  Check order("t_canon(d).m < n when d = ord n > ord m");
  Check lmphi("lm commutes with dehomogenization on normal homogeneous h");

  auto normal_ref = [&](const Monomial& m) {
    int t_count = 0;
    std::uint32_t t_exp = 0;
    ShiftExponent ts;
    OrderValue rest;
    for (const auto& f : m.factors()) {
      if (ext.is_homogenizer(f.var)) {
        ++t_count;
        t_exp = f.exp;
        ts = ext.shift_of(f.var);
      } else {
        rest = max(rest, OrderValue(ext.degree_of(f.var)));
      }
    }
    if (t_count == 0) return true;
    if (t_count > 1 || t_exp != 1) return false;
    for (int i = 0; i + 1 < ext.rank(); ++i)
      if (ts[i] != 0) return false;
    return rest < OrderValue(ts.degree());
  };

  for (std::size_t c = 0; c < cases; ++c) {
    const DiffPolynomial f = random_poly(rng, base);
    const DiffPolynomial fs = homogenize(ext, f);
    roundtrip.expect(dehomogenize(ext, fs) == f && fs.lm() == f.lm(), to_string(base, f));
    ++roundtrip.report.cases;

    const DiffPolynomial g = random_poly(rng, ext, 4, true);
    const DiffPolynomial ng = nf_mod_N(ext, g);
    bool ok = nf_mod_N(ext, ng) == ng && dehomogenize(ext, ng) == dehomogenize(ext, g);
    for (const auto& t : ng.terms()) ok = ok && normal_ref(t.mono);
    idem.expect(ok, to_string(ext, g));
    ++idem.report.cases;

    const Monomial m = random_monomial(rng, ext);
    normal.expect(is_normal_mod_N(ext, m) == normal_ref(m) && normal_ref(nf_mod_N(ext, m)), str(ext, m));
    ++normal.report.cases;

    Monomial a, b;
    do {
      a = random_monomial(rng, base, 4, 4, 3, false);
      b = random_monomial(rng, base, 4, 4, 3, false);
      if (ext.ord(b) < ext.ord(a)) std::swap(a, b);
    } while (!(ext.ord(a) < ext.ord(b)));
    // Only the least t-variable of each degree occurs in normal monomials;
    // other shifts of the same degree can sit in a higher weight block.
    const ShiftExponent s = t_canon(ext.rank(), ext.ord(b).value());
    const Monomial ta = ext.variable(hidx, s) * a;
    order.expect(ext.less(ta, b), str(ext, ta) + " vs " + str(ext, b));
    ++order.report.cases;

    const int top = topord(base, f).is_neg_infinity() ? 0 : topord(base, f).value();
    const int k = top + uniform(rng, 0, 2);
    const DiffPolynomial h = nf_mod_N(ext, mul_term(FieldElem(1), ext.variable(hidx, t_canon(ext.rank(), k)), fs));
    bool lm_ok = true;
    if (!h.is_zero()) {
      const DiffPolynomial ph = dehomogenize(ext, h);
      const DiffPolynomial plm = dehomogenize(ext, DiffPolynomial::monomial(FieldElem(1), h.lm()));
      lm_ok = !ph.is_zero() && ph.lm() == plm.lm();
    }
    lmphi.expect(lm_ok, to_string(ext, h));
    ++lmphi.report.cases;
  }
  return {roundtrip.report, idem.report, normal.report, order.report, lmphi.report};
}

PropertyReport nf_rewriting_oracle(std::size_t cases, std::uint64_t seed) {
  const Ring ext = Ring(2, {"x", "y"}).extended();
  const int hidx = ext.homogenizer_index();
  Rng rng(seed + 5);
  Check chk("nf mod N equals rewriting by the generators of N");

  // The least t-variable of each degree, found by comparing all candidates.
  std::map<int, ShiftExponent> t_min;
  for (int d = 0; d <= 4; ++d) {
    const auto cands = enumerate_deg(2, d);
    ShiftExponent best = cands.front();
    for (const auto& s : cands)
      if (ext.less(ext.variable(hidx, s), ext.variable(hidx, best))) best = s;
    t_min[d] = best;
  }

  struct V {
    int index;
    ShiftExponent shift;
    int exp;
  };
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<V> vars;
    const int n = uniform(rng, 1, 5);
    for (int k = 0; k < n; ++k) {
      const int idx = uniform(rng, 0, 2);
      vars.push_back({idx, random_shift_of_degree(rng, 2, uniform(rng, 0, 4)), uniform(rng, 1, 3)});
    }
    auto to_mono = [&](const std::vector<V>& vs) {
      std::vector<std::pair<DiffVariable, int>> p;
      for (const auto& v : vs) p.push_back({{v.index, v.shift}, v.exp});
      return ext.monomial(p);
    };
    const Monomial start = to_mono(vars);

    // Rules, each a binomial of N oriented by its leading term:
    //   t(s) -> t(min of degree deg s)
    //   t(s)^2 -> t(s)
    //   t(s) t(u) -> t(s) and x(s) t(u) -> x(s) when deg s >= deg u
    // applied in random order until none fires.
    std::vector<V> w = vars;
    for (int guard = 0; guard < 1000; ++guard) {
      std::vector<int> fire;  // encoded rule choices
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].index != hidx) continue;
        if (w[i].shift != t_min[w[i].shift.degree()]) fire.push_back(static_cast<int>(i) * 64);
        if (w[i].exp > 1) fire.push_back(static_cast<int>(i) * 64 + 1);
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (j == i) continue;
          if (w[j].shift.degree() >= w[i].shift.degree()) fire.push_back(static_cast<int>(i) * 64 + 2);
        }
      }
      if (fire.empty()) break;
      const int pick = fire[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fire.size()) - 1))];
      const std::size_t i = static_cast<std::size_t>(pick / 64);
      switch (pick % 64) {
        case 0:
          w[i].shift = t_min[w[i].shift.degree()];
          break;
        case 1:
          w[i].exp = 1;
          break;
        default:
          if (--w[i].exp == 0) w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          break;
      }
      // Re-merge equal variables so exponents stay combined.
      std::vector<V> merged;
      for (const auto& v : w) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const V& u) { return u.index == v.index && u.shift == v.shift; });
        if (it == merged.end()) merged.push_back(v);
        else it->exp += v.exp;
      }
      w = std::move(merged);
    }
    const Monomial expected = to_mono(w);
    const Monomial got = nf_mod_N(ext, start);
    chk.expect(got == expected, str(ext, start) + ": nf " + str(ext, got) + ", rewriting " + str(ext, expected));
    ++chk.report.cases;
  }
  return chk.report;
}

std::vector<PropertyReport> all_property_suites(std::size_t cases, std::uint64_t seed) {
  std::vector<PropertyReport> out;
  for (auto&& part : {ordering_properties(cases, seed), grading_properties(cases, seed),
                      compatibility_properties(cases, seed), spoly_properties(cases, seed),
                      homogenization_properties(cases, seed)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace sigmagb::testing
