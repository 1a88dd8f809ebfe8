#include "sigmagb/homogenization.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace sigmagb {

namespace {

void require_extended(const Ring& ext) {
  if (!ext.is_extended()) throw std::invalid_argument("expected the ring extended by the homogenizer");
}

}  // namespace

ShiftExponent t_canon(int rank, int d) {
  if (rank < 1) throw std::invalid_argument("homogenization needs rank >= 1");
  ShiftExponent s(rank);
  s.set(rank - 1, d);
  return s;
}

Monomial nf_mod_N(const Ring& ext, const Monomial& m) {
  require_extended(ext);
  const int hom = ext.homogenizer_index();
  int dt = -1;
  int ord_rest = -1;
  Monomial::Storage rest;
  for (const auto& f : m.factors()) {
    if (ext.index_of(f.var) == hom) {
      dt = std::max(dt, ext.degree_of(f.var));
    } else {
      ord_rest = std::max(ord_rest, ext.degree_of(f.var));
      rest.push_back(f);
    }
  }
  if (dt < 0) return m;
  if (dt > ord_rest) {
    const Factor t{ext.var(hom, t_canon(ext.rank(), dt)), 1};
    auto pos = std::find_if(rest.begin(), rest.end(), [&](const Factor& f) { return f.var < t.var; });
    rest.insert(pos, t);
  }
  return Monomial(std::move(rest));
}

bool is_normal_mod_N(const Ring& ext, const Monomial& m) { return nf_mod_N(ext, m) == m; }

DiffPolynomial nf_mod_N(const Ring& ext, const DiffPolynomial& f) {
  require_extended(ext);
  bool clean = true;
  for (const auto& t : f.terms()) {
    for (const auto& x : t.mono.factors()) {
      if (ext.index_of(x.var) == ext.homogenizer_index()) {
        clean = false;
        break;
      }
    }
    if (!clean) break;
  }
  if (clean) return f;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff, nf_mod_N(ext, t.mono)});
  return DiffPolynomial::from_terms(ext, std::move(out));
}

DiffPolynomial dehomogenize(const Ring& ext, const DiffPolynomial& f) {
  require_extended(ext);
  const int hom = ext.homogenizer_index();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial::Storage fs;
    for (const auto& x : t.mono.factors())
      if (ext.index_of(x.var) != hom) fs.push_back(x);
    out.push_back({t.coeff, Monomial(std::move(fs))});
  }
  return DiffPolynomial::from_terms(ext, std::move(out));
}

DiffPolynomial homogenize(const Ring& ext, const DiffPolynomial& f) {
  require_extended(ext);
  if (f.is_zero()) throw std::domain_error("homogenization of the zero polynomial");
  const OrderValue d = topord(ext, f);
  if (d.is_neg_infinity()) return f;
  const Monomial t = ext.variable(ext.homogenizer_index(), t_canon(ext.rank(), d.value()));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& term : f.terms()) out.push_back({term.coeff, nf_mod_N(ext, t * term.mono)});
  return DiffPolynomial::from_terms(ext, std::move(out));
}

DiffPolynomial saturate(const Ring& ext, const DiffPolynomial& h) {
  const DiffPolynomial p = dehomogenize(ext, h);
  if (p.is_zero()) throw std::domain_error("saturation of an element of N");
  return homogenize(ext, p);
}

std::vector<DiffPolynomial> sigma_gbasis2(const Ring& ring, const std::vector<DiffPolynomial>& H, GBRun& run) {
  const SigmaOrdering& o = ring.ordering();
  if (o.ranking != Ranking::weight || o.sigma.kind != SigmaOrderKind::degrevlex) {
    throw std::invalid_argument("sigma2 needs the weight ranking over degrevlex");
  }
  if (!run.truncation.is_bounded()) throw std::invalid_argument("the sigma2 strategy needs a truncation bound");
  const Ring ext = ring.extended();
  std::vector<DiffPolynomial> Hs;
  for (const auto& h : H)
    if (!h.is_zero()) Hs.push_back(homogenize(ext, h));
  if (Hs.empty()) throw std::invalid_argument("empty generator list");

  run.stats = GBStats{};
  run.stats.in = H.size();
  const auto start = std::chrono::steady_clock::now();
  ReductionHooks hooks;
  hooks.normalize = [&](DiffPolynomial f) { return nf_mod_N(ext, f); };
  hooks.saturate = [&](const DiffPolynomial& h) { return saturate(ext, h); };
  hooks.is_unit = [&](const DiffPolynomial& h) {
    const DiffPolynomial p = dehomogenize(ext, h);
    return !p.is_zero() && p.is_constant();
  };
  GBRun inner = run;
  inner.strategy = Strategy::sigma2;
  const auto G = run_completion(ext, Hs, inner, &hooks);
  run.stats = inner.stats;

  std::vector<DiffPolynomial> out;
  out.reserve(G.size());
  for (const auto& g : G) out.push_back(make_monic(dehomogenize(ext, g)));
  const auto minimal = minimalize(ring, out);
  run.stats.out = out.size();
  run.stats.minout = minimal.size();
  run.stats.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run.minimalize ? minimal : out;
}

}  // namespace sigmagb
