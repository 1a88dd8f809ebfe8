#include "sigmagb/gb_engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "sigmagb/homogenization.hpp"

namespace sigmagb {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::basic:
      return "basic";
    case Strategy::nocrit:
      return "nocrit";
    case Strategy::sigma:
      return "sigma";
    case Strategy::sigma2:
      return "sigma2";
  }
  return "sigma";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "basic") return Strategy::basic;
  if (name == "nocrit") return Strategy::nocrit;
  if (name == "sigma") return Strategy::sigma;
  if (name == "sigma2") return Strategy::sigma2;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected basic, nocrit, sigma or sigma2)");
}

namespace {

// basic: no shifts at all; coprime: Sigma-criterion pairs; all: every
// overlapping pair of shifted copies in the window.
enum class ShiftMode { none, coprime, all };

ShiftMode mode_for(Strategy s) {
  switch (s) {
    case Strategy::basic:
      return ShiftMode::none;
    case Strategy::nocrit:
      return ShiftMode::all;
    default:
      return ShiftMode::coprime;
  }
}

struct Gen {
  DiffPolynomial poly;
  VarKey anchor = 0;
  int anchor_index = 0;
  std::uint32_t anchor_exp = 0;
  int anchor_deg = 0;
  ShiftWindow window;
};

struct PairRec {
  int i = 0, j = 0;
  ShiftExponent s, t;
  Monomial lcm;
  WeightValue w;
  std::uint64_t seq = 0;
};

struct PairKey {
  int i, j;
  std::uint64_t s, t;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.i) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(k.j) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    h ^= k.s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= k.t + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class Engine {
 public:
  Engine(const Ring& ring, Truncation trunc, ShiftMode mode, bool tail, const ReductionHooks* hooks)
      : ring_(ring), trunc_(std::move(trunc)), mode_(mode), tail_(tail), hooks_(hooks),
        by_index_(static_cast<std::size_t>(ring.num_indices())) {}

  int size() const { return static_cast<int>(gens_.size()); }
  const Gen& gen(int k) const { return gens_[static_cast<std::size_t>(k)]; }

  int add(DiffPolynomial p) {
    Gen g;
    g.poly = std::move(p);
    const Factor& a = g.poly.lm().factors().front();
    g.anchor = a.var;
    g.anchor_index = ring_.index_of(a.var);
    g.anchor_exp = a.exp;
    g.anchor_deg = ring_.degree_of(a.var);
    g.window = ShiftWindow::for_generator(ring_, trunc_, g.poly);
    gens_.push_back(std::move(g));
    const int k = size() - 1;
    by_index_[static_cast<std::size_t>(gens_.back().anchor_index)].push_back(k);
    return k;
  }

  bool admits(const Gen& g, VarKey from, VarKey to, ShiftExponent* out) const {
    if (mode_ == ShiftMode::none) {
      if (from != to) return false;
      if (out) *out = ShiftExponent(ring_.rank());
      return true;
    }
    if (!ring_.shift_dominates(from, to)) return false;
    switch (trunc_.kind) {
      case Truncation::Kind::none:
        break;
      case Truncation::Kind::order:
        if (!g.window.top_order.is_neg_infinity() &&
            ring_.degree_of(to) - ring_.degree_of(from) + g.window.top_order.value() > trunc_.order_bound)
          return false;
        break;
      case Truncation::Kind::weight: {
        ShiftExponent s;
        ring_.shift_between(from, to, &s);
        if (!g.window.admits(s)) return false;
        if (out) *out = s;
        return true;
      }
    }
    if (out) ring_.shift_between(from, to, out);
    return true;
  }

  // Finds the shortest admissible reducer of `target`.
  bool find_reducer(const Monomial& target, int* best_k, VarKey* best_delta) const {
    std::size_t best_len = 0;
    bool found = false;
    for (const auto& f : target.factors()) {
      const int idx = ring_.index_of(f.var);
      for (int k : by_index_[static_cast<std::size_t>(idx)]) {
        const Gen& g = gen(k);
        if (g.anchor_exp > f.exp) continue;
        if (found && g.poly.size() >= best_len) continue;
        if (!admits(g, g.anchor, f.var, nullptr)) continue;
        const VarKey delta = f.var - g.anchor;
        if (!mono_divides_shifted(g.poly.lm(), delta, target)) continue;
        found = true;
        best_len = g.poly.size();
        *best_k = k;
        *best_delta = delta;
      }
    }
    return found;
  }

  DiffPolynomial reduce(DiffPolynomial h, GBStats* stats) const {
    std::vector<Term> rest;
    while (!h.is_zero()) {
      int k = 0;
      VarKey delta = 0;
      if (find_reducer(h.lm(), &k, &delta)) {
        const Gen& g = gen(k);
        const Monomial u = mono_quotient(h.lm(), g.poly.lm().shifted(delta));
        const FieldElem c = g.poly.lc().is_one() ? h.lc() : h.lc() / g.poly.lc();
        h = sub_multiple(ring_, std::move(h), c, u, delta, g.poly);
        if (hooks_ && hooks_->normalize) h = hooks_->normalize(std::move(h));
        if (stats) ++stats->reductions;
      } else if (tail_) {
        auto& ts = h.mutable_terms();
        rest.push_back(std::move(ts.front()));
        ts.erase(ts.begin());
      } else {
        break;
      }
    }
    if (rest.empty()) return h;
    for (auto& t : h.mutable_terms()) rest.push_back(std::move(t));
    return DiffPolynomial::from_terms(ring_, std::move(rest));
  }

  DiffPolynomial spoly_of(const PairRec& p) const {
    const Gen& a = gen(p.i);
    const Gen& b = gen(p.j);
    const VarKey da = mode_ == ShiftMode::none ? 0 : ring_.shift_delta(p.s);
    const VarKey db = mode_ == ShiftMode::none ? 0 : ring_.shift_delta(p.t);
    const Monomial ua = mono_quotient(p.lcm, a.poly.lm().shifted(da));
    const Monomial ub = mono_quotient(p.lcm, b.poly.lm().shifted(db));
    DiffPolynomial h = sub_multiple(ring_, DiffPolynomial(), -a.poly.lc().inverse(), ua, da, a.poly);
    h = sub_multiple(ring_, std::move(h), b.poly.lc().inverse(), ub, db, b.poly);
    if (hooks_ && hooks_->normalize) h = hooks_->normalize(std::move(h));
    return h;
  }

  PairRec make_pair(int i, const ShiftExponent& s, int j, const ShiftExponent& t) const {
    PairRec p;
    p.i = i;
    p.j = j;
    p.s = s;
    p.t = t;
    const VarKey da = mode_ == ShiftMode::none ? 0 : ring_.shift_delta(s);
    const VarKey db = mode_ == ShiftMode::none ? 0 : ring_.shift_delta(t);
    p.lcm = mono_lcm(gen(i).poly.lm().shifted(da), gen(j).poly.lm().shifted(db));
    p.w = ring_.weight(p.lcm);
    return p;
  }

  // Pairs of generator j with every generator i <= j.
  std::vector<PairRec> pairs_with(int j) {
    std::vector<PairRec> out;
    const Gen& b = gen(j);
    for (int i = 0; i <= j; ++i) {
      const Gen& a = gen(i);
      if (mode_ == ShiftMode::none) {
        if (i == j) continue;
        if (!mono_gcd(a.poly.lm(), b.poly.lm()).is_one()) {
          const ShiftExponent one(ring_.rank());
          out.push_back(make_pair(i, one, j, one));
        }
        continue;
      }
      for (const auto& [s, t] : critical_shift_pairs(ring_, a.poly, b.poly, i == j)) {
        if (mode_ == ShiftMode::coprime) {
          if (a.window.admits(s) && b.window.admits(t)) out.push_back(make_pair(i, s, j, t));
          continue;
        }
        for (const auto& d : multipliers(a, s, b, t)) {
          const ShiftExponent s2 = mul(d, s), t2 = mul(d, t);
          if (a.window.admits(s2) && b.window.admits(t2)) out.push_back(make_pair(i, s2, j, t2));
        }
      }
    }
    return out;
  }

  PairKey key(int i, const ShiftExponent& s, int j, const ShiftExponent& t) const {
    ShiftExponent a = s, b = t;
    if (mode_ == ShiftMode::coprime) {
      const ShiftExponent g = gcd(s, t);
      if (!g.is_identity()) {
        a = monus(s, g);
        b = monus(t, g);
      }
    }
    PairKey k{i, j, a.pack(), b.pack()};
    if (std::make_pair(k.j, k.t) < std::make_pair(k.i, k.s)) {
      std::swap(k.i, k.j);
      std::swap(k.s, k.t);
    }
    return k;
  }

  bool processed(int i, const ShiftExponent& s, int j, const ShiftExponent& t) const {
    return done_.count(key(i, s, j, t)) > 0;
  }
  void mark(const PairRec& p) { done_.insert(key(p.i, p.s, p.j, p.t)); }
  bool seen(const PairRec& p) const { return processed(p.i, p.s, p.j, p.t); }

  bool overlapping(int i, const ShiftExponent& s, int k, const ShiftExponent& v) const {
    const VarKey da = mode_ == ShiftMode::none ? 0 : ring_.shift_delta(s);
    const VarKey dv = mode_ == ShiftMode::none ? 0 : ring_.shift_delta(v);
    const auto& ma = gen(i).poly.lm().factors();
    const auto& mb = gen(k).poly.lm().factors();
    std::size_t x = 0, y = 0;
    while (x < ma.size() && y < mb.size()) {
      const VarKey p = ma[x].var + da, q = mb[y].var + dv;
      if (p == q) return true;
      if (p > q) {
        ++x;
      } else {
        ++y;
      }
    }
    return false;
  }

  // Buchberger's chain criterion on an in-window third shifted generator.
  bool chain_redundant(const PairRec& p) const {
    for (const auto& f : p.lcm.factors()) {
      const int idx = ring_.index_of(f.var);
      for (int k : by_index_[static_cast<std::size_t>(idx)]) {
        const Gen& g = gen(k);
        if (g.anchor_exp > f.exp) continue;
        ShiftExponent v;
        if (!admits(g, g.anchor, f.var, &v)) continue;
        if (!mono_divides_shifted(g.poly.lm(), f.var - g.anchor, p.lcm)) continue;
        if ((k == p.i && v == p.s) || (k == p.j && v == p.t)) continue;
        const bool left = !overlapping(p.i, p.s, k, v) || processed(p.i, p.s, k, v);
        if (!left) continue;
        const bool right = !overlapping(k, v, p.j, p.t) || processed(k, v, p.j, p.t);
        if (right) return true;
      }
    }
    return false;
  }

 private:
  std::vector<ShiftExponent> multipliers(const Gen& a, const ShiftExponent& s, const Gen& b,
                                         const ShiftExponent& t) {
    int room = 0;
    switch (trunc_.kind) {
      case Truncation::Kind::none:
        throw std::invalid_argument("the nocrit strategy needs a truncation bound");
      case Truncation::Kind::order: {
        int used = 0;
        if (!a.window.top_order.is_neg_infinity()) used = std::max(used, s.degree() + a.window.top_order.value());
        if (!b.window.top_order.is_neg_infinity()) used = std::max(used, t.degree() + b.window.top_order.value());
        room = trunc_.order_bound - used;
        break;
      }
      case Truncation::Kind::weight:
        room = trunc_.weight_bound.degree();
        break;
    }
    if (room < 0) return {};
    auto it = layers_.find(room);
    if (it == layers_.end()) it = layers_.emplace(room, enumerate_upto_deg(ring_.rank(), room)).first;
    return it->second;
  }

  const Ring& ring_;
  Truncation trunc_;
  ShiftMode mode_;
  bool tail_;
  const ReductionHooks* hooks_;
  std::vector<Gen> gens_;
  std::vector<std::vector<int>> by_index_;
  std::unordered_set<PairKey, PairKeyHash> done_;
  std::map<int, std::vector<ShiftExponent>> layers_;
};

struct PairLater {
  const Ring* ring;
  bool operator()(const PairRec& a, const PairRec& b) const {
    if (auto c = compare(ring->sigma_order(), a.w, b.w); c != 0) return c > 0;
    if (auto c = ring->compare(a.lcm, b.lcm); c != 0) return c > 0;
    return a.seq > b.seq;
  }
};

void check_inputs_in_window(const Ring& ring, const std::vector<DiffPolynomial>& H, const Truncation& t) {
  for (const auto& h : H) {
    if (h.is_zero()) continue;
    const ShiftWindow w = ShiftWindow::for_generator(ring, t, h);
    if (!w.admits(ShiftExponent(ring.rank()))) {
      throw std::invalid_argument("truncation " + t.to_string() + " lies below the generator " + to_string(ring, h));
    }
  }
}

std::vector<DiffPolynomial> prepare_inputs(const Ring& ring, const std::vector<DiffPolynomial>& H) {
  std::vector<DiffPolynomial> in;
  for (const auto& h : H) {
    if (h.is_zero()) continue;
    DiffPolynomial m = make_monic(h);
    if (std::find(in.begin(), in.end(), m) == in.end()) in.push_back(std::move(m));
  }
  std::stable_sort(in.begin(), in.end(),
                   [&](const DiffPolynomial& a, const DiffPolynomial& b) { return ring.less(a.lm(), b.lm()); });
  return in;
}

std::vector<DiffPolynomial> unit_result(GBStats& st) {
  st.unit_ideal = true;
  return {DiffPolynomial::constant(FieldElem(1))};
}

}  // namespace

std::vector<std::pair<ShiftExponent, ShiftExponent>> critical_shift_pairs(const Ring& ring, const DiffPolynomial& f,
                                                                          const DiffPolynomial& g, bool same) {
  std::vector<std::pair<ShiftExponent, ShiftExponent>> out;
  if (f.is_zero() || g.is_zero()) throw std::domain_error("critical pairs of the zero polynomial");
  for (const auto& a : f.lm().factors()) {
    const int ia = ring.index_of(a.var);
    const ShiftExponent alpha = ring.shift_of(a.var);
    for (const auto& b : g.lm().factors()) {
      if (ring.index_of(b.var) != ia) continue;
      const ShiftExponent beta = ring.shift_of(b.var);
      ShiftExponent s = monus(beta, alpha), t = monus(alpha, beta);
      if (same) {
        if (s == t) continue;
        if (t.pack() < s.pack()) std::swap(s, t);
      }
      std::pair<ShiftExponent, ShiftExponent> p{s, t};
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

DiffPolynomial spoly(const Ring& ring, const DiffPolynomial& f, const DiffPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("S-polynomial of the zero polynomial");
  const Monomial l = mono_lcm(f.lm(), g.lm());
  DiffPolynomial h = sub_multiple(ring, DiffPolynomial(), -f.lc().inverse(), mono_quotient(l, f.lm()), 0, f);
  return sub_multiple(ring, std::move(h), g.lc().inverse(), mono_quotient(l, g.lm()), 0, g);
}

DiffPolynomial reduce(const Ring& ring, const DiffPolynomial& f, const std::vector<DiffPolynomial>& basis,
                      const Truncation& truncation, bool tail_reduce, bool allow_shifts) {
  Engine e(ring, truncation, allow_shifts ? ShiftMode::coprime : ShiftMode::none, tail_reduce, nullptr);
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {};
    e.add(g);
  }
  return e.reduce(f, nullptr);
}

std::vector<DiffPolynomial> generate_basic_input(const Ring& ring, const std::vector<DiffPolynomial>& H, int d) {
  if (d < 0) throw std::invalid_argument("order bound must be non-negative");
  std::vector<DiffPolynomial> out;
  for (const auto& h : H) {
    if (h.is_zero()) continue;
    const OrderValue t = topord(ring, h);
    if (t.is_neg_infinity()) {
      out.push_back(h);
      continue;
    }
    if (t.value() > d) {
      throw std::invalid_argument("order bound " + std::to_string(d) + " is below topord " +
                                  std::to_string(t.value()) + " of " + to_string(ring, h));
    }
    for (const auto& s : enumerate_upto_deg(ring.rank(), d - t.value())) out.push_back(shift(ring, s, h));
  }
  return out;
}

namespace {

std::vector<DiffPolynomial> generate_basic_input_weight(const Ring& ring, const std::vector<DiffPolynomial>& H,
                                                        const Truncation& t) {
  std::vector<DiffPolynomial> out;
  const auto all = enumerate_upto_deg(ring.rank(), t.weight_bound.degree());
  for (const auto& h : H) {
    if (h.is_zero()) continue;
    const ShiftWindow w = ShiftWindow::for_generator(ring, t, h);
    if (h.is_constant()) {
      out.push_back(h);
      continue;
    }
    if (!w.admits(ShiftExponent(ring.rank()))) {
      throw std::invalid_argument("weight bound lies below the generator " + to_string(ring, h));
    }
    for (const auto& s : all)
      if (w.admits(s)) out.push_back(shift(ring, s, h));
  }
  return out;
}

}  // namespace

std::vector<DiffPolynomial> minimalize(const Ring& ring, const std::vector<DiffPolynomial>& G, bool allow_shifts) {
  std::vector<const DiffPolynomial*> live;
  for (const auto& g : G)
    if (!g.is_zero()) live.push_back(&g);
  std::vector<DiffPolynomial> out;
  for (std::size_t a = 0; a < live.size(); ++a) {
    const Monomial& ma = live[a]->lm();
    bool redundant = false;
    for (std::size_t b = 0; b < live.size() && !redundant; ++b) {
      if (b == a) continue;
      const Monomial& mb = live[b]->lm();
      if (mb == ma) {
        redundant = b < a;
        continue;
      }
      if (mb.is_one()) {
        redundant = true;
        continue;
      }
      if (ma.is_one()) continue;
      redundant = allow_shifts ? !find_sigma_divisors(ring, mb, ma).empty() : mono_divides(mb, ma);
    }
    if (!redundant) out.push_back(*live[a]);
  }
  return out;
}

std::vector<DiffPolynomial> run_completion(const Ring& ring, const std::vector<DiffPolynomial>& H, GBRun& run,
                                           const ReductionHooks* hooks) {
  const ShiftMode mode = mode_for(run.strategy);
  const Truncation trunc = mode == ShiftMode::none ? Truncation::unbounded() : run.truncation;
  if (mode == ShiftMode::all && !trunc.is_bounded()) {
    throw std::invalid_argument("the nocrit strategy needs a truncation bound");
  }
  check_inputs_in_window(ring, H, trunc);
  GBStats& st = run.stats;
  auto is_unit = [&](const DiffPolynomial& h) {
    return hooks && hooks->is_unit ? hooks->is_unit(h) : h.is_constant();
  };

  Engine e(ring, trunc, mode, run.tail_reduce, hooks);
  std::priority_queue<PairRec, std::vector<PairRec>, PairLater> queue(PairLater{&ring});
  std::uint64_t seq = 0;
  auto insert = [&](DiffPolynomial p) {
    const int k = e.add(make_monic(p));
    for (auto& pr : e.pairs_with(k)) {
      pr.seq = seq++;
      queue.push(std::move(pr));
    }
  };

  for (auto& h : prepare_inputs(ring, H)) {
    if (is_unit(h)) return unit_result(st);
    DiffPolynomial r = e.reduce(std::move(h), &st);
    ++st.pairs;
    if (r.is_zero()) continue;
    if (hooks && hooks->saturate) r = hooks->saturate(r);
    if (is_unit(r)) return unit_result(st);
    insert(std::move(r));
  }

  while (!queue.empty()) {
    PairRec p = queue.top();
    queue.pop();
    if (e.seen(p)) continue;
    if (run.chain_criterion && e.chain_redundant(p)) {
      e.mark(p);
      ++st.chain_skipped;
      continue;
    }
    e.mark(p);
    DiffPolynomial r = e.reduce(e.spoly_of(p), &st);
    ++st.pairs;
    if (r.is_zero()) {
      ++st.zero_reductions;
    } else {
      if (hooks && hooks->saturate) {
        r = hooks->saturate(r);
        if (!is_unit(r) && topord(ring, r) < ring.ord(p.lcm)) {
          ++st.reopened;
          if (run.abort_on_reopen) {
            st.aborted = true;
            st.abort_reason = "saturation re-opened order " + topord(ring, r).to_string();
            break;
          }
        }
      }
      if (is_unit(r)) return unit_result(st);
      insert(std::move(r));
    }
    if (run.max_pairs && st.pairs >= run.max_pairs && !queue.empty()) {
      st.aborted = true;
      st.abort_reason = "pair cap of " + std::to_string(run.max_pairs) + " reached";
      break;
    }
  }

  std::vector<DiffPolynomial> out;
  out.reserve(static_cast<std::size_t>(e.size()));
  for (int k = 0; k < e.size(); ++k) out.push_back(e.gen(k).poly);
  return out;
}

std::vector<DiffPolynomial> sigma_gbasis(const Ring& ring, const std::vector<DiffPolynomial>& H, GBRun& run) {
  if (run.strategy == Strategy::sigma2) return sigma_gbasis2(ring, H, run);
  bool any = false;
  for (const auto& h : H) any = any || !h.is_zero();
  if (!any) throw std::invalid_argument("empty generator list");
  if (run.strategy != Strategy::sigma && !run.truncation.is_bounded()) {
    throw std::invalid_argument(std::string("the ") + to_string(run.strategy) + " strategy needs a truncation bound");
  }
  run.stats = GBStats{};
  const auto start = std::chrono::steady_clock::now();
  std::vector<DiffPolynomial> G;
  if (run.strategy == Strategy::basic) {
    const auto input = run.truncation.kind == Truncation::Kind::order
                           ? generate_basic_input(ring, H, run.truncation.order_bound)
                           : generate_basic_input_weight(ring, H, run.truncation);
    run.stats.in = input.size();
    G = run_completion(ring, input, run);
  } else {
    run.stats.in = H.size();
    G = run_completion(ring, H, run);
  }
  std::vector<DiffPolynomial> minimal = minimalize(ring, G);
  run.stats.out = G.size();
  run.stats.minout = minimal.size();
  run.stats.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run.minimalize ? minimal : G;
}

Certificate certify_finite(const Ring& ring, const std::vector<DiffPolynomial>& G, CertifyMode mode) {
  const SigmaOrdering& o = ring.ordering();
  if (o.ranking != Ranking::weight || o.sigma.kind != SigmaOrderKind::degrevlex) {
    throw std::invalid_argument("certification needs the weight ranking over degrevlex");
  }
  Certificate cert;
  std::vector<DiffPolynomial> gens;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      cert.certified = true;
      return cert;
    }
    gens.push_back(make_monic(g));
  }
  if (mode == CertifyMode::order) {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, ring.ord(g.lm()).value());
    cert.window = Truncation::by_order(2 * d);
  } else {
    WeightValue delta;
    for (const auto& g : gens) delta = weight_max(ring.sigma_order(), delta, ring.weight(g.lm()));
    if (delta.is_zero()) {
      cert.certified = true;
      return cert;
    }
    cert.window = Truncation::by_weight(mul(delta.shift(), delta.shift()));
  }
  Engine e(ring, cert.window, ShiftMode::coprime, false, nullptr);
  for (auto& g : gens) e.add(g);
  for (int j = 0; j < e.size(); ++j) {
    for (int i = 0; i <= j; ++i) {
      for (const auto& [s, t] : critical_shift_pairs(ring, e.gen(i).poly, e.gen(j).poly, i == j)) {
        const PairRec p = e.make_pair(i, s, j, t);
        ++cert.pairs_checked;
        DiffPolynomial r = e.reduce(e.spoly_of(p), nullptr);
        if (!r.is_zero()) {
          cert.certified = false;
          cert.witness = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          cert.witness_shifts = std::make_pair(s, t);
          cert.witness_remainder = std::move(r);
          return cert;
        }
      }
    }
  }
  cert.certified = true;
  return cert;
}

}  // namespace sigmagb
