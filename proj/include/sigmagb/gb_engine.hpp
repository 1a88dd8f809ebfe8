#ifndef SIGMAGB_GB_ENGINE_HPP
#define SIGMAGB_GB_ENGINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmagb/diff_poly.hpp"

namespace sigmagb {

enum class Strategy { basic, nocrit, sigma, sigma2 };

const char* to_string(Strategy s);
// Throws std::invalid_argument on an unknown name.
Strategy parse_strategy(const std::string& name);

struct GBStats {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t minout = 0;
  // Interreduced inputs plus S-polynomial reductions.
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t chain_skipped = 0;
  std::size_t reductions = 0;
  // Saturation produced an element of lower order than the pair being
  // processed (homogenized strategy only).
  std::size_t reopened = 0;
  bool unit_ideal = false;
  bool aborted = false;
  std::string abort_reason;
  double time_ms = 0.0;
  std::optional<bool> certified;
};

// Configuration and statistics of one basis computation.
struct GBRun {
  Strategy strategy = Strategy::sigma;
  Truncation truncation;
  bool minimalize = false;
  bool tail_reduce = false;
  bool chain_criterion = true;
  // Abort once this many pairs were reduced; 0 means no cap.
  std::size_t max_pairs = 0;
  // Treat a window re-open as a failed run.
  bool abort_on_reopen = false;
  GBStats stats;
};

// (l / (lc f * lm f)) f - (l / (lc g * lm g)) g with l = lcm(lm f, lm g).
DiffPolynomial spoly(const Ring& ring, const DiffPolynomial& f, const DiffPolynomial& g);

// Reduces f against every admissible shift of the basis elements. Shifts
// are limited by the truncation window of each basis element; with
// `allow_shifts` false only the elements themselves are used.
DiffPolynomial reduce(const Ring& ring, const DiffPolynomial& f, const std::vector<DiffPolynomial>& basis,
                      const Truncation& truncation = {}, bool tail_reduce = false, bool allow_shifts = true);

// Coprime shift pairs (s, t) with s.lm(f) and t.lm(g) sharing a variable.
std::vector<std::pair<ShiftExponent, ShiftExponent>> critical_shift_pairs(const Ring& ring, const DiffPolynomial& f,
                                                                          const DiffPolynomial& g,
                                                                          bool same = false);

// Every shift(s, h) with deg(s) + topord(h) <= d.
std::vector<DiffPolynomial> generate_basic_input(const Ring& ring, const std::vector<DiffPolynomial>& H, int d);

// Drops elements whose leading monomial is a multiple of a shifted leading
// monomial of another element (earlier wins on ties). With `allow_shifts`
// false ordinary divisibility is used.
std::vector<DiffPolynomial> minimalize(const Ring& ring, const std::vector<DiffPolynomial>& G,
                                       bool allow_shifts = true);

// Runs the requested strategy. The homogenized strategy is delegated to
// sigma_gbasis2. Throws std::invalid_argument on bad configuration.
std::vector<DiffPolynomial> sigma_gbasis(const Ring& ring, const std::vector<DiffPolynomial>& H, GBRun& run);

enum class CertifyMode { order, weight };

struct Certificate {
  bool certified = false;
  // Window used: 2d in order mode, delta^2 in weight mode.
  Truncation window;
  std::size_t pairs_checked = 0;
  // A pair whose S-polynomial did not reduce to zero.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::optional<std::pair<ShiftExponent, ShiftExponent>> witness_shifts;
  DiffPolynomial witness_remainder;
};

// Finite completeness check: every critical pair of G reduces to zero
// against the shifts of G inside the doubled window. Requires the weight
// ranking over degrevlex.
Certificate certify_finite(const Ring& ring, const std::vector<DiffPolynomial>& G, CertifyMode mode = CertifyMode::order);

// Optional per-step hooks used by the homogenized variant.
struct ReductionHooks {
  // Applied after each reduction step.
  std::function<DiffPolynomial(DiffPolynomial)> normalize;
  // Applied to every nonzero reduct before it joins the basis.
  std::function<DiffPolynomial(const DiffPolynomial&)> saturate;
  // True when the reduct should be reported as the unit ideal.
  std::function<bool(const DiffPolynomial&)> is_unit;
};

// The Sigma-criterion (or nocrit) completion loop shared by the strategies.
std::vector<DiffPolynomial> run_completion(const Ring& ring, const std::vector<DiffPolynomial>& H, GBRun& run,
                                           const ReductionHooks* hooks = nullptr);

}  // namespace sigmagb

#endif
