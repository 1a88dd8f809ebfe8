#ifndef SIGMAGB_TESTS_SUPPORT_HPP
#define SIGMAGB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "sigmagb/cli.hpp"
#include "sigmagb/gb_engine.hpp"
#include "sigmagb/homogenization.hpp"
#include "sigmagb/problem.hpp"

namespace sigmagb::testing {

// Two unknowns x, y over Q, weight ranking over degrevlex (x(1,0) > y(1,0) > x(0,1)).
inline Ring example_ring() { return Ring(2, {"x", "y"}); }

inline DiffPolynomial poly(const Ring& ring, const std::string& text) { return parse_polynomial(ring, text); }

inline std::vector<DiffPolynomial> example_input(const Ring& ring) {
  return {poly(ring, "y[1,1]*y[1,0] - 2*x[0,1]^2"), poly(ring, "y[2,0] + x[0,0]*x[1,0]")};
}

inline std::vector<DiffPolynomial> example_basis(const Ring& ring) {
  return {poly(ring, "y[1,1]*y[1,0] - 2*x[0,1]^2"), poly(ring, "y[2,0] + x[0,0]*x[1,0]"),
          poly(ring, "y[1,2]*x[0,1]^2 - y[1,0]*x[0,2]^2"), poly(ring, "2*x[1,1]^2 - x[0,0]*x[1,0]*x[0,1]*x[1,1]")};
}

// Same elements up to nonzero scalars, ignoring order.
inline bool same_up_to_scalars(const std::vector<DiffPolynomial>& a, const std::vector<DiffPolynomial>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && associated(f, b[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

inline std::vector<std::string> lm_strings(const Ring& ring, const std::vector<DiffPolynomial>& G) {
  std::vector<std::string> out;
  for (const auto& g : G) out.push_back(ring.to_string(g.lm()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string data_dir() { return SIGMAGB_TEST_DATA_DIR; }

inline ProblemFile load_system(const std::string& name) { return load_problem(data_dir() + "/" + name + ".prob"); }

}  // namespace sigmagb::testing

#endif
