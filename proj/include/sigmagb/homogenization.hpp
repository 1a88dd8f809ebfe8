#ifndef SIGMAGB_HOMOGENIZATION_HPP
#define SIGMAGB_HOMOGENIZATION_HPP

#include <vector>

#include "sigmagb/diff_poly.hpp"
#include "sigmagb/gb_engine.hpp"

namespace sigmagb {

// Functions below take the extended ring (Ring::extended()); polynomials of
// the base ring are valid there unchanged.

// The degree-d homogenizer shift (0,...,0,d).
ShiftExponent t_canon(int rank, int d);

// Canonical representative modulo N: all homogenizer factors collapse into
// one t(0,...,0,d_t), which disappears when d_t <= ord of the rest.
Monomial nf_mod_N(const Ring& ext, const Monomial& m);
DiffPolynomial nf_mod_N(const Ring& ext, const DiffPolynomial& f);
bool is_normal_mod_N(const Ring& ext, const Monomial& m);

// t(s) -> 1; the result lives in the base ring.
DiffPolynomial dehomogenize(const Ring& ext, const DiffPolynomial& f);
// nf(t_canon(topord f) * f); constants are returned unchanged.
DiffPolynomial homogenize(const Ring& ext, const DiffPolynomial& f);
// homogenize(dehomogenize(h)); throws std::domain_error when the
// dehomogenization vanishes.
DiffPolynomial saturate(const Ring& ext, const DiffPolynomial& h);

// Sigma-criterion completion of the homogenized input modulo N, saturating
// every new element, followed by dehomogenization. `ring` is the base ring
// and must use the weight ranking over degrevlex.
std::vector<DiffPolynomial> sigma_gbasis2(const Ring& ring, const std::vector<DiffPolynomial>& H, GBRun& run);

}  // namespace sigmagb

#endif
