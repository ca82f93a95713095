#pragma once

// The trivariate polynomial attached to a univariate f:
//
//   φ(x, y, z) = (f(x) + f(y) + f(z) + f(x+y+z)) / ((x+y)(x+z)(y+z))
//
// Its affine zeros off the planes x=y, y=z, z=x are exactly the configurations
// that make a difference equation of f have four or more solutions.

#include "apnforge/tripoly.hpp"
#include "apnforge/unipoly.hpp"

namespace apnforge {

struct PhiSurface {
  UniPoly source_f;
  TriPoly poly;
  HomogDecomp decomp;
};

/// f(x) + f(y) + f(z) + f(x+y+z), expanded.
TriPoly phi_numerator(const UniPoly& f);

/// Throws InternalNonExactDivision if the numerator is not a multiple of A;
/// that would indicate an expansion bug, never a property of f.
PhiSurface build_phi(const UniPoly& f);

/// φ of x^d. Zero for d < 3 (the numerator vanishes identically).
TriPoly phi_monomial(unsigned d, const FieldPtr& field);

/// For even d = 2^j e (e odd): φ_d == φ_e^(2^j) · A^(2^j − 1), both sides expanded.
bool check_even_power_factorization(unsigned d);

/// True iff (x+y) does not divide φ_r. Expected for every odd r ≥ 3.
bool check_x_plus_y_coprime(unsigned r, const FieldPtr& field);

/// True iff (x+y) divides p − q.
bool congruent_mod_x_plus_y(const TriPoly& p, const TriPoly& q);

/// φ(f+g) == φ(f) + φ(g), and φ(f+g) == φ(f) when g is q-affine.
bool phi_linearity_check(const UniPoly& f, const UniPoly& g);

}  // namespace apnforge
