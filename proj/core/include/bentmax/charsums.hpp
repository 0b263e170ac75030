#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "bentmax/field.hpp"

namespace bentmax {

/// Gauss sums G(chi^j) of every multiplicative character of F_{2^n}^*,
/// indexed through the discrete-log character chi(g^i) = w^i with
/// w = exp(2 pi i / (2^n - 1)).
struct GaussTable {
  int n = 0;
  std::vector<std::complex<double>> values;  // size 2^n - 1, index j
};

/// Direct O(4^n) summation; requires n <= 14.  The construction checks the
/// table invariants (trivial character -1, modulus 2^(n/2), index doubling)
/// and throws std::logic_error if they fail numerically.
GaussTable gauss_table(const Field& field);

struct GaussCheck {
  std::string name;
  double max_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Per-invariant numeric checks of a Gauss table.
std::vector<GaussCheck> verify_gauss_invariants(const Field& field, const GaussTable& table);

/// Character-sum expansion of (-1)^Tr(x); must match the exact sign within
/// 1e-6 for every nonzero x.  Throws std::domain_error on x = 0.
double trace_from_gauss(const Field& field, const GaussTable& table, Elem x);

/// Character-sum expansion of the Walsh coefficient of Tr(alpha x^d) at
/// nonzero lambda; matches the exact integer spectrum within 1e-4 at n <= 8.
/// Throws std::domain_error on lambda = 0 or alpha = 0.
double walsh_via_gauss(const Field& field, const GaussTable& table, Elem alpha, std::int64_t d,
                       Elem lambda);

}  // namespace bentmax
