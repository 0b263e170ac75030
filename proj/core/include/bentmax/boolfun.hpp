#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bentmax/field.hpp"

namespace bentmax {

/// Boolean function on F_{2^n} as a truth table indexed by the integer
/// encoding of field elements.
struct BoolFun {
  int n = 0;
  std::vector<std::uint8_t> table;  // size 2^n, entries 0/1

  bool operator==(const BoolFun&) const = default;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;  // size 2^n, index lambda

  /// True iff n is even and every coefficient is +-2^(n/2).
  bool is_bent() const;
};

/// f(x) = Tr(alpha * x^d), 0 < d <= 2^n - 1.
BoolFun monomial(const Field& field, Elem alpha, std::int64_t d);

/// Exact integer spectrum W[lambda] = sum_x (-1)^(f(x) + Tr(lambda x)),
/// computed as a dyadic butterfly over bit-vector indices followed by the
/// relabeling u = linear_form_mask(lambda).
WalshSpectrum walsh(const Field& field, const BoolFun& f);

bool is_bent(const Field& field, const BoolFun& f);

/// Dual of a bent function: 0 where the spectrum is +2^(n/2), 1 where it is
/// -2^(n/2).  Throws std::domain_error if f is not bent.
BoolFun dual(const Field& field, const BoolFun& f);

/// In-place +-1 butterfly; exposed for batch users (sweeps, scans).
void fwht_inplace(std::vector<std::int64_t>& a);

/// Truth table as a hex string: element x is bit (x mod 4) of hex digit
/// floor(x / 4), digits in increasing x order.
std::string to_hex(const BoolFun& f);
BoolFun boolfun_from_hex(int n, std::string_view hex);

struct TraceTerm {
  std::uint32_t leader = 0;   // coset leader j
  Elem coeff = 0;             // F_j, an element of F_{2^{coset_size}}
  int coset_size = 0;         // n_j
};

/// Trace representation f(x) = sum_j Tr_{n_j}(F_j x^j) + tail * x^(2^n - 1);
/// only nonzero terms are stored.
struct TraceRepr {
  int n = 0;
  std::vector<TraceTerm> terms;
  int tail_bit = 0;
};

/// Coefficients by Fourier inversion over the multiplicative group;
/// rebuild(field, trace_repr(field, f)) == f exactly.
TraceRepr trace_repr(const Field& field, const BoolFun& f);
BoolFun rebuild(const Field& field, const TraceRepr& repr);

/// Vectorial function on F_{2^n} with element values.
struct VectorialFun {
  enum class Kind { power, pott_binomial };
  int n = 0;
  Kind kind = Kind::power;
  std::int64_t param = 0;    // exponent d, or the i of x^(2^i)(x + x^(2^k))
  std::vector<Elem> table;   // size 2^n
};

/// F(x) = x^d, 0 < d < 2^n - 1.
VectorialFun power_map(const Field& field, std::int64_t d);

/// F(x) = x^(2^i) * (x + x^(2^k)) for n = 2k; throws on odd n.
VectorialFun pott_binomial(const Field& field, int i);

}  // namespace bentmax
