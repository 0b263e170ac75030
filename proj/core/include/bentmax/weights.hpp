#pragma once

#include <cstdint>
#include <vector>

#include "bentmax/field.hpp"

namespace bentmax {

/// Hamming weight of the representative of j modulo 2^n - 1 taken in
/// [0, 2^n - 1); in particular the weight of 2^n - 1 itself is 0.
int wt_mod(std::int64_t j, int n);

/// wt(j) + wt(-j*d), both weights modulo 2^n - 1.
/// Requires 0 < d < 2^n - 1 and 0 < j < 2^n - 1.
int v_d(std::int64_t d, std::int64_t j, int n);

/// Exponent profile for n = 2k: the minimum of V_d over 0 < j < 2^n - 1,
/// the full set of minimizers, and divisibility structure of d.
struct ExponentProfile {
  int n = 0;
  int k = 0;
  std::uint32_t d = 0;
  int min_v = 0;
  std::vector<std::uint32_t> j_set;  // sorted minimizers
  bool all_jd_zero = false;          // j*d = 0 mod 2^n-1 for every minimizer
  bool divisible_2k1 = false;        // (2^k + 1) | d
  std::uint32_t s_value = 0;         // d / (2^k + 1) when divisible
  bool s_coprime = false;            // gcd(s, 2^k - 1) == 1
};

ExponentProfile exponent_profile(std::int64_t d, int n);

/// Sum of alpha^j over the minimizer set, evaluated in the field.
Elem pi_d(const Field& field, const ExponentProfile& profile, Elem alpha);

struct CyclotomicCoset {
  std::uint32_t leader = 0;
  std::vector<std::uint32_t> members;  // leader, 2*leader, ... (mod 2^n - 1)
};

/// Partition of {0, ..., 2^n - 2} into orbits under doubling mod 2^n - 1,
/// ordered by leader.
std::vector<CyclotomicCoset> cyclotomic_cosets(int n);

/// The cyclic add-with-carry decomposition of h = f + g mod 2^n - 1:
/// h_i + 2 c_i = f_i + g_i + c_{i-1} with c_{-1} = c_{n-1}.
struct CarryTrace {
  int n = 0;
  std::uint64_t f = 0, g = 0, h = 0;
  std::uint64_t carry = 0;  // bit i = c_i

  bool recurrence_holds() const;
  int weight_lhs() const;  // wt(f) + wt(g)
  int weight_rhs() const;  // wt(h) + wt(carry)
};

/// Raw outcome of trying both cyclic carry seeds; at most one yields a
/// representative h < 2^n - 1.
struct CarrySeedProbe {
  bool consistent[2] = {false, false};
  std::uint64_t h[2] = {0, 0};
  std::uint64_t carry[2] = {0, 0};
};

CarrySeedProbe probe_carry_seeds(std::uint64_t f, std::uint64_t g, int n);

/// Requires 0 <= f, g < 2^n - 1.  The returned trace is the unique solution
/// with h in [0, 2^n - 1); for f + g = 0 mod 2^n - 1 this selects h = 0.
CarryTrace add_with_carry(std::uint64_t f, std::uint64_t g, int n);

}  // namespace bentmax
