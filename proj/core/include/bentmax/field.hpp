#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace bentmax {

/// A field element of F_{2^n} in the polynomial basis: bit i of the integer
/// is the coefficient of x^i.
using Elem = std::uint32_t;

/// Arithmetic in F_{2^n} (1 <= n <= 24) backed by discrete-log tables.
///
/// The modulus is a degree-n irreducible polynomial over GF(2) encoded as an
/// (n+1)-bit integer (leading bit and constant bit set).  The default modulus
/// for each degree is the lexicographically smallest primitive polynomial,
/// which makes x (encoded as 2) the generator.  User-supplied moduli may be
/// irreducible but non-primitive; a primitive generator is then found by
/// search and stored.
class Field {
 public:
  static constexpr int max_degree = 24;

  explicit Field(int n);
  Field(int n, std::uint32_t modulus);

  int degree() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }
  /// Multiplicative group order 2^n - 1.
  std::uint32_t order() const noexcept { return ord_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }

  static Elem add(Elem a, Elem b) noexcept { return a ^ b; }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= ord_) s -= ord_;
    return exp_[s];
  }

  /// Throws std::domain_error on a = 0.
  Elem inv(Elem a) const;

  /// a^e with e reduced mod 2^n-1 for a != 0.  pow(0, e) = 0 for e > 0;
  /// pow(0, e <= 0) throws std::domain_error.
  Elem pow(Elem a, std::int64_t e) const;

  /// Absolute trace onto F_2.
  int trace(Elem a) const noexcept { return std::popcount(a & trace_mask_) & 1; }

  /// Relative trace onto the subfield F_{2^m}; requires m | n.
  Elem rel_trace(int m, Elem a) const;

  /// Trace of a "within" F_{2^m}: sum of the first m Frobenius iterates.
  /// Requires m | n and a in the subfield F_{2^m}; the result is 0 or 1.
  int subfield_trace(int m, Elem a) const;

  /// Relative trace F_{2^from} -> F_{2^to} for a in the subfield F_{2^from};
  /// requires to | from | n.
  Elem rel_trace_in(int from, int to, Elem a) const;

  /// Smallest t > 0 with a^(2^t) = a; divides n.
  int frobenius_order(Elem a) const noexcept;

  /// True iff a = y^d for some y.  0 counts as a d-th power.
  bool is_dth_power(Elem a, std::int64_t d) const;

  std::uint32_t log(Elem a) const;
  Elem exp(std::uint32_t i) const noexcept { return exp_[i]; }

  /// All elements of the subfield F_{2^m} (m | n), sorted by encoding.
  std::vector<Elem> subfield(int m) const;

  /// Bit mask of the linear form x -> Tr(lambda * x): bit i is
  /// Tr(lambda * x^i).  The map lambda -> mask is an invertible linear
  /// relabeling used by the fast Walsh transform.
  std::uint32_t linear_form_mask(Elem lambda) const noexcept {
    return linear_form_[lambda];
  }

  std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }
  std::span<const std::uint32_t> linear_form_table() const noexcept {
    return linear_form_;
  }
  /// trace_exp_table()[i] = Tr(g^i); handy for log-space sweeps.
  std::span<const std::uint8_t> trace_exp_table() const noexcept {
    return trace_exp_;
  }

  /// Lexicographically smallest primitive polynomial of degree n.
  static std::uint32_t default_modulus(int n);

 private:
  void build(int n, std::uint32_t modulus);
  Elem frob_sum(Elem a, int step, int count) const;

  int n_ = 0;
  std::uint32_t ord_ = 0;
  std::uint32_t modulus_ = 0;
  Elem generator_ = 0;
  std::vector<std::uint32_t> exp_;          // size ord_
  std::vector<std::uint32_t> log_;          // size 2^n, log_[0] unused
  std::vector<std::uint8_t> trace_exp_;     // size ord_
  std::vector<std::uint32_t> linear_form_;  // size 2^n
  std::uint32_t trace_mask_ = 0;
};

namespace gf2poly {

/// Carry-less product of two GF(2) polynomials.
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
/// Remainder of a modulo m (m != 0).
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Rabin test for irreducibility of a degree-n polynomial.
bool is_irreducible(std::uint32_t poly, int n);

}  // namespace gf2poly

}  // namespace bentmax
