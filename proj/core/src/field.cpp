#include "bentmax/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bentmax {

namespace gf2poly {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = std::bit_width(m) - 1;
  int da = std::bit_width(a) - 1;
  while (a != 0 && da >= dm) {
    a ^= m << (da - dm);
    da = std::bit_width(a) - 1;
  }
  return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return mod(mul(a, b), m);
}

// x^(2^e) mod m by repeated squaring.
std::uint64_t frob_x(int e, std::uint64_t m) {
  std::uint64_t r = 2;  // x
  for (int i = 0; i < e; ++i) r = mulmod(r, r, m);
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t poly, int n) {
  if (n < 1) return false;
  if (static_cast<int>(std::bit_width(std::uint64_t{poly})) - 1 != n) return false;
  if ((poly & 1u) == 0) return poly == 2;  // divisible by x
  const std::uint64_t x_red = mod(2, poly);
  if (frob_x(n, poly) != x_red) return false;
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    if (gcd(frob_x(n / p, poly) ^ x_red, poly) != 1) return false;
  }
  return true;
}

}  // namespace gf2poly

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  return ps;
}

std::uint64_t poly_pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  base = gf2poly::mod(base, m);
  while (e) {
    if (e & 1) r = gf2poly::mod(gf2poly::mul(r, base), m);
    base = gf2poly::mod(gf2poly::mul(base, base), m);
    e >>= 1;
  }
  return r;
}

// True iff the element has multiplicative order exactly ord (= 2^n - 1),
// given the prime factors of ord.  Works before any tables exist.
bool has_full_order(std::uint64_t elem, std::uint32_t ord,
                    const std::vector<std::uint32_t>& ord_primes,
                    std::uint32_t modulus) {
  if (elem < 2) return ord == 1 && elem == 1;
  if (poly_pow_mod(elem, ord, modulus) != 1) return false;
  for (std::uint32_t p : ord_primes)
    if (poly_pow_mod(elem, ord / p, modulus) == 1) return false;
  return true;
}

}  // namespace

Field::Field(int n) { build(n, default_modulus(n)); }

Field::Field(int n, std::uint32_t modulus) { build(n, modulus); }

std::uint32_t Field::default_modulus(int n) {
  if (n < 1 || n > max_degree)
    throw std::invalid_argument("field degree out of range [1, 24]: " + std::to_string(n));
  const std::uint32_t ord = (std::uint32_t{1} << n) - 1;
  const auto primes = prime_factors(ord);
  const std::uint32_t lo = std::uint32_t{1} << n;
  for (std::uint32_t m = lo + 1; m < 2 * lo; m += 2) {
    if (!gf2poly::is_irreducible(m, n)) continue;
    if (has_full_order(2, ord, primes, m)) return m;
  }
  throw std::logic_error("no primitive polynomial found");  // unreachable
}

void Field::build(int n, std::uint32_t modulus) {
  if (n < 1 || n > max_degree)
    throw std::invalid_argument("field degree out of range [1, 24]: " + std::to_string(n));
  if (static_cast<int>(std::bit_width(std::uint64_t{modulus})) - 1 != n || (modulus & 1u) == 0 ||
      !gf2poly::is_irreducible(modulus, n))
    throw std::invalid_argument("modulus is not an irreducible polynomial of degree " +
                                std::to_string(n));

  n_ = n;
  ord_ = (std::uint32_t{1} << n) - 1;
  modulus_ = modulus;

  const auto primes = prime_factors(ord_);
  if (ord_ == 1) {
    generator_ = 1;
  } else if (has_full_order(2, ord_, primes, modulus_)) {
    generator_ = 2;  // x itself
  } else {
    generator_ = 0;
    for (std::uint32_t c = 3; c < size(); ++c) {
      if (has_full_order(c, ord_, primes, modulus_)) {
        generator_ = static_cast<Elem>(c);
        break;
      }
    }
    if (generator_ == 0) throw std::logic_error("no primitive element found");
  }

  exp_.assign(ord_, 0);
  log_.assign(size(), 0);
  if (generator_ == 2) {
    // Shift-and-reduce walk; covers every default modulus.
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < ord_; ++i) {
      exp_[i] = b;
      log_[b] = i;
      b <<= 1;
      if (b & size()) b ^= modulus_;
    }
  } else {
    std::uint64_t b = 1;
    for (std::uint32_t i = 0; i < ord_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(b);
      log_[b] = i;
      b = gf2poly::mod(gf2poly::mul(b, generator_), modulus_);
    }
  }

  // Trace of the basis monomials gives a parity mask for the whole map.
  trace_mask_ = 0;
  for (int i = 0; i < n_; ++i) {
    std::uint64_t a = std::uint64_t{1} << i;
    std::uint64_t acc = 0;
    std::uint64_t t = a;
    for (int s = 0; s < n_; ++s) {
      acc ^= t;
      t = gf2poly::mod(gf2poly::mul(t, t), modulus_);
    }
    if (acc == 1) trace_mask_ |= std::uint32_t{1} << i;
  }

  trace_exp_.assign(ord_, 0);
  for (std::uint32_t i = 0; i < ord_; ++i)
    trace_exp_[i] = static_cast<std::uint8_t>(trace(exp_[i]));

  // linear_form_[lambda] bit i = Tr(lambda * x^i), filled by linearity.
  linear_form_.assign(size(), 0);
  std::vector<std::uint32_t> basis(n_, 0);
  for (int i = 0; i < n_; ++i) {
    std::uint32_t u = 0;
    for (int j = 0; j < n_; ++j) {
      const Elem prod = mul(Elem{1} << i, Elem{1} << j);
      if (trace(prod)) u |= std::uint32_t{1} << j;
    }
    basis[i] = u;
  }
  for (std::uint32_t lam = 1; lam < size(); ++lam) {
    const int low = std::countr_zero(lam);
    linear_form_[lam] = linear_form_[lam & (lam - 1)] ^ basis[low];
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : ord_ - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e <= 0) throw std::domain_error("pow(0, e) undefined for e <= 0");
    return 0;
  }
  std::int64_t r = e % static_cast<std::int64_t>(ord_);
  if (r < 0) r += ord_;
  const std::uint64_t idx =
      (static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % ord_;
  return exp_[idx];
}

Elem Field::frob_sum(Elem a, int step, int count) const {
  Elem acc = 0;
  Elem t = a;
  for (int i = 0; i < count; ++i) {
    acc ^= t;
    for (int s = 0; s < step; ++s) t = mul(t, t);
  }
  return acc;
}

Elem Field::rel_trace(int m, Elem a) const {
  if (m < 1 || n_ % m != 0)
    throw std::invalid_argument("rel_trace: " + std::to_string(m) + " does not divide " +
                                std::to_string(n_));
  return frob_sum(a, m, n_ / m);
}

int Field::subfield_trace(int m, Elem a) const {
  if (m < 1 || n_ % m != 0)
    throw std::invalid_argument("subfield_trace: " + std::to_string(m) + " does not divide " +
                                std::to_string(n_));
  return static_cast<int>(frob_sum(a, 1, m));
}

Elem Field::rel_trace_in(int from, int to, Elem a) const {
  if (to < 1 || from % to != 0 || n_ % from != 0)
    throw std::invalid_argument("rel_trace_in: need to | from | n");
  return frob_sum(a, to, from / to);
}

int Field::frobenius_order(Elem a) const noexcept {
  if (a == 0) return 1;
  int t = 1;
  Elem b = mul(a, a);
  while (b != a) {
    b = mul(b, b);
    ++t;
  }
  return t;
}

bool Field::is_dth_power(Elem a, std::int64_t d) const {
  if (a == 0) return true;
  std::int64_t r = d % static_cast<std::int64_t>(ord_);
  if (r < 0) r += ord_;
  const std::uint32_t g = std::gcd(static_cast<std::uint32_t>(r), ord_);
  return log_[a] % g == 0;
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::vector<Elem> Field::subfield(int m) const {
  if (m < 1 || n_ % m != 0)
    throw std::invalid_argument("subfield: " + std::to_string(m) + " does not divide " +
                                std::to_string(n_));
  std::vector<Elem> out;
  const std::uint32_t sub_ord = (std::uint32_t{1} << m) - 1;
  out.reserve(sub_ord + 1);
  out.push_back(0);
  const std::uint32_t step = ord_ / sub_ord;
  for (std::uint32_t i = 0; i < sub_ord; ++i) out.push_back(exp_[i * step]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bentmax
