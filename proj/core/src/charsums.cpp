#include "bentmax/charsums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bentmax {

namespace {

// Compensated (Kahan) accumulation; the n >= 10 tables sum millions of
// roots of unity and plain accumulation drifts past the stated tolerances.
struct KahanSum {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> c{0.0, 0.0};

  void add(std::complex<double> v) {
    const std::complex<double> y = v - c;
    const std::complex<double> t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

std::vector<std::complex<double>> root_powers(std::uint32_t ord) {
  std::vector<std::complex<double>> w(ord);
  for (std::uint32_t t = 0; t < ord; ++t) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / ord;
    w[t] = {std::cos(ang), std::sin(ang)};
  }
  return w;
}

}  // namespace

GaussTable gauss_table(const Field& field) {
  const int n = field.degree();
  if (n > 14) throw std::invalid_argument("gauss_table: n capped at 14 (O(4^n) summation)");
  const std::uint32_t ord = field.order();
  const auto w = root_powers(ord);
  const auto tr = field.trace_exp_table();

  GaussTable table;
  table.n = n;
  table.values.resize(ord);
  for (std::uint32_t j = 0; j < ord; ++j) {
    KahanSum acc;
    std::uint64_t ij = 0;
    for (std::uint32_t i = 0; i < ord; ++i) {
      acc.add(tr[i] ? -w[ij] : w[ij]);
      ij += j;
      if (ij >= ord) ij -= ord;
    }
    table.values[j] = acc.sum;
  }

  for (const auto& check : verify_gauss_invariants(field, table))
    if (!check.pass)
      throw std::logic_error("gauss_table: invariant failed: " + check.name);
  return table;
}

std::vector<GaussCheck> verify_gauss_invariants(const Field& field, const GaussTable& table) {
  const std::uint32_t ord = field.order();
  const double q = static_cast<double>(field.size());
  std::vector<GaussCheck> checks;

  {
    GaussCheck c{"trivial-character-value", 0.0, 1e-9, false};
    c.max_err = std::abs(table.values[0] - std::complex<double>{-1.0, 0.0});
    c.pass = c.max_err <= c.tol;
    checks.push_back(c);
  }
  {
    GaussCheck c{"nontrivial-modulus", 0.0, 1e-6, false};
    for (std::uint32_t j = 1; j < ord; ++j) {
      const double err = std::abs(std::norm(table.values[j]) - q) / q;
      if (err > c.max_err) c.max_err = err;
    }
    c.pass = c.max_err <= c.tol;
    checks.push_back(c);
  }
  {
    GaussCheck c{"index-doubling", 0.0, 1e-9, false};
    for (std::uint32_t j = 0; j < ord; ++j) {
      const std::uint32_t j2 = static_cast<std::uint32_t>((std::uint64_t{j} * 2) % ord);
      const double err = std::abs(table.values[j2] - table.values[j]);
      if (err > c.max_err) c.max_err = err;
    }
    c.pass = c.max_err <= c.tol;
    checks.push_back(c);
  }
  {
    GaussCheck c{"conjugate-symmetry", 0.0, 1e-6, false};
    for (std::uint32_t j = 1; j < ord; ++j) {
      const double err = std::abs(table.values[ord - j] - std::conj(table.values[j]));
      if (err > c.max_err) c.max_err = err;
    }
    c.pass = c.max_err <= c.tol;
    checks.push_back(c);
  }
  return checks;
}

double trace_from_gauss(const Field& field, const GaussTable& table, Elem x) {
  if (x == 0) throw std::domain_error("trace_from_gauss: x must be nonzero");
  if (table.n != field.degree())
    throw std::invalid_argument("trace_from_gauss: table does not match field");
  const std::uint32_t ord = field.order();
  const auto w = root_powers(ord);
  const std::uint32_t lx = field.log(x);
  KahanSum acc;
  // sum over all characters of G(chi) * conj(chi)(x)
  std::uint64_t t = 0;
  for (std::uint32_t j = 0; j < ord; ++j) {
    acc.add(table.values[j] * std::conj(w[t]));
    t += lx;
    if (t >= ord) t -= ord;
  }
  return acc.sum.real() / ord;
}

double walsh_via_gauss(const Field& field, const GaussTable& table, Elem alpha, std::int64_t d,
                       Elem lambda) {
  if (lambda == 0) throw std::domain_error("walsh_via_gauss: lambda must be nonzero");
  if (alpha == 0) throw std::domain_error("walsh_via_gauss: alpha must be nonzero");
  if (table.n != field.degree())
    throw std::invalid_argument("walsh_via_gauss: table does not match field");
  const std::uint32_t ord = field.order();
  if (d <= 0 || d >= ord) throw std::invalid_argument("walsh_via_gauss: d out of range");

  const auto w = root_powers(ord);
  const std::uint64_t la = field.log(alpha);
  const std::uint64_t ll = field.log(lambda);
  const std::uint64_t dd = static_cast<std::uint64_t>(d);
  KahanSum acc;
  for (std::uint32_t j = 1; j < ord; ++j) {
    const std::uint32_t jd = static_cast<std::uint32_t>((std::uint64_t{j} * dd) % ord);
    const auto g_neg_j = table.values[ord - j];
    const auto g_jd = table.values[jd];
    const auto chi_j_alpha = w[(static_cast<std::uint64_t>(j) * la) % ord];
    const auto chi_neg_jd_lambda = std::conj(w[(static_cast<std::uint64_t>(jd) * ll) % ord]);
    acc.add(g_neg_j * g_jd * chi_j_alpha * chi_neg_jd_lambda);
  }
  const double q = static_cast<double>(field.size());
  return (q + acc.sum.real()) / ord;
}

}  // namespace bentmax
