#include "bentmax/kloosterman.hpp"

#include <stdexcept>
#include <string>

#include "bentmax/boolfun.hpp"

namespace bentmax {

std::int64_t kloosterman_sum(const Field& fk, Elem alpha) {
  std::int64_t s = 0;
  for (std::uint32_t x = 1; x < fk.size(); ++x) {
    const Elem arg = Field::add(fk.mul(alpha, x), fk.inv(x));
    s += fk.trace(arg) ? -1 : 1;
  }
  return s;
}

std::vector<std::int64_t> kloosterman_table(const Field& fk) {
  // The sums are the Walsh coefficients of x -> Tr(1/x) shifted by the x = 0
  // term; one transform replaces 2^k independent summations.
  BoolFun g{fk.degree(), std::vector<std::uint8_t>(fk.size(), 0)};
  for (std::uint32_t x = 1; x < fk.size(); ++x)
    g.table[x] = static_cast<std::uint8_t>(fk.trace(fk.inv(x)));
  const WalshSpectrum w = walsh(fk, g);
  std::vector<std::int64_t> sums(fk.size());
  for (std::uint32_t a = 0; a < fk.size(); ++a) sums[a] = w.values[a] - 1;
  return sums;
}

std::int64_t kloosterman_sum_embedded(const Field& big, int k, Elem alpha) {
  if (k < 1 || big.degree() % k != 0)
    throw std::invalid_argument("kloosterman_sum_embedded: k must divide the field degree");
  if (big.pow(alpha, std::int64_t{1} << k) != alpha)
    throw std::invalid_argument("kloosterman_sum_embedded: alpha not in F_{2^k}");
  std::int64_t s = 0;
  for (Elem x : big.subfield(k)) {
    if (x == 0) continue;
    const Elem arg = Field::add(big.mul(alpha, x), big.inv(x));
    s += big.subfield_trace(k, arg) ? -1 : 1;
  }
  return s;
}

std::vector<KloostermanRow> kloosterman_rows(const Field& fk) {
  const auto sums = kloosterman_table(fk);
  std::vector<KloostermanRow> rows(fk.size());
  for (std::uint32_t a = 0; a < fk.size(); ++a)
    rows[a] = {fk.degree(), a, sums[a], fk.trace(a)};
  return rows;
}

TraceScanResult scan_trace_theorem(int k) {
  if (k < 1 || k > 20)
    throw std::invalid_argument("scan_trace_theorem: k out of range [1, 20]: " +
                                std::to_string(k));
  // Degrees above Field::max_degree would need wider tables anyway; the cap
  // of 20 keeps the scan well inside that limit.
  const Field fk(k);
  const auto sums = kloosterman_table(fk);
  TraceScanResult r;
  r.k = k;
  for (std::uint32_t a = 0; a < fk.size(); ++a) {
    if (sums[a] != -1) continue;
    r.zero_set.push_back(a);
    if (fk.trace(a)) r.violations.push_back(a);
  }
  return r;
}

bool dillon_cross_check(int k) {
  if (k < 2 || k > 6)
    throw std::invalid_argument("dillon_cross_check: k out of range [2, 6]");
  const Field big(2 * k);
  const std::int64_t d = (std::int64_t{1} << k) - 1;
  for (Elem alpha : big.subfield(k)) {
    if (alpha == 0) continue;
    const bool zero = kloosterman_sum_embedded(big, k, alpha) == -1;
    const bool bent = is_bent(big, monomial(big, alpha, d));
    if (zero != bent) return false;
  }
  return true;
}

}  // namespace bentmax
