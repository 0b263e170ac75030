#include "bentmax/weights.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bentmax {

namespace {

void check_degree(int n, int lo, int hi, const char* who) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(who) + ": n out of range [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]: " + std::to_string(n));
}

std::uint64_t reduce(std::int64_t j, std::uint64_t ord) {
  std::int64_t r = j % static_cast<std::int64_t>(ord);
  if (r < 0) r += static_cast<std::int64_t>(ord);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

int wt_mod(std::int64_t j, int n) {
  check_degree(n, 1, 62, "wt_mod");
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  return std::popcount(reduce(j, ord));
}

int v_d(std::int64_t d, std::int64_t j, int n) {
  check_degree(n, 1, 62, "v_d");
  const std::int64_t ord = (std::int64_t{1} << n) - 1;
  if (d <= 0 || d >= ord) throw std::invalid_argument("v_d: d out of range (0, 2^n-1)");
  if (j <= 0 || j >= ord) throw std::invalid_argument("v_d: j out of range (0, 2^n-1)");
  const auto prod = static_cast<__int128>(j) * d;
  const auto neg = -static_cast<std::int64_t>(prod % ord);
  return wt_mod(j, n) + wt_mod(neg, n);
}

ExponentProfile exponent_profile(std::int64_t d, int n) {
  check_degree(n, 2, Field::max_degree, "exponent_profile");
  if (n % 2 != 0) throw std::invalid_argument("exponent_profile: n must be even");
  const std::uint32_t ord = (std::uint32_t{1} << n) - 1;
  if (d <= 0 || d >= ord) throw std::invalid_argument("exponent_profile: d out of range");

  ExponentProfile p;
  p.n = n;
  p.k = n / 2;
  p.d = static_cast<std::uint32_t>(d);
  p.min_v = n + 1;
  for (std::uint32_t j = 1; j < ord; ++j) {
    // wt(j) + wt(-jd) on representatives in [0, ord).
    const std::uint64_t jd = (static_cast<std::uint64_t>(j) * p.d) % ord;
    const int v = std::popcount(j) + std::popcount(jd == 0 ? 0 : ord - jd);
    if (v < p.min_v) {
      p.min_v = v;
      p.j_set.clear();
    }
    if (v == p.min_v) p.j_set.push_back(j);
  }
  p.all_jd_zero = true;
  for (std::uint32_t j : p.j_set)
    if ((static_cast<std::uint64_t>(j) * p.d) % ord != 0) p.all_jd_zero = false;

  const std::uint32_t k1 = (std::uint32_t{1} << p.k) + 1;
  p.divisible_2k1 = p.d % k1 == 0;
  if (p.divisible_2k1) {
    p.s_value = p.d / k1;
    p.s_coprime = std::gcd(p.s_value, (std::uint32_t{1} << p.k) - 1) == 1;
  }
  return p;
}

Elem pi_d(const Field& field, const ExponentProfile& profile, Elem alpha) {
  if (field.degree() != profile.n)
    throw std::invalid_argument("pi_d: field degree does not match profile");
  Elem acc = 0;
  for (std::uint32_t j : profile.j_set) acc ^= field.pow(alpha, j);
  return acc;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(int n) {
  check_degree(n, 1, Field::max_degree, "cyclotomic_cosets");
  const std::uint32_t ord = (std::uint32_t{1} << n) - 1;
  std::vector<CyclotomicCoset> out;
  if (ord == 1) {
    out.push_back({0, {0}});
    return out;
  }
  std::vector<bool> seen(ord, false);
  for (std::uint32_t t = 0; t < ord; ++t) {
    if (seen[t]) continue;
    CyclotomicCoset c;
    c.leader = t;
    std::uint32_t v = t;
    do {
      c.members.push_back(v);
      seen[v] = true;
      v = static_cast<std::uint32_t>((std::uint64_t{v} * 2) % ord);
    } while (v != t);
    out.push_back(std::move(c));
  }
  return out;
}

bool CarryTrace::recurrence_holds() const {
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  if (h >= ord || (f + g) % ord != h % ord) return false;
  for (int i = 0; i < n; ++i) {
    const int fi = (f >> i) & 1, gi = (g >> i) & 1, hi = (h >> i) & 1;
    const int ci = (carry >> i) & 1;
    const int cprev = (carry >> ((i + n - 1) % n)) & 1;
    if (hi + 2 * ci != fi + gi + cprev) return false;
  }
  return true;
}

int CarryTrace::weight_lhs() const { return std::popcount(f) + std::popcount(g); }
int CarryTrace::weight_rhs() const { return std::popcount(h) + std::popcount(carry); }

CarrySeedProbe probe_carry_seeds(std::uint64_t f, std::uint64_t g, int n) {
  check_degree(n, 1, 62, "add_with_carry");
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  if (f >= ord || g >= ord)
    throw std::invalid_argument("add_with_carry: operands must lie in [0, 2^n-1)");
  CarrySeedProbe probe;
  for (int seed = 0; seed < 2; ++seed) {
    std::uint64_t h = 0, c = 0;
    int cprev = seed;
    for (int i = 0; i < n; ++i) {
      const int s = static_cast<int>((f >> i) & 1) + static_cast<int>((g >> i) & 1) + cprev;
      h |= static_cast<std::uint64_t>(s & 1) << i;
      cprev = s >> 1;
      c |= static_cast<std::uint64_t>(cprev) << i;
    }
    probe.consistent[seed] = cprev == seed;
    probe.h[seed] = h;
    probe.carry[seed] = c;
  }
  return probe;
}

CarryTrace add_with_carry(std::uint64_t f, std::uint64_t g, int n) {
  const CarrySeedProbe probe = probe_carry_seeds(f, g, n);
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  for (int seed = 0; seed < 2; ++seed) {
    if (!probe.consistent[seed] || probe.h[seed] >= ord) continue;
    CarryTrace t{n, f, g, probe.h[seed], probe.carry[seed]};
    return t;
  }
  throw std::logic_error("add_with_carry: no representative solution");  // unreachable
}

}  // namespace bentmax
