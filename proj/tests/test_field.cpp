#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "bentmax/field.hpp"
#include "oracles.hpp"

using namespace bentmax;

TEST_SUITE_BEGIN("field");

TEST_CASE("default modulus is the lexicographically smallest primitive polynomial") {
  // Independent search: brute irreducibility by trial division, brute order
  // of x by repeated multiplication.
  for (int n = 1; n <= 10; ++n) {
    const std::uint32_t ord = (std::uint32_t{1} << n) - 1;
    std::uint32_t expected = 0;
    for (std::uint32_t m = (std::uint32_t{1} << n) + 1; m < (std::uint32_t{2} << n); m += 2) {
      if (!oracles::poly_irreducible_brute(m, n)) continue;
      if (oracles::order_of_x_brute(m, n) != ord) continue;
      expected = m;
      break;
    }
    CAPTURE(n);
    CHECK(Field::default_modulus(n) == expected);
  }
  // Known classics.
  CHECK(Field::default_modulus(2) == 0x7);
  CHECK(Field::default_modulus(3) == 0xB);
  CHECK(Field::default_modulus(4) == 0x13);
  CHECK(Field::default_modulus(8) == 0x11D);
}

TEST_CASE("construction rejects bad degrees and bad moduli") {
  CHECK_THROWS_AS(Field(0), std::invalid_argument);
  CHECK_THROWS_AS(Field(25), std::invalid_argument);
  CHECK_THROWS_AS(Field(4, 0x15), std::invalid_argument);  // (x^2+x+1)^2
  CHECK_THROWS_AS(Field(4, 0xB), std::invalid_argument);   // degree 3
  CHECK_THROWS_AS(Field(4, 0x12), std::invalid_argument);  // constant term 0
}

TEST_CASE("build_field(2): the unique degree-2 irreducible") {
  const Field f(2);
  CHECK(f.modulus() == 0x7);
  CHECK(f.generator() == 2);
  CHECK(f.order() == 3);
}

TEST_CASE("build_field(4): x^4+x+1 with x as generator") {
  const Field f(4);
  CHECK(f.modulus() == 0x13);
  CHECK(f.generator() == 2);
}

TEST_CASE("irreducible but non-primitive modulus: generator found by search") {
  // Under x^4+x^3+x^2+x+1 the element x has order 5.
  const Field f(4, 0x1F);
  CHECK(f.modulus() == 0x1F);

  std::uint32_t x_order = 1;
  Elem v = 2;
  while (v != 1) {
    v = f.mul(v, 2);
    ++x_order;
  }
  CHECK(x_order == 5);
  CHECK(f.generator() != 2);

  std::uint32_t g_order = 1;
  v = f.generator();
  while (v != 1) {
    v = f.mul(v, f.generator());
    ++g_order;
  }
  CHECK(g_order == 15);
}

TEST_CASE("exp/log tables are mutually inverse") {
  for (int n : {1, 2, 4, 6, 8}) {
    const Field f(n);
    for (std::uint32_t i = 0; i < f.order(); ++i) CHECK(f.log(f.exp(i)) == i);
    for (Elem a = 1; a < f.size(); ++a) CHECK(f.exp(f.log(a)) == a);
  }
}

TEST_CASE("mul: identity, zero, and the reduction x * x^3 = x + 1") {
  const Field f(4);
  for (Elem y = 0; y < f.size(); ++y) {
    CHECK(f.mul(1, y) == y);
    CHECK(f.mul(0, y) == 0);
  }
  CHECK(f.mul(0x2, 0x8) == 0x3);
}

TEST_CASE("log is additive under mul") {
  const Field f(8);
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::uint32_t> pick(1, f.order());
  for (int t = 0; t < 2000; ++t) {
    const Elem a = pick(rng), b = pick(rng);
    const std::uint32_t expect = (f.log(a) + f.log(b)) % f.order();
    CHECK(f.log(f.mul(a, b)) == expect);
  }
}

TEST_CASE("inv and pow") {
  const Field f(4);
  CHECK(f.inv(1) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  for (Elem a = 1; a < f.size(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);

  CHECK(f.pow(f.generator(), 15) == 1);
  CHECK(f.pow(0, 5) == 0);
  CHECK_THROWS_AS(f.pow(0, 0), std::domain_error);
  CHECK_THROWS_AS(f.pow(0, -3), std::domain_error);
  for (Elem a = 1; a < f.size(); ++a) {
    CHECK(f.pow(a, 0) == 1);
    CHECK(f.pow(a, -1) == f.inv(a));
    CHECK(f.pow(a, 16) == f.pow(f.pow(a, 4), 4));
  }
}

TEST_CASE("trace values over F_4 and balancedness everywhere") {
  const Field f2(2);
  CHECK(f2.trace(1) == 0);
  CHECK(f2.trace(2) == 1);  // omega
  CHECK(f2.trace(3) == 1);  // omega^2

  for (int n : {1, 2, 3, 4, 6, 8}) {
    const Field f(n);
    int ones = 0;
    for (Elem a = 0; a < f.size(); ++a) ones += f.trace(a);
    CHECK(ones == static_cast<int>(f.size() / 2));
    // linearity
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const Elem a = pick(rng), b = pick(rng);
      CHECK(f.trace(Field::add(a, b)) == (f.trace(a) ^ f.trace(b)));
    }
  }
}

TEST_CASE("rel_trace lands in the subfield and composes with the subfield trace") {
  for (int n : {4, 6, 8, 12}) {
    const Field f(n);
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      for (Elem a = 0; a < f.size(); ++a) {
        const Elem r = f.rel_trace(m, a);
        CHECK(f.pow(r, std::int64_t{1} << m) == r);
        CHECK(f.subfield_trace(m, r) == f.trace(a));
      }
    }
  }
  const Field f(4);
  CHECK_THROWS_AS(f.rel_trace(3, 1), std::invalid_argument);
}

TEST_CASE("frobenius_order divides n and counts subfields exactly") {
  const Field f16(4);
  CHECK(f16.frobenius_order(0) == 1);
  CHECK(f16.frobenius_order(f16.generator()) == 4);
  // an element of multiplicative order 3 lies in F_4
  const Elem omega = f16.exp(5);
  CHECK(f16.frobenius_order(omega) == 2);

  for (int n : {4, 6}) {
    const Field f(n);
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      std::uint32_t count = 0;
      for (Elem a = 0; a < f.size(); ++a)
        if (m % f.frobenius_order(a) == 0) ++count;
      CHECK(count == (std::uint32_t{1} << m));
    }
    for (Elem a = 0; a < f.size(); ++a) CHECK(n % f.frobenius_order(a) == 0);
  }
}

TEST_CASE("is_dth_power matches the exponent characterization") {
  const Field f16(4);
  CHECK(f16.is_dth_power(1, 3));
  CHECK_FALSE(f16.is_dth_power(f16.generator(), 3));
  for (Elem a = 1; a < f16.size(); ++a) CHECK(f16.is_dth_power(a, 7));  // gcd(7,15)=1

  for (int n : {4, 6}) {
    const Field f(n);
    for (std::int64_t d = 1; d <= 20; ++d)
      for (Elem a = 1; a < f.size(); ++a) {
        const std::uint64_t dr = static_cast<std::uint64_t>(d) % f.order();
        const std::uint32_t g = std::gcd(static_cast<std::uint32_t>(dr), f.order());
        const bool expect = f.pow(a, f.order() / g) == 1;
        CHECK(f.is_dth_power(a, d) == expect);
      }
  }
}

TEST_CASE("subfield enumeration is closed and has the right size") {
  const Field f(12);
  for (int m : {1, 2, 3, 4, 6, 12}) {
    const auto sub = f.subfield(m);
    CHECK(sub.size() == (std::size_t{1} << m));
    std::set<Elem> set(sub.begin(), sub.end());
    for (Elem a : sub)
      for (Elem b : sub) CHECK(set.count(f.mul(a, b)) == 1);
  }
}

TEST_CASE("linear form relabeling is a bijection matching Tr(lambda x)") {
  for (int n : {2, 4, 6}) {
    const Field f(n);
    std::set<std::uint32_t> seen;
    for (Elem lam = 0; lam < f.size(); ++lam) {
      const std::uint32_t u = f.linear_form_mask(lam);
      seen.insert(u);
      for (Elem x = 0; x < f.size(); ++x)
        CHECK(f.trace(f.mul(lam, x)) == (std::popcount(u & x) & 1));
    }
    CHECK(seen.size() == f.size());
  }
}

TEST_SUITE_END();
