#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bentmax/boolfun.hpp"
#include "oracles.hpp"

using namespace bentmax;

namespace {

BoolFun random_fun(const Field& field, std::mt19937_64& rng) {
  BoolFun f{field.degree(), std::vector<std::uint8_t>(field.size(), 0)};
  for (auto& b : f.table) b = rng() & 1;
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("boolfun");

TEST_CASE("monomial truth tables") {
  const Field f2(2);
  const Elem omega = 2;
  const BoolFun m = monomial(f2, omega, 3);
  CHECK(m.table == std::vector<std::uint8_t>{0, 1, 1, 1});

  const Field f4(4);
  const BoolFun zero = monomial(f4, 0, 3);
  CHECK(std::count(zero.table.begin(), zero.table.end(), 1) == 0);

  CHECK_THROWS_AS(monomial(f4, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(monomial(f4, 1, 16), std::invalid_argument);
  // d = 2^n - 1: the nonzero indicator scaled by Tr(alpha)
  const Elem g = f4.generator();
  const BoolFun ind = monomial(f4, g, 15);
  for (Elem x = 0; x < f4.size(); ++x)
    CHECK(ind.table[x] == (x == 0 ? 0 : f4.trace(g)));
}

TEST_CASE("monomial of alpha^2 is the alpha monomial precomposed with squaring") {
  const Field f(6);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Elem alpha = static_cast<Elem>(rng() % f.size());
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % (f.order() - 1));
    const BoolFun fa = monomial(f, alpha, d);
    const BoolFun fa2 = monomial(f, f.mul(alpha, alpha), d);
    for (Elem x = 0; x < f.size(); ++x) CHECK(fa.table[x] == fa2.table[f.mul(x, x)]);
  }
}

TEST_CASE("walsh of the zero function is a delta at 0") {
  const Field f(4);
  const BoolFun zero{4, std::vector<std::uint8_t>(16, 0)};
  const WalshSpectrum w = walsh(f, zero);
  CHECK(w.values[0] == 16);
  for (Elem lam = 1; lam < 16; ++lam) CHECK(w.values[lam] == 0);
}

TEST_CASE("walsh of the F_4 cubic monomial is flat +-2") {
  const Field f(2);
  const WalshSpectrum w = walsh(f, monomial(f, 2, 3));
  for (auto v : w.values) CHECK(std::abs(v) == 2);
  CHECK(w.is_bent());
}

TEST_CASE("fast transform equals the definitional double loop") {
  for (int n : {1, 2, 3, 4, 6, 8}) {
    const Field f(n);
    std::mt19937_64 rng(100 + n);
    for (int t = 0; t < 25; ++t) {
      const BoolFun fn = random_fun(f, rng);
      const WalshSpectrum w = walsh(f, fn);
      const auto direct = oracles::walsh_direct(f, fn);
      CHECK(w.values == direct);
    }
  }
}

TEST_CASE("Parseval and the weight identity at lambda = 0") {
  for (int n : {4, 6}) {
    const Field f(n);
    std::mt19937_64 rng(41 + n);
    for (int t = 0; t < 100; ++t) {
      const BoolFun fn = random_fun(f, rng);
      const WalshSpectrum w = walsh(f, fn);
      std::int64_t sumsq = 0;
      for (auto v : w.values) sumsq += v * v;
      CHECK(sumsq == static_cast<std::int64_t>(f.size()) * f.size());
      const auto ones = std::count(fn.table.begin(), fn.table.end(), 1);
      CHECK(w.values[0] == static_cast<std::int64_t>(f.size()) - 2 * ones);
    }
  }
}

TEST_CASE("spectrum of the alpha^2 component is the sqrt-relabeled spectrum") {
  const Field f(6);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Elem alpha = 1 + static_cast<Elem>(rng() % (f.size() - 1));
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % (f.order() - 1));
    const WalshSpectrum wa = walsh(f, monomial(f, alpha, d));
    const WalshSpectrum wa2 = walsh(f, monomial(f, f.mul(alpha, alpha), d));
    for (Elem lam = 0; lam < f.size(); ++lam) {
      const Elem sqrt_lam = lam == 0 ? 0 : f.pow(lam, std::int64_t{1} << (f.degree() - 1));
      CHECK(wa2.values[lam] == wa.values[sqrt_lam]);
    }
  }
}

TEST_CASE("is_bent and dual") {
  const Field f2(2);
  const BoolFun m = monomial(f2, 2, 3);
  CHECK(is_bent(f2, m));
  const BoolFun zero{2, std::vector<std::uint8_t>(4, 0)};
  CHECK_FALSE(is_bent(f2, zero));
  CHECK_THROWS_AS(dual(f2, zero), std::domain_error);

  // duality is an involution on sampled bent monomials
  for (int n : {2, 4, 6}) {
    const Field f(n);
    int found = 0;
    for (std::int64_t d = 1; d <= f.order() && found < 6; ++d)
      for (Elem a = 1; a < f.size() && found < 6; ++a) {
        const BoolFun fn = monomial(f, a, d);
        if (!is_bent(f, fn)) continue;
        ++found;
        const BoolFun dd = dual(f, dual(f, fn));
        CHECK(dd == fn);
      }
    CHECK(found > 0);
  }
}

TEST_CASE("hex serialization round-trips and matches the F_4 example") {
  const Field f2(2);
  CHECK(to_hex(monomial(f2, 2, 3)) == "e");  // table (0,1,1,1)

  for (int n : {2, 4, 6}) {
    const Field f(n);
    std::mt19937_64 rng(777 + n);
    for (int t = 0; t < 50; ++t) {
      const BoolFun fn = random_fun(f, rng);
      CHECK(boolfun_from_hex(n, to_hex(fn)) == fn);
    }
  }
  CHECK_THROWS_AS(boolfun_from_hex(4, "zzzz"), std::invalid_argument);
  CHECK_THROWS_AS(boolfun_from_hex(4, "123"), std::invalid_argument);
}

TEST_CASE("trace representation: frozen forms") {
  const Field f(4);
  const TraceRepr single = trace_repr(f, monomial(f, 1, 3));
  REQUIRE(single.terms.size() == 1);
  CHECK(single.terms[0].leader == 3);
  CHECK(single.terms[0].coeff == 1);
  CHECK(single.terms[0].coset_size == 4);
  CHECK(single.tail_bit == 0);

  BoolFun ones{4, std::vector<std::uint8_t>(16, 1)};
  const TraceRepr constant = trace_repr(f, ones);
  REQUIRE(constant.terms.size() == 1);
  CHECK(constant.terms[0].leader == 0);
  CHECK(constant.terms[0].coeff == 1);
  CHECK(constant.tail_bit == 0);
  CHECK(rebuild(f, constant) == ones);
}

TEST_CASE("trace representation round-trips and coefficients sit in their subfields") {
  for (int n : {4, 6}) {
    const Field f(n);
    std::mt19937_64 rng(900 + n);
    for (int t = 0; t < 1000; ++t) {
      const BoolFun fn = random_fun(f, rng);
      const TraceRepr repr = trace_repr(f, fn);
      for (const auto& term : repr.terms)
        CHECK(f.pow(term.coeff, std::int64_t{1} << term.coset_size) == term.coeff);
      CHECK(rebuild(f, repr) == fn);
    }
  }
}

TEST_CASE("pott binomial table") {
  const Field f(4);
  const VectorialFun p0 = pott_binomial(f, 0);
  for (Elem x = 1; x < f.size(); ++x) {
    const Elem expect = Field::add(f.pow(x, 2), f.pow(x, 5));  // x^2 + x^5 at n = 4, i = 0
    CHECK(p0.table[x] == expect);
  }
  CHECK(p0.table[0] == 0);
  for (Elem x : f.subfield(2)) CHECK(p0.table[x] == 0);  // subfield kernel

  const Field f3(3);
  CHECK_THROWS_AS(pott_binomial(f3, 0), std::invalid_argument);

  // i = 4 composes with Frobenius^4, the identity on F_16
  CHECK(pott_binomial(f, 4).table == p0.table);
}

TEST_SUITE_END();
