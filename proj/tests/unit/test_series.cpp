#include <doctest.h>

#include <cmath>
#include <tuple>
#include <vector>

#include "bohr/core_radius.hpp"
#include "bohr/families.hpp"
#include "bohr/multidim.hpp"
#include "bohr/oracle.hpp"
#include "bohr/sampling.hpp"
#include "bohr/series.hpp"

using namespace bohr;

namespace {

// plain long division of real polynomials, no compensation
std::vector<double> long_division(std::vector<double> num, const std::vector<double>& den, int K) {
  num.resize(K + 1, 0.0);
  std::vector<double> out(K + 1);
  for (int k = 0; k <= K; ++k) {
    out[k] = num[k] / den[0];
    for (std::size_t j = 0; j < den.size() && k + j <= static_cast<std::size_t>(K); ++j) {
      num[k + j] -= out[k] * den[j];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Mobius coefficients") {
  const auto s = coefficients(Mobius{0.5}, 3);
  const std::vector<double> expect{0.5, 0.75, 0.375, 0.1875};
  for (int k = 0; k <= 3; ++k) CHECK(s.moduli()[k] == doctest::Approx(expect[k]).epsilon(1e-15));

  const double a = 0.37;
  const auto ld = long_division({a, -1.0}, {1.0, -a}, 40);
  const auto m = coefficients(Mobius{a}, 40).moduli();
  for (int k = 0; k <= 40; ++k) CHECK(m[k] == doctest::Approx(std::abs(ld[k])).epsilon(1e-13));

  const auto zero = coefficients(Mobius{0.0}, 3).moduli();
  CHECK(zero == std::vector<double>{0.0, 1.0, 0.0, 0.0});
}

TEST_CASE("single-zero Blaschke product equals the Mobius map") {
  for (double a : {0.1, 0.6, 0.93}) {
    const auto b = coefficients(Blaschke{{Complex(a, 0.0)}, 1.0}, 50).moduli();
    const auto m = coefficients(Mobius{a}, 50).moduli();
    for (int k = 0; k <= 50; ++k) CHECK(b[k] == doctest::Approx(m[k]).epsilon(1e-12));
  }
}

TEST_CASE("Blaschke coefficients against real long division") {
  // zeros 0.3 and -0.5: numerator (0.3 - z)(-0.5 - z), denominator (1 - 0.3z)(1 + 0.5z)
  const auto ld = long_division({-0.15, 0.2, 1.0}, {1.0, 0.2, -0.15}, 30);
  const auto m = coefficients(Blaschke{{0.3, -0.5}, 1.0}, 30).moduli();
  for (int k = 0; k <= 30; ++k) CHECK(m[k] == doctest::Approx(std::abs(ld[k])).epsilon(1e-12));
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(coefficients(Mobius{1.0}, 3), DomainError);
  CHECK_THROWS_AS(coefficients(Blaschke{{Complex(1.2, 0)}, 1.0}, 3), DomainError);
  CHECK_THROWS_AS(coefficients(Blaschke{{0.2}, Complex(0.5, 0)}, 3), DomainError);
  CHECK_THROWS_AS(coefficients(Constant{Complex(1.0, 0)}, 3), DomainError);
  CHECK_THROWS_AS(coefficients(HilbertChi{0.1, 0.5, 1.0, 2}, 8), DomainError);
  CHECK_THROWS_AS(coefficients(Mobius{0.5}, 0), DomainError);
  CHECK_THROWS_AS(divide_series({1.0}, {2.0, 1.0}, 3), DomainError);
}

TEST_CASE("bohr_quantity examples") {
  CHECK(bohr_quantity(coefficients(Mobius{0.5}, 80), BohrParams(1, 1), 0.5).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bohr_quantity(coefficients(Constant{0.0}, 4), BohrParams(1, 1), 0.9).value == 0.0);
  for (double p : {1.0, 2.0, 3.5}) {
    for (double q : {1.0, 1.5, 4.0}) {
      const auto v = evaluate(ZMobius{kInvSqrt2}, Rpq{BohrParams(p, q)}, kInvSqrt2);
      CHECK(std::abs(v.value - 1.0) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(bohr_quantity(coefficients(Mobius{0.5}, 4), BohrParams(1, 1), 1.0), DomainError);
}

TEST_CASE("p_bohr_quantity") {
  for (double a : {0.2, 0.5, 0.8}) {
    for (double r : {0.5, 0.9, 0.999}) CHECK(evaluate(Mobius{a}, Rp{2.0}, r).value <= 1.0 + 1e-12);
  }
  CHECK(p_bohr_quantity(coefficients(Constant{0.5}, 3), 1.0, 0.7).value == 0.5);
  CHECK_THROWS_AS(p_bohr_quantity(coefficients(HalfPlane{}, 8), 2.0, 0.5), DomainError);
}

TEST_CASE("h_quantity on the half-plane map") {
  CHECK(evaluate(HalfPlane{}, Hp{2.0}, std::sqrt(3.0 / 7.0)).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(evaluate(HalfPlane{}, Hp{3.0}, std::cbrt(7.0 / 15.0)).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  const auto h = sample_caratheodory(11, 4);
  CHECK(h_quantity(coefficients(h, 10), 2.0, 0.0).value == doctest::Approx(0.5));
  CHECK_THROWS_AS(h_quantity(coefficients(Mobius{0.5}, 10), 2.0, 0.3), DomainError);
}

TEST_CASE("polydisk quantities") {
  for (auto [p, q, n] : {std::tuple{1.5, 3.0, 3}, {2.0, 2.0, 4}, {1.0, 2.0, 2}}) {
    const BohrParams prm(p, q);
    const auto e = hilbert_extremal(prm, n);
    const HilbertChi chi{e.b3, e.r3, e.scale_c, e.n};
    CHECK(std::abs(evaluate(chi, Rpq{prm}, e.r3).value - 1.0) <= 1e-10);
    const auto hs = homogeneous_sums(chi, 40);
    CHECK(polydisk_bohr_quantity(hs, prm, 0.0).value ==
          doctest::Approx(std::pow(e.b3, p)).epsilon(1e-15));
  }
  for (double p : {2.0, 3.0, 4.0}) {
    const double r = hpn_exact(p);
    const auto hs = homogeneous_sums(HalfPlane{}, terms_for(HalfPlane{}, Hp{p}, r));
    CHECK(polydisk_h_quantity(hs, p, r).value == doctest::Approx(1.0).epsilon(1e-9));
  }
  const auto chi2 = homogeneous_sums(HilbertChi{0.1, 0.3, 1.0, 2}, 40);
  CHECK_THROWS_AS(polydisk_h_quantity(chi2, 2.0, 0.2), DomainError);
}

TEST_CASE("tail soundness: doubling K stays inside the reported tail") {
  const BohrParams prm(1.5, 2.5);
  const auto e = hilbert_extremal(BohrParams(1.5, 3), 3);
  const std::vector<std::pair<FunctionFamily, Functional>> cases{
      {Mobius{0.7}, Rpq{prm}},
      {ZMobius{0.4}, Rp{2.0}},
      {sample_schur(3, 6), Rpq{prm}},
      {sample_schur(4, 6), Rp{1.5}},
      {sample_caratheodory(5, 6), Hp{2.0}},
      {HalfPlane{}, Hp{3.0}},
      {HilbertChi{e.b3, e.r3, e.scale_c, e.n}, Rpq{BohrParams(1.5, 3)}},
  };
  for (const auto& [f, fn] : cases) {
    for (double r : {0.3, 0.6, 0.85}) {
      CAPTURE(describe(f));
      CAPTURE(r);
      OracleOptions o;
      o.tail_tol = 1e-4;
      const int K = terms_for(f, fn, r, o);
      o.terms = K;
      const auto q1 = evaluate(f, fn, r, o);
      o.terms = 2 * K;
      const auto q2 = evaluate(f, fn, r, o);
      const double change = q2.truncated() - q1.truncated();
      CHECK(change >= -1e-15);
      CHECK(change <= q1.tail_error + 1e-15);
      CHECK(q2.value <= q1.value + 1e-15);
    }
  }
}

TEST_CASE("unbounded tails are reported") {
  const FunctionFamily h = sample_caratheodory(2, 3);
  CHECK_THROWS_AS(terms_for(h, Hp{1.0}, 1.0 - 1e-7), TailUnbounded);
  const PowerSeries1D s({1.0, 2.0}, SchurTail{2.0});
  CHECK(std::isinf(tail_sum(s.tail(), 1, 1.0, 1.0)));
}
