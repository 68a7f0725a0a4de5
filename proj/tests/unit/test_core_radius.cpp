#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bohr/core_radius.hpp"

using namespace bohr;

namespace {

// independent root of x^p + x^q = 1 in long double
long double ref_root(long double p, long double q) {
  long double lo = 0.0L, hi = 1.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (std::pow(mid, p) + std::pow(mid, q) < 1.0L ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

double grid_min(double (*f)(const BohrParams&, double), const BohrParams& prm, int points) {
  double best = 1e300;
  for (int i = 0; i < points; ++i) {
    const double a = (1.0 - 1e-9) * i / (points - 1);
    best = std::min(best, f(prm, a));
  }
  return best;
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(BohrParams(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(BohrParams(1.0, NAN), DomainError);
  CHECK_THROWS_AS(BohrParams(INFINITY, 2.0), DomainError);
  CHECK_NOTHROW(BohrParams(1.0, 1.0));
}

TEST_CASE("hat_root matches a long double bisection") {
  for (double p : {1.0, 1.25, 1.5, 2.0, 3.0, 5.0}) {
    for (double q : {1.0, 1.5, 2.0, 2.5, 4.0}) {
      const auto r = hat_root(BohrParams(p, q));
      CAPTURE(p);
      CAPTURE(q);
      CHECK(std::abs(r.a_hat - static_cast<double>(ref_root(p, q))) <= 1e-13);
      CHECK(std::abs(r.residual) <= 1e-12);
    }
  }
  CHECK(hat_root(BohrParams(1, 1)).a_hat == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hat_root(BohrParams(2, 2)).a_hat == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(hat_root(BohrParams(1, 2)).a_hat ==
        doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("A and S domain") {
  const BohrParams prm(1, 1);
  CHECK_THROWS_AS(eval_A(prm, 1.0), DomainError);
  CHECK_THROWS_AS(eval_S(prm, -0.1), DomainError);
  CHECK(eval_A(prm, 0.0) == 1.0);
  CHECK(eval_S(BohrParams(2, 2), 0.3) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("condition at (1,3)") {
  const auto c = exactness_condition(BohrParams(1, 3));
  CHECK_FALSE(c.holds);
  CHECK(c.lhs == doctest::Approx(1.7143858918026291).epsilon(1e-12));
  CHECK(c.rhs == doctest::Approx(1.6353443923442867).epsilon(1e-12));
  CHECK(hat_root(BohrParams(1, 3)).a_hat == doctest::Approx(0.682327803828082).epsilon(1e-13));

  CHECK(exactness_condition(BohrParams(1, 2.5)).holds);
  CHECK_FALSE(exactness_condition(BohrParams(1.5, 2.5)).holds);
}

TEST_CASE("inf_A at the boundary and in the interior") {
  const auto b = inf_A(BohrParams(3, 1));
  CHECK(b.value == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(b.argmin.kind == Argmin::Kind::Boundary);
  CHECK(A_boundary_limit(BohrParams(3, 1)) == doctest::Approx(0.6));
  CHECK(A_boundary_limit(BohrParams(3, 2)) == 1.0);

  const BohrParams prm(1, 2);
  const auto in = inf_A(prm);
  CHECK(in.argmin.kind == Argmin::Kind::Point);
  CHECK(in.argmin.a == doctest::Approx(0.699).epsilon(1e-3));
  const double brute = grid_min(eval_A, prm, 1000000);
  CHECK(in.value <= brute + 1e-15);
  CHECK(in.value >= brute - 1e-9);
}

TEST_CASE("inf_S(1,3) against a dense grid") {
  const BohrParams prm(1, 3);
  const double brute = grid_min(eval_S, prm, 1000000);
  const auto s = inf_S(prm);
  CHECK(std::abs(s.value - brute) <= 1e-6);
  CHECK(s.value <= brute + 1e-15);
}

TEST_CASE("dispatch") {
  auto r = radius_scalar(BohrParams(1, 1));
  CHECK(r.case_tag() == CaseTag::PQ_le2);
  CHECK(r.value() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.argmin().kind == Argmin::Kind::Boundary);

  r = radius_scalar(BohrParams(3, 1.5));
  CHECK(r.case_tag() == CaseTag::Pgt2_Qle2);
  CHECK(r.value() == doctest::Approx(std::min(kInvSqrt2, inf_A(BohrParams(3, 1.5)).value)));

  r = radius_scalar(BohrParams(3, 3));
  CHECK(r.case_tag() == CaseTag::PQ_ge2);
  CHECK(r.value() == kInvSqrt2);

  r = radius_scalar(BohrParams(2, 5));
  CHECK(r.case_tag() == CaseTag::Ple2_Qgt2_exact);
  CHECK(r.value() == kInvSqrt2);

  r = radius_scalar(BohrParams(1, 2.5));
  CHECK(r.case_tag() == CaseTag::Ple2_Qgt2_exact);
  CHECK(r.value() == doctest::Approx(inf_A(BohrParams(1, 2.5)).value).epsilon(1e-15));

  r = radius_scalar(BohrParams(1, 3));
  CHECK(r.case_tag() == CaseTag::Ple2_Qgt2_interval);
  CHECK_FALSE(r.is_exact());
  CHECK_THROWS_AS(r.value(), std::logic_error);
  CHECK(r.lo() == doctest::Approx(inf_S(BohrParams(1, 3)).value).epsilon(1e-15));
  CHECK(r.hi() == kInvSqrt2);
  CHECK(r.lo() < r.hi());
}

TEST_CASE("branch evaluation") {
  CHECK_THROWS_AS(radius_scalar_branch(BohrParams(1, 3), CaseTag::PQ_ge2), UnsupportedExponent);
  for (double p : {2.0, 3.0, 4.0}) {
    const BohrParams prm(p, 2);
    CHECK(radius_scalar_branch(prm, CaseTag::PQ_ge2).value() == kInvSqrt2);
    const CaseTag other = p == 2.0 ? CaseTag::PQ_le2 : CaseTag::Pgt2_Qle2;
    CHECK(radius_scalar_branch(prm, other).value() == doctest::Approx(kInvSqrt2).epsilon(1e-9));
  }
}

TEST_CASE("case tag strings round trip") {
  for (auto t : {CaseTag::PQ_le2, CaseTag::Pgt2_Qle2, CaseTag::PQ_ge2, CaseTag::Ple2_Qgt2_exact,
                 CaseTag::Ple2_Qgt2_interval}) {
    CHECK(case_tag_from_string(to_string(t)) == t);
  }
  CHECK_FALSE(case_tag_from_string("nope").has_value());
}

TEST_CASE("result factories reject bad ranges") {
  CHECK_THROWS(RadiusResult::exact(1.5, CaseTag::PQ_le2));
  CHECK_THROWS(RadiusResult::interval(0.5, 0.4, CaseTag::Ple2_Qgt2_interval));
  CHECK(RadiusResult::exact(0.5, CaseTag::PQ_le2).tolerances().scan_points == 2048);
}

TEST_CASE("q = 1 closed form p/(2+p)") {
  for (int i = 0; i <= 20; ++i) {
    const double p = 1.0 + i / 20.0;
    CAPTURE(p);
    CHECK(std::abs(radius_scalar(BohrParams(p, 1)).value() - p / (2 + p)) <= 1e-9);
  }
}

TEST_CASE("exact values stay below 1/sqrt 2; intervals are ordered") {
  for (double p = 1.0; p <= 5.0; p += 0.25) {
    for (double q = 1.0; q <= 5.0; q += 0.25) {
      const auto r = radius_scalar(BohrParams(p, q));
      CAPTURE(p);
      CAPTURE(q);
      if (r.is_exact()) {
        CHECK(r.value() <= kInvSqrt2 + 1e-10);
      } else {
        CHECK(r.lo() > 0.0);
        CHECK(r.lo() <= r.hi());
      }
    }
  }
}
