#include <doctest.h>

#include "rootlab/problem.hpp"
#include "test_support.hpp"

using namespace rootlab;
using namespace rootlab_test;

TEST_CASE("builtin suite contents") {
  Precision p(1800);
  auto suite = builtin_suite(p);
  REQUIRE(suite.size() == 5);

  const Problem* t1 = find_problem(suite, "t1");
  REQUIRE(t1);
  CHECK(t1->root == BigReal(0, p));
  CHECK(t1->x0 == make_scalar("0.1", p));

  const Problem* t4 = find_problem(suite, "t4");
  REQUIRE(t4);
  CHECK(t4->root == BigReal(1, p));
  CHECK(t4->x0 == make_scalar("1.1", p));

  const Problem* b1 = find_problem(suite, "b1");
  REQUIRE(b1);
  REQUIRE(b1->complex_roots.size() == 4);
  // z^3 - 1/z = 0 iff z^4 = 1: the fourth roots of unity, in index order
  CHECK(b1->complex_roots[0] == BigComplex(BigReal(1, p), BigReal(0, p)));
  CHECK(b1->complex_roots[1] == BigComplex(BigReal(-1, p), BigReal(0, p)));
  CHECK(b1->complex_roots[2] == BigComplex(BigReal(0, p), BigReal(1, p)));
  CHECK(b1->complex_roots[3] == BigComplex(BigReal(0, p), BigReal(-1, p)));
  for (const auto& r : b1->complex_roots) CHECK(abs(b1->f_c(r)) < BigReal::pow10(-1790, p));

  CHECK(find_problem(suite, "nosuch") == nullptr);
}

TEST_CASE("roots are genuine zeros and derivatives are analytic") {
  Precision p(1800);
  BigReal zero_floor = BigReal::pow10(-p.digits + 10, p);
  BigReal h = default_fd_step(p);
  for (const auto& prob : builtin_suite(Precision(1800))) {
    CAPTURE(prob.id);
    CHECK(abs(prob.f(prob.root)) < zero_floor);
    CHECK(!prob.fprime(prob.root).is_zero());  // simple root
    // fprime matches a finite difference of f to >= digits/2 digits at x0
    BigReal fd = nth_derivative_fd(prob.f, 1, prob.x0, h);
    CHECK(close_rel(fd, prob.fprime(prob.x0), -(p.digits / 2)));
  }
}

TEST_CASE("counting oracle increments per evaluation") {
  Precision p(200);
  auto suite = builtin_suite(p);
  const Problem* t1 = find_problem(suite, "t1");
  CountingOracle<BigReal> o(*t1);
  CHECK(o.f(BigReal(0, p)).is_zero());  // f at the root is exactly 0
  CHECK(o.f_count() == 1);
  CHECK(o.fprime_count() == 0);
  o.fprime(t1->x0);
  CHECK(o.fprime_count() == 1);
  o.f(t1->x0);
  CHECK(o.f_count() == 2);
}

TEST_CASE("t3 value at x0 against an independently computed constant") {
  Precision p(200);
  auto suite = builtin_suite(p);
  const Problem* t3 = find_problem(suite, "t3");
  CountingOracle<BigReal> o(*t3);
  BigReal v = o.f(make_scalar("0.1", p));
  CHECK(o.f_count() == 1);
  BigReal expected =
      make_scalar("0.084986830331689110390446463165541967917589293305951", p);
  CHECK(close_abs(v, expected, -49));
}

TEST_CASE("b1 domain errors at the pole") {
  Precision p(100);
  auto suite = builtin_suite(p);
  const Problem* b1 = find_problem(suite, "b1");
  CountingOracle<BigComplex> oc(*b1);
  CHECK_THROWS_AS(oc.f(BigComplex(p)), Error);
  CountingOracle<BigReal> orl(*b1);
  try {
    orl.f(BigReal(0, p));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  // the count still recorded the attempted evaluation
  CHECK(orl.f_count() == 1);
  // double instantiation agrees with the big-complex one
  std::complex<double> z{0.5, 0.25};
  BigComplex zb(make_scalar("0.5", p), make_scalar("0.25", p));
  auto via_double = b1->f_d(z);
  BigComplex via_big = b1->f_c(zb);
  CHECK(std::abs(via_double.real() - via_big.real().to_double()) < 1e-14);
  CHECK(std::abs(via_double.imag() - via_big.imag().to_double()) < 1e-14);
}
