#include "rootlab/problem.hpp"

namespace rootlab {

namespace {

Problem make_t1(Precision p) {
  Problem pr;
  pr.id = "t1";
  pr.description = "sin(x) - x/100";
  pr.f = [](const BigReal& x) { return sin(x) - x / 100; };
  pr.fprime = [](const BigReal& x) { return (100 * cos(x) - 1) / 100; };
  pr.root = BigReal(0, p);
  pr.x0 = make_scalar("0.1", p);
  return pr;
}

Problem make_t2(Precision p) {
  Problem pr;
  pr.id = "t2";
  pr.description = "arctan(x)";
  pr.f = [](const BigReal& x) { return atan(x); };
  pr.fprime = [](const BigReal& x) { return 1 / (1 + x * x); };
  pr.root = BigReal(0, p);
  pr.x0 = make_scalar("0.1", p);
  return pr;
}

Problem make_t3(Precision p) {
  Problem pr;
  pr.id = "t3";
  pr.description = "exp(sin(x)) - 1 - x/5";
  pr.f = [](const BigReal& x) { return exp(sin(x)) - 1 - x / 5; };
  pr.fprime = [](const BigReal& x) {
    return (5 * (exp(sin(x)) * cos(x)) - 1) / 5;
  };
  pr.root = BigReal(0, p);
  pr.x0 = make_scalar("0.1", p);
  return pr;
}

Problem make_t4(Precision p) {
  Problem pr;
  pr.id = "t4";
  pr.description = "ln(1 - x + x^2) + 4 sin(1 - x)";
  // 1 - x + x^2 > 0 for all real x, no domain guard needed.
  pr.f = [](const BigReal& x) { return log(1 - x + x * x) + 4 * sin(1 - x); };
  pr.fprime = [](const BigReal& x) {
    return (2 * x - 1) / (1 - x + x * x) - 4 * cos(1 - x);
  };
  pr.root = BigReal(1, p);
  pr.x0 = make_scalar("1.1", p);
  return pr;
}

Problem make_b1(Precision p) {
  Problem pr;
  pr.id = "b1";
  pr.description = "z^3 - 1/z";
  pr.f = [](const BigReal& x) {
    if (x.is_zero()) fail(ErrorKind::DomainError, "pole of 1/x at 0");
    return x * x * x - 1 / x;
  };
  pr.fprime = [](const BigReal& x) {
    if (x.is_zero()) fail(ErrorKind::DomainError, "pole of 1/x^2 at 0");
    return 3 * x * x + 1 / (x * x);
  };
  pr.f_c = [](const BigComplex& z) {
    if (z.is_zero()) fail(ErrorKind::DomainError, "pole of 1/z at 0");
    return z * z * z - 1 / z;
  };
  pr.fprime_c = [](const BigComplex& z) {
    if (z.is_zero()) fail(ErrorKind::DomainError, "pole of 1/z^2 at 0");
    return 3 * z * z + 1 / (z * z);
  };
  pr.f_d = [](const std::complex<double>& z) {
    if (z == std::complex<double>(0.0)) fail(ErrorKind::DomainError, "pole of 1/z at 0");
    return z * z * z - 1.0 / z;
  };
  pr.fprime_d = [](const std::complex<double>& z) {
    if (z == std::complex<double>(0.0)) fail(ErrorKind::DomainError, "pole of 1/z^2 at 0");
    return 3.0 * z * z + 1.0 / (z * z);
  };
  pr.root = BigReal(1, p);
  pr.x0 = BigReal(2, p);
  // z^3 - 1/z = 0  <=>  z^4 = 1; ordering fixes basin color indices.
  pr.complex_roots = {
      BigComplex(BigReal(1, p), BigReal(0, p)),
      BigComplex(BigReal(-1, p), BigReal(0, p)),
      BigComplex(BigReal(0, p), BigReal(1, p)),
      BigComplex(BigReal(0, p), BigReal(-1, p)),
  };
  return pr;
}

}  // namespace

std::vector<Problem> builtin_suite(Precision p) {
  std::vector<Problem> suite;
  suite.push_back(make_t1(p));
  suite.push_back(make_t2(p));
  suite.push_back(make_t3(p));
  suite.push_back(make_t4(p));
  suite.push_back(make_b1(p));
  return suite;
}

const Problem* find_problem(const std::vector<Problem>& suite, std::string_view id) {
  for (const auto& p : suite)
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace rootlab
