#include "rootlab/methods.hpp"

namespace rootlab {

const std::vector<MethodInfo>& all_methods() {
  static const std::vector<MethodInfo> methods = {
      {MethodId::Newton, "newton", 2, 2, false},
      {MethodId::Ns3, "ns3", 3, 3, false},
      {MethodId::Tp4, "tp4", 4, 3, true},
      {MethodId::Slss, "slss", 8, 4, true},
      {MethodId::M2, "m2", 8, 4, true},
      {MethodId::M3, "m3", 8, 4, true},
      {MethodId::M4, "m4", 8, 4, true},
      {MethodId::Brw, "brw", 8, 4, false},
      {MethodId::Wl, "wl", 8, 4, false},
      {MethodId::Ss, "ss", 8, 4, false},
      {MethodId::Bcst, "bcst", 8, 4, false},
      {MethodId::Cfgt, "cfgt", 8, 4, false},
      {MethodId::Ctv, "ctv", 8, 4, false},
      {MethodId::Tp, "tp", 8, 4, false},
      {MethodId::Cl, "cl", 8, 4, false},
  };
  return methods;
}

const MethodInfo& method_info(MethodId m) {
  for (const auto& info : all_methods())
    if (info.id == m) return info;
  fail(ErrorKind::EvalError, "unknown method id");
}

std::optional<MethodId> method_from_name(std::string_view name) {
  for (const auto& info : all_methods())
    if (name == info.name) return info.id;
  return std::nullopt;
}

const WeightPair& default_weight_pair(MethodId m) {
  switch (m) {
    case MethodId::Tp4:
    case MethodId::Slss:
      return builtin_pair(BuiltinPair::P1);
    case MethodId::M2:
      return builtin_pair(BuiltinPair::P2);
    case MethodId::M3:
      return builtin_pair(BuiltinPair::P3);
    case MethodId::M4:
      return builtin_pair(BuiltinPair::P4);
    default:
      fail(ErrorKind::EvalError, "method has no weight pair");
  }
}

bool is_eighth_order(MethodId m) { return method_info(m).order == 8; }

ErrorConstants error_constants(const Problem& p, const BigReal& phi_second) {
  Precision prec(p.root.precision_digits());
  BigReal fp_root = p.fprime(p.root);
  if (fp_root.is_zero()) fail(ErrorKind::NotSimpleRoot, "f'(root) = 0");

  auto ck = [&](int k, long k_factorial) {
    BigReal d = nth_derivative_fd(p.f, k, p.root, fd_step_for_order(k, prec));
    return d / (k_factorial * fp_root);
  };
  ErrorConstants ec{ck(2, 2), ck(3, 6), ck(4, 24), BigReal(prec), BigReal(prec)};
  ec.r4 = -(ec.c2 * ec.c3) + ec.c2 * ec.c2 * ec.c2 * (BigReal(5, prec) / 2 + phi_second);
  ec.r8 = ec.c2 * ec.c2 * ec.c3 *
          (29 * (ec.c2 * ec.c2 * ec.c2) + 4 * (ec.c2 * ec.c3) - 4 * ec.c4) / 4;
  return ec;
}

}  // namespace rootlab
