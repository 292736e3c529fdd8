#include "rootlab/weights.hpp"

namespace rootlab {

BigReal WeightPair::phi(const BigReal& t) const { return weight_phi(*this, t); }
BigReal WeightPair::psi(const BigReal& s) const { return weight_psi(*this, s); }

std::vector<WeightPair> builtin_weight_pairs() {
  std::vector<WeightPair> pairs(4);
  pairs[0].id = "p1";
  pairs[0].builtin = BuiltinPair::P1;
  pairs[0].phi_domain_note = "entire (polynomial)";
  pairs[0].psi_domain_note = "pole at s=-1";
  pairs[1].id = "p2";
  pairs[1].builtin = BuiltinPair::P2;
  pairs[1].phi_domain_note = "pole at t=6/5";
  pairs[1].psi_domain_note = "pole at s=1";
  pairs[2].id = "p3";
  pairs[2].builtin = BuiltinPair::P3;
  pairs[2].phi_domain_note = "pole at t=2/5";
  pairs[2].psi_domain_note = "pole at s=-2/5";
  pairs[3].id = "p4";
  pairs[3].builtin = BuiltinPair::P4;
  pairs[3].phi_domain_note = "pole at t=-1";
  pairs[3].psi_domain_note = "exponent pole at s=-1/2; base requires s>-1";
  return pairs;
}

const WeightPair& builtin_pair(BuiltinPair which) {
  static const std::vector<WeightPair> pairs = builtin_weight_pairs();
  return pairs[static_cast<size_t>(which)];
}

WeightValidation validate_weight_pair(const WeightPair& w, Precision p) {
  BigReal tau = BigReal::pow10(-(p.digits / 4), p);
  BigReal h = default_fd_step(p);
  BigReal zero(0, p);
  RealFn phi = [&w](const BigReal& t) { return w.phi(t); };
  RealFn psi = [&w](const BigReal& s) { return w.psi(s); };

  WeightValidation out;
  out.pair_id = w.id;
  auto check = [&](const std::string& name, const BigReal& value, long target_num,
                   long target_den) {
    BigReal residual = abs(value - BigReal(target_num, p) / target_den);
    out.conditions.push_back({name, residual, residual < tau});
  };
  check("phi(0)=0", nth_derivative_fd(phi, 0, zero, h), 0, 1);
  check("phi'(0)=-1/2", nth_derivative_fd(phi, 1, zero, h), -1, 2);
  check("phi''(0)=-5/2", nth_derivative_fd(phi, 2, zero, h), -5, 2);
  check("psi(0)=1", nth_derivative_fd(psi, 0, zero, h), 1, 1);
  check("psi'(0)=1", nth_derivative_fd(psi, 1, zero, h), 1, 1);
  out.all_pass = true;
  for (const auto& c : out.conditions) out.all_pass = out.all_pass && c.pass;
  return out;
}

}  // namespace rootlab
