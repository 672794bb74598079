#include "tauforge/qcalc.hpp"

namespace tauforge {

TimesPoly q_derivative(const TimesPoly& p, Var var, int base_power) {
  if (base_power == 0) throw PreconditionError("q-derivative needs a nonzero base power");
  TimesPoly out;
  for (const auto& [m, c] : p.terms()) {
    const int d = m.degree(var);
    if (d == 0) continue;
    Monomial lowered = m.without(var) * Monomial::of(var, d - 1);
    out.add_term(lowered, c * q_paren(d, base_power));
  }
  return out;
}

NCPoly q_derivative(const NCPoly& p, Var var, int base_power) {
  return p.map_times([&](const TimesPoly& c) { return q_derivative(c, var, base_power); });
}

TimesPoly q_shift(const TimesPoly& p, Var var, int power) {
  if (power == 0) return p;
  return p.scale_variable(var, QScalar::q_power(power));
}

NCPoly q_shift(const NCPoly& p, Var var, int power) {
  if (power == 0) return p;
  return p.map_times([&](const TimesPoly& c) { return q_shift(c, var, power); });
}

}  // namespace tauforge
