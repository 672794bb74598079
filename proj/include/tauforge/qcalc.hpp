#pragma once

#include "tauforge/ncalg.hpp"
#include "tauforge/poly.hpp"

namespace tauforge {

/// (f(q^k x) - f(x)) / ((q^k - 1) x), exact on polynomials: x^n ↦ (n)_{q^k} x^{n-1}.
TimesPoly q_derivative(const TimesPoly& p, Var var, int base_power);
/// Acts on the time coefficients only; words are untouched.
NCPoly q_derivative(const NCPoly& p, Var var, int base_power);

/// f(x) ↦ f(q^k x).
TimesPoly q_shift(const TimesPoly& p, Var var, int power);
NCPoly q_shift(const NCPoly& p, Var var, int power);

}  // namespace tauforge
