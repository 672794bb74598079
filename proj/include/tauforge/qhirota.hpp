#pragma once

#include <map>
#include <vector>

#include "tauforge/funq.hpp"
#include "tauforge/qcalc.hpp"

namespace tauforge {

/// prefactor · left(shifted) · right(shifted), with left always multiplied on the left.
struct BilinearTerm {
  TimesPoly prefactor = TimesPoly(1L);
  NCPoly left, right;
  std::map<Var, int> left_shifts, right_shifts;  // var ↦ k for var → q^k var

  NCPoly flatten() const;
};

/// Coefficients c_m with p = Σ_m c_m (var - a)(var - q^k a)···(var - q^{k(m-1)} a),
/// c_m = (∂^{(q^k)})^m p |_{var=a} / (m)_{q^k}!, for m = 0..order.
std::vector<TimesPoly> q_taylor(const TimesPoly& p, Var var, const TimesPoly& center, int base_power, int order);
std::vector<NCPoly> q_taylor(const NCPoly& p, Var var, const TimesPoly& center, int base_power, int order);
/// (var - a)(var - q^k a)···(var - q^{k(m-1)} a).
TimesPoly q_pochhammer(Var var, const TimesPoly& center, int base_power, int m);
/// Σ_m c_m (var - a)···(var - q^{k(m-1)} a).
NCPoly q_taylor_sum(const std::vector<NCPoly>& coefficients, Var var, const TimesPoly& center, int base_power);

/// The Hirota identity between τ_j(u, x) τ_{j'}(v, y) and τ_{j-1/2}(u, q^-1 x) τ_{j'-1/2}(q^-1 v, y).
struct HirotaSides {
  NCPoly lhs, rhs;
};
HirotaSides hirota_sides(int two_j, int two_jp);
/// The same identity with both τ factors supplied by the caller; `lower_left`, `lower_right`
/// are τ_{j-1/2}(u, x) and τ_{j'-1/2}(v, y) before shifting.
HirotaSides hirota_sides(int two_j, int two_jp, const NCPoly& tau_left, const NCPoly& tau_right,
                     const NCPoly& lower_left, const NCPoly& lower_right);
VerificationReport verify_hirota_identity(int two_j, int two_jp);

/// P_{k,l}(x, u) of the double q-Taylor expansion in y around q^α x and v around q^β u (base q^-2).
struct HierarchyCoefficient {
  int k = 0, l = 0;
  NCPoly value;
};
std::vector<HierarchyCoefficient> expand_hierarchy(const NCPoly& p, int alpha, int beta, int kmax, int lmax);
/// Re-sums the expansion; equals the input when kmax, lmax reach its degrees in y and v.
NCPoly resum_hierarchy(const std::vector<HierarchyCoefficient>& coefficients, int alpha, int beta,
                       const PresentationPtr& p);

/// a + b u + c x + d u x over a presentation with generators a, b, c, d.
NCPoly displayed_tau_half(const PresentationPtr& p, Var u, Var x);

/// Σ_{i,l ≤ degree} t_il u^i x^l over the free algebra on the t_il: a τ with no relations imposed.
NCPoly symbolic_tau(const PresentationPtr& free, int degree, Var u, Var x);
PresentationPtr symbolic_tau_presentation(int degree);

/// Residuals of the three spin-1/2 hierarchy equations for a given τ(u, x); the second has its 1 subtracted.
struct SpinHalfEquations {
  NCPoly commutation, liouville, linearity;
};
SpinHalfEquations spin_half_equations(const NCPoly& tau);

/// τ ∂²_{ux} τ - ∂_u τ ∂_x τ - 1 for a commutative τ.
RatPoly classical_liouville_residual(const RatPoly& tau);

/// The identity at j = j' = 1/2 for both τ forms, the three hierarchy equations and the classical limit.
VerificationReport spin_half_suite();

/// Standard time variables of the identity.
struct HirotaVars {
  Var u{"u"}, x{"x"}, v{"v"}, y{"y"};
};
const HirotaVars& hirota_vars();

}  // namespace tauforge
