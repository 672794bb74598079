#include "tauforge/qhirota.hpp"

#include "tauforge/error.hpp"

namespace tauforge {

const HirotaVars& hirota_vars() {
  static const HirotaVars vars;
  return vars;
}

NCPoly BilinearTerm::flatten() const {
  NCPoly l = left, r = right;
  for (const auto& [v, k] : left_shifts) l = q_shift(l, v, k);
  for (const auto& [v, k] : right_shifts) r = q_shift(r, v, k);
  return (l * r) * prefactor;
}

namespace {

TimesPoly at(const TimesPoly& p, Var var, const TimesPoly& center) { return p.substitute(var, center); }
NCPoly at(const NCPoly& p, Var var, const TimesPoly& center) {
  return p.map_times([&](const TimesPoly& c) { return c.substitute(var, center); });
}

template <class P>
std::vector<P> taylor(const P& p, Var var, const TimesPoly& center, int base_power, int order) {
  if (order < 0) throw PreconditionError("q-Taylor order must be nonnegative");
  if (center.degree_in(var) > 0) throw PreconditionError("q-Taylor center must not contain the expansion variable");
  std::vector<P> out;
  P d = p;
  for (int m = 0; m <= order; ++m) {
    out.push_back(at(d, var, center) * TimesPoly(q_paren_factorial(m, base_power).inverse()));
    d = q_derivative(d, var, base_power);
  }
  return out;
}

}  // namespace

std::vector<TimesPoly> q_taylor(const TimesPoly& p, Var var, const TimesPoly& center, int base_power, int order) {
  return taylor(p, var, center, base_power, order);
}

std::vector<NCPoly> q_taylor(const NCPoly& p, Var var, const TimesPoly& center, int base_power, int order) {
  return taylor(p, var, center, base_power, order);
}

TimesPoly q_pochhammer(Var var, const TimesPoly& center, int base_power, int m) {
  TimesPoly out(1L);
  for (int i = 0; i < m; ++i)
    out = out * (TimesPoly::variable(var) - center * TimesPoly(QScalar::q_power(base_power * i)));
  return out;
}

NCPoly q_taylor_sum(const std::vector<NCPoly>& coefficients, Var var, const TimesPoly& center, int base_power) {
  if (coefficients.empty()) throw PreconditionError("empty q-Taylor expansion");
  NCPoly out(coefficients.front().presentation());
  for (std::size_t m = 0; m < coefficients.size(); ++m)
    out += coefficients[m] * q_pochhammer(var, center, base_power, static_cast<int>(m));
  return out;
}

HirotaSides hirota_sides(int two_j, int two_jp, const NCPoly& tau_left, const NCPoly& tau_right,
                     const NCPoly& lower_left, const NCPoly& lower_right) {
  if (two_j < 1 || two_jp < 1) throw PreconditionError("the Hirota identity needs j, j' >= 1/2");
  const auto& [u, x, v, y] = hirota_vars();
  const QScalar inv_j = q_bracket(two_j).inverse();
  const QScalar inv_jp = q_bracket(two_jp).inverse();
  const NCPoly product = tau_left * tau_right;
  const NCPoly dx = q_derivative(product, x, -2);
  const NCPoly dy = q_derivative(product, y, -2);
  const NCPoly dxy = q_derivative(dx, y, -2);
  const TimesPoly mixed = TimesPoly::variable(y) * TimesPoly(QScalar::q_power(two_jp - two_j - 1)) -
                          TimesPoly::variable(x) * TimesPoly(QScalar::q_power(two_j - 1));

  HirotaSides out{NCPoly(product.presentation()), NCPoly(product.presentation())};
  out.lhs = dy * TimesPoly(inv_jp) - dx * TimesPoly(QScalar::q_power(-two_j) * inv_j) +
            dxy * (mixed * TimesPoly(inv_j * inv_jp));

  BilinearTerm rhs{TimesPoly::variable(v) - TimesPoly::variable(u) * TimesPoly(QScalar::q_power(-two_j)),
                   lower_left, lower_right, {}, {}};
  rhs.left_shifts[x] = -1;
  rhs.right_shifts[v] = -1;
  out.rhs = rhs.flatten();
  return out;
}

HirotaSides hirota_sides(int two_j, int two_jp) {
  const auto& [u, x, v, y] = hirota_vars();
  return hirota_sides(two_j, two_jp, tau_q(two_j, u, x), tau_q(two_jp, v, y), tau_q(two_j - 1, u, x),
                  tau_q(two_jp - 1, v, y));
}

VerificationReport verify_hirota_identity(int two_j, int two_jp) {
  VerificationReport report;
  report.id = "qhirota.identity";
  report.params["j"] = spin_str(two_j);
  report.params["jp"] = spin_str(two_jp);
  ReportTimer timer(report);
  const HirotaSides sides = hirota_sides(two_j, two_jp);
  report.add_zero_check("lhs - rhs", sides.lhs - sides.rhs);
  return report;
}

std::vector<HierarchyCoefficient> expand_hierarchy(const NCPoly& p, int alpha, int beta, int kmax, int lmax) {
  const auto& [u, x, v, y] = hirota_vars();
  const TimesPoly x_center = TimesPoly::variable(x) * TimesPoly(QScalar::q_power(alpha));
  const TimesPoly u_center = TimesPoly::variable(u) * TimesPoly(QScalar::q_power(beta));
  std::vector<HierarchyCoefficient> out;
  const auto in_y = q_taylor(p, y, x_center, -2, kmax);
  for (int k = 0; k <= kmax; ++k) {
    const auto in_v = q_taylor(in_y[static_cast<std::size_t>(k)], v, u_center, -2, lmax);
    for (int l = 0; l <= lmax; ++l) out.push_back({k, l, in_v[static_cast<std::size_t>(l)]});
  }
  return out;
}

NCPoly resum_hierarchy(const std::vector<HierarchyCoefficient>& coefficients, int alpha, int beta,
                       const PresentationPtr& p) {
  const auto& [u, x, v, y] = hirota_vars();
  const TimesPoly x_center = TimesPoly::variable(x) * TimesPoly(QScalar::q_power(alpha));
  const TimesPoly u_center = TimesPoly::variable(u) * TimesPoly(QScalar::q_power(beta));
  NCPoly out(p);
  for (const auto& c : coefficients)
    out += c.value * (q_pochhammer(y, x_center, -2, c.k) * q_pochhammer(v, u_center, -2, c.l));
  return out;
}

NCPoly displayed_tau_half(const PresentationPtr& p, Var u, Var x) {
  const TimesPoly tu = TimesPoly::variable(u), tx = TimesPoly::variable(x);
  return NCPoly::generator(p, "a") + NCPoly::generator(p, "b") * tu + NCPoly::generator(p, "c") * tx +
         NCPoly::generator(p, "d") * (tu * tx);
}

PresentationPtr symbolic_tau_presentation(int degree) {
  std::vector<std::string> names;
  for (int i = 0; i <= degree; ++i)
    for (int l = 0; l <= degree; ++l) names.push_back("t" + std::to_string(i) + "_" + std::to_string(l));
  return free_presentation(names);
}

NCPoly symbolic_tau(const PresentationPtr& free, int degree, Var u, Var x) {
  NCPoly out(free);
  for (int i = 0; i <= degree; ++i)
    for (int l = 0; l <= degree; ++l)
      out += NCPoly::generator(free, "t" + std::to_string(i) + "_" + std::to_string(l)) *
             (TimesPoly::variable(u).pow(i) * TimesPoly::variable(x).pow(l));
  return out;
}

SpinHalfEquations spin_half_equations(const NCPoly& tau) {
  const auto& [u, x, v, y] = hirota_vars();
  (void)v, (void)y;
  auto d = [](const NCPoly& p, Var var) { return q_derivative(p, var, -2); };
  const NCPoly forward = q_shift(q_shift(tau, u, -1), x, 1);   // τ(q^-1 u, q x)
  const NCPoly backward = q_shift(q_shift(tau, u, -1), x, -1); // τ(q^-1 u, q^-1 x)
  const NCPoly tau_x = d(tau, x);
  const NCPoly forward_x = d(forward, x);
  const NCPoly one(tau.presentation(), TimesPoly(1L));
  SpinHalfEquations out{NCPoly(tau.presentation()), NCPoly(tau.presentation()), NCPoly(tau.presentation())};
  out.commutation = tau * forward_x - tau_x * forward;
  out.liouville = tau * d(forward_x, u) - tau_x * d(forward, u) - one;
  out.linearity = tau * d(forward_x, x) - tau_x * forward_x + (tau_x * d(backward, x)) * TimesPoly(QScalar::q_power(2));
  return out;
}

RatPoly classical_liouville_residual(const RatPoly& tau) {
  const auto& vars = hirota_vars();
  return tau * tau.derivative(vars.u).derivative(vars.x) - tau.derivative(vars.u) * tau.derivative(vars.x) -
         RatPoly(Rational(1));
}

VerificationReport spin_half_suite() {
  VerificationReport report;
  report.id = "qhirota.spin-half";
  ReportTimer timer(report);
  const auto& [u, x, v, y] = hirota_vars();
  const auto p = funq_sl2();
  const NCPoly one(p, TimesPoly(1L));

  const struct {
    const char* name;
    NCPoly left, right;
  } forms[] = {
      {"matrix-element tau", tau_q(1, u, x), tau_q(1, v, y)},
      {"displayed tau", displayed_tau_half(p, u, x), displayed_tau_half(p, v, y)},
  };
  for (const auto& form : forms) {
    const std::string prefix = std::string(form.name) + ": ";
    const HirotaSides sides = hirota_sides(1, 1, form.left, form.right, one, one);
    // Multiplied by q: (q∂_y - ∂_x + (y - qx)∂_x∂_y) τ τ = qv - u.
    const TimesPoly qp(QScalar::q());
    const NCPoly rhs(p, TimesPoly::variable(v) * qp - TimesPoly::variable(u));
    report.add_zero_check(prefix + "bilinear identity", sides.lhs * qp - rhs);
    report.add_zero_check(prefix + "bilinear identity (general form)", sides.lhs - sides.rhs);
    const SpinHalfEquations eqs = spin_half_equations(form.left);
    report.add_zero_check(prefix + "commutation equation", eqs.commutation);
    report.add_zero_check(prefix + "q-Liouville equation", eqs.liouville);
    report.add_zero_check(prefix + "linearity equation", eqs.linearity);
  }

  // For a τ with no relations, the first hierarchy coefficients are the three equations themselves.
  {
    const auto free = symbolic_tau_presentation(2);
    const NCPoly free_one(free, TimesPoly(1L));
    const HirotaSides sides =
        hirota_sides(1, 1, symbolic_tau(free, 2, u, x), symbolic_tau(free, 2, v, y), free_one, free_one);
    const auto coeffs = expand_hierarchy((sides.lhs - sides.rhs) * TimesPoly(QScalar::q()), 1, -1, 1, 1);
    const SpinHalfEquations eqs = spin_half_equations(symbolic_tau(free, 2, u, x));
    auto coefficient = [&](int k, int l) {
      for (const auto& c : coeffs)
        if (c.k == k && c.l == l) return c.value;
      throw PreconditionError("missing hierarchy coefficient");
    };
    report.add_zero_check("symbolic tau: P00 = commutation equation", coefficient(0, 0) - eqs.commutation);
    report.add_zero_check("symbolic tau: P01 = q * q-Liouville equation",
                          coefficient(0, 1) - eqs.liouville * TimesPoly(QScalar::q()));
    report.add_zero_check("symbolic tau: P10 = q^-1 * linearity equation",
                          coefficient(1, 0) - eqs.linearity * TimesPoly(QScalar::q_power(-1)));
    report.add("symbolic tau: equations are not identities", eqs.commutation.is_zero() || eqs.liouville.is_zero() || eqs.linearity.is_zero()
                                                               ? "an equation vanishes without relations"
                                                               : "");
  }

  // Classical limit through the commutative presentation at q = 1.
  try {
    const NCPoly tau = to_classical(tau_q(1, u, x));
    auto deriv = [](const NCPoly& f, Var var) { return f.map_times([&](const TimesPoly& c) { return c.derivative(var); }); };
    const NCPoly residual = tau * deriv(deriv(tau, u), x) - deriv(tau, u) * deriv(tau, x) -
                            NCPoly(tau.presentation(), TimesPoly(1L));
    report.add_zero_check("classical limit in the commutative algebra", residual);
    // The q = 1 image of the q-Liouville left-hand side is the classical left-hand side.
    const SpinHalfEquations eqs = spin_half_equations(tau_q(1, u, x));
    report.add_zero_check("q -> 1 of the q-Liouville equation", to_classical(eqs.liouville) - residual);
  } catch (const PoleError& e) {
    report.add("classical limit in the commutative algebra", std::string("pole at q = 1: ") + e.denominator());
  }

  // Classical limit with commuting entries: the residual is ad - bc - 1.
  {
    const Var a("a"), b("b"), c("c"), d("d");
    const RatPoly tau = RatPoly::variable(a) + RatPoly::variable(b) * RatPoly::variable(u) +
                        RatPoly::variable(c) * RatPoly::variable(x) +
                        RatPoly::variable(d) * RatPoly::variable(u) * RatPoly::variable(x);
    const RatPoly det = RatPoly::variable(a) * RatPoly::variable(d) - RatPoly::variable(b) * RatPoly::variable(c);
    report.add_zero_check("classical limit with commuting entries", classical_liouville_residual(tau) - (det - RatPoly(Rational(1))));
  }
  return report;
}

}  // namespace tauforge
