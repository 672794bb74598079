#include "tauforge/qvertex.hpp"

#include <optional>

#include "tauforge/qcalc.hpp"

namespace tauforge {

QMatrix solve_intertwiner(const Rep& domain, const Rep& codomain) {
  const std::size_t nc = codomain.dim();
  const std::size_t nd = domain.dim();
  const std::size_t unknowns = nc * nd;
  QMatrix system(3 * unknowns, unknowns);
  std::size_t row = 0;
  for (UGen g : {UGen::e, UGen::f, UGen::k}) {
    const QMatrix c = represent(g, codomain);
    const QMatrix d = represent(g, domain);
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t k = 0; k < nd; ++k, ++row) {
        for (std::size_t l = 0; l < nc; ++l)
          if (!c(i, l).is_zero()) system(row, l * nd + k) += c(i, l);
        for (std::size_t l = 0; l < nd; ++l)
          if (!d(l, k).is_zero()) system(row, i * nd + l) -= d(l, k);
      }
  }
  const auto basis = nullspace(system);
  if (basis.size() != 1)
    throw ConventionError("intertwiner space has dimension " + std::to_string(basis.size()) + " (expected 1)");
  return reshape(basis.front(), nc, nd);
}

std::vector<QMatrix> type_one_components(const Rep& source, const Rep& w, const Rep& target) {
  const QMatrix x = solve_intertwiner(tensor(source, w), target);
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < w.dim(); ++i) out.push_back(x.column_slice(i, w.dim()));
  return out;
}

std::vector<QMatrix> type_two_components(const Rep& source, const Rep& w, const Rep& target) {
  const QMatrix x = solve_intertwiner(source, tensor(w, target));
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < w.dim(); ++i) out.push_back(x.block(i * target.dim(), target.dim(), 0, source.dim()));
  return out;
}

VertexComponents solve_vertex_components(int two_j) {
  if (two_j < 1) throw PreconditionError("vertex components need j >= 1/2");
  const Rep source = make_rep(two_j - 1);
  const Rep target = make_rep(two_j);
  const Rep w = make_rep(1);
  auto phi = type_one_components(source, w, target);
  auto psi = type_two_components(source, w, target);
  if (phi[0](0, 0).is_zero() || psi[1](0, 0).is_zero())
    throw ConventionError("vertex operator does not reach the highest weight vector");
  const QScalar phi_scale = phi[0](0, 0).inverse();
  const QScalar psi_scale = psi[1](0, 0).inverse();
  VertexComponents vc;
  vc.two_j = two_j;
  vc.phi_plus = phi[0].scaled(phi_scale);
  vc.phi_minus = phi[1].scaled(phi_scale);
  vc.psi_plus = psi[0].scaled(psi_scale);
  vc.psi_minus = psi[1].scaled(psi_scale);
  return vc;
}

namespace {

QMatrix column(const QMatrix& m, std::size_t k) { return m.block(0, m.rows(), k, 1); }
QMatrix row(const QMatrix& m, std::size_t i) { return m.block(i, 1, 0, m.cols()); }

QMatrix unit_column(std::size_t dim, std::size_t i, const QScalar& value = QScalar(1L)) {
  QMatrix out(dim, 1);
  out(i, 0) = value;
  return out;
}

// Residual of a = c·b for the scalar c fixed by the first nonzero entry of b.
std::string proportionality_residual(const std::vector<QMatrix>& a, const std::vector<QMatrix>& b) {
  std::optional<QScalar> c;
  for (std::size_t m = 0; m < b.size() && !c; ++m)
    for (std::size_t i = 0; i < b[m].rows() && !c; ++i)
      for (std::size_t k = 0; k < b[m].cols() && !c; ++k)
        if (!b[m](i, k).is_zero()) c = a[m](i, k) / b[m](i, k);
  if (!c || c->is_zero()) return "no common scale";
  for (std::size_t m = 0; m < a.size(); ++m) {
    const QMatrix diff = a[m] - b[m].scaled(*c);
    if (!diff.is_zero()) return diff.str();
  }
  return {};
}

}  // namespace

VerificationReport verify_vacuum_actions(const VertexComponents& vc) {
  VerificationReport report;
  const std::size_t dt = static_cast<std::size_t>(vc.two_j + 1);
  const std::size_t ds = static_cast<std::size_t>(vc.two_j);
  const QScalar bracket = q_bracket(vc.two_j);
  QMatrix top_row(1, ds);
  top_row(0, 0) = QScalar(1L);
  const QMatrix zero_row(1, ds);
  report.add_zero_check("Phi+|j-1/2> = |j>", column(vc.phi_plus, 0) - unit_column(dt, 0));
  report.add_zero_check("Phi-|j-1/2> = q^(1-2j)/[2j] f|j>",
                        column(vc.phi_minus, 0) - unit_column(dt, 1, QScalar::q_power(1 - vc.two_j) / bracket));
  report.add_zero_check("Psi+|j-1/2> = -q/[2j] f|j>",
                        column(vc.psi_plus, 0) - unit_column(dt, 1, -(QScalar::q() / bracket)));
  report.add_zero_check("Psi-|j-1/2> = |j>", column(vc.psi_minus, 0) - unit_column(dt, 0));
  report.add_zero_check("<j|Phi- = 0", row(vc.phi_minus, 0) - zero_row);
  report.add_zero_check("<j|Psi+ = 0", row(vc.psi_plus, 0) - zero_row);
  report.add_zero_check("<j|Phi+ = <j-1/2|", row(vc.phi_plus, 0) - top_row);
  report.add_zero_check("<j|Psi- = <j-1/2|", row(vc.psi_minus, 0) - top_row);
  return report;
}

VerificationReport verify_component_relations(int two_j) {
  VerificationReport report;
  report.id = "qvertex.components";
  report.params["j"] = spin_str(two_j);
  ReportTimer timer(report);
  const Rep src = make_rep(two_j - 1);
  const Rep tgt = make_rep(two_j);
  const Rep w = make_rep(1);
  const Rep w_dual = dual_rep(w);

  const auto phi_lower = type_one_components(src, w, tgt);       // Φ_{W,i}
  const auto psi_upper = type_two_components(src, w, tgt);       // Ψ^{W,i}
  const auto phi_upper = type_one_components(src, w_dual, tgt);  // Φ^{W,i} = Φ_{W*,i}
  const auto psi_lower = type_two_components(src, w_dual, tgt);  // Ψ_{W,i} = Ψ^{W*,i}

  // The same dual components from the defining relations Φ^W x = Δ(x) Φ^W and x Ψ_W = Ψ_W Δ(x).
  {
    const QMatrix x = solve_intertwiner(src, tensor(tgt, w));
    std::vector<QMatrix> direct;
    for (std::size_t i = 0; i < w.dim(); ++i) direct.push_back(x.row_slice(i, w.dim()));
    report.add("Phi^{W,i} agrees with the direct solve", proportionality_residual(phi_upper, direct));
  }
  {
    const QMatrix x = solve_intertwiner(tensor(w, src), tgt);
    std::vector<QMatrix> direct;
    for (std::size_t i = 0; i < w.dim(); ++i) direct.push_back(x.block(0, tgt.dim(), i * src.dim(), src.dim()));
    report.add("Psi_{W,i} agrees with the direct solve", proportionality_residual(psi_lower, direct));
  }

  enum class Family { phi_upper, psi_upper, phi_lower, psi_lower };
  const struct {
    Family family;
    const char* name;
    const std::vector<QMatrix>* comp;
  } families[] = {
      {Family::phi_upper, "S(x1) Phi^{W,i} x2", &phi_upper},
      {Family::psi_upper, "S'(x2) Psi^{W,i} x1", &psi_upper},
      {Family::phi_lower, "x2 Phi_{W,i} S'(x1)", &phi_lower},
      {Family::psi_lower, "x1 Psi_{W,i} S(x2)", &psi_lower},
  };
  for (const auto& fam : families) {
    const auto& comp = *fam.comp;
    for (UGen g : {UGen::e, UGen::f, UGen::k}) {
      const QMatrix rho = represent(g, w);
      const char* gname = g == UGen::e ? "e" : g == UGen::f ? "f" : "k";
      for (std::size_t i = 0; i < w.dim(); ++i) {
        QMatrix lhs(tgt.dim(), src.dim());
        for (const auto& [x1, x2] : coproduct(g)) {
          switch (fam.family) {
            case Family::phi_upper:
              lhs += represent(antipode(x1), tgt) * comp[i] * represent(x2, src);
              break;
            case Family::psi_upper:
              lhs += represent(antipode_inverse(x2), tgt) * comp[i] * represent(x1, src);
              break;
            case Family::phi_lower:
              lhs += represent(x2, tgt) * comp[i] * represent(antipode_inverse(x1), src);
              break;
            case Family::psi_lower:
              lhs += represent(x1, tgt) * comp[i] * represent(antipode(x2), src);
              break;
          }
        }
        QMatrix rhs(tgt.dim(), src.dim());
        const bool upper = fam.family == Family::phi_upper || fam.family == Family::psi_upper;
        for (std::size_t k = 0; k < w.dim(); ++k) {
          const QScalar& c = upper ? rho(i, k) : rho(k, i);
          if (!c.is_zero()) rhs += comp[k].scaled(c);
        }
        report.add_zero_check(std::string(fam.name) + " x=" + gname + " i=" + std::to_string(i), lhs - rhs);
      }
    }
  }
  return report;
}

VerificationReport verify_qexp_commutation(int two_j) {
  VerificationReport report;
  report.id = "qvertex.qexp";
  report.params["j"] = spin_str(two_j);
  ReportTimer timer(report);
  const VertexComponents vc = solve_vertex_components(two_j);
  const Rep src = make_rep(two_j - 1);
  const Rep tgt = make_rep(two_j);
  const Var t("t"), s("s");
  const TimesPoly tt = TimesPoly::variable(t), ss = TimesPoly::variable(s);
  const QScalar q = QScalar::q(), qi = QScalar::q_power(-1);

  auto e_exp = [&](const Rep& r, int shift) {
    return q_exp_nilpotent(r.E, t, 2).map([&](const TimesPoly& x) { return q_shift(x, t, shift); });
  };
  auto f_exp = [&](const Rep& r, int shift) {
    return q_exp_nilpotent(r.F, s, -2).map([&](const TimesPoly& x) { return q_shift(x, s, shift); });
  };
  const TPMatrix pp = to_tp(vc.phi_plus), pm = to_tp(vc.phi_minus);
  const TPMatrix sp = to_tp(vc.psi_plus), sm = to_tp(vc.psi_minus);
  const TPMatrix et = e_exp(tgt, 0), es = e_exp(src, 0);
  const TPMatrix ft = f_exp(tgt, 0), fs = f_exp(src, 0);

  report.add_zero_check("exp(te)Phi+ = Phi+ exp(te)", et * pp - pp * es);
  report.add_zero_check("exp(te)Phi- = (t Phi+ k^-1 + Phi-) exp(te)",
                        et * pm - (pp * to_tp(src.Kinv)).scaled(tt) * es - pm * es);
  report.add_zero_check("exp(te)Psi+ = Psi+ exp(qte) - qt Psi- exp(q^-1 te)",
                        et * sp - sp * e_exp(src, 1) + (sm * e_exp(src, -1)).scaled(tt * TimesPoly(q)));
  report.add_zero_check("exp(te)Psi- = Psi- exp(q^-1 te)", et * sm - sm * e_exp(src, -1));
  report.add_zero_check("Phi+ exp(sf) = exp(q^-1 sf)Phi+ - exp(qsf) q^-1 s Phi-",
                        pp * fs - f_exp(tgt, -1) * pp + (f_exp(tgt, 1) * pm).scaled(ss * TimesPoly(qi)));
  report.add_zero_check("Phi- exp(sf) = exp(qsf) Phi-", pm * fs - f_exp(tgt, 1) * pm);
  report.add_zero_check("Psi+ exp(sf) = exp(sf) Psi+", sp * fs - ft * sp);
  report.add_zero_check("Psi- exp(sf) = exp(sf)(Psi- + s k Psi+)",
                        sm * fs - ft * (sm + (to_tp(tgt.K) * sp).scaled(ss)));
  return report;
}

VerificationReport verify_qexp_derivatives(int two_j) {
  VerificationReport report;
  report.id = "qvertex.qexp-derivative";
  report.params["j"] = spin_str(two_j);
  ReportTimer timer(report);
  const Rep r = make_rep(two_j);
  const Var t("t"), s("s");
  const TPMatrix et = q_exp_nilpotent(r.E, t, 2);
  const TPMatrix fs = q_exp_nilpotent(r.F, s, -2);
  report.add_zero_check("exp(sf) f = d_s exp(sf)",
                        fs * to_tp(r.F) - fs.map([&](const TimesPoly& x) { return q_derivative(x, s, -2); }));
  report.add_zero_check("e exp(te) = d_t exp(te)",
                        to_tp(r.E) * et - et.map([&](const TimesPoly& x) { return q_derivative(x, t, 2); }));
  return report;
}

}  // namespace tauforge
