#include "tauforge/uqsl2.hpp"

namespace tauforge {

Rep make_rep(int two_j) {
  if (two_j < 0) throw PreconditionError("spin must be nonnegative");
  const auto d = static_cast<std::size_t>(two_j + 1);
  Rep rep;
  rep.two_j = two_j;
  rep.E = QMatrix(d, d);
  rep.F = QMatrix(d, d);
  rep.K = QMatrix(d, d);
  rep.Kinv = QMatrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const int ri = static_cast<int>(r);
    rep.K(r, r) = QScalar::q_power(two_j - 2 * ri);
    rep.Kinv(r, r) = QScalar::q_power(2 * ri - two_j);
    if (r + 1 < d) rep.F(r + 1, r) = QScalar(1L);
    if (r >= 1) rep.E(r - 1, r) = q_bracket(ri) * q_bracket(two_j - ri + 1);
  }
  return rep;
}

Rep tensor(const Rep& v, const Rep& w) {
  const QMatrix iv = QMatrix::identity(v.dim());
  const QMatrix iw = QMatrix::identity(w.dim());
  Rep out;
  out.E = kron(v.E, iw) + kron(v.Kinv, w.E);
  out.F = kron(iv, w.F) + kron(v.F, w.K);
  out.K = kron(v.K, w.K);
  out.Kinv = kron(v.Kinv, w.Kinv);
  return out;
}

Rep spin_half_power(int n) {
  if (n < 1) throw PreconditionError("tensor power must be positive");
  const Rep half = make_rep(1);
  Rep out = half;
  for (int i = 1; i < n; ++i) out = tensor(out, half);
  return out;
}

VerificationReport check_rep_relations(const Rep& rep) {
  VerificationReport report;
  const QScalar q2 = QScalar::q_power(2);
  const QScalar lambda_inv = (QScalar::q() - QScalar::q_power(-1)).inverse();
  const QMatrix id = QMatrix::identity(rep.dim());
  report.add_zero_check("KE-q^2EK", rep.K * rep.E - (rep.E * rep.K).scaled(q2));
  report.add_zero_check("[E,F]-(K-K^-1)/(q-q^-1)", rep.E * rep.F - rep.F * rep.E - (rep.K - rep.Kinv).scaled(lambda_inv));
  report.add_zero_check("KK^-1-1", rep.K * rep.Kinv - id);
  report.add_zero_check("K^-1K-1", rep.Kinv * rep.K - id);
  if (rep.two_j >= 0) {
    const int n = rep.two_j + 1;
    report.add_zero_check("E^(2j+1)", rep.E.pow(n));
    report.add_zero_check("F^(2j+1)", rep.F.pow(n));
  }
  return report;
}

UqElement operator*(const UqElement& a, const UqElement& b) {
  std::vector<UqElement::Term> out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      std::vector<UGen> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(std::move(w), ca * cb);
    }
  return UqElement(std::move(out));
}

UqElement operator+(const UqElement& a, const UqElement& b) {
  std::vector<UqElement::Term> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return UqElement(std::move(out));
}

UqElement UqElement::scaled(const QScalar& c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.second *= c;
  return UqElement(std::move(out));
}

QMatrix represent(UGen g, const Rep& rep) {
  switch (g) {
    case UGen::e:
      return rep.E;
    case UGen::f:
      return rep.F;
    case UGen::k:
      return rep.K;
    case UGen::kinv:
      return rep.Kinv;
  }
  throw PreconditionError("unknown generator");
}

QMatrix represent(const UqElement& x, const Rep& rep) {
  QMatrix out(rep.dim(), rep.dim());
  for (const auto& [w, c] : x.terms()) {
    QMatrix m = QMatrix::identity(rep.dim());
    for (UGen g : w) m = m * represent(g, rep);
    out += m.scaled(c);
  }
  return out;
}

std::vector<std::pair<UqElement, UqElement>> coproduct(UGen g) {
  const UqElement one = UqElement::unit();
  switch (g) {
    case UGen::e:
      return {{UqElement::gen(UGen::e), one}, {UqElement::gen(UGen::kinv), UqElement::gen(UGen::e)}};
    case UGen::f:
      return {{one, UqElement::gen(UGen::f)}, {UqElement::gen(UGen::f), UqElement::gen(UGen::k)}};
    case UGen::k:
      return {{UqElement::gen(UGen::k), UqElement::gen(UGen::k)}};
    case UGen::kinv:
      return {{UqElement::gen(UGen::kinv), UqElement::gen(UGen::kinv)}};
  }
  throw PreconditionError("unknown generator");
}

int counit(UGen g) { return (g == UGen::k || g == UGen::kinv) ? 1 : 0; }

namespace {

UqElement word(std::initializer_list<UGen> gens, long sign) {
  return UqElement({{std::vector<UGen>(gens), QScalar(sign)}});
}

UqElement anti(const UqElement& x, bool inverse) {
  UqElement acc;
  for (const auto& [w, c] : x.terms()) {
    UqElement term = UqElement::unit().scaled(c);
    // Antihomomorphism: images of letters multiply in reverse order.
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      UqElement image;
      switch (*it) {
        case UGen::e:
          image = inverse ? word({UGen::e, UGen::k}, -1) : word({UGen::k, UGen::e}, -1);
          break;
        case UGen::f:
          image = inverse ? word({UGen::kinv, UGen::f}, -1) : word({UGen::f, UGen::kinv}, -1);
          break;
        case UGen::k:
          image = word({UGen::kinv}, 1);
          break;
        case UGen::kinv:
          image = word({UGen::k}, 1);
          break;
      }
      term = term * image;
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

UqElement antipode(const UqElement& x) { return anti(x, false); }
UqElement antipode_inverse(const UqElement& x) { return anti(x, true); }

QMatrix coproduct_action(UGen g, const Rep& v, const Rep& w) {
  QMatrix out(v.dim() * w.dim(), v.dim() * w.dim());
  for (const auto& [x1, x2] : coproduct(g)) out += kron(represent(x1, v), represent(x2, w));
  return out;
}

Rep dual_rep(const Rep& rep) {
  Rep out;
  out.E = represent(antipode_inverse(UqElement::gen(UGen::e)), rep).transpose();
  out.F = represent(antipode_inverse(UqElement::gen(UGen::f)), rep).transpose();
  out.K = represent(antipode_inverse(UqElement::gen(UGen::k)), rep).transpose();
  out.Kinv = represent(antipode_inverse(UqElement::gen(UGen::kinv)), rep).transpose();
  return out;
}

TPMatrix q_exp_nilpotent(const TPMatrix& a, Var var, int base_power) {
  if (a.rows() != a.cols()) throw PreconditionError("q-exponential needs a square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k).degree_in(var) > 0)
        throw PreconditionError("q-exponential variable " + var.name() + " already occurs in the matrix");
  if (!a.pow(static_cast<int>(a.rows())).is_zero())
    throw PreconditionError("q-exponential of a non-nilpotent matrix does not terminate");
  TPMatrix out = TPMatrix::identity(a.rows());
  TPMatrix power = out;
  const TimesPoly t = TimesPoly::variable(var);
  TimesPoly t_power(1L);
  for (int n = 1; n < static_cast<int>(a.rows()); ++n) {
    power = power * a;
    if (power.is_zero()) break;
    t_power *= t;
    out += power.scaled(t_power * TimesPoly(q_paren_factorial(n, base_power).inverse()));
  }
  return out;
}

TPMatrix q_exp_nilpotent(const QMatrix& a, Var var, int base_power) {
  return q_exp_nilpotent(to_tp(a), var, base_power);
}

VerificationReport verify_hopf_matrices(int two_j, int two_jp) {
  VerificationReport report;
  report.id = "uqsl2.hopf";
  report.params["j"] = spin_str(two_j);
  report.params["jprime"] = spin_str(two_jp);
  ReportTimer timer(report);
  const Rep v = make_rep(two_j);
  const Rep w = make_rep(two_jp);
  const Rep vw = tensor(v, w);
  report.absorb(check_rep_relations(vw), "tensor ");

  const Var t("t"), s("s");
  const QMatrix iv = QMatrix::identity(v.dim());
  const QMatrix iw = QMatrix::identity(w.dim());
  // Δ(exp_{q^2}(t e)) = exp_{q^2}(t k^-1⊗e) exp_{q^2}(t e⊗1)
  report.add_zero_check("sl1", q_exp_nilpotent(vw.E, t, 2) -
                                   q_exp_nilpotent(kron(v.Kinv, w.E), t, 2) * q_exp_nilpotent(kron(v.E, iw), t, 2));
  // Δ(exp_{q^-2}(s f)) = exp_{q^-2}(1⊗s f) exp_{q^-2}(s f⊗k)
  report.add_zero_check("sl2", q_exp_nilpotent(vw.F, s, -2) -
                                   q_exp_nilpotent(kron(iv, w.F), s, -2) * q_exp_nilpotent(kron(v.F, w.K), s, -2));

  for (const Rep* rep : {&v, &w, &vw}) {
    const std::string where = rep == &v ? " in V_j" : rep == &w ? " in V_jp" : " in V_j(x)V_jp";
    const QMatrix id = QMatrix::identity(rep->dim());
    for (UGen g : {UGen::e, UGen::f, UGen::k}) {
      const std::string name = g == UGen::e ? "e" : g == UGen::f ? "f" : "k";
      QMatrix left(rep->dim(), rep->dim()), right(rep->dim(), rep->dim());
      for (const auto& [x1, x2] : coproduct(g)) {
        left += represent(antipode(x1), *rep) * represent(x2, *rep);
        right += represent(x1, *rep) * represent(antipode(x2), *rep);
      }
      const QMatrix eps = id.scaled(QScalar(static_cast<long>(counit(g))));
      report.add_zero_check("m(S(x)id)D(" + name + ")-eps" + where, left - eps);
      report.add_zero_check("m(id(x)S)D(" + name + ")-eps" + where, right - eps);
      const UqElement x = UqElement::gen(g);
      report.add_zero_check("S'(S(" + name + "))-" + name + where,
                            represent(antipode_inverse(antipode(x)), *rep) - represent(x, *rep));
    }
  }
  return report;
}

}  // namespace tauforge
