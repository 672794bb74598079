#include "tauforge/funq.hpp"

#include <map>
#include <mutex>

#include "tauforge/error.hpp"
#include "tauforge/qvertex.hpp"

namespace tauforge {

NCMatrix::NCMatrix(PresentationPtr p, std::size_t rows, std::size_t cols)
    : pres_(std::move(p)), rows_(rows), cols_(cols), data_(rows * cols, NCPoly(pres_)) {}

bool NCMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shape mismatch");
  NCMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
  NCMatrix out(a.pres_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const NCPoly& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.cols_; ++k)
        if (!b(l, k).is_zero()) out(i, k) += x * b(l, k);
    }
  return out;
}

std::string NCMatrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t k = 0; k < cols_; ++k) out += (k ? ", " : "") + (*this)(i, k).str();
    out += "]";
  }
  return out + "]";
}

NCMatrix ordered_kron(const NCMatrix& a, const NCMatrix& b) {
  NCMatrix out(a.presentation(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(j, l).is_zero()) out(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
    }
  return out;
}

NCMatrix sandwich(const QMatrix& left, const NCMatrix& m, const QMatrix& right) {
  if (left.cols() != m.rows() || m.cols() != right.rows()) throw PreconditionError("matrix product dimension mismatch");
  NCMatrix mr(m.presentation(), m.rows(), right.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t l = 0; l < m.cols(); ++l) {
      if (m(i, l).is_zero()) continue;
      for (std::size_t k = 0; k < right.cols(); ++k)
        if (!right(l, k).is_zero()) mr(i, k) += m(i, l) * TimesPoly(right(l, k));
    }
  NCMatrix out(m.presentation(), left.rows(), right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i)
    for (std::size_t l = 0; l < mr.rows(); ++l) {
      if (left(i, l).is_zero()) continue;
      for (std::size_t k = 0; k < right.cols(); ++k)
        if (!mr(l, k).is_zero()) out(i, k) += mr(l, k) * TimesPoly(left(i, l));
    }
  return out;
}

Embedding highest_embedding(const Rep& ambient, int two_j) {
  const Rep rep = make_rep(two_j);
  if (ambient.dim() < rep.dim() || ambient.K(0, 0) != QScalar::q_power(two_j))
    throw ConventionError("first basis vector is not of weight q^" + std::to_string(two_j));
  Embedding out;
  out.iota = QMatrix(ambient.dim(), rep.dim());
  QMatrix v(ambient.dim(), 1);
  v(0, 0) = QScalar(1L);
  for (std::size_t r = 0; r < rep.dim(); ++r) {
    for (std::size_t i = 0; i < ambient.dim(); ++i) out.iota(i, r) = v(i, 0);
    v = ambient.F * v;
  }
  if (!v.is_zero() || !(ambient.E * out.iota.block(0, ambient.dim(), 0, 1)).is_zero())
    throw ConventionError("first basis vector does not generate a highest-weight submodule");
  const QMatrix pi = solve_intertwiner(ambient, rep);
  const QScalar scale = (pi * out.iota)(0, 0);
  if (scale.is_zero()) throw ConventionError("projection annihilates the embedded module");
  out.pi = pi.scaled(scale.inverse());
  if (out.pi * out.iota != QMatrix::identity(rep.dim())) throw ConventionError("projection is not a left inverse");
  return out;
}

Embedding tensor_embedding(int two_j) {
  if (two_j < 1) throw PreconditionError("tensor embedding needs j >= 1/2");
  return highest_embedding(spin_half_power(two_j), two_j);
}

NCMatrix spin_half_t_matrix() {
  const auto p = funq_sl2();
  NCMatrix t(p, 2, 2);
  t(0, 0) = NCPoly::generator(p, "a");
  t(0, 1) = NCPoly::generator(p, "b");
  t(1, 0) = NCPoly::generator(p, "c");
  t(1, 1) = NCPoly::generator(p, "d");
  return t;
}

namespace {

NCMatrix build_abstract(int two_j) {
  const auto p = funq_sl2();
  if (two_j == 0) {
    NCMatrix one(p, 1, 1);
    one(0, 0) = NCPoly(p, TimesPoly(1L));
    return one;
  }
  const NCMatrix t = spin_half_t_matrix();
  NCMatrix power = t;
  for (int i = 1; i < two_j; ++i) power = ordered_kron(power, t);
  const Embedding emb = tensor_embedding(two_j);
  return sandwich(emb.pi, power, emb.iota);
}

}  // namespace

NCMatrix t_matrix(int two_j, TRoute route) {
  if (two_j < 0) throw PreconditionError("spin must be nonnegative");
  if (route == TRoute::gauss) return gauss_t_matrix(two_j, gauss_param());
  static std::mutex mutex;
  static std::map<int, NCMatrix> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(two_j); it != cache.end()) return it->second;
  }
  NCMatrix built = build_abstract(two_j);
  std::lock_guard lock(mutex);
  return cache.emplace(two_j, std::move(built)).first->second;
}

NCMatrix gauss_t_matrix(int two_j, const PresentationPtr& gauss) {
  if (two_j < 0) throw PreconditionError("spin must be nonnegative");
  const Rep rep = make_rep(two_j);
  const std::size_t n = rep.dim();
  const QScalar lambda = QScalar::q() - QScalar::q_power(-1);
  const NCPoly s = NCPoly::generator(gauss, "s");
  const NCPoly sbar = NCPoly::generator(gauss, "sbar");
  const NCPoly big_q = NCPoly::generator(gauss, "Q");
  const NCPoly big_q_inv = NCPoly::generator(gauss, "Qinv");

  // Σ_k (coef A)^k var^k / (k)_{q^base}! with var a generator commuting with the matrix entries.
  auto exp_factor = [&](const QMatrix& a, const QScalar& coef, const NCPoly& var, int base_power) {
    NCMatrix out(gauss, n, n);
    QMatrix power = QMatrix::identity(n);
    NCPoly var_power(gauss, TimesPoly(1L));
    for (std::size_t k = 0; k < n; ++k) {
      const QScalar c = coef.pow(static_cast<int>(k)) / q_paren_factorial(static_cast<int>(k), base_power);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
          if (!power(i, l).is_zero()) out(i, l) += var_power * TimesPoly(power(i, l) * c);
      power = power * a;
      var_power = var_power * var;
    }
    return out;
  };

  NCMatrix cartan(gauss, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const int e = two_j - 2 * static_cast<int>(r);
    cartan(r, r) = e >= 0 ? big_q.pow(e) : big_q_inv.pow(-e);
  }
  return exp_factor(rep.E, lambda, s, -2) * cartan * exp_factor(rep.F, -lambda, sbar, 2);
}

GaussModel gauss_model(const PresentationPtr& gauss) {
  const NCMatrix t = gauss_t_matrix(1, gauss);
  return {t(0, 0), t(0, 1), t(1, 0), t(1, 1)};
}

NCPoly to_gauss(const NCPoly& funq, const PresentationPtr& gauss) {
  const GaussModel g = gauss_model(gauss);
  const auto& p = funq.presentation();
  std::vector<NCPoly> images(p->generators().size(), NCPoly(gauss));
  images[p->generator("a")] = g.a;
  images[p->generator("b")] = g.b;
  images[p->generator("c")] = g.c;
  images[p->generator("d")] = g.d;
  return substitute_generators(funq, images, gauss);
}

VerificationReport verify_gauss_relations(const PresentationPtr& gauss) {
  VerificationReport report;
  report.id = "funq.gauss-relations";
  report.params["presentation"] = gauss->name();
  ReportTimer timer(report);
  const GaussModel g = gauss_model(gauss);
  const TimesPoly q(QScalar::q()), qi(QScalar::q_power(-1));
  const NCPoly one(gauss, TimesPoly(1L));
  report.add_zero_check("ab = q^-1 ba", g.a * g.b - qi * (g.b * g.a));
  report.add_zero_check("ac = q^-1 ca", g.a * g.c - qi * (g.c * g.a));
  report.add_zero_check("bd = q^-1 db", g.b * g.d - qi * (g.d * g.b));
  report.add_zero_check("cd = q^-1 dc", g.c * g.d - qi * (g.d * g.c));
  report.add_zero_check("bc = cb", g.b * g.c - g.c * g.b);
  report.add_zero_check("ad - q^-1 bc = 1", g.a * g.d - qi * (g.b * g.c) - one);
  report.add_zero_check("da - q bc = 1", g.d * g.a - q * (g.b * g.c) - one);
  return report;
}

std::vector<int> passing_gauss_conventions() {
  std::vector<int> out;
  for (int sigma : {-1, 1})
    if (verify_gauss_relations(gauss_param(sigma)).passed()) out.push_back(sigma);
  return out;
}

VerificationReport verify_corep(int two_j, int two_jp) {
  VerificationReport report;
  report.id = "funq.corep";
  report.params["j"] = spin_str(two_j);
  report.params["jp"] = spin_str(two_jp);
  ReportTimer timer(report);
  const NCMatrix product = ordered_kron(t_matrix(two_j), t_matrix(two_jp));
  const Embedding emb = highest_embedding(tensor(make_rep(two_j), make_rep(two_jp)), two_j + two_jp);
  report.add_zero_check("top block of T(j) x T(j') = T(j+j')",
                        sandwich(emb.pi, product, emb.iota) - t_matrix(two_j + two_jp));
  return report;
}

VerificationReport verify_t_matrix_structure(int two_j) {
  VerificationReport report;
  report.id = "funq.t-matrix";
  report.params["j"] = spin_str(two_j);
  ReportTimer timer(report);
  const NCMatrix t = t_matrix(two_j);
  const auto& p = t.presentation();
  std::vector<TimesPoly> counit(p->generators().size());
  counit[p->generator("a")] = TimesPoly(1L);
  counit[p->generator("d")] = TimesPoly(1L);
  std::vector<std::pair<int, int>> weight(p->generators().size());
  weight[p->generator("a")] = {1, 1};
  weight[p->generator("b")] = {1, -1};
  weight[p->generator("c")] = {-1, 1};
  weight[p->generator("d")] = {-1, -1};
  for (std::size_t m = 0; m < t.rows(); ++m)
    for (std::size_t r = 0; r < t.cols(); ++r) {
      const std::string at = "(" + std::to_string(m) + "," + std::to_string(r) + ")";
      const TimesPoly expected(m == r ? 1L : 0L);
      report.add_zero_check("counit " + at, substitute_scalars(t(m, r), counit) - expected);
      const std::pair<int, int> target{two_j - 2 * static_cast<int>(m), two_j - 2 * static_cast<int>(r)};
      std::string bad;
      for (const auto& [w, c] : t(m, r).terms()) {
        std::pair<int, int> deg{0, 0};
        for (Gen g : w) deg.first += weight[g].first, deg.second += weight[g].second;
        if (deg != target) bad += (bad.empty() ? "" : ", ") + p->word_str(w);
      }
      report.add("weight " + at, bad);
    }
  return report;
}

VerificationReport verify_dual_route(int two_j) {
  VerificationReport report;
  report.id = "funq.dual-route";
  report.params["j"] = spin_str(two_j);
  ReportTimer timer(report);
  const auto gauss = gauss_param();
  const NCMatrix via_abstract = t_matrix(two_j).map(gauss, [&](const NCPoly& x) { return to_gauss(x, gauss); });
  report.add_zero_check("abstract T under the Gauss model = Gauss T", via_abstract - gauss_t_matrix(two_j, gauss));
  return report;
}

NCPoly tau_q(int two_j, Var e_var, Var f_var, TRoute route) {
  if (e_var == f_var) throw PreconditionError("tau needs two distinct variables");
  const NCMatrix t = t_matrix(two_j, route);
  const Rep rep = make_rep(two_j);
  const TPMatrix e = q_exp_nilpotent(rep.E, e_var, 2);
  const TPMatrix f = q_exp_nilpotent(rep.F, f_var, -2);
  NCPoly out(t.presentation());
  for (std::size_t m = 0; m < rep.dim(); ++m)
    for (std::size_t r = 0; r < rep.dim(); ++r)
      if (!t(m, r).is_zero()) out += t(m, r) * (e(0, m) * f(r, 0));
  return out;
}

}  // namespace tauforge
