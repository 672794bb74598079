#include "tauforge/toda.hpp"

#include <bit>
#include <random>

#include "json.hpp"
#include "tauforge/error.hpp"

namespace tauforge {

namespace {

Rational det_rational(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError("matrix entries must be integers or rational strings", 0);
  Rational r;
  if (r.set_str(v.get<std::string>(), 10) != 0 || r.get_den() == 0)
    throw ParseError("bad rational entry '" + v.get<std::string>() + "'", 0);
  r.canonicalize();
  return r;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix out(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

PolyMatrix identity(std::size_t n) {
  PolyMatrix out(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = RatPoly(Rational(1));
  return out;
}

// exp(Σ_k t_k I_{±k}); the exponent is nilpotent so the series stops at power n.
PolyMatrix nilpotent_exp(std::size_t n, const std::vector<Var>& times, bool upper) {
  PolyMatrix h(n, std::vector<RatPoly>(n));
  for (std::size_t k = 1; k <= times.size(); ++k)
    for (std::size_t i = 0; i + k < n; ++i) {
      RatPoly& slot = upper ? h[i][i + k] : h[i + k][i];
      slot += RatPoly::variable(times[k - 1]);
    }
  PolyMatrix out = identity(n), power = identity(n);
  for (std::size_t m = 1; m < n; ++m) {
    power = multiply(power, h);
    Rational inv(1, static_cast<long>(m));
    for (auto& row : power)
      for (auto& e : row) e *= RatPoly(inv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += power[i][j];
  }
  return out;
}

}  // namespace

TodaInstance::TodaInstance(RatMatrix matrix) : g(std::move(matrix)) {
  if (g.empty()) throw PreconditionError("Toda instance needs size >= 1");
  for (const auto& row : g)
    if (row.size() != g.size()) throw PreconditionError("Toda instance matrix must be square");
  if (sgn(det_rational(g)) == 0) throw PreconditionError("Toda instance matrix must be invertible");
}

TodaInstance toda_instance_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what(), 0);
  }
  if (!doc.contains("g") || !doc["g"].is_array()) throw ParseError("instance JSON needs a matrix field 'g'", 0);
  RatMatrix g;
  for (const auto& row : doc["g"]) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays", 0);
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(parse_rational(v));
    g.push_back(std::move(r));
  }
  if (doc.contains("size") && doc["size"].get<std::size_t>() != g.size())
    throw PreconditionError("instance size does not match the matrix");
  return TodaInstance(std::move(g));
}

TodaInstance random_toda_instance(std::uint32_t seed, int size) {
  if (size < 1) throw PreconditionError("Toda instance needs size >= 1");
  std::mt19937 engine(seed);
  auto range = [&](int lo, int hi) { return lo + static_cast<int>(engine() % static_cast<std::uint32_t>(hi - lo + 1)); };
  for (;;) {
    RatMatrix g(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (auto& row : g)
      for (auto& e : row) {
        e = Rational(range(-5, 5), range(1, 4));
        e.canonicalize();
      }
    if (sgn(det_rational(g)) != 0) return TodaInstance(std::move(g));
  }
}

std::vector<Var> toda_x_vars(const TodaInstance& inst, TodaTimes times) {
  const int n = times == TodaTimes::principal_only ? std::min(1, inst.size() - 1) : inst.size() - 1;
  std::vector<Var> out;
  for (int k = 1; k <= n; ++k) out.push_back(Var::indexed("x", k));
  return out;
}

std::vector<Var> toda_u_vars(const TodaInstance& inst, TodaTimes times) {
  const int n = times == TodaTimes::principal_only ? std::min(1, inst.size() - 1) : inst.size() - 1;
  std::vector<Var> out;
  for (int k = 1; k <= n; ++k) out.push_back(Var::indexed("u", k));
  return out;
}

PolyMatrix toda_matrix(const TodaInstance& inst, TodaTimes times) {
  const std::size_t n = inst.g.size();
  PolyMatrix g(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = RatPoly(inst.g[i][j]);
  return multiply(multiply(nilpotent_exp(n, toda_x_vars(inst, times), true), g),
                  nilpotent_exp(n, toda_u_vars(inst, times), false));
}

RatPoly poly_minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw PreconditionError("minor needs as many rows as columns");
  const std::size_t k = rows.size();
  if (k == 0) return RatPoly(Rational(1));
  if (k > 20) throw PreconditionError("minor too large");
  // Laplace expansion along rows, memoised over the set of columns used so far.
  std::vector<RatPoly> det(std::size_t{1} << k);
  det[0] = RatPoly(Rational(1));
  for (std::size_t set = 1; set < det.size(); ++set) {
    const int row = std::popcount(set) - 1;
    RatPoly acc;
    int sign = 1;
    for (std::size_t c = k; c-- > 0;) {
      if (!(set >> c & 1U)) continue;
      const RatPoly& entry = m[static_cast<std::size_t>(rows[static_cast<std::size_t>(row)])][static_cast<std::size_t>(cols[c])];
      if (!entry.is_zero()) {
        const RatPoly term = det[set & ~(std::size_t{1} << c)] * entry;
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    det[set] = std::move(acc);
  }
  return det.back();
}

RatPoly toda_tau(const TodaInstance& inst, int k, TodaTimes times) {
  if (k < 0 || k > inst.size()) throw PreconditionError("tau index must lie in 0..n+1");
  std::vector<int> idx;
  for (int i = 0; i < k; ++i) idx.push_back(i);
  return poly_minor(toda_matrix(inst, times), idx, idx);
}

VerificationReport verify_toda_bilinear(const TodaInstance& inst) {
  VerificationReport report;
  report.id = "toda.bilinear";
  report.params["size"] = std::to_string(inst.size());
  ReportTimer timer(report);
  const PolyMatrix m = toda_matrix(inst, TodaTimes::principal_only);
  const Var x = Var::indexed("x", 1), u = Var::indexed("u", 1);
  std::vector<RatPoly> tau;
  for (int k = 0; k <= inst.size(); ++k) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(i);
    tau.push_back(poly_minor(m, idx, idx));
  }
  for (int k = 1; k < inst.size(); ++k) {
    const RatPoly& t = tau[static_cast<std::size_t>(k)];
    const RatPoly lhs = t * t.derivative(x).derivative(u) - t.derivative(x) * t.derivative(u);
    const RatPoly rhs = tau[static_cast<std::size_t>(k + 1)] * tau[static_cast<std::size_t>(k - 1)];
    const std::string label = "k=" + std::to_string(k);
    if (lhs == rhs) {
      report.add(label, "");
      continue;
    }
    std::string residual = (lhs - rhs).str();
    if (!rhs.is_zero()) {
      const auto& [mono, c] = *rhs.terms().begin();
      const Rational fitted = lhs.coefficient(mono) / c;
      if (lhs == rhs * RatPoly(fitted)) residual = "fitted constant " + fitted.get_str();
    }
    report.add(label, residual);
  }
  return report;
}

}  // namespace tauforge
