#include "tauforge/poly.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "tauforge/expr.hpp"

namespace tauforge {
namespace {

struct VarRegistry {
  std::mutex mutex;
  std::deque<std::string> names{""};
  std::unordered_map<std::string, std::uint32_t> ids;
};

VarRegistry& registry() {
  static VarRegistry r;
  return r;
}

}  // namespace

Var::Var(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  auto [it, inserted] = r.ids.try_emplace(std::string(name), static_cast<std::uint32_t>(r.names.size()));
  if (inserted) r.names.emplace_back(name);
  id_ = it->second;
}

const std::string& Var::name() const {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  // std::deque never relocates existing elements on push_back.
  return r.names[id_];
}

Monomial Monomial::of(Var v, int power) {
  Monomial m;
  if (power > 0) m.factors_.emplace_back(v, power);
  return m;
}

int Monomial::degree(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != v) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.factors_.empty()) return b;
  if (b.factors_.empty()) return a;
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto k = b.factors_.begin();
  while (i != a.factors_.end() || k != b.factors_.end()) {
    if (k == b.factors_.end() || (i != a.factors_.end() && i->first < k->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || k->first < i->first) {
      out.factors_.push_back(*k++);
    } else {
      out.factors_.emplace_back(i->first, i->second + k->second);
      ++i;
      ++k;
    }
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, int>> named(const Monomial& m) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [v, e] : m.factors()) out.emplace_back(v.name(), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool Monomial::render_less(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return named(a) < named(b);
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : named(*this)) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

RatPoly eval_q1(const TimesPoly& p) {
  return p.map_coefficients([](const QScalar& c) -> Rational { return c.eval_q1(); });
}

TimesPoly to_times(const RatPoly& p) {
  return p.map_coefficients([](const Rational& c) -> QScalar { return QScalar(c); });
}

namespace {

struct TimesOps {
  TimesPoly number(const Rational& r) { return TimesPoly(QScalar(r)); }
  TimesPoly symbol(const std::string& name, std::size_t) {
    if (name == "q") return TimesPoly(QScalar::q());
    return TimesPoly::variable(Var(name));
  }
  TimesPoly divide(const TimesPoly& a, const TimesPoly& b, std::size_t pos) {
    if (!b.is_constant() || b.is_zero()) throw ParseError("division by a non-scalar", pos);
    return a * b.constant_term().inverse();
  }
  TimesPoly power(const TimesPoly& a, int e, std::size_t pos) {
    if (e >= 0) return a.pow(e);
    if (!a.is_constant() || a.is_zero()) throw ParseError("negative power of a non-scalar", pos);
    return TimesPoly(a.constant_term().pow(e));
  }
};

}  // namespace

TimesPoly parse_times_poly(std::string_view text) {
  auto tree = parse_expr(text);
  TimesOps ops;
  return evaluate_expr<TimesPoly>(*tree, ops);
}

}  // namespace tauforge
