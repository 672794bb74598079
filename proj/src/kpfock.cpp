#include "tauforge/kpfock.hpp"

#include <bit>
#include <random>

namespace tauforge {

namespace {

Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

int BoundaryCertificate::margin() const {
  if (!touched) return window;
  return std::min(window - 1 - highest_particle, lowest_hole + window);
}

std::string BoundaryCertificate::str() const {
  if (!touched) return "window " + std::to_string(window) + ", untouched";
  return "window [" + std::to_string(-window) + "," + std::to_string(window) + "), particles <= " +
         std::to_string(highest_particle) + ", holes >= " + std::to_string(lowest_hole);
}

FockSpace::FockSpace(int window) : window_(window) {
  if (window < 2 || window > 32) throw PreconditionError("Fock window must be between 2 and 32");
  cert_.window = window;
  cert_.highest_particle = -window;
  cert_.lowest_hole = window - 1;
}

FockMask FockSpace::vacuum(int charge) const {
  if (charge <= -window_ || charge >= window_ - 1)
    throw BoundaryError(charge, "vacuum charge outside the window");
  const int filled = charge + window_;
  return filled == 0 ? 0 : (FockMask{1} << filled) - 1;
}

FockMask FockSpace::state(int charge, const std::vector<int>& partition) const {
  FockMask s = vacuum(charge);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0 || (i > 0 && partition[i] > partition[i - 1]))
      throw PreconditionError("partition parts must be positive and weakly decreasing");
    const int from = charge - 1 - static_cast<int>(i);
    const int to = from + partition[i];
    if (!in_window(from) || !in_window(to)) throw BoundaryError(in_window(to) ? from : to, "partition outside the window");
    s &= ~(FockMask{1} << bit(from));
    s |= FockMask{1} << bit(to);
  }
  return s;
}

int FockSpace::charge(FockMask s) const { return std::popcount(s) - window_; }

std::vector<int> FockSpace::partition(FockMask s) const {
  const int n = charge(s);
  std::vector<int> parts;
  int i = 0;
  for (int mode = window_ - 1; mode >= -window_; --mode) {
    if (!occupied(s, mode)) continue;
    const int part = mode - (n - 1 - i);
    if (part > 0) parts.push_back(part);
    ++i;
  }
  return parts;
}

int FockSpace::energy(FockMask s) const {
  int e = 0;
  for (int p : partition(s)) e += p;
  return e;
}

bool FockSpace::occupied(FockMask s, int mode) const {
  if (mode < -window_) return true;
  if (mode >= window_) return false;
  return (s >> bit(mode)) & 1U;
}

std::string FockSpace::state_str(FockMask s) const {
  std::string out = "|" + std::to_string(charge(s)) + ";";
  const auto parts = partition(s);
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ">";
}

int FockSpace::sign_above(FockMask s, int mode) const {
  const int b = bit(mode);
  const FockMask above = b + 1 >= 64 ? 0 : s >> (b + 1);
  return std::popcount(above) % 2 ? -1 : 1;
}

void FockSpace::record(FockMask s, const char* context) const {
  const int top = s == 0 ? -window_ - 1 : 63 - std::countl_zero(s) - window_;
  const int bottom_hole = std::countr_one(s) - window_;
  if (top >= window_ - 1) throw BoundaryError(top, std::string(context) + ": particle in the guard mode");
  if (bottom_hole <= -window_) throw BoundaryError(bottom_hole, std::string(context) + ": hole in the guard mode");
  cert_.touched = true;
  cert_.highest_particle = std::max(cert_.highest_particle, top);
  cert_.lowest_hole = std::min(cert_.lowest_hole, bottom_hole);
}

template <class C>
FockVector<C> FockSpace::apply(Fermion kind, int mode, const FockVector<C>& v) const {
  if (!in_window(mode)) throw BoundaryError(mode, "fermion mode outside the window");
  FockVector<C> out;
  const FockMask m = FockMask{1} << bit(mode);
  for (const auto& [s, c] : v) {
    const bool occ = s & m;
    if (occ == (kind == Fermion::psi)) continue;
    const FockMask t = s ^ m;
    record(t, kind == Fermion::psi ? "psi" : "psi*");
    out[t] += sign_above(s, mode) > 0 ? c : -c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == C(); });
  return out;
}

template <class C>
FockVector<C> FockSpace::heisenberg(int k, const FockVector<C>& v) const {
  if (k == 0) throw PreconditionError("a_0 is not used");
  FockVector<C> out;
  for (const auto& [s, c] : v) {
    if (k < 0) {
      // Out-of-window terms: a particle leaving the top of the window, or a sea particle
      // filling a hole near the bottom.
      for (int p = window_ + k; p < window_; ++p)
        if (occupied(s, p)) throw BoundaryError(p - k, "a_" + std::to_string(k) + " leaves the window");
      for (int h = -window_; h < -window_ - k; ++h)
        if (!occupied(s, h)) throw BoundaryError(h - (-k), "a_" + std::to_string(k) + " draws from below the window");
    }
    for (int p = -window_; p < window_; ++p) {
      if (!occupied(s, p)) continue;
      const int target = p - k;
      if (!in_window(target) || occupied(s, target)) continue;
      const FockMask removed = s & ~(FockMask{1} << bit(p));
      const int sign = sign_above(s, p) * sign_above(removed, target);
      const FockMask t = removed | (FockMask{1} << bit(target));
      record(t, "heisenberg");
      out[t] += sign > 0 ? c : -c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == C(); });
  return out;
}

template <class C>
FockVector<C> FockSpace::apply_group(const GroupElementSpec& g, FockVector<C> v) const {
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    if (it->i == it->j) throw PreconditionError("unipotent factor needs i != j");
    const auto moved = apply(Fermion::psi, it->i, apply(Fermion::psi_star, it->j, v));
    for (const auto& [s, c] : moved) v[s] += c * C(it->theta);
    std::erase_if(v, [](const auto& kv) { return kv.second == C(); });
  }
  return v;
}

template FockVector<Rational> FockSpace::apply(Fermion, int, const FockVector<Rational>&) const;
template FockVector<RatPoly> FockSpace::apply(Fermion, int, const FockVector<RatPoly>&) const;
template FockVector<Rational> FockSpace::heisenberg(int, const FockVector<Rational>&) const;
template FockVector<RatPoly> FockSpace::heisenberg(int, const FockVector<RatPoly>&) const;
template FockVector<Rational> FockSpace::apply_group(const GroupElementSpec&, FockVector<Rational>) const;
template FockVector<RatPoly> FockSpace::apply_group(const GroupElementSpec&, FockVector<RatPoly>) const;

PolyVector FockSpace::flow(FlowDirection direction, const std::vector<Var>& times, const PolyVector& v,
                           int degree) const {
  // With E(s) = exp(Σ s^k t_k a_k) v, dE/ds = Σ k s^{k-1} t_k a_k E since the a_k commute,
  // so the weight-w part is E_w = (1/w) Σ_k k t_k a_k E_{w-k}.
  const int sign = direction == FlowDirection::positive ? 1 : -1;
  std::vector<PolyVector> layers{v};
  PolyVector total = v;
  for (int w = 1; w <= degree; ++w) {
    PolyVector layer;
    for (int k = 1; k <= std::min<int>(w, static_cast<int>(times.size())); ++k) {
      const PolyVector& prev = layers[static_cast<std::size_t>(w - k)];
      if (prev.empty()) continue;
      const RatPoly factor = RatPoly::variable(times[static_cast<std::size_t>(k - 1)]) * RatPoly(ratio(k, w));
      for (const auto& [s, c] : heisenberg(sign * k, prev)) layer[s] += c * factor;
    }
    std::erase_if(layer, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [s, c] : layer) total[s] += c;
    layers.push_back(std::move(layer));
  }
  std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
  return total;
}

std::vector<FockMask> FockSpace::states(int charge, int max_energy) const {
  std::vector<FockMask> out;
  std::vector<int> parts;
  // Partitions by recursion on the largest allowed part.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    try {
      const FockMask s = state(charge, parts);
      record(s, "enumeration");
      out.push_back(s);
    } catch (const BoundaryError&) {
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, max_energy, max_energy);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Var> time_vars(const std::string& stem, int n) {
  std::vector<Var> out;
  for (int k = 1; k <= n; ++k) out.push_back(Var::indexed(stem, k));
  return out;
}

int WeightGroups::add(const std::vector<Var>& vars, int cap) {
  const int group = static_cast<int>(caps.size());
  caps.push_back(cap);
  for (std::size_t k = 0; k < vars.size(); ++k) grade[vars[k]] = {group, static_cast<int>(k) + 1};
  return group;
}

namespace {

std::vector<int> group_weights(const WeightGroups& wg, const Monomial& m) {
  std::vector<int> w(wg.caps.size(), 0);
  for (const auto& [v, e] : m.factors()) {
    auto it = wg.grade.find(v);
    if (it != wg.grade.end()) w[static_cast<std::size_t>(it->second.first)] += it->second.second * e;
  }
  return w;
}

}  // namespace

bool WeightGroups::fits(const Monomial& m) const {
  const auto w = group_weights(*this, m);
  for (std::size_t g = 0; g < caps.size(); ++g)
    if (w[g] > caps[g]) return false;
  return true;
}

RatPoly WeightGroups::truncate(const RatPoly& p) const {
  return p.filter([&](const Monomial& m) { return fits(m); });
}

RatPoly WeightGroups::product(const RatPoly& a, const RatPoly& b) const {
  struct Entry {
    const Monomial* m;
    const Rational* c;
    std::vector<int> w;
  };
  auto collect = [&](const RatPoly& p) {
    std::vector<Entry> out;
    for (const auto& [m, c] : p.terms()) out.push_back({&m, &c, group_weights(*this, m)});
    return out;
  };
  const auto ea = collect(a), eb = collect(b);
  std::map<Monomial, Rational> acc;
  for (const auto& x : ea)
    for (const auto& y : eb) {
      bool ok = true;
      for (std::size_t g = 0; g < caps.size() && ok; ++g) ok = x.w[g] + y.w[g] <= caps[g];
      if (ok) acc[*x.m * *y.m] += *x.c * *y.c;
    }
  RatPoly out;
  for (const auto& [m, c] : acc)
    if (sgn(c) != 0) out.add_term(m, c);
  return out;
}

RatPoly schur_polynomial(int j, const std::vector<Var>& vars, const Rational& scale) {
  if (j < 0) return RatPoly();
  std::vector<RatPoly> s{RatPoly(Rational(1))};
  for (int n = 1; n <= j; ++n) {
    RatPoly acc;
    for (int k = 1; k <= std::min<int>(n, static_cast<int>(vars.size())); ++k)
      acc += RatPoly::variable(vars[static_cast<std::size_t>(k - 1)]) * s[static_cast<std::size_t>(n - k)] *
             RatPoly(scale * ratio(k, n));
    s.push_back(std::move(acc));
  }
  return s.back();
}

namespace {

// ∂^{e_1}_{v_1} ∂^{e_2}_{v_2} ... f, directly on the terms.
RatPoly apply_derivatives(const RatPoly& f, const std::vector<std::pair<Var, int>>& ops) {
  RatPoly out;
  for (const auto& [m, c] : f.terms()) {
    Rational coeff = c;
    Monomial rest = m;
    bool zero = false;
    for (const auto& [v, e] : ops) {
      const int d = rest.degree(v);
      if (d < e) {
        zero = true;
        break;
      }
      for (int i = 0; i < e; ++i) coeff *= d - i;
      rest = d - e > 0 ? rest.without(v) * Monomial::of(v, d - e) : rest.without(v);
    }
    if (!zero) out.add_term(rest, coeff);
  }
  return out;
}

}  // namespace

RatPoly schur_operator(int j, const std::vector<Var>& vars, int sign, const RatPoly& f) {
  if (j < 0) return RatPoly();
  if (j == 0) return f;
  const std::vector<Var> formal = time_vars("schur_t", j);
  const RatPoly s = schur_polynomial(j, formal);
  RatPoly out;
  for (const auto& [m, c] : s.terms()) {
    Rational coeff = c;
    std::vector<std::pair<Var, int>> ops;
    bool zero = false;
    for (const auto& [v, e] : m.factors()) {
      const int k = static_cast<int>(std::find(formal.begin(), formal.end(), v) - formal.begin()) + 1;
      if (k > static_cast<int>(vars.size())) {
        zero = true;
        break;
      }
      for (int i = 0; i < e; ++i) coeff *= ratio(sign, k);
      ops.emplace_back(vars[static_cast<std::size_t>(k - 1)], e);
    }
    if (!zero) out += apply_derivatives(f, ops) * RatPoly(coeff);
  }
  return out;
}

RatPoly tau_kp(const FockSpace& space, const GroupElementSpec& g, int charge, int deg_x, int deg_u,
               const std::string& x_stem, const std::string& u_stem) {
  if (deg_x < 0 || deg_u < 0) throw PreconditionError("degrees must be nonnegative");
  const FockMask vac = space.vacuum(charge);
  PolyVector v{{vac, RatPoly(Rational(1))}};
  if (deg_u > 0) v = space.flow(FlowDirection::negative, time_vars(u_stem, deg_u), v, deg_u);
  v = space.apply_group(g, v);
  v = space.flow(FlowDirection::positive, time_vars(x_stem, deg_x), v, deg_x);
  auto it = v.find(vac);
  return it == v.end() ? RatPoly() : it->second;
}

GroupElementSpec random_group_element(std::uint32_t seed, int factors) {
  std::mt19937 engine(seed);
  auto range = [&](int lo, int hi) { return lo + static_cast<int>(engine() % static_cast<std::uint32_t>(hi - lo + 1)); };
  GroupElementSpec g;
  while (static_cast<int>(g.size()) < factors) {
    const int i = range(-3, 2), j = range(-3, 2);
    if (i <= j) continue;
    int num = 0;
    while (num == 0) num = range(-5, 5);
    Rational theta(num, range(1, 5));
    theta.canonicalize();
    g.push_back({theta, i, j});
  }
  return g;
}

std::string group_str(const GroupElementSpec& g) {
  if (g.empty()) return "1";
  std::string out;
  for (const auto& f : g)
    out += (out.empty() ? "" : " ") + std::string("exp(") + f.theta.get_str() + " psi_" + std::to_string(f.i) +
           " psi*_" + std::to_string(f.j) + ")";
  return out;
}

namespace {

std::map<Var, RatPoly> shift_map(const std::vector<Var>& base, const std::vector<Var>& by, int sign) {
  std::map<Var, RatPoly> out;
  for (std::size_t k = 0; k < base.size(); ++k)
    out[base[k]] = RatPoly::variable(base[k]) + RatPoly::variable(by[k]) * RatPoly(Rational(sign));
  return out;
}

RatPoly fermionic_residual(const FockSpace& space, const GroupElementSpec& g, int degree) {
  const RatVector gv = space.apply_group(g, RatVector{{space.vacuum(0), Rational(1)}});
  const auto xs = time_vars("x", degree), ys = time_vars("y", degree);
  auto lift = [](const RatVector& v) {
    PolyVector out;
    for (const auto& [s, c] : v) out[s] = RatPoly(c);
    return out;
  };
  auto project = [](const PolyVector& v, FockMask s) {
    auto it = v.find(s);
    return it == v.end() ? RatPoly() : it->second;
  };
  RatPoly residual;
  for (int j = -space.window(); j < space.window(); ++j) {
    bool has_particle = false, has_hole = false;
    for (const auto& [s, c] : gv) (space.occupied(s, j) ? has_particle : has_hole) = true;
    if (!has_particle || !has_hole) continue;  // one of ψ_j g|v_0>, ψ*_j g|v_0> vanishes
    const PolyVector a = space.flow(FlowDirection::positive, xs, lift(space.apply(Fermion::psi, j, gv)), degree);
    const PolyVector b = space.flow(FlowDirection::positive, ys, lift(space.apply(Fermion::psi_star, j, gv)), degree);
    residual += project(a, space.vacuum(1)) * project(b, space.vacuum(-1));
  }
  return residual;
}

RatPoly hirota_residual(const FockSpace& space, const GroupElementSpec& g, int degree) {
  const int inner = degree + 1;
  const auto xs = time_vars("x", inner), ys = time_vars("y", inner);
  const RatPoly tau = tau_kp(space, g, 0, inner, 0);
  WeightGroups wg;
  const int group = wg.add(xs, inner);
  for (std::size_t k = 0; k < ys.size(); ++k) wg.grade[ys[k]] = {group, static_cast<int>(k) + 1};
  const RatPoly f = wg.product(tau.substitute(shift_map(xs, ys, 1)), tau.substitute(shift_map(xs, ys, -1)));
  WeightGroups out_wg = wg;
  out_wg.caps = {degree};
  RatPoly residual;
  for (int j = 0; j <= degree; ++j)
    residual += out_wg.product(schur_polynomial(j, ys, Rational(2)), schur_operator(j + 1, ys, -1, f));
  return residual;
}

struct TwoSidedSides {
  RatPoly lhs, rhs;
};

TwoSidedSides two_sided_sides(const FockSpace& space, const GroupElementSpec& g, int n, int m, int degree) {
  const int shift = n - m + 1;
  const int kx = degree + std::max(0, shift);
  const int ku = degree + std::max(0, -shift);
  const auto xs = time_vars("x", kx), ys = time_vars("y", kx);
  const auto us = time_vars("u", ku), vs = time_vars("v", ku);
  WeightGroups wg;
  const int gx = wg.add(xs, kx);
  const int gu = wg.add(us, ku);
  for (std::size_t k = 0; k < ys.size(); ++k) wg.grade[ys[k]] = {gx, static_cast<int>(k) + 1};
  for (std::size_t k = 0; k < vs.size(); ++k) wg.grade[vs[k]] = {gu, static_cast<int>(k) + 1};
  auto plus = shift_map(xs, ys, 1), minus = shift_map(xs, ys, -1);
  for (auto& [k, v] : shift_map(us, vs, 1)) plus[k] = v;
  for (auto& [k, v] : shift_map(us, vs, -1)) minus[k] = v;
  auto pair = [&](int c1, int c2) {
    const RatPoly t1 = tau_kp(space, g, c1, kx, ku), t2 = tau_kp(space, g, c2, kx, ku);
    return wg.product(t1.substitute(plus), t2.substitute(minus));
  };
  WeightGroups out_wg = wg;
  out_wg.caps = {degree, degree};
  TwoSidedSides sides;
  const RatPoly f = pair(n, m);
  for (int j = std::max(0, -shift); j + std::max(0, shift) <= kx && j <= degree; ++j)
    sides.lhs += out_wg.product(schur_polynomial(j, ys, Rational(2)), schur_operator(j + shift, ys, -1, f));
  const RatPoly h = pair(n + 1, m - 1);
  for (int j = std::max(0, -shift); j + shift <= degree; ++j)
    sides.rhs += out_wg.product(schur_polynomial(j + shift, vs, Rational(-2)), schur_operator(j, vs, 1, h));
  return sides;
}

}  // namespace

VerificationReport verify_hirota_kp(KpIdentity which, const GroupElementSpec& g, int n, int m, int degree,
                                    int window) {
  VerificationReport report;
  report.id = which == KpIdentity::fermionic ? "kp.fermionic" : which == KpIdentity::hirota ? "kp.hirota" : "kp.two-sided";
  report.params["g"] = group_str(g);
  report.params["degree"] = std::to_string(degree);
  report.params["window"] = std::to_string(window);
  if (which == KpIdentity::two_sided) report.params["charges"] = std::to_string(n) + "," + std::to_string(m);
  ReportTimer timer(report);
  const FockSpace space(window);
  try {
    switch (which) {
      case KpIdentity::fermionic:
        report.add_zero_check("sum_j <v_1|e^H psi_j g|v_0><v_-1|e^H psi*_j g|v_0>", fermionic_residual(space, g, degree));
        break;
      case KpIdentity::hirota:
        report.add_zero_check("sum_j S_j(2y) S_j+1(-d_y) tau(x+y) tau(x-y)", hirota_residual(space, g, degree));
        break;
      case KpIdentity::two_sided: {
        const TwoSidedSides sides = two_sided_sides(space, g, n, m, degree);
        report.add_zero_check("two-sided bilinear identity", sides.lhs - sides.rhs);
        report.add("left side is nontrivial", sides.lhs.is_zero() ? "left side vanishes" : "");
        break;
      }
    }
    report.params["tau_terms"] = std::to_string(tau_kp(space, g, n, degree, 0).terms().size());
  } catch (const BoundaryError& e) {
    report.add("boundary", e.what());
  }
  report.params["boundary"] = space.certificate().str();
  return report;
}

VerificationReport verify_heisenberg(int max_k, int max_energy, int window) {
  VerificationReport report;
  report.id = "kp.heisenberg";
  report.params["k"] = std::to_string(max_k);
  report.params["energy"] = std::to_string(max_energy);
  ReportTimer timer(report);
  const FockSpace space(window);
  int checked = 0;
  for (int charge = -1; charge <= 1; ++charge)
    for (FockMask s : space.states(charge, max_energy)) {
      // Keep states at distance > max_k from both window edges.
      bool safe = true;
      for (int p = window - 1 - max_k; p < window && safe; ++p) safe = !space.occupied(s, p);
      for (int h = -window; h <= -window + max_k && safe; ++h) safe = space.occupied(s, h);
      if (!safe) continue;
      const RatVector v{{s, Rational(1)}};
      for (int k = 1; k <= max_k; ++k)
        for (int l = 1; l <= max_k; ++l) {
          RatVector diff = space.heisenberg(k, space.heisenberg(-l, v));
          for (const auto& [t, c] : space.heisenberg(-l, space.heisenberg(k, v))) diff[t] -= c;
          if (k == l) diff[s] -= Rational(k);
          std::erase_if(diff, [](const auto& kv) { return sgn(kv.second) == 0; });
          ++checked;
          if (!diff.empty())
            report.add("[a_" + std::to_string(k) + ", a_-" + std::to_string(l) + "] on " + space.state_str(s),
                       std::to_string(diff.size()) + " nonzero components");
        }
    }
  report.params["commutators"] = std::to_string(checked);
  report.add("[a_k, a_-l] = k delta_kl on " + std::to_string(checked) + " state pairs",
             checked == 0 ? "no boundary-safe states" : "");
  return report;
}

VerificationReport verify_anticommutators(std::uint32_t seed, int samples, int window) {
  VerificationReport report;
  report.id = "kp.anticommutators";
  report.params["seed"] = std::to_string(seed);
  ReportTimer timer(report);
  const FockSpace space(window);
  std::mt19937 engine(seed);
  auto range = [&](int lo, int hi) { return lo + static_cast<int>(engine() % static_cast<std::uint32_t>(hi - lo + 1)); };
  std::vector<FockMask> pool;
  for (int charge = -1; charge <= 1; ++charge)
    for (FockMask s : space.states(charge, 4)) pool.push_back(s);
  auto add_to = [](RatVector& acc, const RatVector& v, int sign) {
    for (const auto& [s, c] : v) acc[s] += sign > 0 ? c : -c;
    std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
  };
  for (int n = 0; n < samples; ++n) {
    RatVector v;
    for (int t = range(1, 3); t > 0; --t) v[pool[static_cast<std::size_t>(range(0, static_cast<int>(pool.size()) - 1))]] += Rational(range(1, 9));
    const int i = range(-window + 2, window - 3), j = range(-window + 2, window - 3);
    const std::string at = " i=" + std::to_string(i) + " j=" + std::to_string(j);
    RatVector mixed = space.apply(Fermion::psi, i, space.apply(Fermion::psi_star, j, v));
    add_to(mixed, space.apply(Fermion::psi_star, j, space.apply(Fermion::psi, i, v)), 1);
    if (i == j) add_to(mixed, v, -1);
    report.add("{psi_i, psi*_j}" + at, mixed.empty() ? "" : "nonzero");
    RatVector pp = space.apply(Fermion::psi, i, space.apply(Fermion::psi, j, v));
    add_to(pp, space.apply(Fermion::psi, j, space.apply(Fermion::psi, i, v)), 1);
    report.add("{psi_i, psi_j}" + at, pp.empty() ? "" : "nonzero");
    RatVector ss = space.apply(Fermion::psi_star, i, space.apply(Fermion::psi_star, j, v));
    add_to(ss, space.apply(Fermion::psi_star, j, space.apply(Fermion::psi_star, i, v)), 1);
    report.add("{psi*_i, psi*_j}" + at, ss.empty() ? "" : "nonzero");
  }
  return report;
}

RatPoly cauchy_series(int degree) {
  const auto xs = time_vars("x", degree), us = time_vars("u", degree);
  WeightGroups wg;
  wg.add(xs, degree);
  wg.add(us, degree);
  RatPoly exponent;
  for (int k = 1; k <= degree; ++k)
    exponent += RatPoly::variable(xs[static_cast<std::size_t>(k - 1)]) * RatPoly::variable(us[static_cast<std::size_t>(k - 1)]) *
                RatPoly(Rational(k));
  RatPoly out(Rational(1)), power(Rational(1));
  for (int n = 1; n <= degree; ++n) {
    power = wg.product(power, exponent) * RatPoly(ratio(1, n));
    out += power;
  }
  return out;
}

VerificationReport verify_cauchy(int degree, int window) {
  VerificationReport report;
  report.id = "kp.cauchy";
  report.params["degree"] = std::to_string(degree);
  ReportTimer timer(report);
  const FockSpace space(window);
  try {
    report.add_zero_check("<v_0|e^H e^H'|v_0> = exp(sum k x_k u_k)", tau_kp(space, {}, 0, degree, degree) - cauchy_series(degree));
  } catch (const BoundaryError& e) {
    report.add("boundary", e.what());
  }
  report.params["boundary"] = space.certificate().str();
  return report;
}

}  // namespace tauforge
