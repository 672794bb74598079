#include "tauforge/checks.hpp"

#include <fnmatch.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "json.hpp"
#include "tauforge/error.hpp"
#include "tauforge/funq.hpp"
#include "tauforge/kpfock.hpp"
#include "tauforge/qhirota.hpp"
#include "tauforge/qvertex.hpp"
#include "tauforge/toda.hpp"

namespace tauforge {

namespace {

class Draw {
 public:
  explicit Draw(std::uint32_t seed) : engine_(seed) {}
  int range(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint32_t>(hi - lo + 1)); }
  QScalar scalar() {
    std::map<int, Rational> terms;
    for (int n = range(1, 2); n > 0; --n) {
      Rational r(range(-4, 4), range(1, 3));
      r.canonicalize();
      terms[range(-2, 2)] = r;
    }
    std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
    return QScalar(LaurentQ::from_terms(terms));
  }
  TimesPoly times_poly(const std::vector<Var>& vars, int max_terms, int max_deg) {
    TimesPoly out;
    for (int n = range(1, max_terms); n > 0; --n) {
      Monomial m;
      for (Var v : vars) m = m * Monomial::of(v, range(0, max_deg));
      out += TimesPoly::term(scalar(), m);
    }
    return out;
  }

 private:
  std::mt19937 engine_;
};

NCPoly exp_q(const NCPoly& x, int order) {
  NCPoly out(x.presentation(), TimesPoly(1L));
  NCPoly power = out;
  for (int n = 1; n <= order; ++n) {
    power = power * x;
    out += power * TimesPoly(q_paren_factorial(n).inverse());
  }
  return out;
}

NCPoly truncate_words(const NCPoly& p, std::size_t degree) {
  NCPoly out(p.presentation());
  for (const auto& [w, c] : p.terms())
    if (w.size() <= degree) out.add_normal(w, c);
  return out;
}

}  // namespace

VerificationReport verify_qexp_addition(int degree) {
  if (degree < 0) throw PreconditionError("degree must be nonnegative");
  VerificationReport report;
  report.id = "uqsl2.qexp-addition";
  report.params["degree"] = std::to_string(degree);
  ReportTimer timer(report);
  const auto p = q_plane();
  const NCPoly x = NCPoly::generator(p, "x"), y = NCPoly::generator(p, "y");
  const auto d = static_cast<std::size_t>(degree);
  report.add_zero_check("exp_q(x+y) - exp_q(x) exp_q(y)",
                        truncate_words(exp_q(x + y, degree), d) - truncate_words(exp_q(x, degree) * exp_q(y, degree), d));
  return report;
}

VerificationReport verify_q_taylor_reconstruction(std::uint32_t seed, int degree) {
  if (degree < 0) throw PreconditionError("degree must be nonnegative");
  VerificationReport report;
  report.id = "qcalc.taylor";
  report.params["seed"] = std::to_string(seed);
  report.params["degree"] = std::to_string(degree);
  ReportTimer timer(report);
  Draw draw(seed);
  const Var x("x"), y("y"), c("c");
  for (int i = 0; i < 20; ++i) {
    const TimesPoly f = draw.times_poly({x, y}, 4, degree);
    int k = draw.range(-3, 3);
    if (k == 0) k = 2;
    const TimesPoly center = TimesPoly::variable(c) * TimesPoly(QScalar::q_power(draw.range(-2, 2)));
    const auto coeffs = q_taylor(f, x, center, k, degree);
    TimesPoly sum;
    for (int m = 0; m <= degree; ++m) sum += coeffs[static_cast<std::size_t>(m)] * q_pochhammer(x, center, k, m);
    report.add_zero_check("sample " + std::to_string(i) + " base q^" + std::to_string(k), sum - f);
  }
  return report;
}

VerificationReport verify_builtin_confluence(int max_len) {
  VerificationReport report;
  report.id = "ncalg.confluence";
  report.params["max_len"] = std::to_string(max_len);
  ReportTimer timer(report);
  for (const auto& p : {funq_sl2(), gauss_param()}) report.absorb(check_local_confluence(*p, max_len), p->name() + ": ");
  return report;
}

VerificationReport verify_seeded_properties(std::uint32_t seed) {
  VerificationReport report;
  report.id = "properties.seeded";
  report.params["seed"] = std::to_string(seed);
  ReportTimer timer(report);
  Draw draw(seed);
  const Var x("x"), y("y");
  for (int i = 0; i < 20; ++i) {
    int k = draw.range(-3, 3);
    if (k == 0) k = 1;
    const TimesPoly f = draw.times_poly({x, y}, 3, 3), g = draw.times_poly({x, y}, 3, 3);
    report.add_zero_check("q-Leibniz " + std::to_string(i),
                          q_derivative(f * g, x, k) - (q_derivative(f, x, k) * q_shift(g, x, k) + f * q_derivative(g, x, k)));
  }
  report.absorb(verify_q_taylor_reconstruction(seed, 6), "q-Taylor ");
  report.absorb(verify_anticommutators(seed, 40), "fermions ");
  const GroupElementSpec g = random_group_element(seed, 3);
  report.absorb(verify_hirota_kp(KpIdentity::fermionic, g, 0, 0, 4), "fermionic identity, random g ");
  report.absorb(verify_hirota_kp(KpIdentity::hirota, g, 0, 0, 4), "Hirota form, random g ");
  for (int size = 2; size <= 5; ++size)
    report.absorb(verify_toda_bilinear(random_toda_instance(seed + static_cast<std::uint32_t>(size), size)),
                  "Toda size " + std::to_string(size) + " ");
  return report;
}

int parse_spin(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw PreconditionError("spin must look like 1/2, 1, 3/2, ...: '" + text + "'");
  }
  if (used == text.size() && value >= 1) return 2 * value;
  if (text.substr(used) == "/2" && value >= 1 && value % 2 == 1) return value;
  throw PreconditionError("spin must be a positive half-integer: '" + text + "'");
}

void validate_options(const CheckOptions& o) {
  if (o.degree && (*o.degree < 1 || *o.degree > 12)) throw PreconditionError("--degree must lie in 1..12");
  if (o.window && (*o.window < 2 || *o.window > 32)) throw PreconditionError("--window must lie in 2..32");
  if (o.two_j && (*o.two_j < 1 || *o.two_j > 6)) throw PreconditionError("--j must lie in 1/2..3");
  if (o.two_jp && (*o.two_jp < 1 || *o.two_jp > 6)) throw PreconditionError("--jprime must lie in 1/2..3");
}

namespace {

using SpinPairs = std::vector<std::pair<int, int>>;

// Pairs from --j/--jprime, or the defaults.
SpinPairs spin_pairs(const CheckOptions& o, SpinPairs defaults) {
  if (!o.two_j && !o.two_jp) return defaults;
  return {{o.two_j.value_or(1), o.two_jp.value_or(o.two_j.value_or(1))}};
}

std::vector<int> spins(const CheckOptions& o, int max_two_j) {
  if (o.two_j) return {*o.two_j};
  std::vector<int> out;
  for (int t = 1; t <= max_two_j; ++t) out.push_back(t);
  return out;
}

std::string pair_str(int a, int b) { return "(" + spin_str(a) + "," + spin_str(b) + ") "; }

VerificationReport suite_slice(const std::string& id, const std::function<bool(const std::string&)>& keep) {
  VerificationReport report;
  report.id = id;
  ReportTimer timer(report);
  for (const auto& item : spin_half_suite().items)
    if (keep(item.label)) report.items.push_back(item);
  return report;
}

bool contains(const std::string& s, const char* part) { return s.find(part) != std::string::npos; }

VerificationReport combined(const std::string& id, const std::function<void(VerificationReport&)>& body) {
  VerificationReport report;
  report.id = id;
  ReportTimer timer(report);
  body(report);
  return report;
}

GroupElementSpec theta_element() { return {{Rational(3, 2), 0, -1}}; }
GroupElementSpec h6_element() { return {{Rational(1, 2), 1, -1}, {Rational(-2, 3), 0, -2}}; }

VerificationReport kp_suite(KpIdentity which, const std::string& id, const CheckOptions& o, int default_degree) {
  const int degree = o.degree.value_or(default_degree);
  const int window = o.window.value_or(FockSpace::default_window);
  return combined(id, [&](VerificationReport& r) {
    r.params["degree"] = std::to_string(degree);
    r.params["window"] = std::to_string(window);
    if (which == KpIdentity::two_sided) {
      r.absorb(verify_hirota_kp(which, {}, 0, 0, degree, window), "g=1 (n,m)=(0,0) ");
      r.absorb(verify_hirota_kp(which, h6_element(), 1, 0, degree, window), group_str(h6_element()) + " (n,m)=(1,0) ");
      return;
    }
    const GroupElementSpec random = random_group_element(o.seed, 3);
    for (const auto& g : {GroupElementSpec{}, theta_element(), random}) {
      const VerificationReport one = verify_hirota_kp(which, g, 0, 0, degree, window);
      r.absorb(one, "g=" + group_str(g) + " ");
      r.params["boundary " + group_str(g)] = one.params.at("boundary");
    }
  });
}

std::vector<CheckDescriptor> build_registry() {
  std::vector<CheckDescriptor> checks{
      {"ncalg.confluence", "ncalg", "rewriting system, local confluence", {{"degree", "4 (word length)"}},
       [](const CheckOptions& o) { return verify_builtin_confluence(o.degree.value_or(4)); }},
      {"uqsl2.hopf", "uqsl2", "coproduct factorization in tensor products", {{"j, j'", "all pairs <= 1"}},
       [](const CheckOptions& o) {
         return combined("uqsl2.hopf", [&](VerificationReport& r) {
           for (auto [a, b] : spin_pairs(o, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}))
             r.absorb(verify_hopf_matrices(a, b), pair_str(a, b));
         });
       }},
      {"uqsl2.qexp-addition", "uqsl2", "q-exponential addition theorem", {{"degree", "8"}},
       [](const CheckOptions& o) { return verify_qexp_addition(o.degree.value_or(8)); }},
      {"qvertex.vacuum", "qvertex", "vacuum actions of the vertex components", {{"j", "1/2..5/2"}},
       [](const CheckOptions& o) {
         return combined("qvertex.vacuum", [&](VerificationReport& r) {
           for (int t : spins(o, 5)) r.absorb(verify_vacuum_actions(solve_vertex_components(t)), "j=" + spin_str(t) + " ");
         });
       }},
      {"qvertex.components", "qvertex", "component relations of the vertex operators", {{"j", "1/2..2"}},
       [](const CheckOptions& o) {
         return combined("qvertex.components", [&](VerificationReport& r) {
           for (int t : spins(o, 4)) r.absorb(verify_component_relations(t), "j=" + spin_str(t) + " ");
         });
       }},
      {"qvertex.qexp", "qvertex", "commutation relations with q-exponentials", {{"j", "1/2..2"}},
       [](const CheckOptions& o) {
         return combined("qvertex.qexp", [&](VerificationReport& r) {
           for (int t : spins(o, 4)) {
             r.absorb(verify_qexp_commutation(t), "j=" + spin_str(t) + " ");
             r.absorb(verify_qexp_derivatives(t), "j=" + spin_str(t) + " derivative ");
           }
         });
       }},
      {"funq.relations", "funq", "Fun_q(SL2) relations of the Gauss model", {},
       [](const CheckOptions&) {
         return combined("funq.relations", [&](VerificationReport& r) {
           r.absorb(verify_gauss_relations());
           const auto passing = passing_gauss_conventions();
           r.params["passing conventions"] = std::to_string(passing.size());
           r.add("exactly one convention passes", passing.size() == 1 ? "" : std::to_string(passing.size()) + " pass");
         });
       }},
      {"funq.t-matrix", "funq", "T-matrices: corepresentation, counit, weights, dual route", {{"j", "<= 3/2"}},
       [](const CheckOptions& o) {
         return combined("funq.t-matrix", [&](VerificationReport& r) {
           for (int t : spins(o, 3)) {
             r.absorb(verify_t_matrix_structure(t), "j=" + spin_str(t) + " ");
             r.absorb(verify_dual_route(t), "j=" + spin_str(t) + " dual ");
           }
           for (auto [a, b] : spin_pairs(o, {{1, 1}, {1, 2}, {2, 1}}))
             r.absorb(verify_corep(a, b), pair_str(a, b) + "corep ");
         });
       }},
      {"qhirota.identity", "qhirota", "Hirota identity for U_q(sl2) tau functions", {{"j", "1/2"}, {"jprime", "1/2"}},
       [](const CheckOptions& o) {
         const int a = o.two_j.value_or(1), b = o.two_jp.value_or(1);
         return verify_hirota_identity(a, b);
       }},
      {"qliouville.spin-half", "qhirota", "bilinear identity at j = j' = 1/2", {},
       [](const CheckOptions&) {
         return suite_slice("qliouville.spin-half", [](const std::string& l) { return contains(l, "bilinear identity"); });
       }},
      {"qliouville.hierarchy", "qhirota", "commutation, q-Liouville and linearity equations", {},
       [](const CheckOptions&) {
         return suite_slice("qliouville.hierarchy", [](const std::string& l) {
           return contains(l, "equation") && !contains(l, "classical") && !contains(l, "q -> 1");
         });
       }},
      {"qliouville.classical", "qhirota", "Liouville equation as the classical limit", {},
       [](const CheckOptions&) {
         return suite_slice("qliouville.classical",
                            [](const std::string& l) { return contains(l, "classical") || contains(l, "q -> 1"); });
       }},
      {"qcalc.taylor", "qhirota", "q-Taylor formula", {{"degree", "6"}, {"seed", "0"}},
       [](const CheckOptions& o) { return verify_q_taylor_reconstruction(o.seed, o.degree.value_or(6)); }},
      {"kp.fermionic", "kpfock", "fermionic bilinear identity", {{"degree", "6"}, {"window", "8"}, {"seed", "0"}},
       [](const CheckOptions& o) { return kp_suite(KpIdentity::fermionic, "kp.fermionic", o, 6); }},
      {"kp.hirota", "kpfock", "KP hierarchy in Hirota form", {{"degree", "6"}, {"window", "8"}, {"seed", "0"}},
       [](const CheckOptions& o) { return kp_suite(KpIdentity::hirota, "kp.hirota", o, 6); }},
      {"kp.two-sided", "kpfock", "two-sided bilinear identity with charges", {{"degree", "4"}, {"window", "8"}},
       [](const CheckOptions& o) { return kp_suite(KpIdentity::two_sided, "kp.two-sided", o, 4); }},
      {"kp.cauchy", "kpfock", "Cauchy identity for the two-sided vacuum tau", {{"degree", "5"}, {"window", "8"}},
       [](const CheckOptions& o) {
         return verify_cauchy(o.degree.value_or(5), o.window.value_or(FockSpace::default_window));
       }},
      {"kp.heisenberg", "kpfock", "Heisenberg commutators on the Fock space", {{"degree", "4 (max k, energy)"}, {"window", "8"}},
       [](const CheckOptions& o) {
         const int k = o.degree.value_or(4);
         return verify_heisenberg(k, k, o.window.value_or(FockSpace::default_window));
       }},
      {"kp.anticommutators", "kpfock", "canonical anticommutation relations", {{"seed", "0"}, {"window", "8"}},
       [](const CheckOptions& o) { return verify_anticommutators(o.seed, 60, o.window.value_or(FockSpace::default_window)); }},
      {"toda.bilinear", "toda", "finite Toda lattice, principal minors", {{"seed", "0"}, {"sizes", "2..5"}},
       [](const CheckOptions& o) {
         return combined("toda.bilinear", [&](VerificationReport& r) {
           const TodaInstance worked({{Rational(1), Rational(0)}, {Rational(1, 3), Rational(1)}});
           r.absorb(verify_toda_bilinear(worked), "worked 2x2 ");
           const RatPoly x = RatPoly::variable(Var("x1")), u = RatPoly::variable(Var("u1"));
           r.add_zero_check("worked 2x2 tau_1", toda_tau(worked, 1) - (RatPoly(Rational(1)) + x * (RatPoly(Rational(1, 3)) + u)));
           r.add_zero_check("worked 2x2 tau_2", toda_tau(worked, 2) - RatPoly(Rational(1)));
           for (int size = 2; size <= 5; ++size)
             for (std::uint32_t s = 0; s < 3; ++s)
               r.absorb(verify_toda_bilinear(random_toda_instance(o.seed * 16 + s, size)),
                        "size " + std::to_string(size) + " draw " + std::to_string(s) + " ");
         });
       }},
      {"properties.seeded", "all", "seeded property suites", {{"seed", "0"}},
       [](const CheckOptions& o) { return verify_seeded_properties(o.seed); }},
  };
  std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return checks;
}

}  // namespace

const std::vector<CheckDescriptor>& check_registry() {
  static const std::vector<CheckDescriptor> registry = build_registry();
  return registry;
}

std::vector<const CheckDescriptor*> select_checks(const std::string& selector) {
  std::vector<const CheckDescriptor*> out;
  for (const auto& c : check_registry())
    if (fnmatch(selector.c_str(), c.id.c_str(), 0) == 0) out.push_back(&c);
  if (out.empty()) throw PreconditionError("no check matches '" + selector + "'");
  return out;
}

std::vector<VerificationReport> run_checks(const std::vector<const CheckDescriptor*>& checks, const CheckOptions& options,
                                           int jobs) {
  validate_options(options);
  std::vector<VerificationReport> out(checks.size());
  auto run_one = [&](std::size_t i) {
    const CheckDescriptor& c = *checks[i];
    try {
      out[i] = c.run(options);
    } catch (const Error& e) {
      out[i].add("error", e.what());
    }
    if (out[i].items.empty()) out[i].add("coverage", "no identity was checked");
    out[i].id = c.id;
    out[i].anchor = c.anchor;
    if (options.seed != 0) out[i].params["seed"] = std::to_string(options.seed);
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), checks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) run_one(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += (r.passed() ? "PASS " : "FAIL ") + r.id + " (" + r.anchor + ") " +
           std::to_string(static_cast<long>(std::lround(r.milliseconds))) + "ms\n";
    for (const auto& item : r.items)
      if (!item.passed()) out += "  " + item.label + ": " + item.residual + "\n";
  }
  return out;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    out.push_back({{"id", r.id},
                   {"verdict", r.passed() ? "pass" : "fail"},
                   {"residual", r.residual()},
                   {"params", params},
                   {"anchor", r.anchor},
                   {"ms", std::lround(r.milliseconds)}});
  }
  return out.dump(2) + "\n";
}

}  // namespace tauforge
