// Runs every acceptance criterion once and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tauforge/checks.hpp"
#include "tauforge/error.hpp"
#include "tauforge/funq.hpp"
#include "tauforge/kpfock.hpp"
#include "tauforge/qhirota.hpp"
#include "tauforge/qvertex.hpp"
#include "tauforge/toda.hpp"
#include "tauforge/uqsl2.hpp"

using namespace tauforge;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Fails the outcome with the report's residuals; returns the report's pass state.
bool require(Outcome& out, const VerificationReport& r, const std::string& label) {
  if (r.items.empty()) {
    out.passed = false;
    out.detail += label + ": nothing checked; ";
    return false;
  }
  if (r.passed()) return true;
  out.passed = false;
  out.detail += label + ": " + r.residual().substr(0, 400) + "; ";
  return false;
}

// Runs `body` and fails it when it exceeds the limit (seconds, 0 for none).
void timed_part(Outcome& out, double limit, const std::string& label, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail += label + ": " + e.what() + "; ";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && s >= limit) {
    out.passed = false;
    out.detail += label + " took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s; ";
  }
}

VerificationReport slice(const VerificationReport& suite, const std::vector<std::string>& labels) {
  VerificationReport r;
  for (const auto& item : suite.items)
    for (const auto& l : labels)
      if (item.label == l) r.items.push_back(item);
  if (r.items.size() != labels.size()) r.add("coverage", "expected " + std::to_string(labels.size()) + " items");
  return r;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "q-Liouville reproduction with tau = a + bu + cx + dux",
       [] {
         Outcome o;
         timed_part(o, 5, "identity", [&] {
           require(o, slice(spin_half_suite(), {"displayed tau: bilinear identity", "displayed tau: bilinear identity (general form)"}),
                   "bilinear identity");
         });
         return o;
       }},
      {2, "hierarchy: commutation, q-Liouville (= 1) and linearity equations",
       [] {
         Outcome o;
         timed_part(o, 10, "hierarchy", [&] {
           const VerificationReport suite = spin_half_suite();
           require(o,
                   slice(suite, {"displayed tau: commutation equation", "displayed tau: q-Liouville equation",
                                 "displayed tau: linearity equation", "matrix-element tau: commutation equation",
                                 "matrix-element tau: q-Liouville equation", "matrix-element tau: linearity equation",
                                 "symbolic tau: P00 = commutation equation", "symbolic tau: P01 = q * q-Liouville equation",
                                 "symbolic tau: P10 = q^-1 * linearity equation"}),
                   "equations");
         });
         return o;
       }},
      {3, "Hirota identity for (j, j') in {(1/2,1/2), (1,1/2), (1,1), (3/2,1)}",
       [] {
         Outcome o;
         for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
           const std::string label = "(" + spin_str(a) + "," + spin_str(b) + ")";
           timed_part(o, 120, label, [&] { require(o, verify_hirota_identity(a, b), label); });
         }
         return o;
       }},
      {4, "classical limit is the Liouville equation",
       [] {
         Outcome o;
         timed_part(o, 0, "classical", [&] {
           require(o,
                   slice(spin_half_suite(), {"classical limit in the commutative algebra", "q -> 1 of the q-Liouville equation",
                                             "classical limit with commuting entries"}),
                   "classical");
         });
         return o;
       }},
      {5, "Gauss model satisfies the Fun_q(SL2) relations on exactly one convention",
       [] {
         Outcome o;
         timed_part(o, 0, "relations", [&] {
           require(o, verify_gauss_relations(), "relations");
           const auto passing = passing_gauss_conventions();
           if (passing.size() != 1) {
             o.passed = false;
             o.detail += std::to_string(passing.size()) + " conventions pass; ";
           }
         });
         return o;
       }},
      {6, "intertwiners: vacuum actions j <= 5/2, component and q-exponential relations j <= 2",
       [] {
         Outcome o;
         timed_part(o, 0, "intertwiners", [&] {
           for (int t = 1; t <= 5; ++t)
             require(o, verify_vacuum_actions(solve_vertex_components(t)), "vacuum j=" + spin_str(t));
           for (int t = 1; t <= 4; ++t) {
             require(o, verify_component_relations(t), "components j=" + spin_str(t));
             require(o, verify_qexp_commutation(t), "q-exponentials j=" + spin_str(t));
           }
         });
         return o;
       }},
      {7, "Hopf factorizations for j, j' <= 1 and the q-exponential addition theorem to degree 8",
       [] {
         Outcome o;
         timed_part(o, 0, "hopf", [&] {
           for (int a = 1; a <= 2; ++a)
             for (int b = 1; b <= 2; ++b)
               require(o, verify_hopf_matrices(a, b), "(" + spin_str(a) + "," + spin_str(b) + ")");
           require(o, verify_qexp_addition(8), "addition theorem");
         });
         return o;
       }},
      {8, "KP: fermionic and Hirota-form bilinear identities to degree 6, window 8",
       [] {
         Outcome o;
         const std::vector<GroupElementSpec> elements{{}, {{Rational(3, 2), 0, -1}}, random_group_element(0, 3)};
         for (const auto& g : elements)
           for (auto which : {KpIdentity::fermionic, KpIdentity::hirota}) {
             const std::string label = std::string(which == KpIdentity::fermionic ? "fermionic " : "Hirota form ") + group_str(g);
             timed_part(o, 300, label, [&] { require(o, verify_hirota_kp(which, g, 0, 0, 6, 8), label); });
           }
         return o;
       }},
      {9, "two-sided bilinear identity to degree 4 per variable group",
       [] {
         Outcome o;
         timed_part(o, 0, "two-sided", [&] {
           require(o, verify_hirota_kp(KpIdentity::two_sided, {}, 0, 0, 4), "g=1 (0,0)");
           require(o, verify_hirota_kp(KpIdentity::two_sided, {{Rational(1, 2), 1, -1}, {Rational(-2, 3), 0, -2}}, 1, 0, 4),
                   "nontrivial g (1,0)");
         });
         return o;
       }},
      {10, "Cauchy identity to degree 5",
       [] {
         Outcome o;
         timed_part(o, 0, "cauchy", [&] { require(o, verify_cauchy(5), "cauchy"); });
         return o;
       }},
      {11, "Toda: random g of sizes 2-5 and the worked 2x2 instance",
       [] {
         Outcome o;
         timed_part(o, 0, "toda", [&] {
           for (int size = 2; size <= 5; ++size)
             for (std::uint32_t seed = 0; seed < 3; ++seed)
               require(o, verify_toda_bilinear(random_toda_instance(seed, size)), "size " + std::to_string(size));
           const Rational theta(2, 5);
           const TodaInstance worked({{Rational(1), Rational(0)}, {theta, Rational(1)}});
           require(o, verify_toda_bilinear(worked), "worked instance");
           const RatPoly x = RatPoly::variable(Var("x1")), u = RatPoly::variable(Var("u1"));
           VerificationReport taus;
           taus.add_zero_check("tau_1", toda_tau(worked, 1) - (RatPoly(Rational(1)) + x * (RatPoly(theta) + u)));
           taus.add_zero_check("tau_2", toda_tau(worked, 2) - RatPoly(Rational(1)));
           require(o, taus, "worked taus");
         });
         return o;
       }},
      {12, "infrastructure: confluence, Heisenberg relations, q-Taylor, seeded properties",
       [] {
         Outcome o;
         timed_part(o, 0, "infrastructure", [&] {
           require(o, verify_builtin_confluence(4), "confluence");
           require(o, verify_heisenberg(4, 4), "heisenberg");
           require(o, verify_q_taylor_reconstruction(0, 6), "q-Taylor");
           require(o, verify_seeded_properties(0), "seeded properties");
         });
         return o;
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.number, c.name, s,
                o.passed ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
