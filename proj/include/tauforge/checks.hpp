#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tauforge/report.hpp"

namespace tauforge {

/// exp_q(x + y) = exp_q(x) exp_q(y) in the q-plane yx = q xy, up to words of length `degree`.
VerificationReport verify_qexp_addition(int degree);
/// Σ_m c_m (x - a)···(x - q^{k(m-1)} a) rebuilds seeded random polynomials of degree ≤ `degree`.
VerificationReport verify_q_taylor_reconstruction(std::uint32_t seed, int degree);
/// Local confluence of FunqSL2 and GaussParam up to the given word length.
VerificationReport verify_builtin_confluence(int max_len);
/// Seeded property suites: q-Leibniz rule, q-Taylor reconstruction, fermion anticommutators,
/// KP identities and the Toda identity on random inputs.
VerificationReport verify_seeded_properties(std::uint32_t seed);

/// Overrides accepted by the registered checks; unset fields take each check's defaults.
struct CheckOptions {
  std::optional<int> degree, window, two_j, two_jp;
  std::uint32_t seed = 0;
};

struct CheckDescriptor {
  std::string id, module, anchor;
  std::map<std::string, std::string> parameters;  // defaults, for listing
  std::function<VerificationReport(const CheckOptions&)> run;
};

/// All checks ordered by id.
const std::vector<CheckDescriptor>& check_registry();
/// Checks whose id matches a glob (`*`, `?`, `[...]`); throws PreconditionError when none does.
std::vector<const CheckDescriptor*> select_checks(const std::string& selector);
/// Throws PreconditionError naming the violated bound.
void validate_options(const CheckOptions& options);
/// Runs up to `jobs` checks at a time; the result follows the order of `checks`.
std::vector<VerificationReport> run_checks(const std::vector<const CheckDescriptor*>& checks,
                                           const CheckOptions& options, int jobs);

std::string render_text(const std::vector<VerificationReport>& reports);
std::string render_json(const std::vector<VerificationReport>& reports);

/// "1/2" → 1, "1" → 2, "3/2" → 3; throws PreconditionError for anything else.
int parse_spin(const std::string& text);

}  // namespace tauforge
