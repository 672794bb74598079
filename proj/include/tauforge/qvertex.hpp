#pragma once

#include <vector>

#include "tauforge/uqsl2.hpp"

namespace tauforge {

/// Components of the spin-1/2 vertex operators between V_{j-1/2} and V_j.
///
/// Φ: V_{j-1/2} ⊗ W → V_j with Φ_± = Φ(· ⊗ w_±), and Ψ: V_{j-1/2} → W ⊗ V_j with
/// Ψ(v) = w_+ ⊗ Ψ^+(v) + w_- ⊗ Ψ^-(v). All four are (2j+1)×(2j) matrices,
/// columns indexed by V_{j-1/2}.
struct VertexComponents {
  int two_j = 1;
  QMatrix phi_plus, phi_minus, psi_plus, psi_minus;
};

/// Unique (up to scale) X with ρ_codomain(x) X = X ρ_domain(x) for x ∈ {e, f, k};
/// throws ConventionError when the solution space is not one-dimensional.
QMatrix solve_intertwiner(const Rep& domain, const Rep& codomain);

/// Type I components Φ_{W,i}: source → target from Φ: source ⊗ W → target.
std::vector<QMatrix> type_one_components(const Rep& source, const Rep& w, const Rep& target);
/// Type II components Ψ^{W,i}: source → target from Ψ: source → W ⊗ target.
std::vector<QMatrix> type_two_components(const Rep& source, const Rep& w, const Rep& target);

/// Solves and normalises Φ_+|j-1/2> = |j> and Ψ^-|j-1/2> = |j>.
VertexComponents solve_vertex_components(int two_j);

/// The vacuum actions of the components against their closed forms.
VerificationReport verify_vacuum_actions(const VertexComponents& vc);
/// The intertwining relations of all four component families for x ∈ {e, f, k}.
VerificationReport verify_component_relations(int two_j);
/// Commutation of the components with exp_{q^2}(t e) and exp_{q^-2}(s f).
VerificationReport verify_qexp_commutation(int two_j);
/// exp_{q^-2}(s f) f = ∂_s exp_{q^-2}(s f) and e exp_{q^2}(t e) = ∂_t exp_{q^2}(t e) in V_j.
VerificationReport verify_qexp_derivatives(int two_j);

}  // namespace tauforge
