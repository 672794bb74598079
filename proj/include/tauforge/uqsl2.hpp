#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tauforge/matrix.hpp"
#include "tauforge/report.hpp"

namespace tauforge {

/// A module over U_q(sl2) given by the matrices of e, f, k and k^-1.
/// `two_j` is twice the spin for an irreducible module and -1 for a composite one.
struct Rep {
  int two_j = -1;
  QMatrix E, F, K, Kinv;

  std::size_t dim() const { return K.rows(); }
};

/// Spin-j module with basis v_0..v_{2j}: K v_r = q^{2(j-r)} v_r, F v_r = v_{r+1},
/// E v_r = [r][2j-r+1] v_{r-1}.
Rep make_rep(int two_j);

/// The module V ⊗ W with e ↦ e⊗1 + k^-1⊗e, f ↦ 1⊗f + f⊗k, k ↦ k⊗k.
Rep tensor(const Rep& v, const Rep& w);
/// Left-to-right iterated tensor power of the spin-1/2 module.
Rep spin_half_power(int n);

/// Residuals of the defining relations KE = q²EK, [E,F] = (K-K^-1)/(q-q^-1), KK^-1 = 1.
VerificationReport check_rep_relations(const Rep& rep);

enum class UGen : unsigned char { e, f, k, kinv };

/// Linear combination of words in e, f, k, k^-1.
class UqElement {
 public:
  using Term = std::pair<std::vector<UGen>, QScalar>;

  UqElement() = default;
  static UqElement unit() { return UqElement({{{}, QScalar(1L)}}); }
  static UqElement gen(UGen g) { return UqElement({{{g}, QScalar(1L)}}); }
  explicit UqElement(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  friend UqElement operator*(const UqElement& a, const UqElement& b);
  friend UqElement operator+(const UqElement& a, const UqElement& b);
  UqElement scaled(const QScalar& c) const;

 private:
  std::vector<Term> terms_;
};

QMatrix represent(const UqElement& x, const Rep& rep);
QMatrix represent(UGen g, const Rep& rep);

/// Δ(x) as a list of (x1, x2).
std::vector<std::pair<UqElement, UqElement>> coproduct(UGen g);
/// S(e) = -k e, S(f) = -f k^-1, S(k) = k^-1, extended as an antihomomorphism.
UqElement antipode(const UqElement& x);
/// The inverse antipode S'(e) = -e k, S'(f) = -k^-1 f, S'(k) = k^-1.
UqElement antipode_inverse(const UqElement& x);
/// ε(e) = ε(f) = 0, ε(k) = ε(k^-1) = 1.
int counit(UGen g);

/// Σ ρ_v(x1) ⊗ ρ_w(x2).
QMatrix coproduct_action(UGen g, const Rep& v, const Rep& w);

/// The dual module V^* with ρ*(x) = ρ(S'(x))^T.
Rep dual_rep(const Rep& rep);

/// Σ_n var^n A^n / (n)_{q^k}!; A must be nilpotent and free of var.
TPMatrix q_exp_nilpotent(const TPMatrix& a, Var var, int base_power);
TPMatrix q_exp_nilpotent(const QMatrix& a, Var var, int base_power);

/// Tensor-product relations, the factorisations of the q-exponentials of Δe and Δf,
/// and the antipode axioms in V_j ⊗ V_jp.
VerificationReport verify_hopf_matrices(int two_j, int two_jp);

}  // namespace tauforge
