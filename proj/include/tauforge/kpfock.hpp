#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tauforge/poly.hpp"
#include "tauforge/report.hpp"

namespace tauforge {

/// Occupied modes of a window [-M, M) as a bitmask (bit i ↔ mode i - M). Modes below the
/// window are filled, modes above it empty.
using FockMask = std::uint64_t;

template <class C>
using FockVector = std::map<FockMask, C>;
using RatVector = FockVector<Rational>;
using PolyVector = FockVector<RatPoly>;

enum class Fermion { psi, psi_star };
enum class FlowDirection { positive, negative };

/// One factor exp(θ ψ_i ψ*_j), i ≠ j.
struct UnipotentFactor {
  Rational theta;
  int i = 0, j = 0;
};
/// g = Π exp(θ ψ_i ψ*_j), leftmost factor outermost.
using GroupElementSpec = std::vector<UnipotentFactor>;

/// Highest occupied and lowest empty modes seen by a computation.
struct BoundaryCertificate {
  int window = 0;
  int highest_particle = 0;
  int lowest_hole = 0;
  bool touched = false;

  /// Distance to the nearest window edge; at least 2 whenever a computation completed.
  int margin() const;
  std::string str() const;
};

class FockSpace {
 public:
  static constexpr int default_window = 8;

  explicit FockSpace(int window = default_window);

  int window() const { return window_; }
  bool in_window(int mode) const { return mode >= -window_ && mode < window_; }

  FockMask vacuum(int charge) const;
  /// Charge-n state {n-1+λ_1, n-2+λ_2, ...}.
  FockMask state(int charge, const std::vector<int>& partition) const;
  int charge(FockMask s) const;
  int energy(FockMask s) const;
  std::vector<int> partition(FockMask s) const;
  bool occupied(FockMask s, int mode) const;
  std::string state_str(FockMask s) const;

  /// ψ_j inserts j with sign (-1)^{#occupied > j}; ψ*_j removes it with the same sign.
  template <class C>
  FockVector<C> apply(Fermion kind, int mode, const FockVector<C>& v) const;

  /// a_k = Σ_j ψ_j ψ*_{j+k} for k ≠ 0.
  template <class C>
  FockVector<C> heisenberg(int k, const FockVector<C>& v) const;

  /// exp(Σ_k t_k a_{±k}) v up to weighted degree `degree` in the flow times (t_k has weight k);
  /// times[k-1] is t_k.
  PolyVector flow(FlowDirection direction, const std::vector<Var>& times, const PolyVector& v, int degree) const;

  template <class C>
  FockVector<C> apply_group(const GroupElementSpec& g, FockVector<C> v) const;

  /// All states of a charge with energy ≤ max_energy that keep the guard band free.
  std::vector<FockMask> states(int charge, int max_energy) const;

  const BoundaryCertificate& certificate() const { return cert_; }

 private:
  int bit(int mode) const { return mode + window_; }
  int sign_above(FockMask s, int mode) const;
  void record(FockMask s, const char* context) const;

  int window_;
  mutable BoundaryCertificate cert_;
};

/// Time variables stem1..stemN.
std::vector<Var> time_vars(const std::string& stem, int n);

/// Grading of time variables into groups; the k-th variable of a group has weight k.
struct WeightGroups {
  std::map<Var, std::pair<int, int>> grade;  // var ↦ (group, weight)
  std::vector<int> caps;                     // maximal weight per group

  /// Adds a group of variables t_1..t_n with a weight cap; returns its index.
  int add(const std::vector<Var>& vars, int cap);
  bool fits(const Monomial& m) const;
  RatPoly truncate(const RatPoly& p) const;
  /// a·b without forming terms beyond the caps.
  RatPoly product(const RatPoly& a, const RatPoly& b) const;
};

/// S_j(scale · vars) from Σ S_j z^j = exp(Σ_k t_k z^k); zero for j < 0.
RatPoly schur_polynomial(int j, const std::vector<Var>& vars, const Rational& scale = Rational(1));
/// S_j(sign · ∂̃) f with ∂̃ = (∂_1, ∂_2/2, ∂_3/3, ...) over vars.
RatPoly schur_operator(int j, const std::vector<Var>& vars, int sign, const RatPoly& f);

/// ⟨v_n| e^{H(x)} g e^{H'(u)} |v_n⟩ to weighted degree deg_x in x and deg_u in u; deg_u = 0 gives
/// the one-sided tau.
RatPoly tau_kp(const FockSpace& space, const GroupElementSpec& g, int charge, int deg_x, int deg_u,
               const std::string& x_stem = "x", const std::string& u_stem = "u");

/// Seeded product of unipotent factors exp(θ ψ_i ψ*_j), -3 ≤ j < i ≤ 2, with small rational θ.
GroupElementSpec random_group_element(std::uint32_t seed, int factors);
std::string group_str(const GroupElementSpec& g);

enum class KpIdentity { fermionic, hirota, two_sided };

/// Residuals of the KP bilinear identities to the given degrees.
/// fermionic, hirota: degree bounds the weight in x and in y; two_sided: per group (x, y) and
/// (u, v), with charges (n, m).
VerificationReport verify_hirota_kp(KpIdentity which, const GroupElementSpec& g, int n, int m, int degree,
                                    int window = FockSpace::default_window);

/// [a_k, a_{-l}] = k δ_{kl} on every guard-safe state of charges -1..1 with energy ≤ max_energy.
VerificationReport verify_heisenberg(int max_k, int max_energy, int window = FockSpace::default_window);
/// {ψ_i, ψ*_j} = δ_ij, {ψ_i, ψ_j} = {ψ*_i, ψ*_j} = 0 on seeded random states.
VerificationReport verify_anticommutators(std::uint32_t seed, int samples, int window = FockSpace::default_window);
/// Two-sided tau at g = 1 against exp(Σ k x_k u_k) expanded directly.
VerificationReport verify_cauchy(int degree, int window = FockSpace::default_window);
/// exp(Σ_{k ≤ degree} k x_k u_k) truncated at weighted degree `degree` in each of x and u.
RatPoly cauchy_series(int degree);

}  // namespace tauforge
