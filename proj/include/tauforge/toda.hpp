#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tauforge/poly.hpp"
#include "tauforge/report.hpp"

namespace tauforge {

using RatMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<RatPoly>>;

/// g ∈ GL(n+1) over the rationals.
struct TodaInstance {
  RatMatrix g;

  explicit TodaInstance(RatMatrix g);
  int size() const { return static_cast<int>(g.size()); }
};

/// {"size": 2, "g": [["1","0"],["1/2","1"]]}; entries may also be integers.
TodaInstance toda_instance_from_json(const std::string& text);
/// Seeded g with entries p/d, |p| ≤ 5, 1 ≤ d ≤ 4, redrawn until invertible.
TodaInstance random_toda_instance(std::uint32_t seed, int size);

enum class TodaTimes { principal_only, full };

/// Time variables of the instance: x1..xn and u1..un, or only x1, u1.
std::vector<Var> toda_x_vars(const TodaInstance& inst, TodaTimes times);
std::vector<Var> toda_u_vars(const TodaInstance& inst, TodaTimes times);

/// exp(Σ x_k I_k) · g · exp(Σ u_k I_{-k}) with I_k = Σ e_{i,i+k}, I_{-k} = Σ e_{i+k,i}.
PolyMatrix toda_matrix(const TodaInstance& inst, TodaTimes times);
/// det of the submatrix on the given rows and columns (equal counts).
RatPoly poly_minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
/// Leading principal k×k minor of toda_matrix; τ_0 = 1.
RatPoly toda_tau(const TodaInstance& inst, int k, TodaTimes times = TodaTimes::principal_only);

/// τ_k ∂_x∂_u τ_k - ∂_x τ_k ∂_u τ_k = τ_{k+1} τ_{k-1} in x = x1, u = u1 for 1 ≤ k ≤ n.
VerificationReport verify_toda_bilinear(const TodaInstance& inst);

}  // namespace tauforge
