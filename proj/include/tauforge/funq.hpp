#pragma once

#include <vector>

#include "tauforge/ncalg.hpp"
#include "tauforge/uqsl2.hpp"

namespace tauforge {

/// Dense matrix of NCPoly over one presentation.
class NCMatrix {
 public:
  NCMatrix(PresentationPtr p, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PresentationPtr& presentation() const { return pres_; }
  NCPoly& operator()(std::size_t i, std::size_t k) { return data_[i * cols_ + k]; }
  const NCPoly& operator()(std::size_t i, std::size_t k) const { return data_[i * cols_ + k]; }

  bool is_zero() const;
  friend NCMatrix operator-(const NCMatrix& a, const NCMatrix& b);
  friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b);
  friend bool operator==(const NCMatrix& a, const NCMatrix& b) { return a.data_ == b.data_; }

  /// Entrywise map into another presentation.
  template <class F>
  NCMatrix map(const PresentationPtr& target, F f) const {
    NCMatrix out(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f(data_[i]);
    return out;
  }

  std::string str() const;

 private:
  PresentationPtr pres_;
  std::size_t rows_, cols_;
  std::vector<NCPoly> data_;
};

/// (A ⊗ B)_{(i,j),(k,l)} = A_{ik} B_{jl}: the first factor's element stays leftmost.
NCMatrix ordered_kron(const NCMatrix& a, const NCMatrix& b);
/// left · m · right with scalar outer factors.
NCMatrix sandwich(const QMatrix& left, const NCMatrix& m, const QMatrix& right);

/// Inclusion of V_j into a module whose first basis vector is a highest-weight vector of
/// weight q^{2j}, and the intertwining projection back with π ι = 1.
struct Embedding {
  QMatrix iota, pi;
};
Embedding highest_embedding(const Rep& ambient, int two_j);
/// V_j ⊂ V_{1/2}^{⊗2j}; ι v_0 = w_+^{⊗2j}.
Embedding tensor_embedding(int two_j);

enum class TRoute { abstract, gauss };

/// Spin-1/2 T-matrix [[a, b], [c, d]] over FunqSL2.
NCMatrix spin_half_t_matrix();
/// Spin-j T-matrix over FunqSL2 via the tensor-power embedding (cached per spin),
/// or over GaussParam from the factorised universal T-matrix.
NCMatrix t_matrix(int two_j, TRoute route = TRoute::abstract);
/// The Gauss route over an explicit GaussParam presentation.
NCMatrix gauss_t_matrix(int two_j, const PresentationPtr& gauss);

/// Spin-1/2 entries of the Gauss model.
struct GaussModel {
  NCPoly a, b, c, d;
};
GaussModel gauss_model(const PresentationPtr& gauss = gauss_param());
/// Maps FunqSL2 into GaussParam by a, b, c, d ↦ the Gauss model entries.
NCPoly to_gauss(const NCPoly& funq, const PresentationPtr& gauss = gauss_param());

/// The Fun_q(SL2) relations for the Gauss model entries.
VerificationReport verify_gauss_relations(const PresentationPtr& gauss = gauss_param());
/// Commutation exponents σ (Q s = q^σ s Q) for which the Gauss model satisfies the relations.
std::vector<int> passing_gauss_conventions();
/// The spin-(j+j') block of T^{(j)} ⊗ T^{(j')} equals T^{(j+j')}.
VerificationReport verify_corep(int two_j, int two_jp);
/// Counit gives the identity and entry (m, r) has weight (2(j-m), 2(j-r)).
VerificationReport verify_t_matrix_structure(int two_j);
/// Substituting the Gauss model into the abstract T-matrix gives the Gauss-route T-matrix.
VerificationReport verify_dual_route(int two_j);

/// τ_j = Σ exp_{q²}(e_var E)_{0m} T_{mr} exp_{q^-2}(f_var F)_{r0}.
NCPoly tau_q(int two_j, Var e_var, Var f_var, TRoute route = TRoute::abstract);

}  // namespace tauforge
