#pragma once

#include <map>
#include <string>
#include <vector>

#include "taut/matrix.hpp"
#include "taut/weyl.hpp"

namespace taut {

/// A Lie algebra with a distinguished scaling generator e, acting on an
/// n-dimensional space: basis labels, representation matrices, and the
/// abstract bracket table (structure constants).
class RepSpec {
  public:
    RepSpec(std::vector<std::string> labels, std::vector<RatMatrix> matrices,
            std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> brackets,
            std::size_t scaling_index);

    std::size_t basis_size() const { return labels_.size(); }
    std::size_t dim() const { return matrices_.front().rows(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const RatMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
    std::size_t scaling_index() const { return scaling_index_; }
    std::size_t index_of(const std::string& label) const;

    /// Structure constants of [xi_i, xi_j] (antisymmetric in i, j).
    std::vector<Rational> bracket(std::size_t i, std::size_t j) const;

    /// Checks dRho(e) = id and [dRho(xi), dRho(eta)] = dRho([xi, eta]).
    void validate() const;

  private:
    std::vector<std::string> labels_;
    std::vector<RatMatrix> matrices_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> brackets_;
    std::size_t scaling_index_;
};

/// The vector field -sum_{i,j} A_{ji} x_i d_j induced on functions by the
/// matrix action (contragredient sign).
WeylElement vector_field(const WeylContextPtr& ctx, const RatMatrix& a);

/// Infinitesimal action of the i-th basis element.
WeylElement action_field(const RepSpec& rep, const WeylContextPtr& ctx, std::size_t i);

/// SL(2) x C* acting on the k-th symmetric power of C^2,
/// basis {E12, E21, H, e} with coordinates z_0..z_k.
RepSpec sym_power_rep(int k);

/// SL(2) x SL(2) x C* on C^2 (x) C^2 with coordinates x11, x12, x21, x22.
RepSpec segre_rep();

/// Killing form of the semisimple part (the scaling generator excluded),
/// computed from the bracket table as trace(ad xi . ad eta).
RatMatrix killing_matrix(const RepSpec& rep);

/// The Casimir operator Z(C) = sum_i Z(A_i) Z(B_i) over Killing-dual bases
/// of the semisimple part.
WeylElement casimir_operator(const RepSpec& rep, const WeylContextPtr& ctx);
WeylElement casimir_operator(const RepSpec& rep, const WeylContextPtr& ctx,
                             const RatMatrix& killing);

/// [Z(xi), Z(eta)] = Z([xi, eta]) for all basis pairs.
bool lie_hom_check(const RepSpec& rep, const WeylContextPtr& ctx);

}  // namespace taut
