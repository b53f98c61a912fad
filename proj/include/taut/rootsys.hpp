#pragma once

#include <set>
#include <string>
#include <vector>

#include "taut/matrix.hpp"

namespace taut {

/// Weight in fundamental-weight coordinates, concatenated over the simple
/// factors of the ambient root system.
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {}
    static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank, Rational(0))); }

    std::size_t size() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_dominant() const {
        for (const auto& x : c_)
            if (x.sign() < 0) return false;
        return true;
    }

    Weight operator-() const;
    friend Weight operator+(Weight a, const Weight& b);
    friend Weight operator-(Weight a, const Weight& b);
    Weight scaled(const Rational& c) const;
    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }

    std::string str() const;

  private:
    std::vector<Rational> c_;
};

/// One simple factor: Cartan data, positive roots in simple-root
/// coordinates, and the symmetrized form normalized so the highest root
/// has squared length 2.
struct SimpleFactor {
    std::string type;                             // "A1", "B2", ...
    std::size_t rank = 0;
    RatMatrix cartan;                             // C(i,j) = <alpha_i, alpha_j^vee>
    std::vector<Rational> half_norms;             // d_i = (alpha_i,alpha_i)/2
    std::vector<std::vector<int>> positive_roots; // simple-root coordinates
    std::vector<int> highest_root;
    Rational dual_coxeter;                        // 1 + (delta, theta)
    RatMatrix fund_gram;                          // (omega_i, omega_j), normalized form
};

/// A root system built from a product of simple factors; the pairing is the
/// Killing-normalized form (normalized form scaled by 1/(2 h-dual) per
/// factor, factors orthogonal).
class RootSystem {
  public:
    /// Type string, e.g. "A1", "A3", "B2", "G2", "A1xA1", "A2xG2".
    /// Supported simple types: A1..A4, B2, C2, G2.
    static RootSystem build(const std::string& spec);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    std::size_t total_rank() const { return rank_; }
    std::size_t factor_of(std::size_t simple_index) const;
    std::size_t offset_of_factor(std::size_t f) const;
    const std::string& type_string() const { return type_; }

    /// Number of positive roots over all factors.
    std::size_t positive_root_count() const;

  private:
    std::vector<SimpleFactor> factors_;
    std::vector<std::size_t> offsets_;
    std::size_t rank_ = 0;
    std::string type_;
};

/// Killing-normalized pairing of two weights in fundamental coordinates.
Rational killing_pairing(const RootSystem& rs, const Weight& a, const Weight& b);

/// Positive root in simple coordinates of one factor, as a global Weight.
Weight root_to_weight(const RootSystem& rs, std::size_t factor, const std::vector<int>& root);

/// The Weyl vector: half the sum of the positive roots; equals the
/// all-ones vector in fundamental coordinates.
Weight weyl_vector(const RootSystem& rs);

/// Half-sum of the positive roots outside the span of the simple roots
/// indexed by I (0-based global indices).
Weight delta_subset(const RootSystem& rs, const std::set<std::size_t>& I);

/// 2<delta,mu>/<mu,mu>; requires mu != 0.
Rational beta_value(const RootSystem& rs, const Weight& mu);

/// beta_value at mu = (2k/l) * delta_I; must equal l/k for every valid
/// input (the anticanonical-power calibration).
bool anticanonical_beta_check(const RootSystem& rs, const std::set<std::size_t>& I, long k, long l);

/// <delta, delta_I> == <delta_I, delta_I> (delta - delta_I is orthogonal
/// to delta_I).
bool weyl_vector_orthogonality(const RootSystem& rs, const std::set<std::size_t>& I);

/// Strict positivity of <lambda, alpha> for all simple alpha outside I:
/// the ampleness criterion for the associated line bundle on G/P_I.
bool is_ample(const RootSystem& rs, const std::set<std::size_t>& I, const Weight& lambda);

/// is_ample at lambda = delta_I; true means G/P_I is Fano.
bool fano_check(const RootSystem& rs, const std::set<std::size_t>& I);

/// Weyl dimension formula for a dominant weight.
unsigned long weyl_dimension(const RootSystem& rs, const Weight& mu);

/// Scalar of the Casimir element on an irreducible with lowest weight
/// lambda: |lambda|^2 - 2<delta,lambda>.
Rational casimir_scalar_lowest(const RootSystem& rs, const Weight& lambda);

/// Highest weight of the dual of the section space of the line bundle
/// attached to the character lambda of P_I (Borel-Weil): requires -lambda
/// dominant and lambda supported off I; returns -lambda.
Weight sections_highest_weight(const RootSystem& rs, const std::set<std::size_t>& I,
                               const Weight& lambda_bundle);

/// All subsets of the simple roots (global indices), for exhaustive sweeps.
std::vector<std::set<std::size_t>> all_simple_subsets(const RootSystem& rs);

}  // namespace taut
