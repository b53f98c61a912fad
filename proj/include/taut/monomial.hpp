#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// Exponent vector of fixed length (the ambient variable count).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw error("Monomial: negative exponent");
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const {
        int d = 0;
        for (int x : e_) d += x;
        return d;
    }
    bool is_unit() const {
        for (int x : e_)
            if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        if (e_.size() != o.e_.size()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// Componentwise quotient; requires divides(o) in the other direction.
    Monomial quotient_of(const Monomial& numer) const {
        Monomial r = numer;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= e_[i];
            if (r.e_[i] < 0) throw error("Monomial: quotient with negative exponent");
        }
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<int> e_;
};

}  // namespace taut
