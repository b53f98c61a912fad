#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taut/monomial.hpp"

namespace taut {

/// Monomial well-order. All kinds are multiplicative total orders; weighted
/// orders require non-negative weights and a total tie-break.
class TermOrder {
  public:
    enum class Kind { Lex, GradedLex, GradedRevLex, Weighted };

    static TermOrder lex() { return TermOrder(Kind::Lex); }
    static TermOrder grlex() { return TermOrder(Kind::GradedLex); }
    static TermOrder grevlex() { return TermOrder(Kind::GradedRevLex); }
    static TermOrder weighted(std::vector<int> weights, Kind tie_break = Kind::GradedRevLex) {
        for (int w : weights)
            if (w < 0) throw error("TermOrder: weights must be non-negative");
        if (tie_break == Kind::Weighted) throw error("TermOrder: weighted tie-break");
        TermOrder o(Kind::Weighted);
        o.weights_ = std::move(weights);
        o.tie_ = tie_break;
        return o;
    }

    /// Named order: "lex", "grlex", "grevlex".
    static TermOrder named(const std::string& s);

    Kind kind() const { return kind_; }
    std::string name() const;

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  private:
    explicit TermOrder(Kind k) : kind_(k) {}
    static int cmp_plain(Kind k, const Monomial& a, const Monomial& b);

    Kind kind_;
    Kind tie_ = Kind::GradedRevLex;
    std::vector<int> weights_;
};

}  // namespace taut
