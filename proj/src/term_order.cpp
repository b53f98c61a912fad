#include "taut/term_order.hpp"

namespace taut {

TermOrder TermOrder::named(const std::string& s) {
    if (s == "lex") return lex();
    if (s == "grlex") return grlex();
    if (s == "grevlex") return grevlex();
    throw error("TermOrder: unknown order '" + s + "'");
}

std::string TermOrder::name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::GradedLex: return "grlex";
        case Kind::GradedRevLex: return "grevlex";
        case Kind::Weighted: return "weighted";
    }
    return "?";
}

int TermOrder::cmp_plain(Kind k, const Monomial& a, const Monomial& b) {
    const std::size_t n = a.size();
    switch (k) {
        case Kind::Lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case Kind::GradedLex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            return cmp_plain(Kind::Lex, a, b);
        }
        case Kind::GradedRevLex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            // ties: the monomial with the smaller exponent at the last
            // differing position is the larger one
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            return 0;
        }
        default: throw error("TermOrder: bad kind");
    }
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw error("TermOrder: exponent length mismatch");
    if (kind_ != Kind::Weighted) return cmp_plain(kind_, a, b);
    if (weights_.size() != a.size()) throw error("TermOrder: weight length mismatch");
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        wa += static_cast<long>(weights_[i]) * a[i];
        wb += static_cast<long>(weights_[i]) * b[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
    return cmp_plain(tie_, a, b);
}

}  // namespace taut
