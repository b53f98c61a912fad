#include "taut/comm_groebner.hpp"

#include <algorithm>
#include <set>

namespace taut {

namespace {

// One full division pass; `basis` entries must be nonzero.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis, const TermOrder& ord) {
    Polynomial rem(p.context());
    while (!p.is_zero()) {
        auto lt = p.leading_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            auto ltg = g.leading_term(ord);
            if (ltg->first.divides(lt->first)) {
                Monomial q = ltg->first.quotient_of(lt->first);
                p -= g.mul_term(q, lt->second / ltg->second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lt->first, lt->second);
            p.add_term(lt->first, -lt->second);
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis comm_groebner(const std::vector<Polynomial>& gens, const TermOrder& order) {
    std::vector<Polynomial> basis;
    ContextPtr ctx;
    for (const auto& g : gens) {
        if (!ctx)
            ctx = g.context();
        else
            require_same_context(ctx, g.context(), "comm_groebner");
        if (!g.is_zero()) basis.push_back(g);
    }
    if (!ctx || ctx->size() == 0) throw error("comm_groebner: empty variable context");

    // pair queue ordered by lcm (normal strategy), deterministic tie-break
    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<Pair> queue;
    auto push_pairs_with = [&](std::size_t j) {
        auto lmj = basis[j].leading_term(order)->first;
        for (std::size_t i = 0; i < j; ++i) {
            auto lmi = basis[i].leading_term(order)->first;
            queue.push_back({Monomial::lcm(lmi, lmj), i, j});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        const Polynomial &f = basis[pr.i], &g = basis[pr.j];
        auto ltf = f.leading_term(order), ltg = g.leading_term(order);
        // product criterion: coprime leading monomials give a trivial pair
        if (pr.lcm == ltf->first * ltg->first) continue;
        Polynomial s = f.mul_term(ltf->first.quotient_of(pr.lcm), ltf->second.inv()) -
                       g.mul_term(ltg->first.quotient_of(pr.lcm), ltg->second.inv());
        Polynomial r = reduce_full(std::move(s), basis, order);
        if (!r.is_zero()) {
            basis.push_back(r.scaled(r.leading_term(order)->second.inv()));
            push_pairs_with(basis.size() - 1);
        }
    }

    // minimalize, then inter-reduce tails and make monic
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto lmi = basis[i].leading_term(order)->first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto lmj = basis[j].leading_term(order)->first;
            if (lmj.divides(lmi) && (lmj != lmi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.scaled(r.leading_term(order)->second.inv()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(b.leading_term(order)->first, a.leading_term(order)->first);
    });
    return GroebnerBasis{std::move(reduced), order};
}

Polynomial poly_normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.basis.empty()) return p;
    require_same_context(p.context(), gb.basis.front().context(), "poly_normal_form");
    return reduce_full(p, gb.basis, gb.order);
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
    return poly_normal_form(p, gb).is_zero();
}

}  // namespace taut
