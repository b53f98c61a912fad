#include "taut/weyl_groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace taut {

static const bool kGBDebug = std::getenv("TAUT_GB_DEBUG") != nullptr;

namespace {

WeylElement mono_times(const WeylContextPtr& ctx, const Monomial& key, const RationalFunction& c,
                       const WeylElement& g) {
    return weyl_mul(
        WeylElement::term(ctx, WeylElement::x_part(key), WeylElement::d_part(key), c), g);
}

RationalFunction one_of(const WeylContextPtr& ctx) {
    return RationalFunction::constant(ctx->vars(), Rational(1));
}

// Field-exact full reduction: p - result lies in the span of the basis.
WeylElement reduce_field(WeylElement p, const std::vector<WeylElement>& basis,
                         const TermOrder& ord) {
    WeylElement rem(p.context());
    long steps = 0;
    while (!p.is_zero()) {
        auto lt = p.leading_term(ord);
        bool hit = false;
        for (const auto& g : basis) {
            auto ltg = g.leading_term(ord);
            if (ltg->first.divides(lt->first)) {
                Monomial q = ltg->first.quotient_of(lt->first);
                p -= mono_times(p.context(), q, lt->second / ltg->second, g);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.add_term(lt->first, lt->second);
            p.add_term(lt->first, -lt->second);
        }
        if (kGBDebug && ++steps % 25 == 0) {
            int deg = 0;
            for (const auto& [m, c] : p.terms())
                deg = std::max({deg, c.num().total_degree(), c.den().total_degree()});
            std::fprintf(stderr, "[red] step %ld terms %zu coeffdeg %d\n", steps,
                         p.terms().size(), deg);
        }
    }
    return rem;
}

// Divides out the content: the primitive polynomial gcd of all coefficients
// (after clearing denominators), the rational content of the leading
// coefficient, and its sign. Returns the factor that was divided out, so
// callers can keep companion values consistent.
RationalFunction content_normalize(WeylElement& p, const TermOrder& ord) {
    if (p.is_zero()) return one_of(p.context());
    RationalFunction total = one_of(p.context());
    bool all_poly = true;
    for (const auto& [m, c] : p.terms())
        if (!c.is_polynomial()) {
            all_poly = false;
            break;
        }
    if (!all_poly) {
        Polynomial lcm = Polynomial::constant(p.context()->vars(), Rational(1));
        for (const auto& [m, c] : p.terms())
            lcm = Polynomial::div_exact(lcm * c.den(), Polynomial::gcd(lcm, c.den()));
        RationalFunction f = RationalFunction(lcm).inv();
        p = p.scaled(f.inv());
        total = f;
    }
    Polynomial g(p.context()->vars());
    for (const auto& [m, c] : p.terms()) {
        g = Polynomial::gcd(g, c.num());
        if (g.is_constant() && !g.is_zero()) break;
    }
    RationalFunction scale(g);
    auto lc = p.leading_term(ord)->second;
    // positive rational content on the leading coefficient
    Rational c0 = lc.num().content();
    if (lc.num().leading_term(TermOrder::grevlex())->second.sign() < 0) c0 = -c0;
    scale = scale * RationalFunction::constant(p.context()->vars(), c0);
    p = p.scaled(scale.inv());
    return total * scale;
}

}  // namespace

bool LeftGB::is_unit_ideal() const {
    return basis.size() == 1 && basis.front().terms().size() == 1 &&
           basis.front().terms().begin()->first.is_unit();
}

LeftGB left_groebner(const std::vector<WeylElement>& gens, const TermOrder& order) {
    if (gens.empty()) throw error("left_groebner: empty generator list");
    WeylContextPtr ctx = gens.front().context();
    std::vector<WeylElement> basis;
    for (const auto& g : gens) {
        if (!same_context(ctx, g.context()))
            throw error("left_groebner: operator context mismatch");
        if (g.is_zero()) throw error("left_groebner: zero generator");
        WeylElement gg = g;
        content_normalize(gg, order);
        basis.push_back(std::move(gg));
    }
    auto reduce = [&](WeylElement p, const std::vector<WeylElement>& b) {
        WeylElement r = reduce_field(std::move(p), b, order);
        content_normalize(r, order);
        return r;
    };

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
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back({Monomial::lcm(basis[i].leading_term(order)->first, lmj), i, j});
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        if (kGBDebug) std::fprintf(stderr, "[gb] pair (%zu,%zu) queue %zu\n", pr.i, pr.j, queue.size());
        const WeylElement &f = basis[pr.i], &g = basis[pr.j];
        auto ltf = f.leading_term(order), ltg = g.leading_term(order);
        Monomial qf = ltf->first.quotient_of(pr.lcm), qg = ltg->first.quotient_of(pr.lcm);
        // commutator corrections invalidate the commutative product
        // criterion, so every pair is reduced
        WeylElement s = mono_times(ctx, qf, ltg->second, f) - mono_times(ctx, qg, ltf->second, g);
        WeylElement r = reduce(std::move(s), basis);
        if (!r.is_zero()) {
            if (kGBDebug) {
                std::size_t cdeg = 0;
                for (const auto& [m, c] : r.terms())
                    cdeg = std::max<std::size_t>(
                        cdeg, std::max(c.num().total_degree(), c.den().total_degree()));
            std::fprintf(stderr, "[gb] basis %zu terms %zu coeffdeg %zu queue %zu\n",
                             basis.size() + 1, r.terms().size(), cdeg, queue.size());
            }
            basis.push_back(std::move(r));
            push_pairs_with(basis.size() - 1);
        }
    }

    // minimalize
    std::vector<WeylElement> minimal;
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
    // inter-reduce tails with exact field arithmetic and make monic
    std::vector<WeylElement> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WeylElement> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        WeylElement r = others.empty() ? minimal[i] : reduce_field(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.scaled(r.leading_term(order)->second.inv()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const WeylElement& a, const WeylElement& b) {
        return order.less(b.leading_term(order)->first, a.leading_term(order)->first);
    });
    return LeftGB{std::move(reduced), order, ctx};
}

WeylElement weyl_normal_form(const WeylElement& p, const LeftGB& gb) {
    if (!same_context(p.context(), gb.context))
        throw error("weyl_normal_form: operator context mismatch");
    if (gb.basis.empty()) return p;
    return reduce_field(p, gb.basis, gb.order);
}

bool ideal_contains(const LeftGB& gb, const WeylElement& p) {
    return weyl_normal_form(p, gb).is_zero();
}

bool ideal_equal(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b,
                 const TermOrder& order) {
    if (a.empty() || b.empty()) throw error("ideal_equal: empty generator list");
    if (!same_context(a.front().context(), b.front().context()))
        throw error("ideal_equal: operator context mismatch");
    LeftGB ga = left_groebner(a, order), gbb = left_groebner(b, order);
    for (const auto& g : a)
        if (!ideal_contains(gbb, g)) return false;
    for (const auto& g : b)
        if (!ideal_contains(ga, g)) return false;
    return true;
}

std::vector<WeylElement> localize_all(const std::vector<WeylElement>& gens) {
    if (gens.empty()) throw error("localize_all: empty generator list");
    WeylContextPtr src = gens.front().context();
    std::vector<std::size_t> all(src->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    WeylContextPtr dst = localize(src, all);
    std::vector<WeylElement> out;
    for (const auto& g : gens) {
        if (!same_context(src, g.context())) throw error("localize_all: context mismatch");
        WeylElement h(dst);
        for (const auto& [key, c] : g.terms()) {
            Monomial x = WeylElement::x_part(key), d = WeylElement::d_part(key);
            RationalFunction coeff(c.num(), c.den());
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] != 0) coeff *= RationalFunction::variable(dst->vars(), i).pow(x[i]);
            h.add_term(WeylElement::join(Monomial(x.size()), d), coeff);
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::optional<unsigned long> holonomic_rank(const std::vector<WeylElement>& gens) {
    if (gens.empty()) throw error("holonomic_rank: empty generator list");
    for (const auto& g : gens)
        if (g.is_zero()) throw error("holonomic_rank: zero generator");
    std::vector<WeylElement> loc = localize_all(gens);
    LeftGB gb = left_groebner(loc, TermOrder::grevlex());
    if (gb.basis.empty()) throw error("holonomic_rank: degenerate ideal");
    const std::size_t n = gens.front().nvars();

    std::vector<Monomial> lms;
    for (const auto& g : gb.basis) lms.push_back(WeylElement::d_part(g.leading_term(gb.order)->first));
    if (gb.is_unit_ideal()) return 0;

    // finite iff every d-direction has a pure power among the leading terms
    std::vector<int> bound(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& m : lms) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j] != 0) pure = false;
            if (pure && (bound[i] < 0 || m[i] < bound[i])) bound[i] = m[i];
        }
        if (bound[i] < 0) return std::nullopt;
    }

    // count monomials under the staircase
    unsigned long count = 0;
    std::vector<int> e(n, 0);
    while (true) {
        Monomial m{std::vector<int>(e)};
        bool standard = true;
        for (const auto& lm : lms)
            if (lm.divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace taut
