#include "taut/repspec.hpp"

namespace taut {

RepSpec::RepSpec(std::vector<std::string> labels, std::vector<RatMatrix> matrices,
                 std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> brackets,
                 std::size_t scaling_index)
    : labels_(std::move(labels)),
      matrices_(std::move(matrices)),
      brackets_(std::move(brackets)),
      scaling_index_(scaling_index) {
    if (labels_.empty() || labels_.size() != matrices_.size())
        throw error("RepSpec: labels/matrices size mismatch");
    if (scaling_index_ >= labels_.size()) throw error("RepSpec: bad scaling index");
    std::size_t n = matrices_.front().rows();
    for (const auto& m : matrices_)
        if (m.rows() != n || m.cols() != n) throw error("RepSpec: non-square matrix");
    validate();
}

std::size_t RepSpec::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw error("RepSpec: unknown basis label '" + label + "'");
}

std::vector<Rational> RepSpec::bracket(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(basis_size(), Rational(0));
    if (i == j) return out;
    bool flip = i > j;
    auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end()) return out;
    if (it->second.size() != basis_size()) throw error("RepSpec: bracket row length mismatch");
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = flip ? -it->second[k] : it->second[k];
    return out;
}

void RepSpec::validate() const {
    if (!(matrices_[scaling_index_] == RatMatrix::identity(dim())))
        throw error("RepSpec: scaling generator does not act as the identity");
    for (std::size_t i = 0; i < basis_size(); ++i)
        for (std::size_t j = i + 1; j < basis_size(); ++j) {
            RatMatrix lhs = RatMatrix::commutator(matrices_[i], matrices_[j]);
            RatMatrix rhs(dim(), dim());
            auto c = bracket(i, j);
            for (std::size_t k = 0; k < basis_size(); ++k)
                if (!c[k].is_zero()) rhs = rhs + matrices_[k].scaled(c[k]);
            if (!(lhs == rhs))
                throw error("RepSpec: representation matrices violate the bracket table at [" +
                            labels_[i] + "," + labels_[j] + "]");
        }
}

WeylElement vector_field(const WeylContextPtr& ctx, const RatMatrix& a) {
    if (a.rows() != ctx->size() || a.cols() != ctx->size())
        throw error("vector_field: matrix size does not match the variable context");
    WeylElement out(ctx);
    for (std::size_t j = 0; j < ctx->size(); ++j)
        for (std::size_t i = 0; i < ctx->size(); ++i) {
            const Rational& c = a(j, i);
            if (c.is_zero()) continue;
            out += weyl_mul(WeylElement::x_var(ctx, i), WeylElement::d_var(ctx, j)).scaled(-c);
        }
    return out;
}

WeylElement action_field(const RepSpec& rep, const WeylContextPtr& ctx, std::size_t i) {
    return vector_field(ctx, rep.matrix(i));
}

RepSpec sym_power_rep(int k) {
    if (k < 1) throw error("sym_power_rep: k must be positive");
    std::size_t n = static_cast<std::size_t>(k) + 1;
    RatMatrix raise(n, n), lower(n, n), diag(n, n);
    for (int i = 1; i <= k; ++i) {
        raise(i - 1, i) = Rational(i);
        lower(i, i - 1) = Rational(k - i + 1);
    }
    for (int i = 0; i <= k; ++i) diag(i, i) = Rational(k - 2 * i);

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> br;
    auto row = [&](std::initializer_list<Rational> v) { return std::vector<Rational>(v); };
    // basis order: E12, E21, H, e
    br[{0, 1}] = row({Rational(0), Rational(0), Rational(1), Rational(0)});   // [E12,E21] = H
    br[{0, 2}] = row({Rational(-2), Rational(0), Rational(0), Rational(0)});  // [E12,H] = -2 E12
    br[{1, 2}] = row({Rational(0), Rational(2), Rational(0), Rational(0)});   // [E21,H] = 2 E21
    return RepSpec({"E12", "E21", "H", "e"},
                   {raise, lower, diag, RatMatrix::identity(n)}, std::move(br), 3);
}

RepSpec segre_rep() {
    // coordinates x11, x12, x21, x22 on C^2 (x) C^2; factor 1 acts on the
    // first index, factor 2 on the second
    auto embed = [&](const RatMatrix& m, bool first) {
        RatMatrix out(4, 4);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int ap = 0; ap < 2; ++ap)
                    for (int bp = 0; bp < 2; ++bp) {
                        Rational v = first ? (b == bp ? m(a, ap) : Rational(0))
                                           : (a == ap ? m(b, bp) : Rational(0));
                        if (!v.is_zero()) out(2 * a + b, 2 * ap + bp) = v;
                    }
        return out;
    };
    RatMatrix e12(2, 2), e21(2, 2), h(2, 2);
    e12(0, 1) = Rational(1);
    e21(1, 0) = Rational(1);
    h(0, 0) = Rational(1);
    h(1, 1) = Rational(-1);

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> br;
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
        std::vector<Rational> v(7, Rational(0));
        v[k] = Rational(c);
        br[{i, j}] = v;
    };
    // basis order: E12_1, E21_1, H_1, E12_2, E21_2, H_2, e
    set(0, 1, 2, 1);
    set(0, 2, 0, -2);
    set(1, 2, 1, 2);
    set(3, 4, 5, 1);
    set(3, 5, 3, -2);
    set(4, 5, 4, 2);
    return RepSpec({"E12_1", "E21_1", "H_1", "E12_2", "E21_2", "H_2", "e"},
                   {embed(e12, true), embed(e21, true), embed(h, true), embed(e12, false),
                    embed(e21, false), embed(h, false), RatMatrix::identity(4)},
                   std::move(br), 6);
}

RatMatrix killing_matrix(const RepSpec& rep) {
    const std::size_t m = rep.basis_size();
    std::vector<std::size_t> g;  // semisimple part: everything but e
    for (std::size_t i = 0; i < m; ++i)
        if (i != rep.scaling_index()) g.push_back(i);

    // ad matrices over the full basis from the bracket table
    std::vector<RatMatrix> ad(m, RatMatrix(m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto c = rep.bracket(i, j);
            for (std::size_t k = 0; k < m; ++k) ad[i](k, j) = c[k];
        }

    RatMatrix killing(g.size(), g.size());
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            killing(a, b) = (ad[g[a]] * ad[g[b]]).trace();
    return killing;
}

WeylElement casimir_operator(const RepSpec& rep, const WeylContextPtr& ctx) {
    return casimir_operator(rep, ctx, killing_matrix(rep));
}

WeylElement casimir_operator(const RepSpec& rep, const WeylContextPtr& ctx,
                             const RatMatrix& killing) {
    std::vector<std::size_t> g;
    for (std::size_t i = 0; i < rep.basis_size(); ++i)
        if (i != rep.scaling_index()) g.push_back(i);
    if (killing.rows() != g.size() || killing.cols() != g.size())
        throw error("casimir_operator: Killing matrix size mismatch");

    RatMatrix kinv;
    try {
        kinv = killing.inverse();
    } catch (const error&) {
        throw error("casimir_operator: degenerate Killing form");
    }
    std::vector<WeylElement> z;
    for (std::size_t a : g) z.push_back(action_field(rep, ctx, a));

    WeylElement c = WeylElement::zero(ctx);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (kinv(b, a).is_zero()) continue;
            c += weyl_mul(z[a], z[b]).scaled(kinv(b, a));
        }
    return c;
}

bool lie_hom_check(const RepSpec& rep, const WeylContextPtr& ctx) {
    std::vector<WeylElement> z;
    for (std::size_t i = 0; i < rep.basis_size(); ++i) z.push_back(action_field(rep, ctx, i));
    for (std::size_t i = 0; i < rep.basis_size(); ++i)
        for (std::size_t j = i + 1; j < rep.basis_size(); ++j) {
            WeylElement rhs = WeylElement::zero(ctx);
            auto c = rep.bracket(i, j);
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero()) rhs += z[k].scaled(c[k]);
            if (weyl_bracket(z[i], z[j]) != rhs) return false;
        }
    return true;
}

}  // namespace taut
