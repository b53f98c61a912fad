#include "taut/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taut {

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Weight operator+(Weight a, const Weight& b) {
    if (a.size() != b.size()) throw error("Weight: length mismatch");
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Weight operator-(Weight a, const Weight& b) {
    if (a.size() != b.size()) throw error("Weight: length mismatch");
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Weight Weight::scaled(const Rational& c) const {
    Weight r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].str();
    }
    return os.str();
}

namespace {

RatMatrix cartan_matrix(char family, std::size_t n) {
    RatMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = Rational(2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c(i, i + 1) = Rational(-1);
        c(i + 1, i) = Rational(-1);
    }
    switch (family) {
        case 'A': break;
        case 'B':  // alpha_1 long, alpha_2 short
            c(0, 1) = Rational(-2);
            break;
        case 'C':
            c(1, 0) = Rational(-2);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            c(1, 0) = Rational(-3);
            break;
        default: throw error("RootSystem: unknown family");
    }
    return c;
}

// <gamma, alpha_i^vee> for gamma in simple-root coordinates
Rational coroot_pairing(const RatMatrix& cartan, const std::vector<int>& gamma, std::size_t i) {
    Rational s(0);
    for (std::size_t j = 0; j < gamma.size(); ++j)
        if (gamma[j] != 0) s += cartan(j, i) * Rational(gamma[j]);
    return s;
}

SimpleFactor build_factor(const std::string& token) {
    if (token.size() < 2) throw error("RootSystem: bad type token '" + token + "'");
    char family = token[0];
    std::size_t n = 0;
    try {
        n = std::stoul(token.substr(1));
    } catch (...) {
        throw error("RootSystem: bad type token '" + token + "'");
    }
    bool ok = (family == 'A' && n >= 1 && n <= 4) || ((family == 'B' || family == 'C') && n == 2) ||
              (family == 'G' && n == 2);
    if (!ok) throw error("RootSystem: unsupported type '" + token + "'");

    SimpleFactor f;
    f.type = token;
    f.rank = n;
    f.cartan = cartan_matrix(family, n);

    // squared half-lengths d_i from the symmetrizability relation
    // d_j C_ij = d_i C_ji, scaled so long roots have d = 1
    f.half_norms.assign(n, Rational(0));
    f.half_norms[0] = Rational(1);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || f.cartan(i, j).is_zero()) continue;
                if (!f.half_norms[i].is_zero() && f.half_norms[j].is_zero()) {
                    f.half_norms[j] = f.half_norms[i] * f.cartan(j, i) / f.cartan(i, j);
                    changed = true;
                }
            }
    }
    Rational dmax(0);
    for (const auto& d : f.half_norms) dmax = std::max(dmax, d);
    for (auto& d : f.half_norms) d /= dmax;

    // positive roots by closure: gamma + alpha_i is a root iff the alpha_i
    // string through gamma satisfies q = p - <gamma, alpha_i^vee> >= 1
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> queue;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> g = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            int p = 0;
            std::vector<int> down = g;
            while (true) {
                down[i] -= 1;
                bool nonneg = down[i] >= 0;
                if (!nonneg || !roots.count(down)) break;
                ++p;
            }
            Rational q = Rational(p) - coroot_pairing(f.cartan, g, i);
            if (q >= Rational(1)) {
                std::vector<int> up = g;
                up[i] += 1;
                if (roots.insert(up).second) queue.push_back(up);
            }
        }
    }
    f.positive_roots.assign(roots.begin(), roots.end());

    // highest root: maximal height (unique for a simple system)
    auto height = [](const std::vector<int>& r) {
        int h = 0;
        for (int x : r) h += x;
        return h;
    };
    f.highest_root = *std::max_element(
        f.positive_roots.begin(), f.positive_roots.end(),
        [&](const auto& a, const auto& b) { return height(a) < height(b); });

    // normalized form on simple coordinates: (alpha_i, alpha_j) = d_j C_ij
    auto form = [&](const std::vector<int>& a, const std::vector<int>& b) {
        Rational s(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[i] != 0 && b[j] != 0)
                    s += Rational(a[i]) * Rational(b[j]) * f.half_norms[j] * f.cartan(i, j);
        return s;
    };
    if (form(f.highest_root, f.highest_root) != Rational(2))
        throw error("RootSystem: highest root normalization failed for " + token);

    // delta in simple coordinates (half-sum), then h-dual = 1 + (delta, theta)
    std::vector<Rational> delta_simple(n, Rational(0));
    for (const auto& r : f.positive_roots)
        for (std::size_t i = 0; i < n; ++i) delta_simple[i] += Rational(r[i], 2);
    Rational dt(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f.highest_root[j] != 0)
                dt += delta_simple[i] * Rational(f.highest_root[j]) * f.half_norms[j] *
                      f.cartan(i, j);
    f.dual_coxeter = Rational(1) + dt;

    // cross-check: delta in fundamental coordinates is all ones
    for (std::size_t j = 0; j < n; ++j) {
        Rational fund(0);
        for (std::size_t i = 0; i < n; ++i) fund += delta_simple[i] * f.cartan(i, j);
        if (fund != Rational(1)) throw error("RootSystem: Weyl vector check failed for " + token);
    }

    // Gram matrix of the fundamental weights under the normalized form:
    // omega_i = sum_k (C^-1)_ik alpha_k, so F = C^-1 S C^-T with S_ij = d_j C_ij
    RatMatrix cinv = f.cartan.inverse();
    RatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = f.half_norms[j] * f.cartan(i, j);
    RatMatrix cinv_t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cinv_t(i, j) = cinv(j, i);
    f.fund_gram = cinv * s * cinv_t;

    return f;
}

}  // namespace

RootSystem RootSystem::build(const std::string& spec) {
    RootSystem rs;
    rs.type_ = spec;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find('x', start);
        std::string token = spec.substr(start, end == std::string::npos ? end : end - start);
        if (token.empty()) throw error("RootSystem: empty type token in '" + spec + "'");
        rs.offsets_.push_back(rs.rank_);
        SimpleFactor f = build_factor(token);
        rs.rank_ += f.rank;
        rs.factors_.push_back(std::move(f));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return rs;
}

std::size_t RootSystem::factor_of(std::size_t simple_index) const {
    for (std::size_t f = factors_.size(); f-- > 0;)
        if (simple_index >= offsets_[f]) return f;
    throw error("RootSystem: simple root index out of range");
}

std::size_t RootSystem::offset_of_factor(std::size_t f) const { return offsets_.at(f); }

std::size_t RootSystem::positive_root_count() const {
    std::size_t n = 0;
    for (const auto& f : factors_) n += f.positive_roots.size();
    return n;
}

Rational killing_pairing(const RootSystem& rs, const Weight& a, const Weight& b) {
    if (a.size() != rs.total_rank() || b.size() != rs.total_rank())
        throw error("killing_pairing: weight length mismatch");
    Rational total(0);
    for (std::size_t f = 0; f < rs.factors().size(); ++f) {
        const SimpleFactor& sf = rs.factors()[f];
        std::size_t off = rs.offset_of_factor(f);
        Rational s(0);
        for (std::size_t i = 0; i < sf.rank; ++i)
            for (std::size_t j = 0; j < sf.rank; ++j) {
                const Rational& ai = a[off + i];
                const Rational& bj = b[off + j];
                if (!ai.is_zero() && !bj.is_zero()) s += ai * bj * sf.fund_gram(i, j);
            }
        total += s / (Rational(2) * sf.dual_coxeter);
    }
    return total;
}

Weight root_to_weight(const RootSystem& rs, std::size_t factor, const std::vector<int>& root) {
    const SimpleFactor& sf = rs.factors().at(factor);
    if (root.size() != sf.rank) throw error("root_to_weight: coordinate length mismatch");
    Weight w = Weight::zero(rs.total_rank());
    std::size_t off = rs.offset_of_factor(factor);
    for (std::size_t j = 0; j < sf.rank; ++j) {
        Rational fund(0);
        for (std::size_t i = 0; i < sf.rank; ++i)
            if (root[i] != 0) fund += Rational(root[i]) * sf.cartan(i, j);
        w[off + j] = fund;
    }
    return w;
}

Weight weyl_vector(const RootSystem& rs) {
    return Weight(std::vector<Rational>(rs.total_rank(), Rational(1)));
}

Weight delta_subset(const RootSystem& rs, const std::set<std::size_t>& I) {
    for (std::size_t i : I)
        if (i >= rs.total_rank()) throw error("delta_subset: index out of range");
    Weight acc = Weight::zero(rs.total_rank());
    for (std::size_t f = 0; f < rs.factors().size(); ++f) {
        const SimpleFactor& sf = rs.factors()[f];
        std::size_t off = rs.offset_of_factor(f);
        for (const auto& r : sf.positive_roots) {
            bool in_span = true;
            for (std::size_t i = 0; i < sf.rank; ++i)
                if (r[i] != 0 && !I.count(off + i)) {
                    in_span = false;
                    break;
                }
            if (!in_span) acc = acc + root_to_weight(rs, f, r);
        }
    }
    return acc.scaled(Rational(1, 2));
}

Rational beta_value(const RootSystem& rs, const Weight& mu) {
    if (mu.is_zero()) throw error("beta_value: undefined for the zero weight");
    Rational num = Rational(2) * killing_pairing(rs, weyl_vector(rs), mu);
    Rational den = killing_pairing(rs, mu, mu);
    return num / den;
}

bool anticanonical_beta_check(const RootSystem& rs, const std::set<std::size_t>& I, long k,
                              long l) {
    if (k == 0 || l == 0) throw error("anticanonical_beta_check: k and l must be nonzero");
    Weight di = delta_subset(rs, I);
    if (di.is_zero()) throw error("anticanonical_beta_check: I covers all simple roots");
    Weight mu = di.scaled(Rational(2 * k, l));
    return beta_value(rs, mu) == Rational(l, k);
}

bool weyl_vector_orthogonality(const RootSystem& rs, const std::set<std::size_t>& I) {
    Weight di = delta_subset(rs, I);
    return killing_pairing(rs, weyl_vector(rs), di) == killing_pairing(rs, di, di);
}

bool is_ample(const RootSystem& rs, const std::set<std::size_t>& I, const Weight& lambda) {
    if (lambda.size() != rs.total_rank()) throw error("is_ample: weight length mismatch");
    for (std::size_t f = 0; f < rs.factors().size(); ++f) {
        const SimpleFactor& sf = rs.factors()[f];
        std::size_t off = rs.offset_of_factor(f);
        for (std::size_t i = 0; i < sf.rank; ++i) {
            if (I.count(off + i)) continue;
            std::vector<int> alpha(sf.rank, 0);
            alpha[i] = 1;
            Rational p = killing_pairing(rs, lambda, root_to_weight(rs, f, alpha));
            if (!(p > Rational(0))) return false;
        }
    }
    return true;
}

bool fano_check(const RootSystem& rs, const std::set<std::size_t>& I) {
    return is_ample(rs, I, delta_subset(rs, I));
}

unsigned long weyl_dimension(const RootSystem& rs, const Weight& mu) {
    if (mu.size() != rs.total_rank()) throw error("weyl_dimension: weight length mismatch");
    if (!mu.is_dominant()) throw error("weyl_dimension: weight is not dominant");
    Rational dim(1);
    for (std::size_t f = 0; f < rs.factors().size(); ++f) {
        const SimpleFactor& sf = rs.factors()[f];
        std::size_t off = rs.offset_of_factor(f);
        for (const auto& r : sf.positive_roots) {
            // (lambda, alpha) with lambda in fundamental and alpha in simple
            // coordinates is sum_j lambda_j d_j a_j
            Rational num(0), den(0);
            for (std::size_t j = 0; j < sf.rank; ++j) {
                if (r[j] == 0) continue;
                Rational dj_aj = sf.half_norms[j] * Rational(r[j]);
                num += (mu[off + j] + Rational(1)) * dj_aj;
                den += dj_aj;
            }
            dim *= num / den;
        }
    }
    if (!dim.is_integer() || dim.sign() <= 0)
        throw error("weyl_dimension: non-integral result (internal error)");
    return static_cast<unsigned long>(dim.to_long());
}

Rational casimir_scalar_lowest(const RootSystem& rs, const Weight& lambda) {
    return killing_pairing(rs, lambda, lambda) -
           Rational(2) * killing_pairing(rs, weyl_vector(rs), lambda);
}

Weight sections_highest_weight(const RootSystem& rs, const std::set<std::size_t>& I,
                               const Weight& lambda_bundle) {
    if (lambda_bundle.size() != rs.total_rank())
        throw error("sections_highest_weight: weight length mismatch");
    for (std::size_t i : I)
        if (!lambda_bundle[i].is_zero())
            throw error("sections_highest_weight: character does not extend to the parabolic");
    Weight mu = -lambda_bundle;
    if (!mu.is_dominant())
        throw error("sections_highest_weight: -lambda is not dominant");
    return mu;
}

std::vector<std::set<std::size_t>> all_simple_subsets(const RootSystem& rs) {
    std::size_t n = rs.total_rank();
    if (n > 16) throw error("all_simple_subsets: rank too large");
    std::vector<std::set<std::size_t>> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace taut
