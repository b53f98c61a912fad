#include "taut/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "taut/parser.hpp"

namespace taut {

using nlohmann::json;

std::string operator_to_json(const WeylElement& op, const TermOrder& ord) {
    json j;
    j["vars"] = op.context()->vars()->names();
    std::vector<const WeylElement::TermMap::value_type*> sorted;
    for (const auto& t : op.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
    json terms = json::array();
    for (auto* t : sorted) {
        json e;
        e["x"] = WeylElement::x_part(t->first).exponents();
        e["d"] = WeylElement::d_part(t->first).exponents();
        e["c"] = t->second.is_constant() ? t->second.as_constant().str() : t->second.str();
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

WeylElement operator_from_json(const std::string& text) {
    json j = json::parse(text);
    WeylContextPtr ctx = make_weyl_context(j.at("vars").get<std::vector<std::string>>());
    WeylElement op(ctx);
    for (const auto& t : j.at("terms")) {
        Monomial x(t.at("x").get<std::vector<int>>());
        Monomial d(t.at("d").get<std::vector<int>>());
        Rational c = Rational::parse(t.at("c").get<std::string>());
        op += WeylElement::term(ctx, x, d, RationalFunction::constant(ctx->vars(), c));
    }
    return op;
}

TautSpec tautspec_from_json(const std::string& text) {
    json j = json::parse(text);
    WeylContextPtr ctx = make_weyl_context(j.at("vars").get<std::vector<std::string>>());

    const json& jr = j.at("rep");
    std::vector<std::string> labels = jr.at("labels").get<std::vector<std::string>>();
    auto label_index = [&](const std::string& l) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw error("tautspec_from_json: unknown label '" + l + "'");
        return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<RatMatrix> matrices;
    for (const auto& jm : jr.at("matrices")) {
        RatMatrix m(jm.size(), jm.size());
        for (std::size_t r = 0; r < jm.size(); ++r) {
            const auto& row = jm.at(r);
            if (row.size() != jm.size()) throw error("tautspec_from_json: non-square matrix");
            for (std::size_t c = 0; c < row.size(); ++c)
                m(r, c) = Rational::parse(row.at(c).get<std::string>());
        }
        matrices.push_back(std::move(m));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> brackets;
    if (jr.contains("brackets"))
        for (const auto& [key, combo] : jr.at("brackets").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw error("tautspec_from_json: bracket key must be 'a,b'");
            std::size_t a = label_index(key.substr(0, comma));
            std::size_t b = label_index(key.substr(comma + 1));
            std::vector<Rational> row(labels.size(), Rational(0));
            for (const auto& [l, v] : combo.items())
                row[label_index(l)] = Rational::parse(v.get<std::string>());
            if (a < b)
                brackets[{a, b}] = std::move(row);
            else {
                for (auto& x : row) x = -x;
                brackets[{b, a}] = std::move(row);
            }
        }
    RepSpec rep(std::move(labels), std::move(matrices), std::move(brackets),
                label_index(jr.at("e").get<std::string>()));

    std::vector<Polynomial> ideal;
    for (const auto& s : j.at("ideal"))
        ideal.push_back(parse_polynomial(s.get<std::string>(), ctx->vars()));
    std::map<std::string, Rational> beta;
    if (j.contains("beta"))
        for (const auto& [l, v] : j.at("beta").items())
            beta[l] = Rational::parse(v.get<std::string>());
    return TautSpec(std::move(rep), ctx, std::move(ideal), std::move(beta));
}

std::string tautspec_to_json(const TautSpec& spec) {
    json j;
    j["vars"] = spec.context()->vars()->names();
    json jr;
    jr["labels"] = spec.rep().labels();
    json mats = json::array();
    for (std::size_t i = 0; i < spec.rep().basis_size(); ++i) {
        const RatMatrix& m = spec.rep().matrix(i);
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    jr["matrices"] = std::move(mats);
    json br = json::object();
    for (std::size_t a = 0; a < spec.rep().basis_size(); ++a)
        for (std::size_t b = a + 1; b < spec.rep().basis_size(); ++b) {
            auto combo = spec.rep().bracket(a, b);
            json entry = json::object();
            for (std::size_t k = 0; k < combo.size(); ++k)
                if (!combo[k].is_zero()) entry[spec.rep().labels()[k]] = combo[k].str();
            if (!entry.empty())
                br[spec.rep().labels()[a] + "," + spec.rep().labels()[b]] = std::move(entry);
        }
    jr["brackets"] = std::move(br);
    jr["e"] = spec.rep().labels()[spec.rep().scaling_index()];
    j["rep"] = std::move(jr);
    json ideal = json::array();
    for (const auto& g : spec.cone_ideal()) ideal.push_back(g.str());
    j["ideal"] = std::move(ideal);
    json beta = json::object();
    for (std::size_t i = 0; i < spec.rep().basis_size(); ++i) {
        Rational b = spec.beta_of(i);
        if (!b.is_zero()) beta[spec.rep().labels()[i]] = b.str();
    }
    j["beta"] = std::move(beta);
    return j.dump();
}

}  // namespace taut
