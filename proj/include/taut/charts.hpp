#pragma once

#include "taut/rational_function.hpp"
#include "taut/weyl_groebner.hpp"

namespace taut {

/// Vector field with rational-function coefficients: sum c_i(x) d_i.
struct RationalVectorField {
    ContextPtr context;
    std::vector<RationalFunction> coeffs;  // one per chart variable

    friend bool operator==(const RationalVectorField& a, const RationalVectorField& b) {
        return same_context(a.context, b.context) && a.coeffs == b.coeffs;
    }
};

RationalVectorField make_vector_field(const ContextPtr& ctx, std::vector<RationalFunction> coeffs);

/// Birational coordinate change between two charts. forward[j] expresses the
/// j-th target coordinate in the source variables; inverse[i] expresses the
/// i-th source coordinate in the target variables. Construction checks both
/// compositions are the identity.
struct CoordinateMap {
    ContextPtr source, target;
    std::vector<RationalFunction> forward;   // over source
    std::vector<RationalFunction> inverse;   // over target

    CoordinateMap(ContextPtr src, ContextPtr dst, std::vector<RationalFunction> fwd,
                  std::vector<RationalFunction> inv);
};

/// Chain rule: coefficients of the image field are the Jacobian of forward
/// applied to the old coefficients, composed with the inverse map.
RationalVectorField pushforward(const RationalVectorField& vf, const CoordinateMap& map);

/// Lie bracket of vector fields: [v, w]_j = v(w_j) - w(v_j).
RationalVectorField field_bracket(const RationalVectorField& v, const RationalVectorField& w);

enum class RncChart { U0, U1 };

/// Chart coordinates: (l, s) on U0 and (m, t) on U1.
ContextPtr rnc_chart_context(RncChart chart);

/// The four induced fields on the punctured cone over the degree-k rational
/// normal curve, restricted to one chart, in basis order E12, E21, H, e.
std::vector<RationalVectorField> rnc_chart_fields(int k, RncChart chart);

/// The gluing (l, s) -> (l s^k, 1/s) between the two charts.
CoordinateMap rnc_gluing(int k);

/// Pushforward of every U0 field under the gluing equals the matching U1
/// field.
bool verify_chart_consistency(int k);

/// With transition alpha^k and exponent m = k(beta+1) (required integral),
/// h = alpha^m satisfies h'/h = (beta+1) * (alpha^k)'/alpha^k in every
/// variable.
bool gluing_cocycle_check(const RationalFunction& alpha, int k, const Rational& beta);

/// Reduction of the chart presentation of the twisted module on the
/// punctured cone: the module is zero iff beta0 != 2/k. Returns true when
/// the module vanishes (the left ideal is the unit ideal).
bool chart_module_is_zero(int k, const Rational& beta0);

}  // namespace taut
