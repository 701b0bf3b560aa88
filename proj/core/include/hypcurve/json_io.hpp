#pragma once

#include <json.hpp>

#include "hypcurve/blaschke.hpp"
#include "hypcurve/intersection.hpp"
#include "hypcurve/operators.hpp"
#include "hypcurve/petals.hpp"
#include "hypcurve/pick.hpp"
#include "hypcurve/poly.hpp"

// Fixture/wire formats. Complex numbers are [re, im] pairs; univariate
// polynomials are {"coeffs": [[re,im], ...]} ascending in degree; bivariate
// ones are {"coeffs": [row, ...]} with the row index the z-power.

namespace hypcurve {

using json = nlohmann::json;

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const json& j);

json to_json(const BlaschkeProduct& f);
BlaschkeProduct blaschke_from_json(const json& j);

json to_json(const BlaschkePair& pair);
BlaschkePair pair_from_json(const json& j);

json to_json(const IntersectionReport& rep);
IntersectionReport report_from_json(const json& j);

json to_json(const PickProblem& p);
PickProblem pick_problem_from_json(const json& j);
json to_json(const PickVerdict& v);

json to_json(const RationalFn& f);
RationalFn rationalfn_from_json(const json& j);

json to_json(const Holization& h);
Holization holization_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const SpectralSetResult& r);
json to_json(const WoldDecomposition& w);
json to_json(const WoldDefectReport& r);
json to_json(const HerglotzMeasure& m);
json to_json(const LemmaEquivalenceResult& r);

}  // namespace hypcurve
