#ifndef CGA_REPORT_HPP
#define CGA_REPORT_HPP

#include "json.hpp"

#include "cga/char0.hpp"
#include "cga/char3.hpp"
#include "cga/repcheck.hpp"

namespace cga {

using Json = nlohmann::json;

Json json_curve(const CurveModel& curve);
Json json_symbol(const SymbolAlgebraF& alg);
Json json_checks(const CheckReport& rep);
Json json_matrix(const Matrix<FieldElement>& m);
Json json_matrix_rep(const MatrixRep& rep);
Json json_smoothness(const SmoothnessReport& rep);

// The schema-stable envelope: every verb fills a subset of these keys, the
// rest stay null.
Json report_envelope();

} // namespace cga

#endif
