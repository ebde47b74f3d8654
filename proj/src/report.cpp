#include "cga/report.hpp"

namespace cga {

Json json_curve(const CurveModel& curve) {
    Json terms = Json::object();
    for (const auto& [e, c] : curve.poly.terms())
        terms[MultiPoly::monomial_str(curve.poly.var_names(), e)] = c.str();
    return Json{{"label", curve.label},
                {"variables", curve.poly.var_names()},
                {"terms", terms}};
}

Json json_symbol(const SymbolAlgebraF& alg) {
    return Json{{"kind", alg.kind() == SymbolKind::root_of_unity ? "root_of_unity"
                                                                 : "artin_schreier"},
                {"degree", alg.degree()},
                {"a", alg.a().str()},
                {"b", alg.b().str()},
                {"field", alg.a().field()->describe()},
                {"rendered", alg.render()}};
}

Json json_checks(const CheckReport& rep) {
    Json out = Json::array();
    for (const auto& i : rep.items) {
        Json item{{"name", i.name}, {"ok", i.ok}};
        if (!i.ok) item["witness"] = i.witness;
        out.push_back(std::move(item));
    }
    return out;
}

Json json_matrix(const Matrix<FieldElement>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_matrix_rep(const MatrixRep& rep) {
    Json mats = Json::array();
    for (const auto& m : rep.mats) mats.push_back(json_matrix(m));
    return Json{{"dimension", rep.dim}, {"field", rep.K->describe()}, {"matrices", mats}};
}

Json json_smoothness(const SmoothnessReport& rep) {
    Json pts = Json::array();
    for (const auto& p : rep.singular_points) {
        Json pt = Json::array();
        for (const auto& c : p) pt.push_back(c.str());
        pts.push_back(std::move(pt));
    }
    return Json{{"singular_found", rep.singular_found},
                {"singular_points", pts},
                {"detail", rep.detail}};
}

Json report_envelope() {
    return Json{{"invariants", nullptr},
                {"curve", nullptr},
                {"image", nullptr},
                {"representation", nullptr},
                {"checks", nullptr}};
}

} // namespace cga
