#include "sicforge/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace sicforge {

double canon12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

Json complex_to_json(const Complex& z) {
    return Json::array({canon12(z.real()), canon12(z.imag())});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

Json vector_to_json(const CVector& v) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(complex_to_json(v[i]));
    return Json{{"dim", v.size()}, {"entries", entries}};
}

CVector vector_from_json(const Json& j) {
    const auto& entries = j.contains("entries") ? j.at("entries") : j;
    if (!entries.is_array()) throw ParseError("vector: expected an entries array");
    CVector v(static_cast<Eigen::Index>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = complex_from_json(entries[i]);
    }
    return v;
}

Json matrix_to_json(const CMatrix& m) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CMatrix matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
        throw ParseError("matrix: entry count does not match shape");
    }
    CMatrix m(rows, cols);
    size_t i = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(entries[i++]);
    }
    return m;
}

Json sic_to_json(const SicCandidate& c) {
    Json vectors = Json::array();
    for (const auto& v : c.vectors) vectors.push_back(vector_to_json(v).at("entries"));
    Json j{{"dim", c.dim}, {"vectors", vectors}};
    if (!c.provenance.empty()) j["provenance"] = c.provenance;
    return j;
}

SicCandidate sic_from_json(const Json& j) {
    SicCandidate c;
    c.dim = j.at("dim").get<int>();
    for (const auto& v : j.at("vectors")) c.vectors.push_back(vector_from_json(v));
    if (j.contains("provenance")) c.provenance = j.at("provenance").get<std::string>();
    return c;
}

Json op_to_json(const CliffordOp& op) {
    const Mat2& f = op.label.F;
    return Json{{"F", Json::array({Json::array({f.a, f.b}), Json::array({f.c, f.d})})},
                {"chi", Json::array({op.label.chi.x, op.label.chi.y})},
                {"antiunitary", op.antiunitary},
                {"matrix", matrix_to_json(op.matrix)}};
}

Json census_to_json(int p, const std::string& group,
                    const std::map<ConjClassLabel, ClassInfo>& census) {
    Json classes = Json::array();
    long long total = 0;
    for (const auto& [label, info] : census) {
        classes.push_back(Json{{"label", label.str()},
                               {"order", info.element_order},
                               {"size", info.size}});
        total += info.size;
    }
    return Json{{"p", p},
                {"group", group},
                {"n_classes", census.size()},
                {"group_order", total},
                {"classes", classes}};
}

Json symmetry_to_json(const SymmetryReport& report, const std::vector<CliffordOp>& table,
                      const HWContent* content) {
    Json out{{"order", report.order}, {"n_antiunitary", report.n_antiunitary}};
    if (content != nullptr) {
        out["n_hw"] = content->n_hw;
        out["n_normal_hw"] = content->n_normal;
    }
    Json generators = Json::array();
    for (size_t i : report.op_indices) {
        const auto& op = table[i];
        generators.push_back(Json{
            {"F", Json::array({Json::array({op.label.F.a, op.label.F.b}),
                               Json::array({op.label.F.c, op.label.F.d})})},
            {"chi", Json::array({op.label.chi.x, op.label.chi.y})},
            {"antiunitary", op.antiunitary}});
    }
    out["elements"] = generators;
    return out;
}

Json phase_profile_to_json(const PhaseProfile& profile) {
    Json phases = Json::array();
    for (const auto& e : profile.phases) {
        phases.push_back(Json{{"value", canon12(e.value)}, {"multiplicity", e.multiplicity}});
    }
    return Json{{"phases", phases}, {"phi_min", canon12(profile.phi_min)}};
}

Json hw_report_to_json(int p, const HWAnalysis& analysis) {
    Json orbit_sizes = Json::array();
    for (const auto& orbit : analysis.orbits) orbit_sizes.push_back(orbit.size());
    return Json{{"p", p},
                {"hw_count", analysis.census.hw.size()},
                {"orbit_sizes", orbit_sizes}};
}

Json atlas_record_to_json(double t_input, const FamilyPoint& point, double phi_min,
                          int orbit_size, int n_hidden) {
    return Json{{"t_input", canon12(t_input)},
                {"canonical_t", canon12(point.canonical_t)},
                {"class_rep", canon12(point.class_rep)},
                {"phi_min", canon12(phi_min)},
                {"orbit_size", orbit_size},
                {"n_hidden", n_hidden}};
}

Json search_result_to_json(const SearchConfig& cfg, const SearchResult& result) {
    Json restarts = Json::array();
    for (const auto& r : result.restarts) {
        restarts.push_back(Json{{"iterations", r.iterations},
                                {"objective", canon12(r.objective_value)},
                                {"deviation", canon12(r.deviation)},
                                {"converged", r.converged}});
    }
    return Json{{"dim", cfg.dim},
                {"seed", cfg.seed},
                {"converged", result.converged},
                {"deviation", canon12(result.deviation)},
                {"iterations", result.iterations},
                {"vector", result.best.size() > 0 ? vector_to_json(result.best) : Json()},
                {"restarts", restarts}};
}

} // namespace sicforge
