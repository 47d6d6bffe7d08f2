#pragma once

#include <map>

#include "json.hpp"

#include "sicforge/dim3.hpp"
#include "sicforge/search.hpp"
#include "sicforge/sic.hpp"

namespace sicforge {

using Json = nlohmann::ordered_json;

// All floating-point output is rounded to 12 significant digits before
// serialization so identical invocations are byte-identical.
double canon12(double x);

Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j);

Json matrix_to_json(const CMatrix& m); // row-major [re, im] pairs
CMatrix matrix_from_json(const Json& j);

Json sic_to_json(const SicCandidate& c);
SicCandidate sic_from_json(const Json& j);

Json op_to_json(const CliffordOp& op);

Json census_to_json(int p, const std::string& group,
                    const std::map<ConjClassLabel, ClassInfo>& census);

Json symmetry_to_json(const SymmetryReport& report, const std::vector<CliffordOp>& table,
                      const HWContent* content);

Json phase_profile_to_json(const PhaseProfile& profile);

Json hw_report_to_json(int p, const HWAnalysis& analysis);

Json atlas_record_to_json(double t_input, const FamilyPoint& point, double phi_min,
                          int orbit_size, int n_hidden);

Json search_result_to_json(const SearchConfig& cfg, const SearchResult& result);

} // namespace sicforge
