#pragma once

#include <string>
#include <vector>

#include "sicforge/sic.hpp"

namespace sicforge {

// The complete dimension-3 landscape: the one-parameter fiducial family,
// parameter classification, the permuting-unitary equivalence triples, and
// the regrouped SICs.

// (0, 1, -exp(i t))^T / sqrt(2)
CVector family_fiducial(double t);

struct FamilyPoint {
    double t_input;
    double canonical_t; // extended-Clifford fundamental domain [0, pi/3]
    double class_rep;   // equivalence class representative in [0, pi/9]
};

FamilyPoint canonicalize_t(double t);

double phi_min_for_class(double class_rep); // pi/3 - 3 r

enum class OrbitKind { ExceptionalZero, ExceptionalPiThird, Generic };
OrbitKind orbit_kind(double t, double eps = 1e-9);

// Orders from the orbit kind: stability within the Clifford group
// (extended), and SICs per orbit.
struct OrbitFacts {
    int stability_order;
    int extended_stability_order;
    int sics_on_orbit;
};
OrbitFacts orbit_facts(OrbitKind kind);

// One step of the transformation cycle induced by U^dag on the six SICs
// A+-, B+-, C+- at parameters +-t, +-(2pi/9 - t), +-(2pi/9 + t).
struct CycleStep {
    std::string from, to;
    double param_from, param_to;
    bool matched;
};
std::vector<CycleStep> equivalence_triple(double t, const CliffordGroup& cg);

// Z^k2 X^j psi(t_j) for j = 0,1,2: a SIC for any parameters, equivalent to
// the orbit with t = (t0 + t1 + t2)/3.
SicCandidate mixed_t_sic(double t0, double t1, double t2, const CliffordGroup& cg);

// The explicit unitary connecting a mixed-t SIC to the t = mean orbit.
CMatrix mixed_t_connecting_unitary(double t0, double t1, double t2);

enum class RegroupPattern { A, B }; // one or two conjugated slots

// Regrouping of the 18 fiducials of pair F_k (pair_index in [1,4]): throws
// NotASic when the recipe fails to verify (exceptional parameters).
SicCandidate pair_regroup(double t, RegroupPattern pattern, int k1, int pair_index,
                          const CliffordGroup& cg);

struct RegroupCensus {
    int n_orbit_sics = 0;
    int n_hidden = 0;
    int n_fiducials = 0;
    std::vector<SicCandidate> hidden;
};

// Brute-force search over all 9-subsets of the orbit's fiducials that satisfy
// the SIC conditions, via pairwise-compatibility clique enumeration plus the
// completeness filter. Throws TooLarge beyond the node cap.
RegroupCensus regroup_census(double t, const CliffordGroup& cg, long long node_cap = 1'000'000);

} // namespace sicforge
