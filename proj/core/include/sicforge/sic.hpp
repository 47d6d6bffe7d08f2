#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sicforge/clifford.hpp"
#include "sicforge/hw_subgroups.hpp"

namespace sicforge {

struct SicCandidate {
    int dim = 0;
    std::vector<CVector> vectors;  // d^2 unit vectors
    std::string provenance;        // optional: fiducial parameter or recipe
};

struct SicCheck {
    bool ok;
    double max_fidelity_dev;     // against (1 + d delta)/( d+1 )
    double max_completeness_dev; // against sum of projectors = d * I
    double max() const { return std::max(max_fidelity_dev, max_completeness_dev); }
};

SicCheck verify_sic(const SicCandidate& c, double tol = 1e-9);

// Projective set equality by greedy matching.
bool proj_set_equal(const std::vector<CVector>& a, const std::vector<CVector>& b,
                    double tol = 1e-8);

struct SymmetryReport {
    int order = 0;
    int n_antiunitary = 0;
    std::vector<size_t> op_indices;              // into the supplied table
    std::vector<std::vector<int>> permutations;  // induced vector permutations
};

// All elements of the supplied (extended) Clifford table that permute the
// SIC's vectors projectively.
SymmetryReport symmetry_group(const SicCandidate& c, const std::vector<CliffordOp>& table,
                              double tol = 1e-8);

// Indices of table elements fixing psi projectively.
std::vector<size_t> stability_group(const CVector& psi, const std::vector<CliffordOp>& table,
                                    double tol = 1e-8);

// Distinct SICs obtained by applying every table element to the fiducial.
std::vector<SicCandidate> orbit_of_fiducial(const CVector& psi, const HWGroup& hw,
                                            const std::vector<CliffordOp>& table,
                                            double tol = 1e-8);

// HW subgroups of the symmetry group: contained / normal counts.
struct HWContent {
    int n_hw = 0;
    int n_normal = 0;
    std::vector<size_t> contained; // indices into census.hw
    std::vector<size_t> normal;
};
HWContent hw_content(const SymmetryReport& report, const std::vector<CliffordOp>& table,
                     const OrderP2Census& census);

// Bargmann phase |arg tr(rho1 rho2 rho3)| in [0, pi]; throws VanishingTrace
// when |tr| < 1e-6.
double bargmann_phase(const CVector& a, const CVector& b, const CVector& c);

struct PhaseProfile {
    struct Entry {
        double value;
        int multiplicity;
    };
    std::vector<Entry> phases; // ascending
    double phi_min;
    double max_moment_dev; // worst |tr(M^3) - 15/2 - (3/4) cos(phi)| over triples (d = 3)
};

// Anchored triple profile: all pairs against vectors[anchor].
PhaseProfile phase_profile(const SicCandidate& c, double cluster_tol = 1e-6, int anchor = 0);

enum class EquivalenceVerdict { Equivalent, Inequivalent, Undecided };

struct EquivalenceResult {
    EquivalenceVerdict verdict;
    // witness maps a onto b (matrix with optional entrywise-conjugation first)
    std::optional<std::pair<CMatrix, bool>> witness;
    std::string detail;
};

// Decides unitary/antiunitary equivalence of two SICs covariant with respect
// to the standard HW group. For p != 3 the extended Clifford orbit search is
// complete; at p = 3 the permuting-unitary twists are also searched, and
// inequivalence is certified through phi_min separation.
EquivalenceResult equivalent(const SicCandidate& a, const SicCandidate& b,
                             const CliffordGroup& cg, double tol = 1e-8);

} // namespace sicforge
