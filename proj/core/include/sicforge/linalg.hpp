#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sicforge/errors.hpp"

namespace sicforge {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kPhaseGap = 1e-7;

bool approx_unitary(const CMatrix& U, double tol = kUnitaryTol);

// Projective equality: |<u|v>| >= 1 - tol for unit vectors.
bool proj_equal(const CVector& u, const CVector& v, double tol = 1e-8);

// Deterministic projective representative: divide by the phase of the first
// entry of largest modulus.
CVector strip_global_phase(const CVector& v);
CMatrix strip_global_phase(const CMatrix& m);

struct EigenPhase {
    double phase; // in [0, 2*pi)
    int multiplicity;
};

// Raw eigendecomposition (values, vectors); throws NotUnitary.
std::pair<CVector, CMatrix> unitary_eigensystem(const CMatrix& U, double tol = kUnitaryTol);

// Eigenphases clustered on the circle with the given gap, normalized so the
// smallest reported phase lies in [0, 2*pi/d). Multiplicities sum to d.
std::vector<EigenPhase> unitary_spectrum(const CMatrix& U, double gap = kPhaseGap,
                                         double tol = kUnitaryTol);

// Sorted multiset of eigenphase multiplicities.
std::vector<int> spectrum_multiplicities(const CMatrix& U, double gap = kPhaseGap);

bool is_monomial(const CMatrix& U, double tol = kUnitaryTol);

double max_abs(const CMatrix& m);

} // namespace sicforge
