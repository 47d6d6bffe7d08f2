#pragma once

#include <utility>
#include <vector>

#include "sicforge/linalg.hpp"
#include "sicforge/zmod.hpp"

namespace sicforge {

struct DisplacementIndex {
    int k1, k2;
    friend bool operator==(DisplacementIndex a, DisplacementIndex b) = default;
};

// Displacement operators D_k = tau^(k1 k2) X^k1 Z^k2 in prime dimension d,
// with omega = exp(2 pi i/d) and tau = -exp(pi i/d). Phases are tracked as
// integer exponents of tau mod 2d so long products do not drift.
class HWGroup {
  public:
    explicit HWGroup(int d); // d prime

    int dim() const { return d_; }
    Complex omega_power(long long e) const;
    Complex tau_power(long long e) const;

    const CMatrix& displacement(DisplacementIndex k) const;

    // D_k D_q = tau^e D_m with m = k + q componentwise mod d. Returns (e, m),
    // e reduced into [0, 2d).
    std::pair<int, DisplacementIndex> displacement_product(DisplacementIndex k,
                                                           DisplacementIndex q) const;

    // max_{k != 0} | |<psi|D_k psi>|^2 - 1/(d+1) | against tol; the deviation
    // is always reported.
    std::pair<bool, double> is_fiducial(const CVector& psi, double tol = 1e-9) const;

    // The d^2 vectors D_k psi; throws NotFiducial when the input fails the
    // fiducial condition at tol.
    std::vector<CVector> sic_from_fiducial(const CVector& psi, double tol = 1e-9) const;

    // The unimodular form of the d=2 HW group: +-1, +-iX, +-iZ, +-XZ.
    static std::vector<CMatrix> unimodular_qubit_elements();

  private:
    int d_;
    std::vector<CMatrix> table_; // index k1*d + k2
};

} // namespace sicforge
