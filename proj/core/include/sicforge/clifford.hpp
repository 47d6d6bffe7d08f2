#pragma once

#include <map>
#include <vector>

#include "sicforge/heisenberg_weyl.hpp"
#include "sicforge/symplectic.hpp"

namespace sicforge {

// A Clifford collineation element: affine-symplectic label, antiunitary flag
// (set exactly when det(F) = -1), and the synthesized unitary part. An
// antiunitary op acts as entrywise conjugation followed by the matrix.
struct CliffordOp {
    AffineSymplectic label;
    bool antiunitary = false;
    CMatrix matrix;

    CVector apply(const CVector& psi) const;
    CMatrix conjugate_matrix(const CMatrix& a) const; // op a op^-1
};

// (A,a)o(B,b) = (A conj(B) if a else A B, a xor b); labels compose by the
// semidirect product rule.
CliffordOp compose(const CliffordOp& g, const CliffordOp& h);

bool proj_equal_unitary(const CMatrix& a, const CMatrix& b, double tol = 1e-8);

// Clifford group of the standard HW group in odd prime dimension p, built
// through the correspondence U D_k U^dag = omega^<chi,Fk> D_(Fk).
class CliffordGroup {
  public:
    explicit CliffordGroup(int p); // odd prime

    int dim() const { return p_; }
    const HWGroup& hw() const { return hw_; }

    // V_F for det(F) = +1.
    CMatrix v_matrix(const Mat2& f) const;

    // Synthesize the operator for a label; with verify set, checks the
    // conjugation law over all k and throws SynthesisCheckFailed beyond 1e-8.
    CliffordOp synthesize(const AffineSymplectic& label, bool verify = true) const;

    // Max deviation of the defining conjugation law over all k.
    double conjugation_law_deviation(const CliffordOp& op) const;

    // One op per collineation element; closure and the isomorphism property
    // are spot-checked on 500 random pairs.
    std::vector<CliffordOp> enumerate(bool extended, long long cap = 1'000'000) const;

    // Eigenphase multiplicity pattern (sorted) of one representative per
    // conjugacy class of SL(2,p) x (Z_p)^2.
    std::map<ConjClassLabel, std::vector<int>> spectrum_census() const;

  private:
    int p_;
    HWGroup hw_;
};

// Dimension two: the collineation Clifford group (order 24) built by closure
// from the Hadamard and phase gates; extended doubles it with the conjugation
// coset. Labels carry no information at p = 2.
std::vector<CliffordOp> qubit_clifford_group(bool extended);

} // namespace sicforge
