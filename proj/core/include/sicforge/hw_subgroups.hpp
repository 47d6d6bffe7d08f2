#pragma once

#include <vector>

#include "sicforge/clifford.hpp"

namespace sicforge {

// Heisenberg-Weyl subgroups inside the Clifford collineation group, their
// Sylow p-subgroup containers, permuting unitaries, and the orbit structure
// under Clifford conjugation. Group algebra stays exact on labels; matrices
// appear only in unitary-equivalence witnesses.

struct HWSubgroup {
    AffineSymplectic central_gen; // generates the centre of the containing Sylow
    AffineSymplectic other_gen;
    Subgroup elements; // p^2 collineation labels, sorted
};

// Sylow p-subgroup P_j of the Clifford collineation group (order p^3), the
// preimage of Q_j under (F,chi) -> F. j in [1, p+1].
Subgroup sylow_P(PrimeModulus p, int j);

Subgroup subgroup_centre(const Subgroup& s);

// All order-p^2 subgroups of the Sylow subgroups, with the HW ones identified
// by a noncommuting matrix lift of the two generators.
struct OrderP2Census {
    std::vector<HWSubgroup> hw;       // p^2 of them, the standard group first
    std::vector<Subgroup> diagonal;    // p+1 all-diagonal subgroups, excluded
};
OrderP2Census list_hw_subgroups(const CliffordGroup& cg);

// U with U^j Z U^-j = Z and U^j X U^-j = v_adjusted^j X; v_adjusted is V for
// p >= 5 and the phase-fixed V' for p = 3.
struct PermutingUnitary {
    CMatrix u;
    CMatrix v_adjusted;
};
PermutingUnitary permuting_unitary(const CliffordGroup& cg);

struct HWAnalysis {
    OrderP2Census census;
    // Orbit partition of the non-standard HW subgroups (indices into
    // census.hw) under conjugation by the full Clifford collineation group.
    std::vector<std::vector<size_t>> orbits;
    // witnesses[i] maps the standard HW group onto census.hw[i] by
    // conjugation: W <Z,X> W^dag = hw[i] projectively. witnesses[0] = 1.
    std::vector<CMatrix> witnesses;
};
HWAnalysis analyze_hw_subgroups(const CliffordGroup& cg);

// Normalizer of a label subgroup within the Clifford collineation group.
Subgroup normalizer_in_clifford(PrimeModulus p, const Subgroup& s);

} // namespace sicforge
