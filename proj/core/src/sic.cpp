#include "sicforge/sic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sicforge {

SicCheck verify_sic(const SicCandidate& c, double tol) {
    const int d = c.dim;
    if (static_cast<int>(c.vectors.size()) != d * d) {
        throw DimMismatch("verify_sic: expected d^2 vectors");
    }
    const double target = 1.0 / (d + 1);
    double fid_dev = 0.0;
    for (size_t j = 0; j < c.vectors.size(); ++j) {
        fid_dev = std::max(fid_dev, std::abs(c.vectors[j].squaredNorm() - 1.0));
        for (size_t k = j + 1; k < c.vectors.size(); ++k) {
            const double fid = std::norm(c.vectors[j].dot(c.vectors[k]));
            fid_dev = std::max(fid_dev, std::abs(fid - target));
        }
    }
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto& v : c.vectors) sum += v * v.adjoint();
    const double comp_dev = max_abs(sum - static_cast<double>(d) * CMatrix::Identity(d, d));
    return {fid_dev <= tol && comp_dev <= tol, fid_dev, comp_dev};
}

bool proj_set_equal(const std::vector<CVector>& a, const std::vector<CVector>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& u : a) {
        bool matched = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            if (proj_equal(u, b[j], tol)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

namespace {

// Image permutation of the SIC under one op, or empty if not a symmetry.
std::vector<int> induced_permutation(const SicCandidate& c, const CliffordOp& op, double tol) {
    std::vector<int> perm(c.vectors.size(), -1);
    std::vector<bool> used(c.vectors.size(), false);
    for (size_t j = 0; j < c.vectors.size(); ++j) {
        const CVector image = op.apply(c.vectors[j]);
        bool matched = false;
        for (size_t k = 0; k < c.vectors.size(); ++k) {
            if (used[k]) continue;
            if (proj_equal(image, c.vectors[k], tol)) {
                perm[j] = static_cast<int>(k);
                used[k] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return {};
    }
    return perm;
}

} // namespace

SymmetryReport symmetry_group(const SicCandidate& c, const std::vector<CliffordOp>& table,
                              double tol) {
    SymmetryReport report;
    for (size_t i = 0; i < table.size(); ++i) {
        auto perm = induced_permutation(c, table[i], tol);
        if (perm.empty()) continue;
        report.op_indices.push_back(i);
        report.permutations.push_back(std::move(perm));
        if (table[i].antiunitary) ++report.n_antiunitary;
    }
    report.order = static_cast<int>(report.op_indices.size());
    return report;
}

std::vector<size_t> stability_group(const CVector& psi, const std::vector<CliffordOp>& table,
                                    double tol) {
    std::vector<size_t> out;
    for (size_t i = 0; i < table.size(); ++i) {
        if (proj_equal(table[i].apply(psi), psi, tol)) out.push_back(i);
    }
    return out;
}

std::vector<SicCandidate> orbit_of_fiducial(const CVector& psi, const HWGroup& hw,
                                            const std::vector<CliffordOp>& table, double tol) {
    std::vector<SicCandidate> orbit;
    for (const auto& op : table) {
        const CVector image = op.apply(psi);
        SicCandidate cand{hw.dim(), hw.sic_from_fiducial(image)};
        bool fresh = true;
        for (const auto& known : orbit) {
            if (proj_set_equal(cand.vectors, known.vectors, tol)) {
                fresh = false;
                break;
            }
        }
        if (fresh) orbit.push_back(std::move(cand));
    }
    return orbit;
}

HWContent hw_content(const SymmetryReport& report, const std::vector<CliffordOp>& table,
                     const OrderP2Census& census) {
    HWContent out;
    std::vector<AffineSymplectic> labels;
    labels.reserve(report.op_indices.size());
    for (size_t i : report.op_indices) labels.push_back(table[i].label);
    std::sort(labels.begin(), labels.end());

    for (size_t s = 0; s < census.hw.size(); ++s) {
        const auto& sub = census.hw[s].elements;
        if (!std::includes(labels.begin(), labels.end(), sub.begin(), sub.end())) continue;
        out.contained.push_back(s);
        bool normal = true;
        for (const auto& x : labels) {
            if (!normalizes(x, sub)) {
                normal = false;
                break;
            }
        }
        if (normal) out.normal.push_back(s);
    }
    out.n_hw = static_cast<int>(out.contained.size());
    out.n_normal = static_cast<int>(out.normal.size());
    return out;
}

double bargmann_phase(const CVector& a, const CVector& b, const CVector& c) {
    const Complex triple = a.dot(b) * b.dot(c) * c.dot(a);
    if (std::abs(triple) < 1e-6) {
        throw VanishingTrace("bargmann_phase: |tr| below 1e-6");
    }
    return std::abs(std::arg(triple));
}

PhaseProfile phase_profile(const SicCandidate& c, double cluster_tol, int anchor) {
    const auto& vs = c.vectors;
    const size_t n = vs.size();
    if (anchor < 0 || static_cast<size_t>(anchor) >= n) {
        throw IndexOutOfRange("phase_profile: anchor out of range");
    }

    std::vector<double> phases;
    double moment_dev = 0.0;
    for (size_t j = 0; j < n; ++j) {
        if (j == static_cast<size_t>(anchor)) continue;
        for (size_t k = j + 1; k < n; ++k) {
            if (k == static_cast<size_t>(anchor)) continue;
            const double phi = bargmann_phase(vs[static_cast<size_t>(anchor)], vs[j], vs[k]);
            phases.push_back(phi);
            if (c.dim == 3) {
                const CMatrix m = vs[static_cast<size_t>(anchor)] * vs[static_cast<size_t>(anchor)].adjoint() +
                                  vs[j] * vs[j].adjoint() + vs[k] * vs[k].adjoint();
                const double tr3 = (m * m * m).trace().real();
                moment_dev = std::max(moment_dev, std::abs(tr3 - 7.5 - 0.75 * std::cos(phi)));
            }
        }
    }
    std::sort(phases.begin(), phases.end());

    PhaseProfile out;
    out.max_moment_dev = moment_dev;
    for (double phi : phases) {
        if (!out.phases.empty() && phi - out.phases.back().value <= cluster_tol) {
            auto& e = out.phases.back();
            e.value = (e.value * e.multiplicity + phi) / (e.multiplicity + 1);
            ++e.multiplicity;
        } else {
            out.phases.push_back({phi, 1});
        }
    }
    out.phi_min = out.phases.empty() ? 0.0 : out.phases.front().value;
    return out;
}

EquivalenceResult equivalent(const SicCandidate& a, const SicCandidate& b,
                             const CliffordGroup& cg, double tol) {
    if (a.dim != b.dim) throw DimMismatch("equivalent: dimension mismatch");
    const auto table = cg.enumerate(/*extended=*/true);
    const int p = cg.dim();

    std::vector<CMatrix> twists{CMatrix::Identity(p, p)};
    if (p == 3) {
        const CMatrix u = permuting_unitary(cg).u;
        twists.push_back(u);
        twists.push_back(u * u);
    }

    for (const auto& twist : twists) {
        for (const auto& op : table) {
            // Candidate map: twist then op.
            std::vector<CVector> image;
            image.reserve(a.vectors.size());
            for (const auto& v : a.vectors) image.push_back(op.apply(twist * v));
            if (proj_set_equal(image, b.vectors, tol)) {
                const CMatrix w = op.antiunitary ? CMatrix(op.matrix * twist.conjugate())
                                                 : CMatrix(op.matrix * twist);
                return {EquivalenceVerdict::Equivalent, std::make_pair(w, op.antiunitary),
                        "orbit witness found"};
            }
        }
    }

    if (p != 3) {
        return {EquivalenceVerdict::Inequivalent, std::nullopt,
                "not on the same extended Clifford orbit (complete for p != 3)"};
    }
    const PhaseProfile pa = phase_profile(a);
    const PhaseProfile pb = phase_profile(b);
    if (std::abs(pa.phi_min - pb.phi_min) > 1e-6) {
        return {EquivalenceVerdict::Inequivalent, std::nullopt,
                "phi_min separation " + std::to_string(std::abs(pa.phi_min - pb.phi_min))};
    }
    return {EquivalenceVerdict::Undecided, std::nullopt,
            "no witness found and no separating invariant"};
}

} // namespace sicforge
