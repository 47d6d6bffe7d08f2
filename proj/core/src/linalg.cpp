#include "sicforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sicforge {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double max_abs(const CMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

bool approx_unitary(const CMatrix& U, double tol) {
    if (U.rows() != U.cols()) return false;
    const CMatrix gram = U.adjoint() * U;
    return max_abs(gram - CMatrix::Identity(U.rows(), U.cols())) <= tol;
}

bool proj_equal(const CVector& u, const CVector& v, double tol) {
    if (u.size() != v.size()) throw DimMismatch("proj_equal: dimension mismatch");
    return std::abs(u.dot(v)) >= 1.0 - tol;
}

CVector strip_global_phase(const CVector& v) {
    Eigen::Index best = 0;
    double best_mod = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > best_mod + 1e-12) {
            best_mod = m;
            best = i;
        }
    }
    if (best_mod <= 0.0) return v;
    const Complex phase = v[best] / std::abs(v[best]);
    return v / phase;
}

CMatrix strip_global_phase(const CMatrix& m) {
    Eigen::Map<const CVector> flat(m.data(), m.size());
    Eigen::Index best = 0;
    double best_mod = -1.0;
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
        const double mod = std::abs(flat[i]);
        if (mod > best_mod + 1e-12) {
            best_mod = mod;
            best = i;
        }
    }
    if (best_mod <= 0.0) return m;
    const Complex phase = flat[best] / std::abs(flat[best]);
    return m / phase;
}

std::pair<CVector, CMatrix> unitary_eigensystem(const CMatrix& U, double tol) {
    if (!approx_unitary(U, tol)) {
        throw NotUnitary("unitary_eigensystem: input is not unitary within tolerance");
    }
    Eigen::ComplexEigenSolver<CMatrix> solver(U, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("unitary_eigensystem: eigensolver failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<EigenPhase> unitary_spectrum(const CMatrix& U, double gap, double tol) {
    const auto [values, vectors] = unitary_eigensystem(U, tol);
    const int d = static_cast<int>(values.size());

    std::vector<double> phases(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        double t = std::arg(values[i]);
        if (t < 0) t += kTwoPi;
        phases[static_cast<size_t>(i)] = t;
    }
    std::sort(phases.begin(), phases.end());

    // Cluster along the sorted circle; the wrap-around pair may merge too.
    std::vector<std::vector<double>> clusters;
    for (double t : phases) {
        if (!clusters.empty() && t - clusters.back().back() <= gap) {
            clusters.back().push_back(t);
        } else {
            clusters.push_back({t});
        }
    }
    if (clusters.size() > 1 && (clusters.front().front() + kTwoPi) - clusters.back().back() <= gap) {
        for (double t : clusters.back()) clusters.front().push_back(t - kTwoPi);
        clusters.pop_back();
    }

    std::vector<EigenPhase> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) {
        Complex sum{0.0, 0.0};
        for (double t : c) sum += std::polar(1.0, t);
        double rep = std::arg(sum);
        if (rep < 0) rep += kTwoPi;
        out.push_back({rep, static_cast<int>(c.size())});
    }
    std::sort(out.begin(), out.end(),
              [](const EigenPhase& a, const EigenPhase& b) { return a.phase < b.phase; });

    // Overall-phase normalization: put the first phase into [0, 2*pi/d).
    const double step = kTwoPi / d;
    const double shift = -step * std::floor(out.front().phase / step);
    if (shift != 0.0) {
        for (auto& e : out) {
            e.phase += shift;
            if (e.phase < 0) e.phase += kTwoPi;
            if (e.phase >= kTwoPi) e.phase -= kTwoPi;
        }
        std::sort(out.begin(), out.end(),
                  [](const EigenPhase& a, const EigenPhase& b) { return a.phase < b.phase; });
    }
    return out;
}

std::vector<int> spectrum_multiplicities(const CMatrix& U, double gap) {
    const auto spectrum = unitary_spectrum(U, gap);
    std::vector<int> mults;
    mults.reserve(spectrum.size());
    for (const auto& e : spectrum) mults.push_back(e.multiplicity);
    std::sort(mults.begin(), mults.end());
    return mults;
}

bool is_monomial(const CMatrix& U, double tol) {
    if (!approx_unitary(U, tol)) {
        throw NotUnitary("is_monomial: input is not unitary within tolerance");
    }
    for (Eigen::Index r = 0; r < U.rows(); ++r) {
        int nonzero = 0;
        for (Eigen::Index c = 0; c < U.cols(); ++c) {
            if (std::abs(U(r, c)) > 1e-9) ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    for (Eigen::Index c = 0; c < U.cols(); ++c) {
        int nonzero = 0;
        for (Eigen::Index r = 0; r < U.rows(); ++r) {
            if (std::abs(U(r, c)) > 1e-9) ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

} // namespace sicforge
