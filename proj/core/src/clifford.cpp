#include "sicforge/clifford.hpp"

#include <cmath>
#include <random>
#include <string>

#include "sicforge/parallel.hpp"

namespace sicforge {

CVector CliffordOp::apply(const CVector& psi) const {
    if (psi.size() != matrix.rows()) throw DimMismatch("CliffordOp::apply: dimension mismatch");
    if (antiunitary) return matrix * psi.conjugate();
    return matrix * psi;
}

CMatrix CliffordOp::conjugate_matrix(const CMatrix& a) const {
    if (antiunitary) return matrix * a.conjugate() * matrix.adjoint();
    return matrix * a * matrix.adjoint();
}

CliffordOp compose(const CliffordOp& g, const CliffordOp& h) {
    CliffordOp out;
    out.label = sicforge::compose(g.label, h.label);
    out.antiunitary = g.antiunitary != h.antiunitary;
    out.matrix = g.antiunitary ? CMatrix(g.matrix * h.matrix.conjugate())
                               : CMatrix(g.matrix * h.matrix);
    return out;
}

bool proj_equal_unitary(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimMismatch("proj_equal_unitary: shape mismatch");
    }
    const double d = static_cast<double>(a.rows());
    return std::abs((a.adjoint() * b).trace()) / d >= 1.0 - tol;
}

CliffordGroup::CliffordGroup(int p) : p_(p), hw_(p) {
    if (p == 2 || !is_prime(p)) {
        throw std::invalid_argument("CliffordGroup: requires an odd prime dimension");
    }
}

CMatrix CliffordGroup::v_matrix(const Mat2& f) const {
    if (f.p != p_) throw ModulusMismatch("v_matrix: modulus mismatch");
    if (f.det() != 1) throw std::invalid_argument("v_matrix: requires det(F) = +1");
    CMatrix v = CMatrix::Zero(p_, p_);
    if (f.b != 0) {
        const int binv = mod_inv(f.b, p_);
        const double scale = 1.0 / std::sqrt(static_cast<double>(p_));
        for (int r = 0; r < p_; ++r) {
            for (int s = 0; s < p_; ++s) {
                const long long quad = static_cast<long long>(f.a) * s % p_ * s -
                                       2LL * r * s +
                                       static_cast<long long>(f.d) * r % p_ * r;
                const int e = mod_reduce(static_cast<long long>(binv) * mod_reduce(quad, p_), p_);
                v(r, s) = scale * hw_.tau_power(e);
            }
        }
        return v;
    }
    // beta = 0: V_F = sum_s tau^(alpha gamma s^2) |e_(alpha s)><e_s|.
    for (int s = 0; s < p_; ++s) {
        const long long e = static_cast<long long>(f.a) * f.c % p_ * s % p_ * s;
        v(mod_reduce(static_cast<long long>(f.a) * s, p_), s) = hw_.tau_power(mod_reduce(e, p_));
    }
    return v;
}

CliffordOp CliffordGroup::synthesize(const AffineSymplectic& label, bool verify) const {
    if (label.modulus() != p_) throw ModulusMismatch("synthesize: modulus mismatch");
    CliffordOp op;
    op.label = label;
    op.antiunitary = label.F.det() == p_ - 1;

    // det(F) = -1 factors as (F, chi) = (FJ, chi) o (J, 0) with [J,0] the
    // complex conjugation operator.
    const Mat2 j{1, 0, 0, p_ - 1, p_};
    const Mat2 unitary_part = op.antiunitary ? label.F * j : label.F;
    op.matrix = hw_.displacement({label.chi.x, label.chi.y}) * v_matrix(unitary_part);

    if (verify) {
        const double dev = conjugation_law_deviation(op);
        if (dev > 1e-8) {
            throw SynthesisCheckFailed("synthesize: conjugation law deviation " +
                                       std::to_string(dev));
        }
    }
    return op;
}

double CliffordGroup::conjugation_law_deviation(const CliffordOp& op) const {
    double dev = 0.0;
    for (int k1 = 0; k1 < p_; ++k1) {
        for (int k2 = 0; k2 < p_; ++k2) {
            const Vec2 fk = mat_apply(op.label.F, {k1, k2});
            // <chi, Fk> = chi2 (Fk)_1 - chi1 (Fk)_2
            const long long e = static_cast<long long>(op.label.chi.y) * fk.x -
                                static_cast<long long>(op.label.chi.x) * fk.y;
            const CMatrix rhs =
                hw_.omega_power(e) * hw_.displacement({fk.x, fk.y});
            const CMatrix lhs = op.conjugate_matrix(hw_.displacement({k1, k2}));
            dev = std::max(dev, max_abs(lhs - rhs));
        }
    }
    return dev;
}

std::vector<CliffordOp> CliffordGroup::enumerate(bool extended, long long cap) const {
    const auto labels = enumerate_group(PrimeModulus(p_),
                                        extended ? GroupKind::ESLAffine : GroupKind::SLAffine,
                                        cap);
    std::vector<CliffordOp> ops(labels.size());
    parallel_for(labels.size(),
                 [&](size_t i) { ops[i] = synthesize(labels[i], /*verify=*/false); });

    // Spot-check closure and the homomorphism property.
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<size_t> pick(0, ops.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const CliffordOp& g = ops[pick(rng)];
        const CliffordOp& h = ops[pick(rng)];
        const CliffordOp gh = sicforge::compose(g, h);
        const CliffordOp direct = synthesize(gh.label, /*verify=*/false);
        if (!proj_equal_unitary(gh.matrix, direct.matrix) ||
            gh.antiunitary != direct.antiunitary) {
            throw SynthesisCheckFailed("enumerate: composition spot-check failed");
        }
    }
    return ops;
}

std::map<ConjClassLabel, std::vector<int>> CliffordGroup::spectrum_census() const {
    std::vector<ConjClassLabel> labels{{ClassFamily::One, 0},
                                       {ClassFamily::Translation, 0},
                                       {ClassFamily::Z, 0},
                                       {ClassFamily::C1, 0},
                                       {ClassFamily::C2, 0},
                                       {ClassFamily::ZC1, 0},
                                       {ClassFamily::ZC2, 0}};
    for (int l = 1; l <= (p_ - 3) / 2; ++l) labels.push_back({ClassFamily::A, l});
    for (int m = 1; m <= (p_ - 1) / 2; ++m) labels.push_back({ClassFamily::B, m});
    for (int k = 1; k <= (p_ - 1) / 2; ++k) {
        labels.push_back({ClassFamily::C1K, k});
        labels.push_back({ClassFamily::C2K, k});
    }

    std::map<ConjClassLabel, std::vector<int>> census;
    for (const auto& label : labels) {
        const auto rep = class_representative(PrimeModulus(p_), label);
        const CliffordOp op = synthesize(rep);
        census[label] = spectrum_multiplicities(op.matrix);
    }
    return census;
}

std::vector<CliffordOp> qubit_clifford_group(bool extended) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CMatrix h(2, 2), s(2, 2);
    h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    s << 1, 0, 0, Complex{0, 1};

    std::vector<CMatrix> elements{CMatrix::Identity(2, 2)};
    std::vector<CMatrix> frontier = elements;
    const std::vector<CMatrix> gens{h, s};
    auto known = [&](const CMatrix& m) {
        for (const auto& e : elements) {
            if (proj_equal_unitary(e, m)) return true;
        }
        return false;
    };
    while (!frontier.empty()) {
        std::vector<CMatrix> next;
        for (const auto& f : frontier) {
            for (const auto& g : gens) {
                CMatrix m = f * g;
                if (!known(m)) {
                    elements.push_back(m);
                    next.push_back(std::move(m));
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<CliffordOp> ops;
    ops.reserve(elements.size() * (extended ? 2 : 1));
    for (const auto& m : elements) {
        ops.push_back({AffineSymplectic::identity(2), false, m});
    }
    if (extended) {
        for (const auto& m : elements) {
            ops.push_back({AffineSymplectic::identity(2), true, m});
        }
    }
    return ops;
}

} // namespace sicforge
