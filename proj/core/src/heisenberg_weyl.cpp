#include "sicforge/heisenberg_weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sicforge {

namespace {
constexpr double kPi = std::numbers::pi;
}

HWGroup::HWGroup(int d) : d_(d) {
    PrimeModulus check(d); // validates primality
    table_.reserve(static_cast<size_t>(d) * d);
    for (int k1 = 0; k1 < d; ++k1) {
        for (int k2 = 0; k2 < d; ++k2) {
            CMatrix m = CMatrix::Zero(d, d);
            const Complex front = tau_power(static_cast<long long>(k1) * k2);
            for (int s = 0; s < d; ++s) {
                // D_k |e_s> = tau^(k1 k2) omega^(k2 s) |e_(s+k1)>
                m((s + k1) % d, s) = front * omega_power(static_cast<long long>(k2) * s);
            }
            table_.push_back(std::move(m));
        }
    }
}

Complex HWGroup::omega_power(long long e) const {
    const int r = mod_reduce(e, d_);
    return std::polar(1.0, 2.0 * kPi * r / d_);
}

Complex HWGroup::tau_power(long long e) const {
    const int r = mod_reduce(e, 2 * d_);
    return std::polar(1.0, kPi * (d_ + 1) * static_cast<double>(r) / d_);
}

const CMatrix& HWGroup::displacement(DisplacementIndex k) const {
    const int k1 = mod_reduce(k.k1, d_);
    const int k2 = mod_reduce(k.k2, d_);
    return table_[static_cast<size_t>(k1) * d_ + k2];
}

std::pair<int, DisplacementIndex> HWGroup::displacement_product(DisplacementIndex k,
                                                                DisplacementIndex q) const {
    const int k1 = mod_reduce(k.k1, d_), k2 = mod_reduce(k.k2, d_);
    const int q1 = mod_reduce(q.k1, d_), q2 = mod_reduce(q.k2, d_);
    const DisplacementIndex m{(k1 + q1) % d_, (k2 + q2) % d_};
    const long long e = static_cast<long long>(k1) * k2 + static_cast<long long>(q1) * q2 +
                        2LL * k2 * q1 - static_cast<long long>(m.k1) * m.k2;
    return {mod_reduce(e, 2 * d_), m};
}

std::pair<bool, double> HWGroup::is_fiducial(const CVector& psi, double tol) const {
    if (psi.size() != d_) throw DimMismatch("is_fiducial: vector dimension mismatch");
    const double target = 1.0 / (d_ + 1);
    double dev = 0.0;
    for (int k1 = 0; k1 < d_; ++k1) {
        for (int k2 = 0; k2 < d_; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            const Complex overlap = psi.dot(displacement({k1, k2}) * psi);
            dev = std::max(dev, std::abs(std::norm(overlap) - target));
        }
    }
    return {dev <= tol, dev};
}

std::vector<CVector> HWGroup::sic_from_fiducial(const CVector& psi, double tol) const {
    const auto [ok, dev] = is_fiducial(psi, tol);
    if (!ok) {
        throw NotFiducial("sic_from_fiducial: fiducial deviation " + std::to_string(dev));
    }
    std::vector<CVector> vectors;
    vectors.reserve(static_cast<size_t>(d_) * d_);
    for (int k1 = 0; k1 < d_; ++k1) {
        for (int k2 = 0; k2 < d_; ++k2) {
            vectors.push_back(displacement({k1, k2}) * psi);
        }
    }
    return vectors;
}

std::vector<CMatrix> HWGroup::unimodular_qubit_elements() {
    const Complex i{0.0, 1.0};
    CMatrix I = CMatrix::Identity(2, 2);
    CMatrix X(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    const CMatrix XZ = X * Z;
    return {I, -I, i * X, -i * X, i * Z, -i * Z, XZ, -XZ};
}

} // namespace sicforge
