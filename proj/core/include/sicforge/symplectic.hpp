#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sicforge/zmod.hpp"

namespace sicforge {

// Elements and group algebra of SL(2,p), ESL(2,p) and their semidirect
// products with (Z_p)^2 under (F1,x1)o(F2,x2) = (F1 F2, x1 + F1 x2).
// Everything here is exact integer arithmetic; no floating point.

struct Mat2 {
    // Row-major entries ((a b) (c d)), each in [0, p).
    int a, b, c, d;
    int p;

    static Mat2 identity(int p);
    static Mat2 from_entries(int a, int b, int c, int d, int p); // checks det = +-1

    int det() const;                 // in [0, p)
    int trace() const;               // in [0, p)
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;
    Mat2 negated() const;

    friend bool operator==(const Mat2& x, const Mat2& y) = default;
    friend auto operator<=>(const Mat2& x, const Mat2& y) = default;
};

struct Vec2 {
    int x, y;
    friend bool operator==(const Vec2& u, const Vec2& v) = default;
    friend auto operator<=>(const Vec2& u, const Vec2& v) = default;
};

Vec2 mat_apply(const Mat2& F, const Vec2& v);

struct AffineSymplectic {
    Mat2 F;
    Vec2 chi;

    static AffineSymplectic identity(int p);

    int modulus() const { return F.p; }
    AffineSymplectic inverse() const;
    bool is_identity() const;
    int order() const;

    friend bool operator==(const AffineSymplectic& g, const AffineSymplectic& h) = default;
    friend auto operator<=>(const AffineSymplectic& g, const AffineSymplectic& h) = default;
};

AffineSymplectic compose(const AffineSymplectic& g, const AffineSymplectic& h);
AffineSymplectic conjugate(const AffineSymplectic& x, const AffineSymplectic& g); // x g x^-1

enum class GroupKind { SL, ESL, SLAffine, ESLAffine };

long long group_order(int p, GroupKind kind);

// Complete duplicate-free enumeration; throws TooLarge above the cap.
std::vector<AffineSymplectic> enumerate_group(PrimeModulus p, GroupKind kind,
                                              long long cap = 1'000'000);

// --- Conjugacy classification (Humphreys labels) ---------------------------

enum class ClassFamily : int {
    One,         // identity
    Z,           // -1
    A,           // diag(nu^l, nu^-l), 1 <= l <= (p-3)/2
    B,           // order-(p+1) torus powers b^m, 1 <= m <= (p-1)/2
    C1,          // unipotent, square parameter
    C2,          // unipotent, nonsquare parameter
    ZC1,
    ZC2,
    Translation, // (1, chi), chi != 0
    C1K,         // (c1, (k,0)), 1 <= k <= (p-1)/2
    C2K,
};

struct ConjClassLabel {
    ClassFamily family;
    int index = 0; // l, m or k1 where applicable, otherwise 0

    std::string str() const;
    friend bool operator==(const ConjClassLabel&, const ConjClassLabel&) = default;
    friend auto operator<=>(const ConjClassLabel&, const ConjClassLabel&) = default;
};

// Labels such that two elements of SL(2,p) x (Z_p)^2 share a label iff they
// are conjugate. Requires det(F) = +1.
ConjClassLabel classify(const AffineSymplectic& g);

// Canonical representative of a class, matching the published tables with
// nu = primitive_element(p) and b = the lexicographically first element of
// order p+1.
AffineSymplectic class_representative(PrimeModulus p, const ConjClassLabel& label);

struct ClassInfo {
    int element_order;
    long long size;
};

// Census over SL or SLAffine (the kinds with published class data).
std::map<ConjClassLabel, ClassInfo> class_census(PrimeModulus p, GroupKind kind,
                                                 long long cap = 1'000'000);

// Brute-force conjugacy partition: returns one vector of elements per class.
// This is the oracle path; classify() is the closed-form path.
std::vector<std::vector<AffineSymplectic>>
brute_force_classes(const std::vector<AffineSymplectic>& group);

// --- Sylow p-subgroups and normalizers in SL(2,p) ---------------------------

using Subgroup = std::vector<AffineSymplectic>; // sorted, duplicate-free

Subgroup sylow_Q(PrimeModulus p, int j);        // j in [1, p+1], Q_1 lower unipotent
Subgroup normalizer_N(PrimeModulus p, int j);   // normalizer of Q_j, order p(p-1)
bool is_cyclic(const Subgroup& g);
bool is_subgroup_of(const Subgroup& sub, const Subgroup& super);

Subgroup closure(std::vector<AffineSymplectic> generators, long long cap = 1'000'000);
Subgroup intersect(const Subgroup& g, const Subgroup& h);
bool normalizes(const AffineSymplectic& x, const Subgroup& s);

} // namespace sicforge
