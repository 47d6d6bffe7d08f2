#pragma once

#include <compare>

#include "sicforge/errors.hpp"

namespace sicforge {

// Exact arithmetic in Z_p for small primes. All residues live in [0, p).

bool is_prime(int n);

class PrimeModulus {
  public:
    explicit PrimeModulus(int p);
    int value() const { return p_; }
    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

  private:
    int p_;
};

class Residue {
  public:
    Residue(long long value, PrimeModulus m);
    int value() const { return v_; }
    int modulus() const { return p_; }

    Residue inverse() const; // throws ZeroInverse on 0

    friend Residue operator+(Residue a, Residue b);
    friend Residue operator-(Residue a, Residue b);
    friend Residue operator*(Residue a, Residue b);
    Residue operator-() const;
    friend bool operator==(Residue a, Residue b);
    friend auto operator<=>(Residue a, Residue b) = default;

  private:
    int v_;
    int p_;
};

Residue inverse(Residue a);
Residue primitive_element(PrimeModulus p);          // smallest generator of Z_p*
bool is_quadratic_residue(Residue a);               // throws ZeroInput on 0
int cube_class_count(PrimeModulus p);               // 1 if 3 does not divide p-1, else 3

// Low-level helpers on raw ints (moduli assumed prime, residues in [0,p)).
int mod_reduce(long long v, int p);
int mod_inv(int a, int p);                          // throws ZeroInverse on 0
int mod_pow(int a, long long e, int p);
int multiplicative_order(int a, int p);             // order in Z_p*, a != 0
int sqrt_mod(int a, int p);                         // smallest root, -1 if none

} // namespace sicforge
