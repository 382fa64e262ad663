// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the ring of cyclotomic integers Z[zeta_l], realised as
// Z[x] modulo the l-th cyclotomic polynomial.  Elements are coordinate
// vectors in the power basis 1, zeta, ..., zeta^{phi(l)-1}, so integrality
// and exact divisibility tests are coordinate-wise.

#pragma once

#include "procesi/laurent.hpp"
#include "procesi/laurentqt.hpp"

#include <vector>

namespace procesi {

class CycInt {
  public:
    // The zero element of Z[zeta_ell].
    explicit CycInt(long ell);

    static CycInt integer(long ell, const Integer& n);
    // zeta_ell^k for any integer k (reduced mod ell).
    static CycInt zeta_power(long ell, long k);

    long order() const { return ell_; }
    long rank() const { return static_cast<long>(c_.size()); }
    const std::vector<Integer>& coords() const { return c_; }

    bool is_zero() const;
    // True when the element lies in Z (all higher basis coordinates vanish).
    bool is_integer() const;
    // The rational-integer value; throws NotDivisible when not an integer.
    Integer as_integer() const;

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    CycInt conj() const;

    // Coordinate-wise exact division by a nonzero integer.
    CycInt divide_exact(const Integer& m) const;

    friend CycInt operator+(const CycInt& x, const CycInt& y);
    friend CycInt operator-(const CycInt& x, const CycInt& y);
    friend CycInt operator-(const CycInt& x);
    friend CycInt operator*(const CycInt& x, const CycInt& y);
    CycInt& operator+=(const CycInt& y) { return *this = *this + y; }
    CycInt& operator-=(const CycInt& y) { return *this = *this - y; }
    CycInt& operator*=(const CycInt& y) { return *this = *this * y; }
    friend CycInt operator*(const CycInt& x, const Integer& n);
    friend bool operator==(const CycInt& x, const CycInt& y) {
        return x.ell_ == y.ell_ && x.c_ == y.c_;
    }
    friend bool operator!=(const CycInt& x, const CycInt& y) { return !(x == y); }

    std::string str() const;

  private:
    long ell_;
    std::vector<Integer> c_;  // length phi(ell_)
};

// f(zeta_ell^a): evaluate a univariate Laurent polynomial at a root of unity.
CycInt eval_at_roots(const LaurentQ& f, long ell, long a);

// f(zeta_ell^a, zeta_ell^b) for a bivariate Laurent polynomial.
CycInt eval_at_roots(const LaurentQT& f, long ell, long a, long b);

}  // namespace procesi
