// SPDX-License-Identifier: Apache-2.0
//
// Rational functions in q with integer Laurent-polynomial numerator and
// denominator, kept in canonical reduced form: the denominator is a genuine
// polynomial with nonzero positive constant term, content 1, and coprime to
// the numerator's polynomial part.  Equality is then plain field comparison.

#pragma once

#include "procesi/laurent.hpp"

namespace procesi {

class RationalQ {
  public:
    RationalQ() = default;
    RationalQ(const LaurentQ& num) : num_(num) {}  // NOLINT(google-explicit-constructor)
    RationalQ(const Integer& c) : num_(c) {}       // NOLINT
    RationalQ(long c) : num_(Integer(c)) {}        // NOLINT
    RationalQ(LaurentQ num, LaurentQ den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentQ(1); }
    const LaurentQ& as_laurent() const {
        if (!is_laurent()) throw NotDivisible("RationalQ: not a Laurent polynomial: " + str());
        return num_;
    }

    friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
        return RationalQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalQ operator-(const RationalQ& a) {
        RationalQ r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalQ operator-(const RationalQ& a, const RationalQ& b) { return a + (-b); }
    friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
        return RationalQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalQ operator/(const RationalQ& a, const RationalQ& b) {
        if (b.is_zero()) throw NotDivisible("RationalQ: division by zero");
        return RationalQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalQ& operator+=(const RationalQ& b) { return *this = *this + b; }
    RationalQ& operator-=(const RationalQ& b) { return *this = *this - b; }
    RationalQ& operator*=(const RationalQ& b) { return *this = *this * b; }
    RationalQ& operator/=(const RationalQ& b) { return *this = *this / b; }

    friend bool operator==(const RationalQ& a, const RationalQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalQ& a, const RationalQ& b) { return !(a == b); }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw NotDivisible("RationalQ: zero denominator");
        if (num_.is_zero()) { den_ = LaurentQ(1); return; }
        // Strip q-power units from the denominator into the numerator side.
        long shift = den_.min_exp();
        den_ = exact_divide(den_, LaurentQ::monomial(1, shift));
        num_ = num_ * LaurentQ::monomial(1, -shift);
        // Cancel the polynomial gcd (sign- and unit-normalized already).
        LaurentQ g = laurent_gcd(num_, den_);
        if (g != LaurentQ(1)) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        // Cancel integer content between the two, then fix the sign so the
        // denominator's constant term is positive.
        Integer cn = num_.content(), cd = den_.content();
        Integer c = boost::multiprecision::gcd(cn, cd);
        if (c > 1) {
            num_ = exact_divide(num_, LaurentQ(c));
            den_ = exact_divide(den_, LaurentQ(c));
        }
        if (den_.coeff(den_.min_exp()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    LaurentQ num_;               // any Laurent polynomial
    LaurentQ den_ = LaurentQ(1);  // polynomial, constant term > 0, primitive wrt num
};

}  // namespace procesi
