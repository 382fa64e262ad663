// SPDX-License-Identifier: Apache-2.0
//
// Univariate Laurent polynomials in q over the integers, stored densely with
// an exponent offset.  Supplies exact division (long division with remainder
// check), polynomial gcd (primitive PRS), and the cyclotomic polynomials
// Phi_l obtained by iterated exact division of x^l - 1.

#pragma once

#include "procesi/numbers.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace procesi {

class LaurentQ {
  public:
    LaurentQ() = default;
    LaurentQ(const Integer& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) { off_ = 0; c_ = {c}; }
    }
    LaurentQ(long c) : LaurentQ(Integer(c)) {}  // NOLINT

    // c * q^e
    static LaurentQ monomial(const Integer& c, long e) {
        LaurentQ f;
        if (c != 0) { f.off_ = e; f.c_ = {c}; }
        return f;
    }
    // Polynomial from coefficient list c0 + c1 q + ...
    static LaurentQ from_coeffs(std::vector<Integer> cs, long offset = 0) {
        LaurentQ f;
        f.off_ = offset;
        f.c_ = std::move(cs);
        f.normalize();
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    long min_exp() const { return off_; }                       // requires nonzero
    long max_exp() const { return off_ + (long)c_.size() - 1; }  // requires nonzero
    bool is_polynomial() const { return c_.empty() || off_ >= 0; }

    Integer coeff(long e) const {
        if (c_.empty() || e < off_ || e > max_exp()) return 0;
        return c_[(size_t)(e - off_)];
    }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& c : c_) s += c;
        return s;
    }

    // q -> q^k for k = +-1 (k = -1 reverses the coefficient window).
    LaurentQ substitute_q_power(long k) const {
        if (is_zero()) return {};
        LaurentQ r;
        if (k == 1) return *this;
        if (k == -1) {
            r.c_.assign(c_.rbegin(), c_.rend());
            r.off_ = -max_exp();
            r.normalize();
            return r;
        }
        // General stretch q -> q^k, k >= 1 (used for 1 - q^k style factors).
        if (k < 1) throw std::invalid_argument("substitute_q_power: bad k");
        r.c_.assign((size_t)((c_.size() - 1) * k + 1), 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i * (size_t)k] = c_[i];
        r.off_ = off_ * k;
        r.normalize();
        return r;
    }

    friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.off_, b.off_);
        long hi = std::max(a.max_exp(), b.max_exp());
        LaurentQ r;
        r.off_ = lo;
        r.c_.assign((size_t)(hi - lo + 1), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[(size_t)(a.off_ - lo) + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[(size_t)(b.off_ - lo) + i] += b.c_[i];
        r.normalize();
        return r;
    }
    friend LaurentQ operator-(const LaurentQ& a) {
        LaurentQ r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return a + (-b); }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentQ r;
        r.off_ = a.off_ + b.off_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.normalize();
        return r;
    }
    LaurentQ& operator+=(const LaurentQ& b) { return *this = *this + b; }
    LaurentQ& operator-=(const LaurentQ& b) { return *this = *this - b; }
    LaurentQ& operator*=(const LaurentQ& b) { return *this = *this * b; }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
        return a.off_ == b.off_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }
    friend bool operator<(const LaurentQ& a, const LaurentQ& b) {  // arbitrary total order
        if (a.off_ != b.off_) return a.off_ < b.off_;
        return a.c_ < b.c_;
    }

    // Exact division in Z[q, q^-1]; throws NotDivisible when g does not divide.
    friend LaurentQ exact_divide(const LaurentQ& f, const LaurentQ& g) {
        if (g.is_zero()) throw NotDivisible("exact_divide: zero divisor");
        if (f.is_zero()) return {};
        // Work on the dense windows; the q-power offsets divide freely.
        std::vector<Integer> rem = f.c_;
        const std::vector<Integer>& d = g.c_;
        if (rem.size() < d.size()) throw NotDivisible("exact_divide: degree too small");
        std::vector<Integer> quot(rem.size() - d.size() + 1, 0);
        for (size_t k = quot.size(); k-- > 0;) {
            const Integer& lead = rem[k + d.size() - 1];
            if (lead == 0) continue;
            Integer c = lead / d.back();
            if (c * d.back() != lead) throw NotDivisible("exact_divide: leading coefficient");
            quot[k] = c;
            for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= c * d[i];
        }
        for (const auto& c : rem)
            if (c != 0) throw NotDivisible("exact_divide: remainder nonzero");
        LaurentQ h;
        h.off_ = f.off_ - g.off_;
        h.c_ = std::move(quot);
        h.normalize();
        return h;
    }

    // Content = gcd of coefficients, nonnegative.
    Integer content() const {
        Integer g = 0;
        for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
        return g;
    }

    const std::vector<Integer>& coeffs() const { return c_; }

    std::string str(const std::string& var = "q") const;

  private:
    void normalize() {
        size_t lo = 0, hi = c_.size();
        while (hi > lo && c_[hi - 1] == 0) --hi;
        while (lo < hi && c_[lo] == 0) ++lo;
        if (lo == hi) { c_.clear(); off_ = 0; return; }
        if (lo > 0 || hi < c_.size()) {
            c_ = std::vector<Integer>(c_.begin() + (long)lo, c_.begin() + (long)hi);
            off_ += (long)lo;
        }
    }

    long off_ = 0;              // exponent of c_[0]
    std::vector<Integer> c_;    // empty <=> zero; ends nonzero
};

inline LaurentQ one_minus_qk(long k) {
    return LaurentQ(1) - LaurentQ::monomial(1, k);
}

// gcd of Laurent polynomials, normalized primitive with positive leading
// coefficient; q-power units are dropped (result is a genuine polynomial with
// nonzero constant term).  Primitive PRS keeps the coefficients integral.
LaurentQ laurent_gcd(LaurentQ a, LaurentQ b);

// The l-th cyclotomic polynomial (cached, thread-safe).
const LaurentQ& cyclotomic_poly(long ell);

inline std::string LaurentQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = min_exp(); e <= max_exp(); ++e) {
        Integer c = coeff(e);
        if (c == 0) continue;
        std::string term;
        Integer a = c < 0 ? Integer(-c) : c;
        if (e == 0) term = a.str();
        else {
            if (a != 1) term = a.str() + "*";
            term += var;
            if (e != 1) term += "^" + std::to_string(e);
        }
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace procesi
