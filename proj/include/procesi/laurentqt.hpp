// SPDX-License-Identifier: Apache-2.0
//
// Sparse bivariate Laurent polynomials in (q, t) with integer coefficients:
// the coefficient ring of the (q,t)-bigraded representation classes.  Keys
// are (q-exponent, t-exponent); zero coefficients are never stored.

#pragma once

#include "procesi/laurent.hpp"
#include "procesi/rationalq.hpp"

#include <map>
#include <utility>

namespace procesi {

class LaurentQT {
  public:
    using Key = std::pair<long, long>;  // (a, b) for q^a t^b

    LaurentQT() = default;
    LaurentQT(const Integer& c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)
    LaurentQT(long c) : LaurentQT(Integer(c)) {}   // NOLINT

    static LaurentQT monomial(const Integer& c, long a, long b) {
        LaurentQT f;
        f.add(a, b, c);
        return f;
    }
    static LaurentQT q() { return monomial(1, 1, 0); }
    static LaurentQT t() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Integer>& terms() const { return terms_; }
    Integer coeff(long a, long b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(long a, long b, const Integer& c) {
        if (c == 0) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) terms_.emplace(Key{a, b}, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_polynomial() const {
        for (const auto& [k, c] : terms_)
            if (k.first < 0 || k.second < 0) return false;
        return true;
    }
    bool has_nonnegative_coeffs() const {
        for (const auto& [k, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    friend LaurentQT operator+(const LaurentQT& x, const LaurentQT& y) {
        LaurentQT r = x;
        for (const auto& [k, c] : y.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend LaurentQT operator-(const LaurentQT& x) {
        LaurentQT r;
        for (const auto& [k, c] : x.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend LaurentQT operator-(const LaurentQT& x, const LaurentQT& y) { return x + (-y); }
    friend LaurentQT operator*(const LaurentQT& x, const LaurentQT& y) {
        LaurentQT r;
        for (const auto& [k1, c1] : x.terms_)
            for (const auto& [k2, c2] : y.terms_)
                r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    LaurentQT& operator+=(const LaurentQT& y) { return *this = *this + y; }
    LaurentQT& operator-=(const LaurentQT& y) { return *this = *this - y; }
    LaurentQT& operator*=(const LaurentQT& y) { return *this = *this * y; }

    friend bool operator==(const LaurentQT& x, const LaurentQT& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const LaurentQT& x, const LaurentQT& y) { return !(x == y); }
    friend bool operator<(const LaurentQT& x, const LaurentQT& y) {  // arbitrary total order
        return x.terms_ < y.terms_;
    }

    // Swap the roles of q and t (conjugation symmetry checks).
    LaurentQT swap_qt() const {
        LaurentQT r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
        return r;
    }

    // Substitute t = q^{-1}: q^a t^b -> q^{a-b}.
    LaurentQ specialize_t_q_inverse() const {
        LaurentQ r;
        for (const auto& [k, c] : terms_) r += LaurentQ::monomial(c, k.first - k.second);
        return r;
    }

    Integer eval_at_one_one() const {
        Integer s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    // The part with (a - b) == j (mod l), as an integer sum of coefficients:
    // each surviving monomial contributes its coefficient (the mu_l-isotypic
    // extraction forgets the grading).
    Integer component_sum_mod(long ell, long j) const {
        Integer s = 0;
        for (const auto& [k, c] : terms_) {
            long r = (k.first - k.second) % ell;
            if (r < 0) r += ell;
            if (r == j) s += c;
        }
        return s;
    }

    // Exact division: treat f and g as polynomials in t with LaurentQ
    // coefficients and long-divide, requiring every step exact.
    friend LaurentQT exact_divide(const LaurentQT& f, const LaurentQT& g);

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string term;
            Integer a = c < 0 ? Integer(-c) : c;
            std::string mono;
            if (k.first != 0) mono += "q" + (k.first == 1 ? "" : "^" + std::to_string(k.first));
            if (k.second != 0) {
                if (!mono.empty()) mono += "*";
                mono += "t" + (k.second == 1 ? "" : "^" + std::to_string(k.second));
            }
            if (mono.empty()) term = a.str();
            else if (a == 1) term = mono;
            else term = a.str() + "*" + mono;
            if (out.empty()) out = (c < 0 ? "-" : "") + term;
            else out += (c < 0 ? " - " : " + ") + term;
        }
        return out;
    }

  private:
    std::map<Key, Integer> terms_;
};

LaurentQT exact_divide(const LaurentQT& f, const LaurentQT& g);

}  // namespace procesi
