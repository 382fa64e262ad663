// SPDX-License-Identifier: Apache-2.0

#include "procesi/cycint.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace procesi {

namespace {

// Per-order data: phi(ell) and the reductions of zeta^e (0 <= e < ell) to the
// power basis.  Products of basis elements have exponent < 2*phi(ell) - 1,
// which the multiplication routine reduces incrementally, so the table only
// needs single powers.
struct CycTable {
    long ell = 0;
    long deg = 0;                                // phi(ell)
    std::vector<Integer> phi_coeffs;             // Phi_ell minus its leading term
    std::vector<std::vector<Integer>> zeta_pow;  // zeta^e in the power basis
};

const CycTable& table_for(long ell) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycTable>> cache;
    if (ell < 1) throw std::invalid_argument("CycInt: order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it != cache.end()) return *it->second;

    auto tab = std::make_unique<CycTable>();
    tab->ell = ell;
    LaurentQ phi = cyclotomic_poly(ell);
    tab->deg = phi.max_exp();
    tab->phi_coeffs.assign(tab->deg, 0);
    for (long i = 0; i < tab->deg; ++i) tab->phi_coeffs[i] = phi.coeff(i);

    std::vector<Integer> cur(tab->deg, 0);
    cur[0] = 1;
    tab->zeta_pow.push_back(cur);
    for (long e = 1; e < ell; ++e) {
        // Multiply by x, then fold the overflow at x^deg back with
        // x^deg = -sum_i phi_coeffs[i] x^i (Phi_ell is monic).
        Integer top = cur[tab->deg - 1];
        for (long i = tab->deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < tab->deg; ++i) cur[i] -= top * tab->phi_coeffs[i];
        tab->zeta_pow.push_back(cur);
    }
    const CycTable& ref = *tab;
    cache.emplace(ell, std::move(tab));
    return ref;
}

}  // namespace

CycInt::CycInt(long ell) : ell_(ell), c_(table_for(ell).deg, 0) {}

CycInt CycInt::integer(long ell, const Integer& n) {
    CycInt x(ell);
    x.c_[0] = n;
    return x;
}

CycInt CycInt::zeta_power(long ell, long k) {
    const CycTable& tab = table_for(ell);
    long e = k % ell;
    if (e < 0) e += ell;
    CycInt x(ell);
    x.c_ = tab.zeta_pow[e];
    return x;
}

bool CycInt::is_zero() const {
    for (const Integer& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycInt::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Integer CycInt::as_integer() const {
    if (!is_integer()) throw NotDivisible("CycInt::as_integer: element not rational");
    return c_[0];
}

CycInt CycInt::conj() const {
    CycInt r(ell_);
    const CycTable& tab = table_for(ell_);
    for (long i = 0; i < rank(); ++i) {
        if (c_[i] == 0) continue;
        const std::vector<Integer>& b = tab.zeta_pow[(ell_ - i) % ell_];
        for (long j = 0; j < rank(); ++j) r.c_[j] += c_[i] * b[j];
    }
    return r;
}

CycInt CycInt::divide_exact(const Integer& m) const {
    if (m == 0) throw NotDivisible("CycInt::divide_exact: division by zero");
    CycInt r(ell_);
    for (long i = 0; i < rank(); ++i) r.c_[i] = exact_quotient(c_[i], m);
    return r;
}

CycInt operator+(const CycInt& x, const CycInt& y) {
    if (x.ell_ != y.ell_) throw std::invalid_argument("CycInt: mixed orders");
    CycInt r = x;
    for (long i = 0; i < r.rank(); ++i) r.c_[i] += y.c_[i];
    return r;
}

CycInt operator-(const CycInt& x, const CycInt& y) {
    if (x.ell_ != y.ell_) throw std::invalid_argument("CycInt: mixed orders");
    CycInt r = x;
    for (long i = 0; i < r.rank(); ++i) r.c_[i] -= y.c_[i];
    return r;
}

CycInt operator-(const CycInt& x) {
    CycInt r = x;
    for (Integer& v : r.c_) v = -v;
    return r;
}

CycInt operator*(const CycInt& x, const CycInt& y) {
    if (x.ell_ != y.ell_) throw std::invalid_argument("CycInt: mixed orders");
    const CycTable& tab = table_for(x.ell_);
    const long d = tab.deg;
    // Convolve, then fold exponents >= d down with the monic relation.
    std::vector<Integer> conv(2 * d - 1, 0);
    for (long i = 0; i < d; ++i) {
        if (x.c_[i] == 0) continue;
        for (long j = 0; j < d; ++j)
            if (y.c_[j] != 0) conv[i + j] += x.c_[i] * y.c_[j];
    }
    for (long e = 2 * d - 2; e >= d; --e) {
        Integer top = conv[e];
        if (top == 0) continue;
        conv[e] = 0;
        for (long i = 0; i < d; ++i) conv[e - d + i] -= top * tab.phi_coeffs[i];
    }
    CycInt r(x.ell_);
    for (long i = 0; i < d; ++i) r.c_[i] = conv[i];
    return r;
}

CycInt operator*(const CycInt& x, const Integer& n) {
    CycInt r = x;
    for (Integer& v : r.c_) v *= n;
    return r;
}

std::string CycInt::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rank(); ++i) os << (i ? "," : "") << c_[i];
    os << "] (order " << ell_ << ")";
    return os.str();
}

CycInt eval_at_roots(const LaurentQ& f, long ell, long a) {
    CycInt s(ell);
    if (f.is_zero()) return s;
    for (long e = f.min_exp(); e <= f.max_exp(); ++e) {
        Integer c = f.coeff(e);
        if (c != 0) s += CycInt::zeta_power(ell, a * e) * c;
    }
    return s;
}

CycInt eval_at_roots(const LaurentQT& f, long ell, long a, long b) {
    CycInt s(ell);
    for (const auto& [k, c] : f.terms()) s += CycInt::zeta_power(ell, a * k.first + b * k.second) * c;
    return s;
}

}  // namespace procesi
