// SPDX-License-Identifier: Apache-2.0

#include "procesi/laurent.hpp"

#include <mutex>

namespace procesi {

namespace {

// Make a polynomial out of a Laurent polynomial by dropping the q-power unit,
// then divide by the content and fix the sign of the leading coefficient.
LaurentQ primitive_part(const LaurentQ& f) {
    if (f.is_zero()) return {};
    Integer c = f.content();
    if (f.coeffs().back() < 0) c = -c;
    std::vector<Integer> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) cs.push_back(x / c);
    return LaurentQ::from_coeffs(std::move(cs), 0);
}

// Pseudo-remainder of a by b (both genuine polynomials, b nonzero).
LaurentQ pseudo_rem(LaurentQ a, const LaurentQ& b) {
    const long db = b.max_exp();
    const Integer lb = b.coeffs().back();
    while (!a.is_zero() && a.max_exp() >= db) {
        long k = a.max_exp() - db;
        Integer la = a.coeffs().back();
        a = a * LaurentQ(lb) - b * LaurentQ::monomial(la, k);
    }
    return a;
}

}  // namespace

LaurentQ laurent_gcd(LaurentQ a, LaurentQ b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        LaurentQ r = primitive_part(pseudo_rem(a, b));
        a = b;
        b = r;
    }
    if (a.is_zero()) return {};
    return a;
}

const LaurentQ& cyclotomic_poly(long ell) {
    if (ell < 1) throw std::invalid_argument("cyclotomic_poly: l >= 1 required");
    static std::map<long, LaurentQ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    // Fill the table bottom-up so every proper divisor is present:
    // x^k - 1 = prod_{d | k} Phi_d, hence Phi_k peels off the divisors.
    for (long k = 1; k <= ell; ++k) {
        if (ell % k != 0 || cache.count(k)) continue;
        LaurentQ f = LaurentQ::monomial(1, k) - LaurentQ(1);
        for (long d = 1; d < k; ++d)
            if (k % d == 0) f = exact_divide(f, cache.at(d));
        cache.emplace(k, std::move(f));
    }
    return cache.at(ell);
}

}  // namespace procesi
