// SPDX-License-Identifier: Apache-2.0

#include "procesi/laurentqt.hpp"

#include <map>

namespace procesi {

namespace {

// View a bivariate Laurent polynomial as a polynomial in t whose coefficients
// are univariate Laurent polynomials in q.
std::map<long, LaurentQ> t_layers(const LaurentQT& f) {
    std::map<long, LaurentQ> layers;
    for (const auto& [k, c] : f.terms()) layers[k.second] += LaurentQ::monomial(c, k.first);
    for (auto it = layers.begin(); it != layers.end();)
        it = it->second.is_zero() ? layers.erase(it) : std::next(it);
    return layers;
}

}  // namespace

LaurentQT exact_divide(const LaurentQT& f, const LaurentQT& g) {
    if (g.is_zero()) throw NotDivisible("exact_divide: division by zero");
    if (f.is_zero()) return LaurentQT();

    auto gl = t_layers(g);
    const long g_max_t = gl.rbegin()->first;
    const long g_min_t = gl.begin()->first;
    const LaurentQ& g_top = gl.rbegin()->second;

    auto fl = t_layers(f);
    const long quot_min_t = fl.begin()->first - g_min_t;

    LaurentQT quot;
    std::map<long, LaurentQ> rem = fl;
    while (!rem.empty()) {
        const long dt = rem.rbegin()->first - g_max_t;
        // If g divides f, the quotient's t-exponents are bounded below by
        // min_t(f) - min_t(g) (the trailing coefficients multiply in the
        // integral domain of univariate Laurent polynomials).
        if (dt < quot_min_t) throw NotDivisible("exact_divide: not divisible (t-degree)");
        LaurentQ u = exact_divide(rem.rbegin()->second, g_top);  // may throw
        for (const auto& [e, c] : gl) {
            auto it = rem.find(e + dt);
            LaurentQ upd = (it == rem.end() ? LaurentQ() : it->second) - u * c;
            if (upd.is_zero()) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[e + dt] = std::move(upd);
            }
        }
        for (long a = u.min_exp(); a <= u.max_exp(); ++a)
            if (u.coeff(a) != 0) quot.add(a, dt, u.coeff(a));
    }
    return quot;
}

}  // namespace procesi
