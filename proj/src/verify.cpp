// SPDX-License-Identifier: Apache-2.0

#include "procesi/verify.hpp"

#include "procesi/characters.hpp"
#include "procesi/cycint.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace procesi {

namespace {

long mod_pos(long a, long m) { return ((a % m) + m) % m; }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string sym_str(const SymFunc<Integer>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : f.terms()) {
        if (!first) out << " + ";
        first = false;
        out << c.str() << "*s" << mu.str();
    }
    return out.str();
}

// First differing Schur coefficient plus full dumps of both expansions;
// empty when equal.
std::string coeff_diff(const SymFunc<Integer>& lhs, const SymFunc<Integer>& rhs) {
    if (lhs == rhs) return "";
    std::set<Partition> keys;
    for (const auto& [mu, c] : lhs.terms()) keys.insert(mu);
    for (const auto& [mu, c] : rhs.terms()) keys.insert(mu);
    for (const Partition& mu : keys) {
        Integer a = lhs.coeff(mu);
        Integer b = rhs.coeff(mu);
        if (a != b) {
            std::ostringstream out;
            out << "coefficient of s" << mu.str() << ": lhs=" << a.str() << " rhs=" << b.str()
                << "; lhs = " << sym_str(lhs) << "; rhs = " << sym_str(rhs);
            return out.str();
        }
    }
    return "";  // unreachable: unequal maps must differ at some key
}

std::string module_diff(const std::vector<SymFunc<Integer>>& lhs,
                        const std::vector<SymFunc<Integer>>& rhs) {
    if (lhs.size() != rhs.size())
        return "component counts differ: " + std::to_string(lhs.size()) + " vs " +
               std::to_string(rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        std::string d = coeff_diff(lhs[i], rhs[i]);
        if (!d.empty()) return "component " + std::to_string(i) + ", " + d;
    }
    return "";
}

// Pipeline cross-check run before any verification: the weight components
// of the fiber over the single row (ell) must match the inductions of the
// theta powers from the full ell-cycle, computed through the character
// machinery alone.  A mismatch means one of the two towers is broken, so
// the verifier refuses to produce reports.  Memoized per ell.
void run_gate(long ell) {
    if (ell < 1) throw std::invalid_argument("verify: modulus must be >= 1");
    static std::mutex gate_mutex;
    static std::set<long> passed;
    {
        std::lock_guard<std::mutex> lock(gate_mutex);
        if (passed.count(ell)) return;
    }
    ModLComponents base = mod_l_components(macdonald_fiber(Partition(std::vector<long>{ell})), ell);
    CyclicSubgroupSpec spec(ell, ell, 0);
    for (long i = 0; i < ell; ++i) {
        SymFunc<Integer> ind = to_integer(powersum_to_schur(frobenius(induce_from_cyclic(spec, i))));
        if (base.components[i] != ind)
            throw std::logic_error("verifier refuses to run: base instance at modulus " +
                                   std::to_string(ell) +
                                   " disagrees with cyclic induction at weight " +
                                   std::to_string(i));
    }
    std::lock_guard<std::mutex> lock(gate_mutex);
    passed.insert(ell);
}

std::vector<SymFunc<Rational>> rational_components(const std::vector<SymFunc<Integer>>& comps) {
    std::vector<SymFunc<Rational>> out;
    out.reserve(comps.size());
    for (const auto& f : comps) out.push_back(to_rational(f));
    return out;
}

// p_1^n in the Schur basis: one copy of s_mu per standard tableau.
SymFunc<Integer> regular_schur(long n) {
    SymFunc<Integer> out(n, Basis::schur);
    for (const Partition& mu : partitions_of(n)) out.add_term(mu, mu.dimension());
    return out;
}

SymFunc<Integer> half_exact(const SymFunc<Integer>& f, const std::string& what) {
    SymFunc<Integer> out(f.degree(), Basis::schur);
    for (const auto& [mu, c] : f.terms()) {
        if (c % 2 != 0)
            throw std::logic_error(what + ": odd coefficient " + c.str() + " at s" + mu.str());
        out.add_term(mu, c / 2);
    }
    return out;
}

// Mod-ell weight components of a q-graded Schur expansion (weight = degree
// mod ell; no t variable in sight).
std::vector<SymFunc<Integer>> graded_components(const SymFunc<LaurentQ>& f, long ell) {
    std::vector<SymFunc<Integer>> out(static_cast<std::size_t>(ell),
                                      SymFunc<Integer>(f.degree(), Basis::schur));
    for (const auto& [mu, c] : f.terms())
        for (long e = c.min_exp(); e <= c.max_exp(); ++e) {
            Integer a = c.coeff(e);
            if (a != 0) out[mod_pos(e, ell)].add_term(mu, a);
        }
    return out;
}

// Multiplicity of theta^j, j in [0, order), in the restriction of
// V_lambda to the cyclic subgroup, by the exact inner-product formula.
std::vector<Integer> cyclic_restriction(const Partition& lambda, const CyclicSubgroupSpec& spec) {
    long ord = spec.order();
    std::vector<Integer> values;
    values.reserve(ord);
    for (long k = 0; k < ord; ++k)
        values.push_back(character_value(lambda, power_cycle_type(spec, k)));
    std::vector<Integer> out;
    out.reserve(ord);
    for (long j = 0; j < ord; ++j) {
        CycInt acc(ord);
        for (long k = 0; k < ord; ++k)
            acc += CycInt::integer(ord, values[k]) * CycInt::zeta_power(ord, -j * k);
        out.push_back(acc.divide_exact(ord).as_integer());
    }
    return out;
}

// Fake-degree coefficients folded mod m: entry k = sum of [q^e] F over
// e = k (mod m).
std::vector<Integer> fake_degree_vector(const Partition& lambda, long m) {
    std::vector<Integer> out(static_cast<std::size_t>(m), Integer(0));
    LaurentQ f = fake_degree(lambda);
    for (long e = f.min_exp(); e <= f.max_exp(); ++e) out[mod_pos(e, m)] += f.coeff(e);
    return out;
}

// The small-core derivation: fake-degree nonvanishing at every ell-th root
// of unity, the cyclic restriction [Res V_lambda] = [F_lambda(theta^{-1})],
// and the fiber components being outright inductions of theta powers.
std::string small_core_check(const Partition& lambda, long ell, const CoreQuotientData& cq) {
    for (long k = 0; k < ell; ++k)
        if (eval_at_roots(fake_degree(lambda), ell, k).is_zero())
            return "fake degree vanishes at root " + std::to_string(k);
    CyclicSubgroupSpec spec(lambda.size(), ell, cq.g);
    long ord = spec.order();
    std::vector<Integer> mult = cyclic_restriction(lambda, spec);
    std::vector<Integer> fvec = fake_degree_vector(lambda, ord);
    for (long j = 0; j < ord; ++j) {
        const Integer& expect = fvec[mod_pos(-j, ord)];
        if (mult[j] != expect)
            return "restriction multiplicity of theta^" + std::to_string(j) + " is " +
                   mult[j].str() + " but the fake degree gives " + expect.str();
    }
    if (cq.r == 0) return "";  // the cyclic part is trivial: nothing to induce
    SnMuModule lhs = typeA_lhs(lambda, ell);
    for (long i = 0; i < ell; ++i) {
        SymFunc<Integer> ind = to_integer(powersum_to_schur(frobenius(induce_from_cyclic(spec, i))));
        std::string d = coeff_diff(lhs.components[i], ind);
        if (!d.empty()) return "weight " + std::to_string(i) + ", " + d;
    }
    return "";
}

// Graded-coinvariant induction instance for core size g: the mod-ell
// components of the S_n coinvariant algebra against induction of the S_g
// coinvariant components through S_g x C.
std::string coinvariant_induction_check(long n, long ell, long g) {
    if (g == n) return "";  // trivial quotient: no content
    std::vector<SymFunc<Integer>> lhs = graded_components(coinvariant_graded_frobenius(n), ell);
    std::vector<SymFunc<Rational>> core =
        rational_components(graded_components(coinvariant_graded_frobenius(g), ell));
    CyclicSubgroupSpec spec(n, ell, g);
    for (long i = 0; i < ell; ++i) {
        SymFunc<Rational> acc(n, Basis::schur);
        for (long j = 0; j < ell; ++j) {
            if (core[j].is_zero()) continue;
            acc = acc + induce_product_with_cyclic(core[j], mod_pos(i - j, ell), spec);
        }
        std::string d = coeff_diff(lhs[i], to_integer(acc));
        if (!d.empty()) return "weight " + std::to_string(i) + ", " + d;
    }
    return "";
}

// Away from the core the restriction coefficients do not depend on the
// theta power (prime modulus).
std::string j_independence_check(const Partition& lambda, long ell, const CoreQuotientData& cq) {
    auto coeffs = restriction_coeffs(lambda, ell, cq.g);
    for (const auto& [mu, a] : coeffs) {
        if (mu == cq.core) continue;
        for (std::size_t j = 1; j < a.size(); ++j)
            if (a[j] != a[0])
                return "a[" + mu.str() + "," + std::to_string(j) + "]=" + a[j].str() +
                       " differs from a[" + mu.str() + ",0]=" + a[0].str();
    }
    return "";
}

// Fake-degree recursion through the core: F_lambda(tau) =
// sum_{mu,j} a_{mu,j} F_mu(tau) tau^{-j} as mod-ell coefficient vectors.
std::string fake_degree_recursion_check(const Partition& lambda, long ell,
                                        const CoreQuotientData& cq) {
    std::vector<Integer> lhs = fake_degree_vector(lambda, ell);
    std::vector<Integer> rhs(static_cast<std::size_t>(ell), Integer(0));
    auto coeffs = restriction_coeffs(lambda, ell, cq.g);
    for (const auto& [mu, a] : coeffs) {
        std::vector<Integer> fmu = fake_degree_vector(mu, ell);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] == 0) continue;
            for (long i = 0; i < ell; ++i)
                rhs[i] += a[j] * fmu[mod_pos(i + static_cast<long>(j), ell)];
        }
    }
    for (long i = 0; i < ell; ++i)
        if (lhs[i] != rhs[i])
            return "tau^" + std::to_string(i) + ": lhs=" + lhs[i].str() + " rhs=" + rhs[i].str();
    return "";
}

// Prime modulus, core smaller than the modulus: fake-degree nonvanishing
// plus the full two-sided comparison.
std::string prime_core_check(const Partition& lambda, long ell) {
    for (long k = 0; k < ell; ++k)
        if (eval_at_roots(fake_degree(lambda), ell, k).is_zero())
            return "fake degree vanishes at root " + std::to_string(k);
    return module_diff(typeA_lhs(lambda, ell).components, typeA_rhs(lambda, ell).components);
}

}  // namespace

bool Report::all_pass() const {
    for (const auto& row : per_lambda)
        if (!row.pass) return false;
    return true;
}

SnMuModule typeA_lhs(const Partition& lambda, long ell) {
    ModLComponents comps = mod_l_components(macdonald_fiber(lambda), ell);
    return SnMuModule{lambda.size(), ell, std::move(comps.components)};
}

SnMuModule typeA_rhs(const Partition& lambda, long ell) {
    CoreQuotientData cq = core_quotient(lambda, ell);
    if (cq.r == 0) return typeA_lhs(lambda, ell);
    const long n = lambda.size();
    std::vector<SymFunc<Rational>> core =
        rational_components(mod_l_components(macdonald_fiber(cq.core), ell).components);
    CyclicSubgroupSpec spec(n, ell, cq.g);
    SnMuModule out{n, ell, {}};
    out.components.reserve(ell);
    for (long i = 0; i < ell; ++i) {
        SymFunc<Rational> acc(n, Basis::schur);
        for (long j = 0; j < ell; ++j) {
            if (core[j].is_zero()) continue;
            acc = acc + induce_product_with_cyclic(core[j], mod_pos(i - j, ell), spec);
        }
        out.components.push_back(to_integer(acc));
    }
    return out;
}

LambdaReport verify_type_A_row(const Partition& lambda, long ell) {
    run_gate(ell);
    CoreQuotientData cq = core_quotient(lambda, ell);
    LambdaReport row;
    row.lambda = lambda;
    row.core = cq.core;
    row.g = cq.g;
    row.r = cq.r;
    row.diff = module_diff(typeA_lhs(lambda, ell).components, typeA_rhs(lambda, ell).components);
    row.pass = row.diff.empty();
    return row;
}

Report verify_type_A(long n, long ell) {
    run_gate(ell);
    Report rep;
    rep.n = n;
    rep.ell = ell;
    for (const Partition& lam : partitions_of(n)) rep.per_lambda.push_back(verify_type_A_row(lam, ell));
    return rep;
}

TypeDDecomposition typeD_decomposition(const Partition& lambda, long l) {
    if (l < 1) throw std::invalid_argument("typeD_decomposition: l must be >= 1");
    if (!lambda.is_symmetric())
        throw std::invalid_argument("typeD_decomposition: " + lambda.str() + " is not symmetric");
    run_gate(2 * l);
    const long n = lambda.size();
    const long two_l = 2 * l;
    ModLComponents comps = mod_l_components(macdonald_fiber(lambda), two_l);

    TypeDDecomposition out;
    out.l = l;
    out.n = n;
    out.lambda = lambda;
    out.zero_pair = comps.components[0];
    for (long i = 1; i < l; ++i) {
        std::string d = coeff_diff(comps.components[i], comps.components[two_l - i]);
        if (!d.empty())
            throw std::logic_error("typeD " + lambda.str() + ": weight " + std::to_string(i) +
                                   " vs weight " + std::to_string(two_l - i) + ", " + d);
        out.chi.push_back(comps.components[i]);
    }
    out.l_plus = half_exact(comps.components[l],
                            "typeD " + lambda.str() + ": weight-" + std::to_string(l) +
                                " component does not halve");

    // Summing dim(chi) copies of every isotype must recover the regular
    // representation.
    SymFunc<Integer> total = out.zero_pair + out.l_plus + out.l_plus;
    for (const auto& c : out.chi) total = total + c + c;
    if (total != regular_schur(n))
        throw std::logic_error("typeD " + lambda.str() +
                               ": isotype dimensions do not sum to the regular representation");

    CoreQuotientData cq = core_quotient(lambda, two_l);
    if (cq.r >= 1) {
        // The quotient size of a symmetric shape at an even modulus is even.
        if (cq.r % 2 != 0)
            throw std::logic_error("typeD " + lambda.str() + ": odd quotient size " +
                                   std::to_string(cq.r));
        std::vector<SymFunc<Rational>> core =
            rational_components(mod_l_components(macdonald_fiber(cq.core), two_l).components);
        BinaryDihedralTable table(l);
        DihedralEmbedding emb = build_dihedral_embedding(l, cq.r);
        // Fr(Ind_N(chi_k)) for every residue k; the boundary residues 0 and
        // l expand to the sum of the two linear characters of that parity.
        std::vector<SymFunc<Rational>> ind_n(static_cast<std::size_t>(two_l),
                                             SymFunc<Rational>(n - cq.g, Basis::schur));
        for (long k = 0; k < two_l; ++k)
            for (long row : chi_normalize(table, k))
                ind_n[k] = ind_n[k] + powersum_to_schur(frobenius(induce_from_dihedral(emb, table, row)));
        auto induced = [&](long i) {
            SymFunc<Rational> acc(n, Basis::schur);
            for (long j = 0; j < two_l; ++j) {
                if (core[j].is_zero()) continue;
                acc = acc + induced_product(core[j], ind_n[mod_pos(i - j, two_l)]);
            }
            return acc;
        };
        for (long i = 1; i < l; ++i) {
            std::string d = coeff_diff(out.chi[i - 1], to_integer(induced(i)));
            if (!d.empty())
                throw std::logic_error("typeD " + lambda.str() + ": chi_" + std::to_string(i) +
                                       " grouping vs induction, " + d);
        }
        SymFunc<Integer> other;
        try {
            other = to_integer(induced(l) * Rational(1, 2));
        } catch (const NotDivisible&) {
            throw std::logic_error("typeD " + lambda.str() +
                                   ": induced weight-l sum does not halve");
        }
        std::string d = coeff_diff(out.l_plus, other);
        if (!d.empty())
            throw std::logic_error("typeD " + lambda.str() + ": l+ grouping vs induction, " + d);
    }
    return out;
}

LambdaReport verify_type_D_row(const Partition& lambda, long l) {
    if (l < 1) throw std::invalid_argument("verify_type_D_row: l must be >= 1");
    if (!lambda.is_symmetric())
        throw std::invalid_argument("verify_type_D_row: " + lambda.str() + " is not symmetric");
    run_gate(2 * l);
    CoreQuotientData cq = core_quotient(lambda, 2 * l);
    LambdaReport row;
    row.lambda = lambda;
    row.core = cq.core;
    row.g = cq.g;
    row.r = cq.r;
    row.pass = true;
    try {
        typeD_decomposition(lambda, l);
    } catch (const std::logic_error& e) {
        row.pass = false;
        row.diff = e.what();
    }
    return row;
}

Report verify_type_D(long n, long l) {
    if (l < 1) throw std::invalid_argument("verify_type_D: l must be >= 1");
    run_gate(2 * l);
    Report rep;
    rep.n = n;
    rep.ell = l;
    for (const Partition& lam : partitions_of(n)) {
        if (!lam.is_symmetric()) continue;
        rep.per_lambda.push_back(verify_type_D_row(lam, l));
    }
    return rep;
}

Report verify_edge_cases(long n, long ell) {
    run_gate(ell);
    Report rep;
    rep.n = n;
    rep.ell = ell;
    const std::vector<Partition> all = partitions_of(n);
    auto add_row = [&rep](const Partition& lam, const CoreQuotientData& cq,
                          const std::string& check, const std::string& diff) {
        LambdaReport row;
        row.lambda = lam;
        row.core = cq.core;
        row.g = cq.g;
        row.r = cq.r;
        row.check = check;
        row.diff = diff;
        row.pass = diff.empty();
        rep.per_lambda.push_back(row);
    };
    for (const Partition& lam : all) {
        CoreQuotientData cq = core_quotient(lam, ell);
        if (cq.g <= 1) add_row(lam, cq, "small_core", small_core_check(lam, ell, cq));
    }
    if (is_prime(ell)) {
        std::map<long, std::string> instances;  // the induction instance depends only on g
        for (const Partition& lam : all) {
            CoreQuotientData cq = core_quotient(lam, ell);
            if (cq.g >= ell) continue;
            auto it = instances.find(cq.g);
            if (it == instances.end())
                it = instances.emplace(cq.g, coinvariant_induction_check(n, ell, cq.g)).first;
            add_row(lam, cq, "coinvariant_induction", it->second);
        }
        for (const Partition& lam : all) {
            CoreQuotientData cq = core_quotient(lam, ell);
            add_row(lam, cq, "j_independence", j_independence_check(lam, ell, cq));
        }
        for (const Partition& lam : all) {
            CoreQuotientData cq = core_quotient(lam, ell);
            add_row(lam, cq, "fake_degree_recursion", fake_degree_recursion_check(lam, ell, cq));
        }
        for (const Partition& lam : all) {
            CoreQuotientData cq = core_quotient(lam, ell);
            if (cq.g < ell) add_row(lam, cq, "small_core_prime", prime_core_check(lam, ell));
        }
    }
    return rep;
}

}  // namespace procesi
