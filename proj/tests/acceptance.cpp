// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one test case per release criterion, each printing a
// single pass/fail summary line.  Every comparison in this file is exact
// integer or exact rational-function equality; there are no tolerances.
// Oracles (border-strip removal, tabloid characters, semistandard-tableau
// counts) are implemented here from scratch so the checks do not lean on
// the code paths they are judging.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "procesi/characters.hpp"
#include "procesi/macdonald.hpp"
#include "procesi/rootlattice.hpp"
#include "procesi/verify.hpp"

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using namespace procesi;

namespace {

Partition P(std::initializer_list<long> parts) { return Partition(std::vector<long>(parts)); }

// Collects the exact checks behind one criterion and renders its verdict as
// a single line on stdout; failures are also reported through doctest with
// the first few offending comparisons spelled out.
struct Criterion {
    int id;
    std::string title;
    long checks = 0;
    long failed = 0;
    std::vector<std::string> notes;

    Criterion(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

    void require(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (notes.size() < 8) notes.push_back(what);
    }

    void finish() {
        std::printf("criterion %d: %s - %s (%ld exact checks, %ld failed)\n", id,
                    failed == 0 ? "pass" : "FAIL", title.c_str(), checks, failed);
        std::fflush(stdout);
        for (const std::string& note : notes) FAIL_CHECK(note);
        CHECK(failed == 0);
    }
};

SymFunc<Integer> regular_module(long n) {
    SymFunc<Integer> reg(n, Basis::schur);
    for (const Partition& mu : partitions_of(n)) reg.add_term(mu, mu.dimension());
    return reg;
}

// --- border-strip oracle -------------------------------------------------

// Remove the border strip generated by cell (i, j) (1-based, leg length
// given): rows i .. i+leg-1 take the next row's length minus one, the last
// affected row truncates to j - 1 cells.
Partition remove_border_strip(const Partition& lam, long i, long j, long leg) {
    std::vector<long> parts = lam.parts();
    for (long k = i; k < i + leg; ++k) parts[static_cast<std::size_t>(k - 1)] = lam.part(k + 1) - 1;
    parts[static_cast<std::size_t>(i + leg - 1)] = j - 1;
    return Partition(parts);
}

// Core by exhaustive strip removal: peel every removable strip of length ell
// in every order and insist all terminal shapes coincide.
Partition strip_core(const Partition& lam, long ell, std::map<Partition, Partition>& memo,
                     Criterion& c) {
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    Partition conj = lam.conjugate();
    std::optional<Partition> result;
    for (long i = 1; i <= lam.num_parts(); ++i)
        for (long j = 1; j <= lam.part(i); ++j) {
            long arm = lam.part(i) - j;
            long leg = conj.part(j) - i;
            if (arm + leg + 1 != ell) continue;
            Partition core = strip_core(remove_border_strip(lam, i, j, leg), ell, memo, c);
            if (!result) result = core;
            else
                c.require(*result == core, "shape " + lam.str() + ", length " +
                                               std::to_string(ell) +
                                               ": removal order changes the terminal shape");
        }
    Partition out = result ? *result : lam;
    memo.emplace(lam, out);
    return out;
}

// --- permutation-module oracle -------------------------------------------

// Character of the permutation module on tabloids of shape mu at a class of
// cycle type nu: distribute the cycles over the rows directly.
Integer tabloid_character(const Partition& mu, const Partition& nu) {
    std::vector<long> caps = mu.parts();
    const std::vector<long>& cyc = nu.parts();
    auto rec = [&](auto&& self, std::size_t i) -> Integer {
        if (i == cyc.size()) return 1;
        Integer total = 0;
        for (std::size_t c = 0; c < caps.size(); ++c) {
            if (caps[c] < cyc[i]) continue;
            caps[c] -= cyc[i];
            total += self(self, i + 1);
            caps[c] += cyc[i];
        }
        return total;
    };
    return rec(rec, 0);
}

// Kostka number by brute-force enumeration of semistandard tableaux of
// shape lam and content mu, filled cell by cell in reading order.
long kostka_ssyt(const Partition& lam, const Partition& mu) {
    std::vector<std::vector<long>> rows(lam.num_parts());
    for (long i = 0; i < lam.num_parts(); ++i) rows[i].assign(lam.part(i + 1), 0);
    std::vector<long> remaining = mu.parts();
    auto rec = [&](auto&& self, long i, long j) -> long {
        if (i == lam.num_parts()) return 1;
        long ni = i, nj = j + 1;
        if (nj >= lam.part(i + 1)) {
            ni = i + 1;
            nj = 0;
        }
        long count = 0;
        for (std::size_t v = 0; v < remaining.size(); ++v) {
            if (remaining[v] == 0) continue;
            long val = static_cast<long>(v) + 1;
            if (j > 0 && rows[i][j - 1] > val) continue;                      // weak rows
            if (i > 0 && j < lam.part(i) && rows[i - 1][j] >= val) continue;  // strict cols
            rows[i][j] = val;
            --remaining[v];
            count += self(self, ni, nj);
            ++remaining[v];
            rows[i][j] = 0;
        }
        return count;
    };
    return rec(rec, 0, 0);
}

}  // namespace

TEST_CASE("criterion 1: cyclic verification at n = 8 across moduli 2..7") {
    Criterion c(1, "every partition of 8 verifies against cyclic induction at moduli 2..7");
    try {
        for (long ell = 2; ell <= 7; ++ell) {
            Report rep = verify_type_A(8, ell);
            c.require(rep.per_lambda.size() == 22,
                      "modulus " + std::to_string(ell) + ": expected 22 rows, got " +
                          std::to_string(rep.per_lambda.size()));
            for (const LambdaReport& row : rep.per_lambda)
                c.require(row.pass, "modulus " + std::to_string(ell) + ", shape " +
                                        row.lambda.str() + ": " + row.diff);
            c.require(rep.all_pass(), "modulus " + std::to_string(ell) + ": report not clean");
        }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 2: fiber sanity for every shape of size at most 8") {
    Criterion c(2, "fibers up to n = 8: dimensions at q = t = 1, corner terms, conjugation");
    try {
        for (long n = 0; n <= 8; ++n) {
            const std::vector<Partition> shapes = partitions_of(n);
            for (const Partition& lam : shapes) {
                const std::string tag = "shape " + lam.str();
                ProcesiFiber f = macdonald_fiber(lam);
                c.require(f.schur_expansion.size() == shapes.size(),
                          tag + ": some Schur coefficient vanished");
                for (const auto& [mu, kqt] : f.schur_expansion) {
                    c.require(kqt.is_polynomial() && kqt.has_nonnegative_coeffs(),
                              tag + ": coefficient at s_" + mu.str() +
                                  " is not a polynomial with nonnegative coefficients");
                    c.require(kqt.eval_at_one_one() == mu.dimension(),
                              tag + ": q = t = 1 value at s_" + mu.str() +
                                  " differs from the irreducible dimension");
                }
                Partition top = n == 0 ? Partition() : P({n});
                Partition column(std::vector<long>(static_cast<std::size_t>(n), 1));
                c.require(f.schur_expansion.at(top) == LaurentQT(1),
                          tag + ": coefficient at the one-row shape is not 1");
                c.require(f.schur_expansion.at(column) ==
                              LaurentQT::monomial(1, lam.conjugate().n_statistic(),
                                                  lam.n_statistic()),
                          tag + ": coefficient at the one-column shape is off");
                ProcesiFiber g = macdonald_fiber(lam.conjugate());
                for (const auto& [mu, kqt] : f.schur_expansion)
                    c.require(g.schur_expansion.at(mu) == kqt.swap_qt(),
                              tag + ": conjugating the shape does not swap q and t at s_" +
                                  mu.str());
            }
        }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 3: t = 1/q specialization equals the plethystic product form") {
    Criterion c(3, "both routes to the t = 1/q specialization agree up to n = 6");
    try {
        for (long n = 0; n <= 6; ++n)
            for (const Partition& lam : partitions_of(n)) {
                // Route one: specialize the fiber coefficients directly.
                ProcesiFiber f = macdonald_fiber(lam);
                SymFunc<RationalQ> lhs(n, Basis::schur);
                for (const auto& [mu, kqt] : f.schur_expansion)
                    lhs.add_term(mu, RationalQ(kqt.specialize_t_q_inverse()));
                // Route two: q^{-n(lam)} prod_c (1 - q^{h_c}) s_lam[Z/(1-q)].
                LaurentQ scale = LaurentQ::monomial(1, -lam.n_statistic());
                for (long h : lam.hook_multiset()) scale *= one_minus_qk(h);
                SymFunc<RationalQ> rhs = powersum_to_schur(plethysm_onemq(lam)) * RationalQ(scale);
                c.require(lhs == rhs, "shape " + lam.str() + ": the two routes disagree");
            }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 4: fake-degree weighting matches the Kronecker sum") {
    Criterion c(4, "F_lam-weighted specialized fiber equals sum_mu F_mu (s_mu * s_lam) up to n = 6");
    try {
        for (long n = 0; n <= 6; ++n) {
            const std::vector<Partition> shapes = partitions_of(n);
            for (const Partition& lam : shapes) {
                ProcesiFiber f = macdonald_fiber(lam);
                RationalQ flam{fake_degree(lam)};
                SymFunc<RationalQ> lhs(n, Basis::schur);
                for (const auto& [mu, kqt] : f.schur_expansion)
                    lhs.add_term(mu, flam * RationalQ(kqt.specialize_t_q_inverse()));
                SymFunc<RationalQ> rhs(n, Basis::schur);
                for (const Partition& mu : shapes) {
                    RationalQ fmu{fake_degree(mu)};
                    for (const auto& [nu, g] : kronecker_table(mu, lam))
                        rhs.add_term(nu, fmu * RationalQ(LaurentQ(g)));
                }
                c.require(lhs == rhs, "shape " + lam.str() + ": weighted sides differ");
            }
        }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 5: shapes whose core has at most one cell, all moduli up to 6") {
    Criterion c(5, "small-core shapes up to n = 8, moduli 1..6: both derivation routes pass");
    try {
        for (long n = 0; n <= 8; ++n)
            for (long ell = 1; ell <= 6; ++ell) {
                Report rep = verify_edge_cases(n, ell);
                long rows = 0;
                for (const LambdaReport& row : rep.per_lambda) {
                    if (row.check != "small_core") continue;
                    ++rows;
                    const std::string tag = "n = " + std::to_string(n) + ", modulus " +
                                            std::to_string(ell) + ", shape " + row.lambda.str();
                    c.require(row.pass, tag + ": " + row.diff);
                    LambdaReport again = verify_type_A_row(row.lambda, ell);
                    c.require(again.pass, tag + " via cyclic induction: " + again.diff);
                }
                long expected = 0;
                for (const Partition& lam : partitions_of(n))
                    if (core_quotient(lam, ell).g <= 1) ++expected;
                c.require(rows == expected, "n = " + std::to_string(n) + ", modulus " +
                                                std::to_string(ell) +
                                                ": small-core row count is off");
            }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 6: prime-modulus derivations across all shapes up to size 8") {
    Criterion c(6, "moduli 2,3,5,7 up to n = 8: every derivation row passes");
    try {
        for (long n = 0; n <= 8; ++n)
            for (long ell : {2L, 3L, 5L, 7L}) {
                Report rep = verify_edge_cases(n, ell);
                std::map<std::string, long> rows;
                for (const LambdaReport& row : rep.per_lambda) {
                    ++rows[row.check];
                    c.require(row.pass, "n = " + std::to_string(n) + ", modulus " +
                                            std::to_string(ell) + ", shape " + row.lambda.str() +
                                            ", " + row.check + ": " + row.diff);
                }
                long pn = static_cast<long>(partitions_of(n).size());
                long small = 0;
                for (const Partition& lam : partitions_of(n))
                    if (core_quotient(lam, ell).g < ell) ++small;
                const std::string tag =
                    "n = " + std::to_string(n) + ", modulus " + std::to_string(ell);
                c.require(rows["j_independence"] == pn, tag + ": j-independence rows missing");
                c.require(rows["fake_degree_recursion"] == pn, tag + ": recursion rows missing");
                c.require(rows["small_core_prime"] == small, tag + ": small-core rows missing");
                c.require(rows["coinvariant_induction"] == small,
                          tag + ": coinvariant induction rows missing");
            }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 7: binary dihedral decompositions, halving, and quotient parity") {
    Criterion c(7, "binary dihedral l = 1,2 up to n = 8 plus quotient parity up to n = 12");
    try {
        for (long l : {1L, 2L})
            for (long n = 0; n <= 8; ++n) {
                long symmetric = 0;
                for (const Partition& lam : partitions_of(n)) {
                    if (!lam.is_symmetric()) continue;
                    ++symmetric;
                    const std::string tag =
                        "l = " + std::to_string(l) + ", shape " + lam.str();
                    LambdaReport row = verify_type_D_row(lam, l);
                    c.require(row.pass, tag + ": " + row.diff);
                    try {
                        TypeDDecomposition d = typeD_decomposition(lam, l);
                        ModLComponents comps = mod_l_components(macdonald_fiber(lam), 2 * l);
                        c.require(d.zero_pair == comps.components[0],
                                  tag + ": linear-pair block is not the weight-0 component");
                        c.require(d.l_plus + d.l_plus ==
                                      comps.components[static_cast<std::size_t>(l)],
                                  tag + ": the weight-l component does not halve exactly");
                        for (long i = 1; i < l; ++i)
                            c.require(d.chi[static_cast<std::size_t>(i - 1)] ==
                                          comps.components[static_cast<std::size_t>(i)],
                                      tag + ": two-dimensional block " + std::to_string(i) +
                                          " is off");
                        SymFunc<Integer> total = d.zero_pair + d.l_plus + d.l_plus;
                        for (const SymFunc<Integer>& block : d.chi) total = total + block + block;
                        c.require(total == regular_module(n),
                                  tag + ": dimension-weighted blocks do not sum to the regular "
                                        "module");
                    } catch (const std::exception& e) {
                        c.require(false, tag + ": " + e.what());
                    }
                }
                Report rep = verify_type_D(n, l);
                c.require(static_cast<long>(rep.per_lambda.size()) == symmetric &&
                              rep.all_pass(),
                          "l = " + std::to_string(l) + ", n = " + std::to_string(n) +
                              ": full report not clean");
            }
        for (long l : {1L, 2L})
            for (long n = 0; n <= 12; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    if (!lam.is_symmetric()) continue;
                    CoreQuotientData cq = core_quotient(lam, 2 * l);
                    c.require(cq.r % 2 == 0 && (n - cq.g) % (4 * l) == 0,
                              "shape " + lam.str() + " at modulus " + std::to_string(2 * l) +
                                  ": size minus core size is not a multiple of " +
                                  std::to_string(4 * l));
                }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 8: root-lattice weights, component census, reflections") {
    Criterion c(8, "weights match quotient sizes, census matches cores, reflections behave");
    try {
        for (long ell = 1; ell <= 6; ++ell) {
            McKayGraph g = mckay_graph(GroupSpec::cyclic(ell));
            for (long n = 0; n <= 10; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    RootVector d = partition_to_rootvector(lam, ell);
                    const std::string tag =
                        "shape " + lam.str() + ", modulus " + std::to_string(ell);
                    c.require(graph_size(g, d) == n, tag + ": census loses cells");
                    c.require(weight(g, d) == core_quotient(lam, ell).r,
                              tag + ": weight is not the quotient size");
                }
            for (long n = 0; n <= 10; ++n) {
                std::vector<ComponentEntry> entries = enumerate_components(g, n);
                long cores = 0, full_size = 0;
                for (long m = n % ell; m <= n; m += ell)
                    for (const Partition& kappa : partitions_of(m))
                        if (core_quotient(kappa, ell).r == 0) {
                            ++cores;
                            if (m == n) ++full_size;
                        }
                long wt0 = 0;
                for (const ComponentEntry& e : entries)
                    if (e.wt == 0) ++wt0;
                const std::string tag =
                    "modulus " + std::to_string(ell) + ", n = " + std::to_string(n);
                c.require(static_cast<long>(entries.size()) == cores,
                          tag + ": component count is not the core census");
                c.require(wt0 == full_size, tag + ": weight-0 count is not the full-size cores");
            }
        }
        // Reflection-bearing graphs only: the trivial group's single vertex
        // carries a loop, its Cartan entry vanishes, and the corresponding map
        // is the affine translation d -> d + 1 rather than a reflection.
        std::vector<GroupSpec> groups;
        for (long ell = 2; ell <= 6; ++ell) groups.push_back(GroupSpec::cyclic(ell));
        for (long l = 1; l <= 3; ++l) groups.push_back(GroupSpec::binary_dihedral(l));
        for (const GroupSpec& spec : groups) {
            McKayGraph g = mckay_graph(spec);
            std::vector<RootVector> pool;
            RootVector d(static_cast<std::size_t>(g.num_vertices()), 0);
            auto emit = [&](auto&& self, long v, long budget) -> void {
                if (v == g.num_vertices()) {
                    pool.push_back(d);
                    return;
                }
                long dim = g.dimensions[static_cast<std::size_t>(v)];
                for (long x = 0; x * dim <= budget; ++x) {
                    d[static_cast<std::size_t>(v)] = x;
                    self(self, v + 1, budget - x * dim);
                }
                d[static_cast<std::size_t>(v)] = 0;
            };
            emit(emit, 0, 4);
            for (const RootVector& v : pool) {
                c.require(null_pairing(g, v) == 0, spec.str() + ": null pairing not zero");
                for (long vert = 0; vert < g.num_vertices(); ++vert) {
                    RootVector once = reflect(g, v, vert);
                    c.require(null_pairing(g, once) == 0,
                              spec.str() + ": reflection breaks the null pairing");
                    c.require(reflect(g, once, vert) == v,
                              spec.str() + ": reflection at vertex " + std::to_string(vert) +
                                  " is not an involution");
                }
            }
        }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}

TEST_CASE("criterion 9: oracle equivalences") {
    Criterion c(9, "strip removal, basis round trip, orthogonality, trace oracle all agree");
    try {
        // Abacus cores against exhaustive border-strip removal.
        for (long ell = 2; ell <= 6; ++ell) {
            std::map<Partition, Partition> memo;
            for (long n = 0; n <= 10; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    CoreQuotientData cq = core_quotient(lam, ell);
                    c.require(strip_core(lam, ell, memo, c) == cq.core,
                              "shape " + lam.str() + ", length " + std::to_string(ell) +
                                  ": strip-removal core differs from the abacus core");
                    c.require(n - cq.g == ell * cq.r,
                              "shape " + lam.str() + ": sizes do not balance");
                }
        }
        // Schur <-> power-sum round trip on every basis element.
        for (long n = 0; n <= 9; ++n)
            for (const Partition& lam : partitions_of(n)) {
                SymFunc<Rational> s(n, Basis::schur);
                s.add_term(lam, Rational(1));
                c.require(powersum_to_schur(schur_to_powersum(s)) == s,
                          "shape " + lam.str() + ": basis round trip is not the identity");
            }
        // Orthonormality of the irreducible characters.
        for (long n = 1; n <= 9; ++n) {
            const std::vector<Partition> classes = partitions_of(n);
            std::vector<ClassFunction> chars;
            for (const Partition& lam : classes) {
                ClassFunction f;
                f.n = n;
                for (const Partition& mu : classes) f.values.emplace(mu, character_value(lam, mu));
                chars.push_back(std::move(f));
            }
            for (std::size_t a = 0; a < chars.size(); ++a)
                for (std::size_t b = a; b < chars.size(); ++b)
                    c.require(inner_product(chars[a], chars[b]) == Rational(a == b ? 1 : 0),
                              "n = " + std::to_string(n) + ": rows " + classes[a].str() +
                                  " and " + classes[b].str() + " are not orthonormal");
        }
        // Recursive character values against tabloid characters inverted
        // through brute-force Kostka numbers (decreasing lex refines
        // dominance, so the inversion is triangular).
        for (long n = 1; n <= 5; ++n) {
            const std::vector<Partition> all = partitions_of(n);
            for (const Partition& nu : all) {
                std::vector<Integer> chi(all.size());
                for (std::size_t i = 0; i < all.size(); ++i) {
                    Integer v = tabloid_character(all[i], nu);
                    for (std::size_t j = 0; j < i; ++j)
                        v -= Integer(kostka_ssyt(all[j], all[i])) * chi[j];
                    chi[i] = v;
                    c.require(character_value(all[i], nu) == v,
                              "trace of " + all[i].str() + " at class " + nu.str() +
                                  " differs from the tabloid oracle");
                }
            }
        }
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish();
}
