// SPDX-License-Identifier: Apache-2.0
//
// Symmetric-group character theory via the Murnaghan-Nakayama rule, the
// cyclic subgroups generated by products of disjoint l-cycles, the binary
// dihedral groups (order 4l) with their permutation embeddings, and
// class-intersection induction of characters to the symmetric group.

#pragma once

#include "procesi/cycint.hpp"
#include "procesi/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace procesi {

// Centralizer order z_mu = prod_i i^{m_i} m_i!.
Integer z_of(const Partition& mu);

// Multiset union of parts, sorted decreasing.
Partition union_partitions(const Partition& a, const Partition& b);

// chi_lambda evaluated on the class of cycle type mu (rim-hook recursion,
// memoized). Throws std::invalid_argument when |lambda| != |mu|.
Integer character_value(const Partition& lambda, const Partition& mu);

// An integer-valued class function on S_n, stored per cycle type.
struct ClassFunction {
    long n = 0;
    std::map<Partition, Integer> values;

    const Integer& value(const Partition& mu) const;
};

// <f, h> = sum_mu f(mu) h(mu) / z_mu.
Rational inner_product(const ClassFunction& f, const ClassFunction& h);

// The cyclic group generated by w, a product of r disjoint l-cycles on the
// last r*l of n points (the first g points are fixed); n = g + r*l.
struct CyclicSubgroupSpec {
    long n, ell, g, r;

    CyclicSubgroupSpec(long n_, long ell_, long g_);
    long order() const { return r > 0 ? ell : 1; }
    // w as an image vector on 0-based points.
    std::vector<long> generator() const;
};

// Cycle type of w^i: r*gcd(i,l) cycles of length l/gcd(i,l) plus g fixed
// points.
Partition power_cycle_type(const CyclicSubgroupSpec& spec, long i);

// Ind_{<w>}^{S_n}(theta^k) with theta(w) = zeta_l, by the class-intersection
// formula; values are asserted to be rational integers.
ClassFunction induce_from_cyclic(const CyclicSubgroupSpec& spec, long k);

// a[mu][j] = < Res_{S_g x <w>}(V_lambda), V_mu x theta^j >, mu over
// partitions of g, j in 0..order-1.  Nonnegative integers.
std::map<Partition, std::vector<Integer>> restriction_coeffs(const Partition& lambda, long ell,
                                                             long g);

// Character table of the binary dihedral group of order 4l.  Classes are
// ordered [e, z, w^1 .. w^{l-1}, s, sw]; characters ["0+", "0-", "l+",
// "l-", "chi_1" .. "chi_{l-1}"].  Values live in Z[zeta_{lcm(2l,4)}].
struct BinaryDihedralTable {
    long l = 0;
    long cyc_order = 0;  // lcm(2l, 4)
    std::vector<std::string> class_names;
    std::vector<long> class_sizes;
    std::vector<std::string> char_names;
    std::vector<long> degrees;
    std::vector<std::vector<CycInt>> values;  // [character][class]

    explicit BinaryDihedralTable(long l_);
    long num_classes() const { return static_cast<long>(class_names.size()); }
    long num_chars() const { return static_cast<long>(char_names.size()); }
    long char_index(const std::string& name) const;
};

// chi_i for arbitrary integer i, as the list of irreducible indices whose
// sum it equals: chi_{-i} = chi_i, chi_{i+2l} = chi_i, and the boundary
// cases i = 0, l split into the two linear characters of that parity.
std::vector<long> chi_normalize(const BinaryDihedralTable& table, long i);

// The order-4l subgroup N = <w, s> of S_m, m = 2*l*r (r even): w is r
// cycles of length 2l on consecutive blocks; s pairs up blocks (2a, 2a+1)
// mapping u_i -> v_{-i}, v_i -> u_{l-i} (indices mod 2l within each cycle).
// Satisfies s^2 = w^l, s w s^{-1} = w^{-1}, s^4 = id (asserted).
struct DihedralEmbedding {
    long l = 0, r = 0, m = 0;
    std::vector<long> w, s;                  // image vectors on 0-based points
    std::vector<std::vector<long>> elements;  // the 4l members of N
    std::vector<long> element_class;          // BinaryDihedralTable class index
};

DihedralEmbedding build_dihedral_embedding(long l, long r);

// Ind_N^{S_m} of the chi-th irreducible of BD_l, integer-valued (asserted).
ClassFunction induce_from_dihedral(const DihedralEmbedding& emb, const BinaryDihedralTable& table,
                                   long chi);

// Utility: cycle type of a permutation given as an image vector.
Partition cycle_type(const std::vector<long>& perm);

}  // namespace procesi
