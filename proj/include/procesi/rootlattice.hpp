// SPDX-License-Identifier: Apache-2.0
//
// McKay graphs of the cyclic and binary dihedral subgroups of SL_2, root
// vectors indexed by irreducible characters, the affine reflection action
// (with its shift at the trivial character), the weight of a vector, and
// enumeration of the component index set at a given size.

#pragma once

#include "procesi/partition.hpp"

#include <string>
#include <vector>

namespace procesi {

struct GroupSpec {
    enum class Kind { cyclic, binary_dihedral };
    Kind kind = Kind::cyclic;
    long param = 1;  // cyclic order, or the index l of the order-4l group

    static GroupSpec cyclic(long ell);
    static GroupSpec binary_dihedral(long l);
    // Inverse of str(): accepts "cyclic:3" or "binary_dihedral:2"; throws
    // invalid_argument on anything else.
    static GroupSpec parse(const std::string& text);
    long order() const;
    std::string str() const;
};

// Coordinates d_chi in vertex order of the owning McKayGraph.
using RootVector = std::vector<long>;

struct McKayGraph {
    GroupSpec group;
    std::vector<std::string> vertex_names;     // the irreducible characters
    std::vector<long> dimensions;              // their degrees
    std::vector<std::vector<long>> adjacency;  // multiplicity of chi' in chi * std
    long distinguished = 0;                    // index of the trivial character

    long num_vertices() const { return static_cast<long>(vertex_names.size()); }
};

// Built from the character table by exact cyclotomic inner products of
// chi * chi_std against chi'.  The result is symmetric and the dimension
// vector spans the kernel of 2*Id - A (both asserted).
McKayGraph mckay_graph(const GroupSpec& group);

// The dimension-weighted size sum_chi dim(chi) * d_chi.
long graph_size(const McKayGraph& g, const RootVector& d);

// Pairing of d against the dual null root: sum_chi dim(chi) * (2 d_chi -
// (A d)_chi).  Identically zero, hence trivially preserved by reflections;
// computing it checks the kernel property on each vector.
long null_pairing(const McKayGraph& g, const RootVector& d);

// Replace d_chi by (sum of neighbours of chi with multiplicity) - d_chi,
// plus 1 when chi is the distinguished vertex; other coordinates unchanged.
// An involution at every loop-free vertex.  The only loop in scope is the
// trivial group's single vertex, where the Cartan entry vanishes and the map
// degenerates to the translation d -> d + 1; weight() still terminates there
// because that map never decreases the coordinate.
RootVector reflect(const McKayGraph& g, const RootVector& d, long vertex);

// The unique r such that d lies in the orbit of r times the dimension
// vector: repeatedly apply the reflection (smallest vertex first) that
// strictly decreases its coordinate; the terminal vector must be r * dims.
// Throws logic_error if the iteration cap is hit or the terminal vector is
// not proportional to the dimension vector.
long weight(const McKayGraph& g, RootVector d);

// Census of diagram cells of lambda by content (column - row) mod ell,
// giving the character of the corresponding monomial quotient ring.
RootVector partition_to_rootvector(const Partition& lambda, long ell);

struct ComponentEntry {
    RootVector d;
    long wt = 0;
};

// All nonnegative d with graph_size(d) = n and weight(d) >= 0, in
// lexicographic order of the coordinates.
std::vector<ComponentEntry> enumerate_components(const McKayGraph& g, long n);

}  // namespace procesi
