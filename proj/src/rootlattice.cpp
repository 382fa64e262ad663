// SPDX-License-Identifier: Apache-2.0

#include "procesi/rootlattice.hpp"

#include "procesi/characters.hpp"
#include "procesi/cycint.hpp"

#include <stdexcept>

namespace procesi {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("rootlattice: " + msg);
}

// Multiplicity of chi_j in chi_i * std, as an exact cyclotomic inner
// product over the conjugacy classes.
long edge_multiplicity(const std::vector<long>& class_sizes,
                       const std::vector<CycInt>& chi_i, const std::vector<CycInt>& std_vals,
                       const std::vector<CycInt>& chi_j, long group_order, long cyc_order) {
    CycInt sum(cyc_order);
    for (size_t c = 0; c < class_sizes.size(); ++c)
        sum += chi_i[c] * std_vals[c] * chi_j[c].conj() * Integer(class_sizes[c]);
    return sum.divide_exact(group_order).as_integer().convert_to<long>();
}

void validate_graph(const McKayGraph& g) {
    long m = g.num_vertices();
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            require(g.adjacency[i][j] == g.adjacency[j][i], "adjacency is not symmetric");
    // The dimension vector spans the kernel of 2*Id - A: the defining
    // two-dimensional representation tensored with chi has dimension 2 dim(chi).
    for (long i = 0; i < m; ++i) {
        long s = 0;
        for (long j = 0; j < m; ++j) s += g.adjacency[i][j] * g.dimensions[j];
        require(s == 2 * g.dimensions[i], "dimension vector is not in the Cartan kernel");
    }
    require(g.dimensions[g.distinguished] == 1, "distinguished vertex is not one-dimensional");
}

McKayGraph cyclic_graph(long ell) {
    require(ell >= 1, "cyclic order must be positive");
    McKayGraph g;
    g.group = GroupSpec::cyclic(ell);
    std::vector<std::vector<CycInt>> chars;
    for (long i = 0; i < ell; ++i) {
        g.vertex_names.push_back("tau^" + std::to_string(i));
        g.dimensions.push_back(1);
        std::vector<CycInt> row;
        for (long k = 0; k < ell; ++k) row.push_back(CycInt::zeta_power(ell, i * k));
        chars.push_back(std::move(row));
    }
    // The defining representation acts on the plane by zeta and its inverse.
    std::vector<CycInt> std_vals;
    for (long k = 0; k < ell; ++k)
        std_vals.push_back(CycInt::zeta_power(ell, k) + CycInt::zeta_power(ell, -k));
    std::vector<long> class_sizes(ell, 1);
    g.adjacency.assign(ell, std::vector<long>(ell, 0));
    for (long i = 0; i < ell; ++i)
        for (long j = 0; j < ell; ++j)
            g.adjacency[i][j] =
                edge_multiplicity(class_sizes, chars[i], std_vals, chars[j], ell, ell);
    g.distinguished = 0;
    validate_graph(g);
    return g;
}

McKayGraph binary_dihedral_graph(long l) {
    require(l >= 1, "binary dihedral index must be positive");
    BinaryDihedralTable table(l);
    McKayGraph g;
    g.group = GroupSpec::binary_dihedral(l);
    g.vertex_names = table.char_names;
    g.dimensions = table.degrees;
    // Class values of the defining representation: diag(zeta, zeta^{-1}) on
    // the rotations w^p, the central classes contribute +-2, reflections 0.
    long N = table.cyc_order;  // a multiple of 2l
    long step = N / (2 * l);
    std::vector<CycInt> std_vals;
    std_vals.push_back(CycInt::integer(N, 2));   // identity
    std_vals.push_back(CycInt::integer(N, -2));  // central element
    for (long p = 1; p <= l - 1; ++p)
        std_vals.push_back(CycInt::zeta_power(N, p * step) + CycInt::zeta_power(N, -p * step));
    std_vals.push_back(CycInt::integer(N, 0));  // s
    std_vals.push_back(CycInt::integer(N, 0));  // sw
    require(static_cast<long>(std_vals.size()) == table.num_classes(),
            "class count mismatch for the defining representation");

    long m = table.num_chars();
    g.adjacency.assign(m, std::vector<long>(m, 0));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            g.adjacency[i][j] = edge_multiplicity(table.class_sizes, table.values[i], std_vals,
                                                  table.values[j], 4 * l, N);
    g.distinguished = table.char_index("0+");
    for (long c = 0; c < table.num_classes(); ++c)
        require(table.values[g.distinguished][c] == CycInt::integer(N, 1),
                "distinguished vertex is not the trivial character");
    validate_graph(g);
    return g;
}

}  // namespace

GroupSpec GroupSpec::cyclic(long ell) { return GroupSpec{Kind::cyclic, ell}; }

GroupSpec GroupSpec::binary_dihedral(long l) { return GroupSpec{Kind::binary_dihedral, l}; }

GroupSpec GroupSpec::parse(const std::string& text) {
    auto pos = text.find(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("group must look like cyclic:3 or binary_dihedral:2");
    std::string kind = text.substr(0, pos);
    long param = 0;
    try {
        std::size_t used = 0;
        param = std::stol(text.substr(pos + 1), &used);
        if (used != text.size() - pos - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("group parameter must be an integer: " + text);
    }
    if (param < 1) throw std::invalid_argument("group parameter must be >= 1");
    if (kind == "cyclic") return cyclic(param);
    if (kind == "binary_dihedral") return binary_dihedral(param);
    throw std::invalid_argument("unknown group kind: " + kind);
}

long GroupSpec::order() const { return kind == Kind::cyclic ? param : 4 * param; }

std::string GroupSpec::str() const {
    return (kind == Kind::cyclic ? std::string("cyclic:") : std::string("binary_dihedral:")) +
           std::to_string(param);
}

McKayGraph mckay_graph(const GroupSpec& group) {
    return group.kind == GroupSpec::Kind::cyclic ? cyclic_graph(group.param)
                                                 : binary_dihedral_graph(group.param);
}

long graph_size(const McKayGraph& g, const RootVector& d) {
    require(d.size() == static_cast<size_t>(g.num_vertices()), "coordinate count mismatch");
    long s = 0;
    for (long i = 0; i < g.num_vertices(); ++i) s += g.dimensions[i] * d[i];
    return s;
}

long null_pairing(const McKayGraph& g, const RootVector& d) {
    require(d.size() == static_cast<size_t>(g.num_vertices()), "coordinate count mismatch");
    long s = 0;
    for (long i = 0; i < g.num_vertices(); ++i) {
        long neigh = 0;
        for (long j = 0; j < g.num_vertices(); ++j) neigh += g.adjacency[i][j] * d[j];
        s += g.dimensions[i] * (2 * d[i] - neigh);
    }
    return s;
}

RootVector reflect(const McKayGraph& g, const RootVector& d, long vertex) {
    require(d.size() == static_cast<size_t>(g.num_vertices()), "coordinate count mismatch");
    require(vertex >= 0 && vertex < g.num_vertices(), "vertex index out of range");
    RootVector out = d;
    long neigh = 0;
    for (long j = 0; j < g.num_vertices(); ++j) neigh += g.adjacency[vertex][j] * d[j];
    out[vertex] = neigh - d[vertex] + (vertex == g.distinguished ? 1 : 0);
    return out;
}

long weight(const McKayGraph& g, RootVector d) {
    require(d.size() == static_cast<size_t>(g.num_vertices()), "coordinate count mismatch");
    long m = g.num_vertices();
    long magnitude = 0;
    for (long i = 0; i < m; ++i) magnitude += g.dimensions[i] * std::abs(d[i]);
    long cap = 10 * (magnitude + 1) * m * m;
    for (long iter = 0;; ++iter) {
        require(iter <= cap, "reduction did not terminate within its cap");
        bool moved = false;
        for (long v = 0; v < m && !moved; ++v) {
            long neigh = 0;
            for (long j = 0; j < m; ++j) neigh += g.adjacency[v][j] * d[j];
            long candidate = neigh - d[v] + (v == g.distinguished ? 1 : 0);
            if (candidate < d[v]) {
                d[v] = candidate;
                moved = true;
            }
        }
        if (!moved) break;
    }
    long r = d[g.distinguished];  // the distinguished vertex has dimension one
    for (long i = 0; i < m; ++i)
        require(d[i] == r * g.dimensions[i],
                "terminal vector is not a multiple of the dimension vector");
    return r;
}

RootVector partition_to_rootvector(const Partition& lambda, long ell) {
    if (ell < 1) throw std::invalid_argument("partition_to_rootvector: ell must be >= 1");
    RootVector d(ell, 0);
    for (long i = 1; i <= lambda.num_parts(); ++i)
        for (long j = 1; j <= lambda.part(i); ++j) {
            long r = (j - i) % ell;
            if (r < 0) r += ell;
            ++d[r];
        }
    return d;
}

std::vector<ComponentEntry> enumerate_components(const McKayGraph& g, long n) {
    require(n >= 0, "size must be nonnegative");
    std::vector<ComponentEntry> out;
    long m = g.num_vertices();
    RootVector d(m, 0);
    auto rec = [&](auto&& self, long v, long left) -> void {
        if (v == m) {
            if (left != 0) return;
            long wt = weight(g, d);
            if (wt >= 0) out.push_back({d, wt});
            return;
        }
        for (long c = 0; c * g.dimensions[v] <= left; ++c) {
            d[v] = c;
            self(self, v + 1, left - c * g.dimensions[v]);
        }
        d[v] = 0;
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace procesi
