// SPDX-License-Identifier: Apache-2.0
//
// Python bindings: thin wrappers over the main operations, returning plain
// dicts, lists, and ints so the Python side needs no custom classes.
// Partitions cross the boundary as their text form "[2,2,1]"; big integers
// cross exactly as PyLong via their decimal form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "procesi/characters.hpp"
#include "procesi/macdonald.hpp"
#include "procesi/rootlattice.hpp"
#include "procesi/verify.hpp"

#include <optional>
#include <string>

namespace py = pybind11;
using namespace procesi;

namespace {

py::object big(const Integer& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::dict schur_dict(const SymFunc<Integer>& f) {
    py::dict d;
    for (const auto& [mu, c] : f.terms()) d[py::str(mu.str())] = big(c);
    return d;
}

py::dict row_dict(const LambdaReport& row) {
    py::dict d;
    d["lambda"] = row.lambda.str();
    d["core"] = row.core.str();
    d["g"] = row.g;
    d["r"] = row.r;
    d["pass"] = row.pass;
    if (!row.check.empty()) d["check"] = row.check;
    if (!row.diff.empty()) d["diff"] = row.diff;
    return d;
}

py::dict report_dict(const Report& rep) {
    py::dict d;
    d["n"] = rep.n;
    d["modulus"] = rep.ell;
    py::list rows;
    for (const LambdaReport& row : rep.per_lambda) rows.append(row_dict(row));
    d["rows"] = rows;
    d["pass"] = rep.all_pass();
    return d;
}

}  // namespace

PYBIND11_MODULE(_procesi, m) {
    m.doc() =
        "Exact fibers over torus-fixed points: transformed Macdonald "
        "polynomials, cores and quotients, cyclic and binary dihedral "
        "inductions, and affine root-lattice censuses.";

    m.def(
        "partitions_of",
        [](long n) {
            py::list out;
            for (const Partition& p : partitions_of(n)) out.append(p.str());
            return out;
        },
        py::arg("n"), "All partitions of n in decreasing lexicographic order, as text.");

    m.def(
        "dimension",
        [](const std::string& lam) { return big(Partition::parse(lam).dimension()); },
        py::arg("lam"), "Dimension of the irreducible symmetric-group module V_lam.");

    m.def(
        "core_quotient",
        [](const std::string& lam, long ell) {
            CoreQuotientData cq = core_quotient(Partition::parse(lam), ell);
            py::dict d;
            d["core"] = cq.core.str();
            py::list quot;
            for (const Partition& q : cq.quotient) quot.append(q.str());
            d["quotient"] = quot;
            d["g"] = cq.g;
            d["r"] = cq.r;
            return d;
        },
        py::arg("lam"), py::arg("ell"),
        "ell-core, ell-quotient, core size g, and hook count r of a partition.");

    m.def(
        "character_value",
        [](const std::string& lam, const std::string& mu) {
            return big(character_value(Partition::parse(lam), Partition::parse(mu)));
        },
        py::arg("lam"), py::arg("mu"),
        "Irreducible symmetric-group character chi_lam at cycle type mu.");

    m.def(
        "fake_degree",
        [](const std::string& lam) {
            LaurentQ f = fake_degree(Partition::parse(lam));
            py::dict d;
            if (!f.is_zero())
                for (long e = f.min_exp(); e <= f.max_exp(); ++e)
                    if (f.coeff(e) != 0) d[py::int_(e)] = big(f.coeff(e));
            return d;
        },
        py::arg("lam"),
        "Graded multiplicity of V_lam in the coinvariant algebra, as {exponent: coefficient}.");

    m.def(
        "set_cache_dir",
        [](py::object dir) {
            if (dir.is_none()) set_fiber_cache_dir(std::nullopt);
            else set_fiber_cache_dir(dir.cast<std::string>());
        },
        py::arg("dir"), "Set the fiber disk-cache directory; None disables the disk cache.");

    m.def(
        "macdonald_fiber",
        [](const std::string& lam) {
            ProcesiFiber f = macdonald_fiber(Partition::parse(lam));
            py::dict d;
            for (const auto& [mu, kqt] : f.schur_expansion) {
                py::list terms;
                for (const auto& [key, c] : kqt.terms())
                    terms.append(py::make_tuple(key.first, key.second, big(c)));
                d[py::str(mu.str())] = terms;
            }
            return d;
        },
        py::arg("lam"),
        "Schur expansion of the transformed Macdonald polynomial: "
        "{mu: [(q_exp, t_exp, coefficient), ...]}.");

    m.def(
        "mod_components",
        [](const std::string& lam, long ell) {
            ModLComponents comps = mod_l_components(macdonald_fiber(Partition::parse(lam)), ell);
            py::list out;
            for (const SymFunc<Integer>& comp : comps.components) out.append(schur_dict(comp));
            return out;
        },
        py::arg("lam"), py::arg("ell"),
        "Weight components of the fiber mod ell, each as {mu: multiplicity}.");

    m.def(
        "type_d_decomposition",
        [](const std::string& lam, long l) {
            TypeDDecomposition d = typeD_decomposition(Partition::parse(lam), l);
            py::dict out;
            out["l"] = d.l;
            out["n"] = d.n;
            out["lambda"] = d.lambda.str();
            out["zero_pair"] = schur_dict(d.zero_pair);
            out["l_plus"] = schur_dict(d.l_plus);
            py::list chi;
            for (const SymFunc<Integer>& block : d.chi) chi.append(schur_dict(block));
            out["chi"] = chi;
            return out;
        },
        py::arg("lam"), py::arg("l"),
        "Binary dihedral isotypic blocks of the fiber of a symmetric shape.");

    m.def(
        "verify_type_a", [](long n, long ell) { return report_dict(verify_type_A(n, ell)); },
        py::arg("n"), py::arg("ell"),
        "Check every partition of n against the cyclic induction decomposition at modulus ell.");

    m.def(
        "verify_type_d", [](long n, long l) { return report_dict(verify_type_D(n, l)); },
        py::arg("n"), py::arg("l"),
        "Check every symmetric partition of n against the binary dihedral routes at index l.");

    m.def(
        "root_vector",
        [](const std::string& lam, long ell) {
            Partition p = Partition::parse(lam);
            McKayGraph graph = mckay_graph(GroupSpec::cyclic(ell));
            RootVector d = partition_to_rootvector(p, ell);
            py::dict out;
            py::list coords;
            for (long c : d) coords.append(c);
            out["d"] = coords;
            out["wt"] = weight(graph, d);
            return out;
        },
        py::arg("lam"), py::arg("ell"),
        "Content census of the diagram mod ell with its affine orbit weight.");

    m.def(
        "components",
        [](const std::string& group, long n) {
            McKayGraph graph = mckay_graph(GroupSpec::parse(group));
            py::dict out;
            py::list names;
            for (const std::string& name : graph.vertex_names) names.append(name);
            out["vertex_names"] = names;
            py::list comps;
            for (const ComponentEntry& e : enumerate_components(graph, n)) {
                py::dict entry;
                py::list d;
                for (long c : e.d) d.append(c);
                entry["d"] = d;
                entry["wt"] = e.wt;
                comps.append(entry);
            }
            out["components"] = comps;
            return out;
        },
        py::arg("group"), py::arg("n"),
        "Fixed-point component census for 'cyclic:L' or 'binary_dihedral:L' at size n.");
}
