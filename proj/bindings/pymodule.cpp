#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tristar/verify.hpp"

namespace py = pybind11;
using namespace tristar;

namespace {

std::vector<std::vector<cplx>> mat_rows(const Mat& m) {
    std::vector<std::vector<cplx>> rows(m.rows(), std::vector<cplx>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

Permutation perm_of(const std::string& tok) {
    if (tok == "pair") return pair_swap();
    if (tok == "s1s2") return plaquette_swap(1, 2);
    if (tok == "s1s3") return plaquette_swap(1, 3);
    if (tok == "s2s3") return plaquette_swap(2, 3);
    throw Error("UnknownName", "permutation '" + tok + "' (pair|s1s2|s1s3|s2s3)");
}

}  // namespace

PYBIND11_MODULE(tristar, m) {
    m.doc() = "four-spin triangular-star toolkit: spectra, exchange statistics, "
              "fermionization, entanglement";

    py::register_exception<Error>(m, "TristarError");

    py::class_<Couplings>(m, "Couplings")
        .def(py::init([](double jx, double jy, double jz, double jp) {
                 return Couplings{jx, jy, jz, jp};
             }),
             py::arg("jx") = 1.0, py::arg("jy") = 2.0, py::arg("jz") = 2.0,
             py::arg("jp") = 2.0)
        .def_readwrite("jx", &Couplings::jx)
        .def_readwrite("jy", &Couplings::jy)
        .def_readwrite("jz", &Couplings::jz)
        .def_readwrite("jp", &Couplings::jp)
        .def("__repr__", [](const Couplings& c) {
            return "Couplings(jx=" + std::to_string(c.jx) + ", jy=" + std::to_string(c.jy) +
                   ", jz=" + std::to_string(c.jz) + ", jp=" + std::to_string(c.jp) + ")";
        });

    m.def("hamiltonian", [](const Couplings& c) { return mat_rows(build_hamiltonian(c)); },
          py::arg("couplings") = Couplings{});

    m.def("eigenvalues",
          [](const Couplings& c) { return hermitian_eig(build_hamiltonian(c)).eigenvalues; },
          py::arg("couplings") = Couplings{});

    m.def("levels",
          [](const Couplings& c) {
              std::vector<std::tuple<double, int, std::string>> out;
              for (const auto& lv : analytic_levels(c))
                  out.emplace_back(lv.energy, lv.multiplicity, lv.label);
              return out;
          },
          py::arg("couplings") = Couplings{}, "closed-form (energy, multiplicity, label)");

    m.def("catalog", [] { return catalog_names(); });

    m.def("state", [](const std::string& name) { return paper_state(name).amp; },
          py::arg("name"));

    m.def("residual",
          [](const std::string& name, const Couplings& c) {
              return eigen_residual(paper_state(name), c);
          },
          py::arg("name"), py::arg("couplings") = Couplings{},
          "(rayleigh energy, eigen residual)");

    m.def("sector",
          [](const std::string& name) {
              GaugeSector g = sector_of(paper_state(name));
              return py::make_tuple(g.s1, g.s2, g.s3);
          },
          py::arg("name"));

    m.def("sector_energies",
          [](int s1, int s2, int s3, const Couplings& c) {
              std::array<double, 2> e =
                  sector_energies({s1, s2, s3, s1 == s2 && s2 == s3}, c);
              return py::make_tuple(e[0], e[1]);
          },
          py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("couplings") = Couplings{});

    m.def("exchange",
          [](const std::vector<std::string>& labels, const std::string& perm) {
              std::vector<State> basis;
              for (const auto& l : labels) basis.push_back(paper_state(l));
              StatsResult r = subspace_statistics(basis, perm_of(perm));
              py::dict d;
              d["eta"] = mat_rows(r.eta);
              d["class"] = r.classification;
              d["closed"] = r.closed;
              d["residual"] = r.residual;
              return d;
          },
          py::arg("labels"), py::arg("perm") = "pair");

    m.def("phases",
          [](const std::string& name, const std::string& perm) {
              return phase_map(paper_state(name), perm_of(perm));
          },
          py::arg("name"), py::arg("perm"), "per-configuration exchange ratios");

    m.def("braid_closes", [] {
        Mat loop = braid_loop({plaquette_swap(3, 2), plaquette_swap(2, 1),
                               plaquette_swap(1, 3), plaquette_swap(1, 2)});
        return loop.max_abs_diff(Mat::identity(16)) == 0.0;
    });

    m.def("fermionization_report",
          [](const Couplings& c) {
              py::dict d;
              d["clifford_defect"] = clifford_defect(majorana_set());
              d["h_distance"] =
                  fermionized_hamiltonian(c).max_abs_diff(build_hamiltonian(c));
              d["quadratic_distance"] =
                  complex_fermion_hamiltonian(c).max_abs_diff(build_hamiltonian(c));
              d["printed_assembly_distance"] = printed_assembly_distance(c);
              BondReport br = bond_identities(c);
              d["bond_product_conserved"] = br.comm_B14B23_H;
              d["bond_claims_hold"] = br.claims_hold;
              PlaquetteReport pr = fermionic_plaquettes();
              d["plaquette_scalars"] = pr.scalars;
              return d;
          },
          py::arg("couplings") = Couplings{});

    m.def("reduced_density",
          [](const Vec& psi, const std::vector<int>& keep) {
              return mat_rows(partial_trace(psi, keep).rho);
          },
          py::arg("psi"), py::arg("keep"));

    m.def("entropy",
          [](const Vec& psi, const std::vector<int>& keep, bool bits) {
              return von_neumann_entropy(partial_trace(psi, keep),
                                         bits ? LogBase::two : LogBase::e);
          },
          py::arg("psi"), py::arg("keep"), py::arg("bits") = false);

    m.def("tau", [](const Vec& psi) { return concurrence_tau(psi); }, py::arg("psi"),
          "four-spin concurrence");

    m.def("flip", [](const std::string& name) { return flip_all(paper_state(name)).amp; },
          py::arg("name"));

    m.def("verify",
          [](const Couplings& c) {
              VerifyReport r = verify_all(c);
              py::dict d;
              d["pass"] = r.pass;
              d["skipped"] = r.skipped;
              py::list checks;
              for (const auto& ck : r.checks) {
                  py::dict e;
                  e["name"] = ck.name;
                  e["pass"] = ck.pass;
                  e["value"] = ck.value;
                  e["gate"] = ck.gate;
                  checks.append(e);
              }
              d["checks"] = checks;
              return d;
          },
          py::arg("couplings") = Couplings{});
}
