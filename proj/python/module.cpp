#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "colexlab/decode.hpp"
#include "colexlab/gates.hpp"
#include "colexlab/thermal.hpp"

namespace py = pybind11;
using namespace colexlab;

namespace {

std::vector<std::size_t> indices_of(const BitChain& c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.get(i)) out.push_back(i);
    return out;
}

BitChain chain_from(std::size_t n, const std::vector<std::size_t>& idx) {
    return BitChain::from_indices(n, idx);
}

Pauli pauli_from(std::size_t n, const std::vector<std::size_t>& xs,
                 const std::vector<std::size_t>& zs) {
    return Pauli(chain_from(n, xs), chain_from(n, zs));
}

SyndromeType type_from(const std::string& s) {
    if (s == "X" || s == "x") return SyndromeType::X;
    if (s == "Z" || s == "z") return SyndromeType::Z;
    throw py::value_error("syndrome type must be 'X' or 'Z'");
}

struct PyCode {
    std::shared_ptr<CssCode> code;
};

PyCode make_simplicial(int D) {
    Colex cx = puncture(build_hypercube_colex(D));
    auto code = std::make_shared<CssCode>(color_code(cx, D - 1));
    install_min_weight_decoder(*code, 3);
    return {code};
}

PyCode make_toric(int D, int L, int d) {
    auto code = std::make_shared<CssCode>(toric_code(D, L, d));
    install_toric_decoder(*code);
    return {code};
}

std::vector<std::vector<std::size_t>> supports(const std::vector<Pauli>& ps,
                                               bool x_part) {
    std::vector<std::vector<std::size_t>> out;
    for (const Pauli& p : ps) out.push_back(indices_of(x_part ? p.x : p.z));
    return out;
}

} // namespace

PYBIND11_MODULE(colexlab, m) {
    m.doc() = "Stabilizer codes from lattice homology: construction, thermal "
              "syndrome statistics, and transversal-gate certification";

    py::class_<PyCode>(m, "Code")
        .def_property_readonly("n", [](const PyCode& c) { return c.code->n; })
        .def_property_readonly("k", [](const PyCode& c) { return c.code->k(); })
        .def_property_readonly(
            "x_stabilizers",
            [](const PyCode& c) { return supports(c.code->x_gens, true); })
        .def_property_readonly(
            "z_stabilizers",
            [](const PyCode& c) { return supports(c.code->z_gens, false); })
        .def_property_readonly(
            "logical_x",
            [](const PyCode& c) { return supports(c.code->logical_x, true); })
        .def_property_readonly(
            "logical_z",
            [](const PyCode& c) { return supports(c.code->logical_z, false); })
        .def("distance",
             [](const PyCode& c, std::size_t w_max) -> py::object {
                 auto d = distance(*c.code, w_max);
                 if (!d) return py::none();
                 return py::cast(*d);
             },
             py::arg("w_max"))
        .def("syndrome",
             [](const PyCode& c, const std::vector<std::size_t>& xs,
                const std::vector<std::size_t>& zs) {
                 auto [sx, sz] = syndrome_of(*c.code, pauli_from(c.code->n, xs, zs));
                 return py::make_tuple(indices_of(sx.bits), indices_of(sz.bits));
             },
             py::arg("x_support"), py::arg("z_support"))
        .def("correction",
             [](const PyCode& c, const std::vector<std::size_t>& bits,
                const std::string& type) -> py::object {
                 const SyndromeType ty = type_from(type);
                 const std::size_t g = ty == SyndromeType::X
                                           ? c.code->x_basis.size()
                                           : c.code->z_basis.size();
                 auto corr = c.code->corr({chain_from(g, bits), ty});
                 if (!corr) return py::none();
                 return py::make_tuple(indices_of(corr->x), indices_of(corr->z));
             },
             py::arg("bits"), py::arg("type"));

    m.def("simplicial_code", &make_simplicial, py::arg("D"),
          "Punctured hypercube color code in D dimensions");
    m.def("toric_code", &make_toric, py::arg("D"), py::arg("L"), py::arg("d"),
          "Generalized toric code on a D-torus of size L with d-cell qubits");

    m.def("p_crit",
          [](const PyCode& c, double beta, std::size_t samples,
             std::uint64_t seed) {
              ThermalModel mdl = make_thermal_model(c.code, beta);
              SamplerParams sp;
              sp.samples = samples;
              sp.seed = seed;
              auto r = estimate_p_crit(mdl, c.code->logical_z[0], sp);
              return py::make_tuple(r.estimate, r.stderr_);
          },
          py::arg("code"), py::arg("beta"), py::arg("samples") = 10000,
          py::arg("seed") = 1,
          "Monte Carlo weight of the critical syndrome sector");
    m.def("p_crit_exact",
          [](const PyCode& c, double beta) {
              ThermalModel mdl = make_thermal_model(c.code, beta);
              return gibbs_exact(mdl, c.code->logical_z[0]);
          },
          py::arg("code"), py::arg("beta"));
    m.def("memory_overlap",
          [](const PyCode& c, double beta, double p, std::size_t samples,
             std::uint64_t seed) {
              ThermalModel mdl = make_thermal_model(c.code, beta);
              SamplerParams sp;
              sp.samples = samples;
              sp.seed = seed;
              auto r = depolarize_overlap(mdl, c.code->logical_z[0], p, sp);
              return py::make_tuple(r.estimate, r.stderr_);
          },
          py::arg("code"), py::arg("beta"), py::arg("p"),
          py::arg("samples") = 10000, py::arg("seed") = 1);

    m.def("is_good",
          [](int D, int j, int k, const std::string& method) {
              Colex cx = build_hypercube_colex(D);
              if (method == "bruteforce") return is_good_bruteforce(cx, j, k).verdict;
              if (method == "theorem") return is_good_theorem(cx, j, k).verdict;
              throw py::value_error("method must be 'bruteforce' or 'theorem'");
          },
          py::arg("D"), py::arg("j"), py::arg("k"),
          py::arg("method") = "theorem",
          "Goodness of the D-hypercube colex at level (j, k)");

    m.def("transversal_clifford",
          [](const PyCode& c, const std::string& gate) {
              TransversalGate g;
              if (gate == "H") g = TransversalGate::AllH;
              else if (gate == "X") g = TransversalGate::AllX;
              else if (gate == "Z") g = TransversalGate::AllZ;
              else if (gate == "R1") g = TransversalGate::AllR1;
              else if (gate == "CNOT") g = TransversalGate::PairCnot;
              else throw py::value_error("gate must be H, X, Z, R1 or CNOT");
              if (!check_transversal_clifford(*c.code, g))
                  return py::make_tuple(false, py::none(), py::none());
              auto act = apply_transversal_clifford(*c.code, g);
              std::vector<std::vector<std::size_t>> images;
              for (const BitChain& img : act.images) images.push_back(indices_of(img));
              return py::make_tuple(true, py::cast(images), py::cast(act.phases));
          },
          py::arg("code"), py::arg("gate"),
          "(preserved, logical images, phases) of a transversal gate");
    m.def("transversal_rk",
          [](const PyCode& c, int k) {
              auto r = apply_transversal_rk(*c.code, k);
              return py::make_tuple(r.preserved, r.s);
          },
          py::arg("code"), py::arg("k"));
}
