#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtoda/flat_sections.hpp"
#include "qtoda/pipeline.hpp"
#include "qtoda/toda.hpp"

namespace py = pybind11;
using namespace qtoda;

namespace {

RootSystem make_rs(const std::string& type, int rank) {
  if (type.size() != 1 || !RootSystem::supported(type[0], rank))
    throw py::value_error("unsupported type " + type + std::to_string(rank));
  return RootSystem(type[0], rank);
}

py::list poly_terms(const SparsePoly& p) {
  py::list out;
  for (const auto& [m, c] : p.terms()) out.append(py::make_tuple(m.e, rat_to_string(c)));
  return out;
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["id"] = c.id;
  d["pass"] = c.pass;
  d["detail"] = c.detail;
  return d;
}

struct Session {
  RootSystem rs;
  WeylGroup W;
  InvariantSet inv;
  std::vector<NOElement> Om;
  std::vector<SparsePoly> F;
  SchubertBasis basis;
  std::vector<QMatrix> B;

  Session(const std::string& type, int rank)
      : rs(make_rs(type, rank)), W(WeylGroup::generate(rs)) {
    inv = chevalley_generators(rs, W);
    for (const auto& u : inv.u) Om.push_back(solve_Omega_k(rs, u));
    for (const auto& om : Om) F.push_back(split_F_f(om).F);
    basis = SchubertBasis::build(W);
    for (int i = 0; i < rank; ++i) B.push_back(quantum_chevalley(rs, W, basis, i));
  }

  py::list degrees() const {
    py::list out;
    for (int d : inv.degrees) out.append(d);
    return out;
  }

  py::list invariants() const {
    py::list out;
    for (const auto& u : inv.u) out.append(poly_terms(u));
    return out;
  }

  py::list conserved_quantities() const {
    py::list out;
    for (const auto& f : F) out.append(poly_terms(f));
    return out;
  }

  py::list quantum_matrix(int i) const {
    if (i < 0 || i >= static_cast<int>(B.size())) throw py::index_error();
    const QMatrix& m = B[static_cast<std::size_t>(i)];
    py::list rows;
    for (std::size_t r = 0; r < m.size(); ++r) {
      py::list row;
      for (std::size_t c = 0; c < m.size(); ++c) row.append(poly_terms(m(r, c)));
      rows.append(row);
    }
    return rows;
  }

  py::list verify_hypotheses_py() const {
    py::list out;
    for (const auto& c : qtoda::verify_hypotheses(rs, W, basis, B))
      out.append(check_dict(c));
    return out;
  }

  py::list verify_relations_py() const {
    py::list out;
    for (const auto& c : qtoda::verify_relations(F, B, rs, basis))
      out.append(check_dict(c));
    return out;
  }

  bool commutators_vanish() const {
    const DiffOp H = build_H(rs);
    for (const auto& om : Om)
      if (!commutator_diffop(rho_Dk(om, rs), H).is_zero()) return false;
    return true;
  }

  bool flat_sections_vanish(int order) const {
    PairingData pd = pairing_data(W, basis, B);
    const DiffOp H = build_H(rs);
    std::vector<DiffOp> D;
    for (const auto& om : Om) D.push_back(rho_Dk(om, rs));
    for (std::size_t a = 0; a < W.size(); ++a) {
      std::vector<Rational> e(W.size(), Rational(0));
      e[a] = 1;
      FormalSection s = solve_flat_section(pd.A, e, order);
      for (int i = 0; i < rs.rank(); ++i)
        if (!flat_residual(pd.A, s, static_cast<std::size_t>(i)).is_zero()) return false;
      if (!annihilation_check(H, s, basis).is_zero()) return false;
      for (const auto& d : D)
        if (!annihilation_check(d, s, basis).is_zero()) return false;
    }
    return true;
  }
};

}  // namespace

PYBIND11_MODULE(_qtoda, m) {
  m.doc() = "exact quantum Toda / quantum cohomology kernels";

  m.def("supported", [](const std::string& type, int rank) {
    return type.size() == 1 && RootSystem::supported(type[0], rank);
  });

  m.def("weyl_order", [](const std::string& type, int rank) {
    return WeylGroup::generate(make_rs(type, rank)).size();
  });

  m.def("cartan_matrix", [](const std::string& type, int rank) {
    RootSystem rs = make_rs(type, rank);
    py::list rows;
    for (int i = 0; i < rank; ++i) {
      py::list row;
      for (int j = 0; j < rank; ++j)
        row.append(rat_to_string(rs.cartan()(static_cast<std::size_t>(i),
                                             static_cast<std::size_t>(j))));
      rows.append(row);
    }
    return rows;
  });

  m.def("fundamental_degrees", [](const std::string& type, int rank) {
    RootSystem rs = make_rs(type, rank);
    return fundamental_degrees(rs, WeylGroup::generate(rs));
  });

  m.def("gram_positive_definite", [](const std::string& type, int rank) {
    return kim_lemma_certificate(make_rs(type, rank)).positive_definite;
  });

  m.def(
      "run_pipeline",
      [](const std::string& type, int rank, int order) {
        PipelineOptions opts;
        if (type.size() != 1) throw py::value_error("bad type");
        opts.type = type[0];
        opts.rank = rank;
        opts.order = order;
        PipelineReport r = run_pipeline(opts);
        py::dict d;
        d["pass"] = r.pass;
        d["report_json"] = r.to_json().dump(2);
        return d;
      },
      py::arg("type"), py::arg("rank"), py::arg("order") = 3);

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, int>(), py::arg("type"), py::arg("rank"))
      .def_property_readonly("rank", [](const Session& s) { return s.rs.rank(); })
      .def_property_readonly("weyl_order", [](const Session& s) { return s.W.size(); })
      .def("degrees", &Session::degrees)
      .def("invariants", &Session::invariants)
      .def("conserved_quantities", &Session::conserved_quantities)
      .def("quantum_matrix", &Session::quantum_matrix)
      .def("verify_hypotheses", &Session::verify_hypotheses_py)
      .def("verify_relations", &Session::verify_relations_py)
      .def("commutators_vanish", &Session::commutators_vanish)
      .def("flat_sections_vanish", &Session::flat_sections_vanish, py::arg("order") = 3);
}
