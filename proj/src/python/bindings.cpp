#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicfm/oracle.hpp"

namespace py = pybind11;
using namespace cubicfm;

namespace {

// Python-facing values stay in plain types: ints, strings for rationals and
// bignums, lists of lists for matrices.
std::string rat_str(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

std::vector<std::vector<std::string>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i].push_back(m.at(i, j).get_str());
  }
  return out;
}

IntMatrix matrix_from(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

py::dict count_dict(const CountReport& r) {
  py::dict d;
  d["d"] = r.d;
  d["kappa"] = r.kappa ? py::object(py::int_(*r.kappa)) : py::none();
  d["c"] = r.c ? py::object(py::int_(*r.c)) : py::none();
  d["m"] = r.m ? py::object(py::int_(*r.m)) : py::none();
  d["p_cubic"] = r.p_cubic ? py::object(py::int_(*r.p_cubic)) : py::none();
  d["m_prime"] = r.m_prime ? py::object(py::int_(*r.m_prime)) : py::none();
  d["lower_bound_cubic"] = r.lower_bound_cubic
                               ? py::object(py::int_(*r.lower_bound_cubic))
                               : py::none();
  d["branch"] = r.branch;
  d["h"] = r.h;
  d["closed_form_applies"] = r.closed_form_applies;
  d["closed_form"] =
      r.closed_form ? py::object(py::int_(*r.closed_form)) : py::none();
  return d;
}

py::dict adm_dict(const AdmissibilityReport& r) {
  py::dict d;
  d["d"] = r.d;
  d["d_mod_6"] = r.d_mod_6;
  d["cd_nonempty"] = r.cd_nonempty;
  d["has_k3"] = r.has_k3;
  d["has_twisted_k3"] = r.has_twisted_k3;
  d["reasons"] = r.reasons;
  return d;
}

py::dict verification_dict(const VerificationResult& r) {
  py::dict d;
  d["check_name"] = r.check_name;
  d["d"] = r.d ? py::object(py::int_(*r.d)) : py::none();
  d["kappa"] = r.kappa ? py::object(py::int_(*r.kappa)) : py::none();
  d["passed"] = r.passed;
  d["expected"] = r.expected;
  d["actual"] = r.actual;
  return d;
}

py::dict lattice_dict(const Lattice& l) {
  py::dict d;
  d["rank"] = l.rank();
  d["gram"] = matrix_rows(l.gram());
  d["det"] = l.det().get_str();
  d["even"] = l.is_even();
  auto [pos, neg] = signature(l);
  d["signature"] = py::make_tuple(pos, neg);
  return d;
}

}  // namespace

PYBIND11_MODULE(_cubicfm, mod) {
  mod.doc() =
      "Exact lattice arithmetic for special cubic fourfolds: associated "
      "(twisted) K3 surfaces and Fourier-Mukai partner counts.";

  py::register_exception<inadmissible_error>(mod, "InadmissibleError",
                                             PyExc_ValueError);
  py::register_exception<invalid_kappa_error>(mod, "InvalidKappaError",
                                              PyExc_ValueError);

  mod.def("cd_nonempty", &cd_nonempty, py::arg("d"));
  mod.def("has_associated_k3", &has_associated_k3, py::arg("d"));
  mod.def("has_associated_twisted_k3", &has_associated_twisted_k3,
          py::arg("d"));
  mod.def(
      "admissibility", [](long long d) { return adm_dict(admissibility(d)); },
      py::arg("d"));

  mod.def(
      "cubic_fm_count",
      [](long long d) { return count_dict(cubic_fm_count(d)); }, py::arg("d"));
  mod.def(
      "twisted_fm_count",
      [](long long d, long long kappa) {
        return count_dict(twisted_fm_count(d, kappa));
      },
      py::arg("d"), py::arg("kappa"));
  mod.def("twisted_decomposition", &twisted_decomposition, py::arg("d"),
          py::arg("kappa"));
  mod.def("valid_kappas", &valid_kappas, py::arg("d"));
  mod.def("oguiso_count", &oguiso_count, py::arg("degree"));
  mod.def("euler_phi", &euler_phi, py::arg("n"));
  mod.def(
      "ma_bound_generic",
      [](long long d, long long kappa) { return ma_bound_generic(d, kappa); },
      py::arg("d"), py::arg("kappa"));

  mod.def(
      "special_vector",
      [](long long d) {
        std::vector<std::string> out;
        for (const auto& x : special_vector(d)) out.push_back(x.get_str());
        return out;
      },
      py::arg("d"));
  mod.def(
      "kd_perp_gram",
      [](long long d) { return matrix_rows(kd_perp(d).gram()); }, py::arg("d"));
  mod.def(
      "verify_kdperp_discriminant",
      [](long long d) {
        KdPerpReport r = verify_kdperp_discriminant(d);
        py::dict out;
        out["d"] = r.d;
        out["group_ok"] = r.group_ok;
        out["cyclic"] = r.cyclic;
        out["cyclic_expected"] = r.cyclic_expected;
        out["generator_q_found"] = r.generator_q_found;
        out["component_values_ok"] = r.component_values_ok;
        out["passed"] = r.passed;
        out["detail"] = r.detail;
        return out;
      },
      py::arg("d"));

  mod.def(
      "lattice_info",
      [](const std::string& name) { return lattice_dict(standard(name)); },
      py::arg("name"));
  mod.def("standard_names", &standard_names);
  mod.def(
      "discriminant_form",
      [](const std::vector<std::vector<long long>>& gram) {
        Lattice l(matrix_from(gram));
        DiscForm df = discriminant_group(l);
        py::dict out;
        std::vector<std::string> divs;
        for (const auto& n : df.elementary_divisors())
          divs.push_back(n.get_str());
        out["elementary_divisors"] = divs;
        out["order"] = df.order().get_str();
        out["even"] = df.even();
        if (df.even()) {
          std::vector<std::string> qs;
          for (std::size_t i = 0; i < df.elementary_divisors().size(); ++i) {
            std::vector<mpz_class> x(df.elementary_divisors().size(), 0);
            x[i] = 1;
            qs.push_back(rat_str(df.q(x)));
          }
          out["q_on_generators"] = qs;
        }
        return out;
      },
      py::arg("gram"));

  mod.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& a) {
        SmithDecomposition s = smith_normal_form(matrix_from(a));
        return py::make_tuple(matrix_rows(s.u), matrix_rows(s.s),
                              matrix_rows(s.v));
      },
      py::arg("a"));
  mod.def(
      "determinant",
      [](const std::vector<std::vector<long long>>& a) {
        return determinant(matrix_from(a)).get_str();
      },
      py::arg("a"));

  mod.def(
      "verify",
      [](long long d_max, long long kappa_max) {
        std::vector<py::dict> out;
        for (const auto& r : run_all(d_max, kappa_max))
          out.push_back(verification_dict(r));
        return out;
      },
      py::arg("d_max") = 1000, py::arg("kappa_max") = 13);
}
