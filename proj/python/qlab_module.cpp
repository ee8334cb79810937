#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qlab/catalog.hpp"
#include "qlab/partitions.hpp"
#include "qlab/registry.hpp"

namespace py = pybind11;

namespace {

qlab::SeriesId series_id_of(const std::string& name) {
  if (name == "f1") return qlab::SeriesId::F1;
  if (name == "f2") return qlab::SeriesId::F2;
  if (name == "g") return qlab::SeriesId::G;
  throw py::value_error("series must be one of 'f1', 'f2', 'g'");
}

py::dict report_dict(const qlab::VerificationReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["order"] = r.order;
  d["status"] = qlab::to_string(r.status);
  d["severity"] = qlab::to_string(r.severity);
  d["first_mismatch"] = r.first_mismatch ? py::object(py::int_(*r.first_mismatch)) : py::none();
  d["lhs_coeff"] = r.lhs_coeff ? py::object(py::str(qlab::to_string(*r.lhs_coeff))) : py::none();
  d["rhs_coeff"] = r.rhs_coeff ? py::object(py::str(qlab::to_string(*r.rhs_coeff))) : py::none();
  d["wall_ms"] = r.wall_ms;
  d["message"] = r.message;
  return d;
}

}  // namespace

PYBIND11_MODULE(qlab, m) {
  m.doc() = "Exact q-series identity laboratory: truncated Laurent expansion, "
            "identity verification, and partition-enumeration oracles.";

  m.def(
      "expand",
      [](const std::string& name, long order, std::optional<long> mm) {
        if (order < 0 || order > qlab::kOrderSafetyCap)
          throw py::value_error("order outside [0, " + std::to_string(qlab::kOrderSafetyCap) + "]");
        qlab::LaurentSeries s = qlab::expand_named(name, mm, order);
        py::list coeffs;
        for (long e = 0; e <= order; ++e) {
          if (s.is_zero() || e < s.offset())
            coeffs.append(py::str("0"));
          else
            coeffs.append(py::str(qlab::to_string(s.coeff_at(e))));
        }
        return coeffs;
      },
      py::arg("name"), py::arg("order"), py::arg("m") = std::nullopt,
      "Coefficients of q^0..q^order of a named series, as exact decimal strings.");

  m.def(
      "expandable_names",
      [] {
        py::list names;
        for (const auto& n : qlab::expandable_names())
          names.append(py::make_tuple(n.name, n.takes_m));
        return names;
      },
      "All (name, takes_m) pairs accepted by expand().");

  m.def(
      "verify",
      [](const std::string& id, std::optional<long> order) {
        return report_dict(qlab::identity_registry().verify(id, order));
      },
      py::arg("id"), py::arg("order") = std::nullopt,
      "Verify one registered identity; returns a report dict.");

  m.def(
      "verify_all",
      [](std::optional<long> order, int jobs) {
        py::list out;
        for (const auto& r : qlab::identity_registry().verify_all(order, jobs))
          out.append(report_dict(r));
        return out;
      },
      py::arg("order") = std::nullopt, py::arg("jobs") = 1,
      "Verify the whole catalog; returns report dicts in catalog order.");

  m.def(
      "list_identities",
      [] {
        py::list out;
        for (const auto& rec : qlab::identity_registry().records()) {
          py::dict d;
          d["id"] = rec.id;
          d["anchor"] = rec.anchor;
          d["default_order"] = rec.default_order;
          d["severity"] = qlab::to_string(rec.severity);
          out.append(d);
        }
        return out;
      },
      "Catalog summary: id, anchor, default order, severity.");

  m.def(
      "representation_count",
      [](const std::string& series, long N) { return qlab::representation_count(series_id_of(series), N); },
      py::arg("series"), py::arg("n"),
      "Signed representation count of N by direct enumeration (no series arithmetic).");

  m.def(
      "f1_partition_scan", &qlab::f1_partition_scan, py::arg("n"),
      "Second, membership-test-based oracle for the f1 coefficient of q^n.");

  m.def(
      "enumerate_representations",
      [](const std::string& series, long N) {
        py::list out;
        for (const auto& rep : qlab::enumerate_representations(series_id_of(series), N)) {
          py::dict d;
          d["k"] = rep.k;
          d["n"] = rep.n;
          d["evens"] = rep.evens;
          d["odds"] = rep.odds;
          d["sign"] = rep.sign;
          out.append(d);
        }
        return out;
      },
      py::arg("series"), py::arg("n"),
      "All signed representations of N, ordered by (n, k, evens, odds).");
}
