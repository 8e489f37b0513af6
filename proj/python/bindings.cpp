// Python bindings. Rationals cross the boundary as strings on the way in
// and as fractions.Fraction on the way out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hoffman/analyzer.hpp"
#include "hoffman/convex.hpp"
#include "hoffman/sampling.hpp"

namespace py = pybind11;

namespace {

using StrRows = std::vector<std::vector<std::string>>;
using StrVec = std::vector<std::string>;

py::object fraction(const hoffman::Scalar& s) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(s.str());
}

py::list fractions(const hoffman::Vec& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

hoffman::Vec to_vec(const StrVec& xs) {
  std::vector<hoffman::Scalar> entries;
  entries.reserve(xs.size());
  for (const auto& s : xs) entries.push_back(hoffman::Scalar::parse(s));
  return hoffman::Vec(std::move(entries));
}

std::vector<hoffman::Vec> to_points(const StrRows& rows) {
  std::vector<hoffman::Vec> out;
  for (const auto& r : rows) out.push_back(to_vec(r));
  return out;
}

hoffman::InequalitySystem to_system(const StrRows& a, const StrVec& b) {
  if (a.empty()) throw std::invalid_argument("A must have at least one row");
  const std::size_t n = a.front().size();
  for (const auto& r : a) {
    if (r.size() != n) throw std::invalid_argument("A must be rectangular");
  }
  return hoffman::InequalitySystem(hoffman::Mat(to_points(a), n), to_vec(b));
}

py::list one_based(const hoffman::IndexSet& s) { return py::cast(s.one_based()); }

hoffman::IndexSet from_one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> zero;
  for (auto i : idx) {
    if (i == 0) throw std::invalid_argument("indices are 1-based");
    zero.push_back(i - 1);
  }
  return hoffman::IndexSet(std::move(zero));
}

py::dict magnitude(const hoffman::SquaredMagnitude& v) {
  py::dict d;
  d["sign"] = std::string(hoffman::to_string(v.sign));
  d["value_sq"] = fraction(v.value_sq);
  d["approx"] = v.approx();
  return d;
}

py::object maybe_fraction(const std::optional<hoffman::Scalar>& s) {
  return s ? fraction(*s) : py::none();
}

hoffman::Level parse_level(const std::string& s) {
  if (s == "pos") return hoffman::Level::Positive;
  if (s == "zero") return hoffman::Level::Zero;
  throw std::invalid_argument("level must be 'pos' or 'zero'");
}

py::dict check_error_bound(const StrRows& a, const StrVec& b, bool full) {
  const auto v = hoffman::check_error_bound(to_system(a, b), {full});
  py::dict d;
  d["has_error_bound"] = v.has_error_bound;
  d["sigma_sq"] = maybe_fraction(v.sigma_sq);
  if (v.certificate) {
    py::dict c;
    c["point"] = fractions(v.certificate->point);
    c["active"] = one_based(v.certificate->active);
    c["hull_multipliers"] = fractions(v.certificate->hull_multipliers);
    d["certificate"] = c;
  } else {
    d["certificate"] = py::none();
  }
  d["checked_sets"] = v.checked_sets;
  return d;
}

py::dict check_stability(const StrRows& a, const StrVec& b) {
  const auto v = hoffman::check_stability(to_system(a, b));
  py::dict d;
  d["stable"] = v.stable;
  d["violating_set"] = v.violating_set ? py::object(one_based(*v.violating_set)) : py::none();
  d["lower_bound_sq"] = maybe_fraction(v.lower_bound_sq);
  d["checked_sets"] = v.checked_sets;
  return d;
}

py::dict hoffman_exact(const StrRows& a, const StrVec& b) {
  const auto h = hoffman::hoffman_exact(to_system(a, b));
  py::dict d;
  switch (h.kind) {
    case hoffman::HoffmanConstant::Kind::Finite:
      d["kind"] = "finite";
      d["sigma_sq"] = fraction(h.sigma_sq);
      break;
    case hoffman::HoffmanConstant::Kind::Infinite:
      d["kind"] = "infinite";
      d["sigma_sq"] = py::none();
      break;
    case hoffman::HoffmanConstant::Kind::NoErrorBound:
      d["kind"] = "no_error_bound";
      d["sigma_sq"] = py::none();
      break;
  }
  return d;
}

py::list enumerate_sets(const StrRows& a, const StrVec& b, const std::string& level) {
  const auto fam = hoffman::enumerate(to_system(a, b), parse_level(level));
  py::list out;
  for (const auto& s : fam.sets) out.append(one_based(s));
  return out;
}

bool verify_certificate(const StrRows& a, const StrVec& b, const StrVec& point,
                        const std::vector<std::size_t>& active, const StrVec& multipliers) {
  try {
    return hoffman::verify_certificate(to_system(a, b),
                                       {to_vec(point), from_one_based(active), to_vec(multipliers)});
  } catch (const std::invalid_argument&) {
    return false;
  }
}

py::dict perturb(const StrRows& a, const StrVec& b, const std::string& eps, const StrVec& u,
                 const StrVec& x_bar) {
  const auto out = hoffman::perturb(to_system(a, b), {hoffman::Scalar::parse(eps), to_vec(u), to_vec(x_bar)});
  py::list rows;
  for (std::size_t i = 0; i < out.m(); ++i) rows.append(fractions(out.row(i)));
  py::dict d;
  d["A"] = rows;
  d["b"] = fractions(out.b());
  return d;
}

py::object perturbation_ratio(const StrRows& a, const StrVec& b, const StrVec& x) {
  return fraction(hoffman::perturbation_ratio(to_system(a, b), to_vec(x)));
}

py::object estimate_sigma(const StrRows& a, const StrVec& b, std::size_t samples, std::uint64_t seed,
                          double box) {
  const auto est = hoffman::estimate_sigma(to_system(a, b), {samples, seed, box});
  return est.sigma ? py::object(py::float_(*est.sigma)) : py::none();
}

double sample_minmax(const StrRows& points, std::size_t samples, std::uint64_t seed) {
  const auto pts = to_points(points);
  return hoffman::sample_minmax(pts, {samples, seed, 10.0});
}

py::dict minmax_value_sq(const StrRows& points) {
  const auto pts = to_points(points);
  return magnitude(hoffman::minmax_value_sq(pts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact error-bound analysis of A x <= b";
  m.def("check_error_bound", &check_error_bound, py::arg("A"), py::arg("b"), py::arg("full") = false);
  m.def("check_stability", &check_stability, py::arg("A"), py::arg("b"));
  m.def("hoffman_exact", &hoffman_exact, py::arg("A"), py::arg("b"));
  m.def("enumerate", &enumerate_sets, py::arg("A"), py::arg("b"), py::arg("level"));
  m.def("verify_certificate", &verify_certificate, py::arg("A"), py::arg("b"), py::arg("point"),
        py::arg("active"), py::arg("multipliers"));
  m.def("perturb", &perturb, py::arg("A"), py::arg("b"), py::arg("eps"), py::arg("u"), py::arg("x_bar"));
  m.def("perturbation_ratio", &perturbation_ratio, py::arg("A"), py::arg("b"), py::arg("x"));
  m.def("estimate_sigma", &estimate_sigma, py::arg("A"), py::arg("b"), py::arg("samples") = 100000,
        py::arg("seed") = 1, py::arg("box") = 10.0);
  m.def("sample_minmax", &sample_minmax, py::arg("points"), py::arg("samples") = 100000, py::arg("seed") = 1);
  m.def("minmax_value_sq", &minmax_value_sq, py::arg("points"));
}
