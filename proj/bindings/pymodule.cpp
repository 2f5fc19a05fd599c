// Python bindings for the main operations: the verification registry,
// lattice invariants, polynomial canonicalization, and the cubic-4-fold
// pipeline.  Exact rationals cross the boundary as strings so no precision
// is ever lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "hk4/charclass.hpp"
#include "hk4/checks.hpp"
#include "hk4/cubic4fold.hpp"
#include "hk4/lattice.hpp"
#include "hk4/multipoly.hpp"
#include "hk4/polygeom.hpp"
#include "hk4/rational.hpp"
#include "hk4/sym2.hpp"
#include "hk4/unipoly.hpp"

namespace py = pybind11;
using namespace hk4;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    try {
      out.emplace_back(x);
    } catch (const std::exception&) {
      throw ParseError("bad rational literal: " + x);
    }
  }
  return out;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

py::dict record_dict(const CheckRecord& r) {
  py::dict d;
  d["id"] = r.id;
  d["anchor"] = r.anchor;
  d["expected"] = r.expected;
  d["computed"] = r.computed;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hk4, m) {
  m.doc() = "exact-arithmetic verification engine: rank-23 lattice model and "
            "singular cubic 4-folds";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  // ---- verification registry -----------------------------------------------
  m.def(
      "run_checks",
      [](const std::string& scope, std::uint64_t seed, int box, int truncation) {
        CheckOptions opts;
        opts.seed = seed;
        opts.box = box;
        opts.truncation = truncation;
        py::list out;
        for (const auto& r : run_checks(scope, opts)) out.append(record_dict(r));
        return out;
      },
      py::arg("scope") = "all", py::arg("seed") = 1, py::arg("box") = 3,
      py::arg("truncation") = -1,
      "Run the verification registry for a scope (all | lattice | sym2 | "
      "charclass | cubic); returns a list of record dicts.");
  m.def("report_axioms", &report_axioms, "Model axioms echoed in report headers.");

  // ---- lattices -------------------------------------------------------------
  m.def(
      "lattice_info",
      [](const std::string& expr) {
        Lattice l = parse_lattice_expr(expr);
        Inertia sig = signature(l);
        py::dict d;
        d["expr"] = l.expr;
        d["rank"] = l.rank();
        d["signature"] = py::make_tuple(sig.pos, sig.neg);
        d["disc"] = disc(l).str();
        py::list fs;
        for (const auto& f : lattice_invariant_factors(l)) fs.append(f.str());
        d["invariant_factors"] = fs;
        return d;
      },
      py::arg("expr"),
      "Invariants of a lattice expression such as 'U + E8(-1) + <-2>'.");

  // ---- polynomials -----------------------------------------------------------
  m.def(
      "canonical_poly",
      [](const std::string& text, int nvars) {
        return MultiPoly::parse(text, nvars).to_string();
      },
      py::arg("text"), py::arg("nvars"),
      "Parse a polynomial and return its canonical text form (exact round trip).");
  m.def(
      "eval_poly",
      [](const std::string& text, int nvars, const std::vector<std::string>& point) {
        return MultiPoly::parse(text, nvars).eval(to_rationals(point)).str();
      },
      py::arg("text"), py::arg("nvars"), py::arg("point"),
      "Evaluate a polynomial at a rational point; coordinates and result are "
      "strings like '-5/3'.");

  // ---- cubic pipeline ---------------------------------------------------------
  m.def(
      "adapt_to_node",
      [](const std::string& cubic_text, const std::vector<std::string>& point,
         std::uint64_t seed) {
        MultiPoly cubic = MultiPoly::parse(cubic_text, 6);
        CubicWithNode c = adapt_to_node(cubic, make_proj_point(to_rationals(point)), seed);
        py::dict d;
        d["f"] = c.f.to_string();
        d["g"] = c.g.to_string();
        d["no_common_factor_on_line"] = c.no_common_factor_on_line;
        return d;
      },
      py::arg("cubic"), py::arg("point"), py::arg("seed") = 1,
      "Move a double point of a cubic in 6 variables to [0,...,0,1]; returns "
      "the quadric F and cubic G with cubic = F*X5 + G.");
  m.def(
      "du_val_check",
      [](const std::string& curve_text, const std::vector<std::string>& point) {
        return du_val_plane_criterion(MultiPoly::parse(curve_text, 3),
                                      make_proj_point(to_rationals(point)));
      },
      py::arg("curve"), py::arg("point"),
      "Double-point acceptance test for a plane curve at a rational point.");
  m.def(
      "two_node_quartic",
      [](const std::string& cubic_text, std::uint64_t seed) {
        TwoNodeData td = two_node_discriminant(MultiPoly::parse(cubic_text, 6), seed);
        py::dict d;
        d["p"] = td.p.to_string();
        d["det_identity"] = td.det_identity;
        d["gradient_identity"] = td.gradient_identity;
        d["reconstructs"] = td.reconstructs;
        return d;
      },
      py::arg("cubic"), py::arg("seed") = 1,
      "Discriminant quartic P with det M = Fhat * P for a cubic with double "
      "points at [0,0,0,0,1,0] and [0,0,0,0,0,1].");
  m.def(
      "yg_fit",
      [](const std::vector<std::vector<std::string>>& net, std::uint64_t seed) {
        if (net.size() != 3) throw ParseError("net must consist of 3 binary cubics");
        std::array<BinaryForm, 3> basis;
        for (int i = 0; i < 3; ++i) {
          auto coeffs = to_rationals(net[i]);
          if (coeffs.size() != 4)
            throw ParseError("each binary cubic needs 4 coefficients");
          basis[i] = make_binary_form(coeffs, 3);
        }
        YgFit fit = y_g_fit(make_net(basis), seed);
        py::dict d;
        d["cubic"] = fit.cubic.to_string();
        d["kernel_dim"] = fit.kernel_dim;
        d["double_vanish_on_curve"] = fit.double_vanish_on_curve;
        d["in_double_kernel"] = fit.in_double_kernel;
        d["cone_space_dim"] = fit.cone_space_dim;
        d["cone_vertex"] = from_rationals(fit.cone_vertex);
        d["content_hash"] = fit.content_hash;
        return d;
      },
      py::arg("net"), py::arg("seed") = 1,
      "Interpolate the cubic swept by the chord-planes of a net of binary "
      "cubics; each net entry is the coefficient list [c0, c1, c2, c3] of "
      "c0*s^3 + c1*s^2 t + c2*s t^2 + c3*t^3.");
  m.def("chord_secant_degree",
        [](int d, int g) { return static_cast<long long>(chord_secant_degree(d, g)); },
        py::arg("d"), py::arg("g"),
        "Degree (d-1)(d-2)/2 - g of the chord variety of a degree-d genus-g curve.");
  m.def(
      "tantipiani_example",
      [] {
        TantipianiReport t = tantipiani_example();
        py::dict d;
        d["rank_f"] = t.rank_f;
        d["rank_g"] = t.rank_g;
        d["delta_degree"] = t.delta.degree();
        d["delta_nonconstant"] = t.delta_nonconstant;
        d["sample_root"] = t.sample_root.str();
        d["jacobian_rank_at_point"] = t.jacobian_rank_at_point;
        return d;
      },
      "The worked two-quadric cubic: rank pair, pencil discriminant data.");

  m.attr("__version__") = "1.0.0";
}
