#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "tritangent/asymptotics.hpp"
#include "tritangent/characterize.hpp"
#include "tritangent/cli.hpp"
#include "tritangent/construction.hpp"
#include "tritangent/curve.hpp"
#include "tritangent/errors.hpp"
#include "tritangent/ingest.hpp"

namespace py = pybind11;
using namespace tritangent;

namespace {

// Thin handle wrappers keep the shared_ptr<const T> ownership out of the
// binding layer.
struct PyCurve {
  CurveModel m;
};

struct PyGraph {
  std::shared_ptr<const LocalGraph> g;
};

py::tuple pt(Point2 p) { return py::make_tuple(p.x, p.y); }

Point2 as_point(py::sequence s) {
  if (py::len(s) != 2) throw py::value_error("expected an (x, y) pair");
  return {s[0].cast<double>(), s[1].cast<double>()};
}

const SampledCurve* as_sampled(const PyCurve& c) {
  return dynamic_cast<const SampledCurve*>(c.m.get());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "chord and tangent constructions on strictly convex plane curves";

  py::register_exception<Error>(m, "Error");

  py::class_<PyGraph>(m, "LocalGraph")
      .def("value", [](const PyGraph& g, double x) { return g.g->value(x); })
      .def("slope", [](const PyGraph& g, double x) { return g.g->slope(x); })
      .def("second_derivative",
           [](const PyGraph& g, double x) { return g.g->second_derivative(x); })
      .def("third_derivative_at_origin",
           [](const PyGraph& g) -> py::object {
             auto d = g.g->third_derivative_at_origin();
             return d ? py::cast(*d) : py::none();
           })
      .def_property_readonly("x_lo",
                             [](const PyGraph& g) { return g.g->x_lo(); })
      .def_property_readonly("x_hi",
                             [](const PyGraph& g) { return g.g->x_hi(); })
      .def_property_readonly(
          "height_sup", [](const PyGraph& g) { return g.g->height_sup(); })
      .def_property_readonly("scale",
                             [](const PyGraph& g) { return g.g->scale(); })
      .def_property_readonly("curvature_at_origin", [](const PyGraph& g) {
        return g.g->curvature_at_origin();
      });

  py::class_<PyCurve>(m, "Curve")
      .def("scale", [](const PyCurve& c) { return c.m->scale(); })
      .def("param_range", [](const PyCurve& c) { return c.m->param_range(); })
      .def("recommended_params",
           [](const PyCurve& c) { return c.m->recommended_params(); })
      .def("point_at",
           [](const PyCurve& c, double u) { return pt(c.m->point_at(u)); })
      .def("tangent_at",
           [](const PyCurve& c, double u) {
             return pt(c.m->tangent_at_param(u));
           })
      .def("curvature_at",
           [](const PyCurve& c, double u) {
             return c.m->curvature_at_param(u);
           })
      .def("param_of",
           [](const PyCurve& c, py::sequence p, double tol) {
             return c.m->param_of(as_point(p), tol);
           },
           py::arg("point"), py::arg("tol") = 0.0)
      .def("graph_at",
           [](const PyCurve& c, double u) {
             return PyGraph{c.m->graph_at_param(u)};
           })
      .def_property_readonly(
          "is_sampled", [](const PyCurve& c) { return as_sampled(c) != nullptr; })
      .def("noise_estimate", [](const PyCurve& c) {
        const SampledCurve* s = as_sampled(c);
        if (!s) fail(Errc::BadParameter, "noise estimate needs a sampled model");
        return s->noise_estimate();
      });

  m.def("make_parabola",
        [](double a, double b) { return PyCurve{make_parabola(a, b)}; },
        py::arg("a"), py::arg("b"));
  m.def("make_circle", [](double r) { return PyCurve{make_circle(r)}; },
        py::arg("r"));
  m.def("make_ellipse",
        [](double p, double q) { return PyCurve{make_ellipse(p, q)}; },
        py::arg("p"), py::arg("q"));
  m.def("make_transformed",
        [](const PyCurve& base, double angle, py::sequence shift) {
          return PyCurve{make_transformed(base.m, angle, as_point(shift))};
        },
        py::arg("base"), py::arg("angle"), py::arg("shift"));
  m.def("make_convex_graph",
        [](py::function f, py::function df, py::function d2f, py::object d3f,
           double lo, double hi) {
          auto wrap = [](py::function fn) -> GraphFn {
            return [fn](double x) { return fn(x).cast<double>(); };
          };
          GraphFn third;
          if (!d3f.is_none()) third = wrap(d3f.cast<py::function>());
          return PyCurve{make_convex_graph(wrap(f), wrap(df), wrap(d2f), third,
                                           lo, hi)};
        },
        py::arg("f"), py::arg("df"), py::arg("d2f"), py::arg("d3f"),
        py::arg("lo"), py::arg("hi"));

  py::class_<PointCloud>(m, "PointCloud")
      .def_property_readonly("points",
                             [](const PointCloud& c) {
                               py::list out;
                               for (auto p : c.points) out.append(pt(p));
                               return out;
                             })
      .def_readonly("source", &PointCloud::source);

  m.def("load_points",
        [](const std::string& path) { return load_points_file(path); },
        py::arg("path"));
  m.def("load_points_text",
        [](const std::string& text, const std::string& source) {
          std::istringstream in(text);
          return load_points(in, source);
        },
        py::arg("text"), py::arg("source") = std::string("<string>"));
  m.def("fit_local_model",
        [](const PointCloud& cloud, int window) {
          return PyCurve{fit_local_model(cloud, window)};
        },
        py::arg("cloud"), py::arg("window") = 16);

  py::class_<Figure>(m, "Figure")
      .def_property_readonly("p", [](const Figure& f) { return pt(f.p); })
      .def_property_readonly("a1", [](const Figure& f) { return pt(f.a1); })
      .def_property_readonly("a2", [](const Figure& f) { return pt(f.a2); })
      .def_property_readonly("b", [](const Figure& f) { return pt(f.b); })
      .def_property_readonly("b1", [](const Figure& f) { return pt(f.b1); })
      .def_property_readonly("b2", [](const Figure& f) { return pt(f.b2); })
      .def_readonly("s", &Figure::s)
      .def_readonly("t", &Figure::t)
      .def_readonly("h", &Figure::h)
      .def_readonly("slope_s", &Figure::slope_s)
      .def_readonly("slope_t", &Figure::slope_t);

  py::class_<Measures>(m, "Measures")
      .def_readonly("L", &Measures::L)
      .def_readonly("ell", &Measures::ell)
      .def_readonly("T", &Measures::T)
      .def_readonly("U", &Measures::U)
      .def_readonly("V", &Measures::V)
      .def_readonly("W", &Measures::W)
      .def_readonly("S", &Measures::S)
      .def_readonly("alpha", &Measures::alpha);

  m.def("figure",
        [](const PyCurve& c, double u, double h) {
          return build_figure(*c.m, c.m->point_at(u), h);
        },
        py::arg("curve"), py::arg("u"), py::arg("h"));
  m.def("measures",
        [](const PyCurve& c, double u, double h, double quad_tol) {
          return measure_at(*c.m->graph_at_param(u), h, quad_tol);
        },
        py::arg("curve"), py::arg("u"), py::arg("h"),
        py::arg("quad_tol") = 1e-10);
  m.def("sector_area",
        [](const PyCurve& c, double u, double h, double tol) {
          return sector_area(*c.m->graph_at_param(u), h, tol);
        },
        py::arg("curve"), py::arg("u"), py::arg("h"), py::arg("tol") = 1e-10);
  m.def("apex_for_chord",
        [](const PyCurve& c, py::sequence a1, py::sequence a2) {
          return apex_for_chord(*c.m, as_point(a1), as_point(a2));
        },
        py::arg("curve"), py::arg("a1"), py::arg("a2"));

  py::class_<LimitEstimate>(m, "LimitEstimate")
      .def_readonly("samples", &LimitEstimate::samples)
      .def_readonly("extrapolated", &LimitEstimate::extrapolated)
      .def_readonly("model_order", &LimitEstimate::model_order)
      .def_readonly("theoretical", &LimitEstimate::theoretical)
      .def_readonly("abs_error", &LimitEstimate::abs_error)
      .def_readonly("fit_error", &LimitEstimate::fit_error);

  py::class_<ScaledLimit>(m, "ScaledLimit")
      .def_readonly("name", &ScaledLimit::name)
      .def_readonly("target", &ScaledLimit::target)
      .def_readonly("estimate", &ScaledLimit::estimate);

  py::class_<SmallHReport>(m, "SmallHReport")
      .def_readonly("kappa", &SmallHReport::kappa)
      .def_readonly("h0", &SmallHReport::h0)
      .def_readonly("levels", &SmallHReport::levels)
      .def_readonly("laws", &SmallHReport::laws);

  m.def("limit_estimate",
        [](const std::vector<std::pair<double, double>>& samples,
           double theoretical) { return limit_estimate(samples, theoretical); },
        py::arg("samples"), py::arg("theoretical"));
  m.def("small_h_laws",
        [](const PyCurve& c, double u, double h0, int levels) {
          return verify_small_h_laws(*c.m, c.m->point_at(u), h0, levels);
        },
        py::arg("curve"), py::arg("u"), py::arg("h0"), py::arg("levels") = 6);
  m.def("length_derivative_residual",
        [](const PyCurve& c, double u, double h) {
          return length_derivative_identity(*c.m, c.m->point_at(u), h);
        },
        py::arg("curve"), py::arg("u"), py::arg("h"));

  py::class_<RatioRow>(m, "RatioRow")
      .def_readonly("p_id", &RatioRow::p_id)
      .def_readonly("p_param", &RatioRow::p_param)
      .def_readonly("h", &RatioRow::h)
      .def_readonly("ok", &RatioRow::ok)
      .def_readonly("skip_reason", &RatioRow::skip_reason)
      .def_readonly("m", &RatioRow::m)
      .def_readonly("r_ST", &RatioRow::r_st)
      .def_readonly("r_SV", &RatioRow::r_sv)
      .def_readonly("r_SW", &RatioRow::r_sw)
      .def_readonly("r_UT", &RatioRow::r_ut)
      .def_readonly("r_ellL", &RatioRow::r_ell_l);

  py::class_<RatioTable>(m, "RatioTable")
      .def_readonly("rows", &RatioTable::rows)
      .def_readonly("p_params", &RatioTable::p_params)
      .def_readonly("h_values", &RatioTable::h_values)
      .def_readonly("height_sup_min", &RatioTable::height_sup_min);

  py::class_<FamilyDeviation>(m, "FamilyDeviation")
      .def_readonly("name", &FamilyDeviation::name)
      .def_readonly("target", &FamilyDeviation::target)
      .def_readonly("max_deviation", &FamilyDeviation::max_deviation)
      .def_readonly("witness_p", &FamilyDeviation::witness_p)
      .def_readonly("witness_h", &FamilyDeviation::witness_h)
      .def_readonly("within", &FamilyDeviation::within);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("is_parabola", &Verdict::is_parabola)
      .def_readonly("tolerance", &Verdict::tolerance)
      .def_readonly("h_floor", &Verdict::h_floor)
      .def_readonly("families", &Verdict::families)
      .def_readonly("lambda_spread", &Verdict::lambda_spread)
      .def_readonly("lambda_agree", &Verdict::lambda_agree)
      .def_readonly("cells_used", &Verdict::cells_used);

  m.def("interior_params",
        [](const PyCurve& c, int n) { return interior_params(*c.m, n); },
        py::arg("curve"), py::arg("n"));
  m.def("default_heights",
        [](const PyCurve& c, const std::vector<double>& ps, int levels,
           py::object h_max) {
          std::optional<double> hm;
          if (!h_max.is_none()) hm = h_max.cast<double>();
          return default_heights(*c.m, ps, levels, hm);
        },
        py::arg("curve"), py::arg("ps"), py::arg("levels"),
        py::arg("h_max") = py::none());
  m.def("ratio_profile",
        [](const PyCurve& c, const std::vector<double>& ps,
           const std::vector<double>& hs, double quad_tol) {
          return ratio_profile(*c.m, ps, hs, quad_tol);
        },
        py::arg("curve"), py::arg("ps"), py::arg("hs"),
        py::arg("quad_tol") = 1e-10);
  m.def("detect_parabola",
        [](const RatioTable& t, double tol) { return detect_parabola(t, tol); },
        py::arg("table"), py::arg("tol"));

  py::class_<ConicCoefficients>(m, "ConicCoefficients")
      .def_readonly("a", &ConicCoefficients::a)
      .def_readonly("b", &ConicCoefficients::b)
      .def_readonly("implicit", &ConicCoefficients::implicit);

  py::class_<Reconstruction>(m, "Reconstruction")
      .def_readonly("conic", &Reconstruction::conic)
      .def_readonly("max_residual", &Reconstruction::max_residual)
      .def_readonly("residual_scale", &Reconstruction::residual_scale)
      .def_readonly("conic_fits", &Reconstruction::conic_fits);

  m.def("reconstruct",
        [](const PyCurve& c, double u) {
          return reconstruct_parabola(*c.m->graph_at_param(u));
        },
        py::arg("curve"), py::arg("u"));

  py::class_<OdeReport>(m, "OdeReport")
      .def_readonly("ode_max_residual", &OdeReport::ode_max_residual)
      .def_readonly("intercept_constant", &OdeReport::intercept_constant)
      .def_readonly("intercept_max_residual",
                    &OdeReport::intercept_max_residual);

  m.def("ode_residuals",
        [](const PyCurve& c, double u, double t_lo, double t_hi, int count) {
          return ode_residuals(*c.m->graph_at_param(u), t_lo, t_hi, count);
        },
        py::arg("curve"), py::arg("u"), py::arg("t_lo"), py::arg("t_hi"),
        py::arg("count") = 33);

  py::class_<ChordLawFit>(m, "ChordLawFit")
      .def_readonly("coeff_sqrt", &ChordLawFit::coeff_sqrt)
      .def_readonly("coeff_sqrt_log", &ChordLawFit::coeff_sqrt_log)
      .def_readonly("max_residual", &ChordLawFit::max_residual);

  m.def("chord_law_fit",
        [](const std::vector<std::pair<double, double>>& samples) {
          return chord_law_fit(samples);
        },
        py::arg("samples"));
  m.def("power_law_fit",
        [](const std::vector<std::pair<double, double>>& samples) {
          return power_law_fit(samples);
        },
        py::arg("samples"));

  m.def("cli_run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
