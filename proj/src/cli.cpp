#include "tritangent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tritangent/asymptotics.hpp"
#include "tritangent/characterize.hpp"
#include "tritangent/construction.hpp"
#include "tritangent/curve.hpp"
#include "tritangent/errors.hpp"
#include "tritangent/ingest.hpp"

namespace tritangent::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
bool is_set(double v) { return !std::isnan(v); }

// 17 significant digits; scientific once the magnitude drops below 1e-4.
// Fixed formatting keeps reruns byte-identical.
std::string fmt_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[48];
  if (v != 0.0 && std::abs(v) < 1e-4)
    std::snprintf(buf, sizeof buf, "%.16e", v);
  else
    std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_coord(double v) {
  if (!std::isfinite(v)) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// Comma-tracking writer; keys are emitted in call order, so the layout is
// identical run to run.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  void open_obj() {
    sep();
    os_ << '{';
    depth_.push_back(true);
  }
  void open_obj(const char* k) {
    key(k);
    os_ << '{';
    depth_.push_back(true);
  }
  void close_obj() {
    os_ << '}';
    depth_.pop_back();
  }
  void open_arr(const char* k) {
    key(k);
    os_ << '[';
    depth_.push_back(true);
  }
  void open_arr() {
    sep();
    os_ << '[';
    depth_.push_back(true);
  }
  void close_arr() {
    os_ << ']';
    depth_.pop_back();
  }

  void field(const char* k, double v) {
    key(k);
    os_ << fmt_real(v);
  }
  void field(const char* k, int v) {
    key(k);
    os_ << v;
  }
  void field(const char* k, bool v) {
    key(k);
    os_ << (v ? "true" : "false");
  }
  void field(const char* k, const std::string& v) {
    key(k);
    os_ << '"' << json_escape(v) << '"';
  }
  void elem(double v) {
    sep();
    os_ << fmt_real(v);
  }
  void elem_pair(double a, double b) {
    sep();
    os_ << '[' << fmt_real(a) << ',' << fmt_real(b) << ']';
  }
  void point_field(const char* k, Point2 p) {
    key(k);
    os_ << '[' << fmt_real(p.x) << ',' << fmt_real(p.y) << ']';
  }

 private:
  void sep() {
    if (!depth_.empty()) {
      if (!depth_.back()) os_ << ',';
      depth_.back() = false;
    }
  }
  void key(const char* k) {
    sep();
    os_ << '"' << k << "\":";
  }

  std::ostream& os_;
  std::vector<bool> depth_;
};

struct Opts {
  std::string curve;
  std::string input;
  double a = 0.0;
  double b = kUnset;
  double r = 1.0;
  double ep = 2.0;
  double eq = 1.0;
  int window = 16;

  double p = kUnset;
  double h = kUnset;
  double h0 = kUnset;
  int levels = 6;
  int p_count = 5;
  double h_max = kUnset;
  int h_levels = 6;
  std::string tol = "auto";
  double quad_tol = 1e-10;

  std::string format;
  std::string out_path;
};

void add_curve_opts(CLI::App* sub, Opts& o) {
  sub->add_option("--curve", o.curve,
                  "analytic family: parabola, circle, ellipse, cosh");
  sub->add_option("--input", o.input, "CSV point cloud (x,y per line)");
  sub->add_option("--a", o.a, "parabola shape parameter");
  sub->add_option("--b", o.b, "parabola scale parameter (> 0)");
  sub->add_option("--r", o.r, "circle radius");
  sub->add_option("--ep", o.ep, "ellipse vertical semi-axis");
  sub->add_option("--eq", o.eq, "ellipse horizontal semi-axis");
  sub->add_option("--window", o.window, "sampled-fit window half-width");
  sub->add_option("--quad-tol", o.quad_tol, "sector quadrature tolerance");
  sub->add_option("--format", o.format, "output format");
  sub->add_option("--out", o.out_path, "write output to a file");
}

int usage(std::ostream& err, const std::string& msg) {
  err << "usage error: " << msg << "\n";
  return 2;
}

bool parse_positive(const std::string& s, double& v) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  return ec == std::errc() && p == e && std::isfinite(v) && v > 0.0;
}

// Returns 0 and fills curve on success; 2 on usage problems.
int build_curve(const Opts& o, std::ostream& err, CurveModel& curve,
                bool& sampled) {
  if (!o.curve.empty() && !o.input.empty())
    return usage(err, "--curve and --input are mutually exclusive");
  if (o.curve.empty() && o.input.empty())
    return usage(err, "one curve source required: --curve or --input");
  if (!o.input.empty()) {
    curve = fit_local_model(load_points_file(o.input), o.window);
    sampled = true;
    return 0;
  }
  sampled = false;
  if (o.curve == "parabola") {
    if (!is_set(o.b)) return usage(err, "parabola requires --b");
    curve = make_parabola(o.a, o.b);
  } else if (o.curve == "circle") {
    curve = make_circle(o.r);
  } else if (o.curve == "ellipse") {
    curve = make_ellipse(o.ep, o.eq);
  } else if (o.curve == "cosh") {
    curve = make_convex_graph([](double x) { return std::cosh(x) - 1.0; },
                              [](double x) { return std::sinh(x); },
                              [](double x) { return std::cosh(x); },
                              [](double x) { return std::sinh(x); }, -1.5,
                              1.5);
  } else {
    return usage(err, "unknown curve family '" + o.curve + "'");
  }
  return 0;
}

void write_curve_config(JsonWriter& j, const Opts& o, bool sampled) {
  j.open_obj("curve");
  if (sampled) {
    j.field("family", std::string("sampled"));
    j.field("input", o.input);
    j.field("window", o.window);
  } else {
    j.field("family", o.curve);
    if (o.curve == "parabola") {
      j.field("a", o.a);
      j.field("b", o.b);
    } else if (o.curve == "circle") {
      j.field("r", o.r);
    } else if (o.curve == "ellipse") {
      j.field("ep", o.ep);
      j.field("eq", o.eq);
    }
  }
  j.close_obj();
}

double resolve_p(const Curve& c, double p) {
  if (is_set(p)) return p;
  auto [lo, hi] = c.recommended_params();
  return 0.5 * (lo + hi);
}

double default_h0(const Curve& c, const LocalGraph& g) {
  double sup = g.height_sup();
  return std::isfinite(sup) ? 0.25 * sup : 0.5 * c.scale();
}

std::string csv_header() {
  return "p_id,h,L,ell,T,U,V,W,S,r_ST,r_SV,r_SW,r_UT,r_ellL,skip_reason\n";
}

void csv_row(std::ostream& os, const RatioRow& row) {
  os << row.p_id << ',' << fmt_real(row.h) << ',';
  if (row.ok) {
    const Measures& m = row.m;
    os << fmt_real(m.L) << ',' << fmt_real(m.ell) << ',' << fmt_real(m.T)
       << ',' << fmt_real(m.U) << ',' << fmt_real(m.V) << ',' << fmt_real(m.W)
       << ',' << fmt_real(m.S) << ',' << fmt_real(row.r_st) << ','
       << fmt_real(row.r_sv) << ',' << fmt_real(row.r_sw) << ','
       << fmt_real(row.r_ut) << ',' << fmt_real(row.r_ell_l) << ",\n";
  } else {
    os << ",,,,,,,,,,,," << row.skip_reason << "\n";
  }
}

void svg_line(std::ostream& os, Point2 a, Point2 b, double w) {
  os << "<line x1=\"" << fmt_coord(a.x) << "\" y1=\"" << fmt_coord(-a.y)
     << "\" x2=\"" << fmt_coord(b.x) << "\" y2=\"" << fmt_coord(-b.y)
     << "\" stroke=\"black\" stroke-width=\"" << fmt_coord(w) << "\"/>\n";
}

void write_svg(std::ostream& os, const LocalGraph& g, const Figure& fig) {
  double L = fig.t - fig.s;
  double xa = std::max(g.x_lo() * 0.999, fig.s - 0.25 * L);
  double xb = std::min(g.x_hi() * 0.999, fig.t + 0.25 * L);
  const int n = 256;
  std::vector<Point2> arc(n + 1);
  for (int i = 0; i <= n; ++i) {
    double x = xa + (xb - xa) * i / n;
    arc[i] = fig.frame.to_world({x, g.value(x)});
  }

  // Frame-space endpoints of the four drawn lines.
  double b1x = fig.s - fig.h / fig.slope_s;
  double b2x = fig.t - fig.h / fig.slope_t;
  Point2 bf = fig.frame.to_local(fig.b);
  auto W = [&fig](double x, double y) { return fig.frame.to_world({x, y}); };
  double ell = b2x - b1x;
  std::array<std::pair<Point2, Point2>, 4> lines = {{
      {W(fig.s - 0.15 * L, fig.h), W(fig.t + 0.15 * L, fig.h)},     // chord
      {W(b1x - 0.2 * ell, 0.0), W(b2x + 0.2 * ell, 0.0)},           // base
      {W(fig.s - 0.25 * (bf.x - fig.s), fig.h - 0.25 * (bf.y - fig.h)),
       W(bf.x + 0.25 * (bf.x - fig.s), bf.y + 0.25 * (bf.y - fig.h))},
      {W(fig.t - 0.25 * (bf.x - fig.t), fig.h - 0.25 * (bf.y - fig.h)),
       W(bf.x + 0.25 * (bf.x - fig.t), bf.y + 0.25 * (bf.y - fig.h))},
  }};

  const std::array<std::pair<const char*, Point2>, 6> marks = {{
      {"A", fig.p},
      {"A1", fig.a1},
      {"A2", fig.a2},
      {"B", fig.b},
      {"B1", fig.b1},
      {"B2", fig.b2},
  }};

  double xmin = arc[0].x, xmax = arc[0].x, ymin = -arc[0].y, ymax = -arc[0].y;
  auto grow = [&](Point2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, -p.y);
    ymax = std::max(ymax, -p.y);
  };
  for (const auto& p : arc) grow(p);
  for (const auto& [pa, pb] : lines) {
    grow(pa);
    grow(pb);
  }
  for (const auto& [name, p] : marks) grow(p);
  double dx = xmax - xmin, dy = ymax - ymin;
  double dim = std::max(dx, dy);
  xmin -= 0.08 * dim;
  ymin -= 0.08 * dim;
  dx += 0.16 * dim;
  dy += 0.16 * dim;
  double sw = 0.006 * dim;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fmt_coord(xmin) << ' ' << fmt_coord(ymin) << ' ' << fmt_coord(dx)
     << ' ' << fmt_coord(dy) << "\">\n";
  os << "<path d=\"M" << fmt_coord(arc[0].x) << ' ' << fmt_coord(-arc[0].y);
  for (int i = 1; i <= n; ++i)
    os << " L" << fmt_coord(arc[i].x) << ' ' << fmt_coord(-arc[i].y);
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt_coord(sw)
     << "\"/>\n";
  for (const auto& [pa, pb] : lines) svg_line(os, pa, pb, 0.6 * sw);
  for (const auto& [name, p] : marks)
    os << "<circle cx=\"" << fmt_coord(p.x) << "\" cy=\"" << fmt_coord(-p.y)
       << "\" r=\"" << fmt_coord(1.8 * sw) << "\" fill=\"black\"/>\n";
  for (const auto& [name, p] : marks)
    os << "<text x=\"" << fmt_coord(p.x + 2.5 * sw) << "\" y=\""
       << fmt_coord(-p.y - 2.5 * sw) << "\" font-size=\""
       << fmt_coord(0.045 * dim) << "\">" << name << "</text>\n";
  os << "</svg>\n";
}

int emit(const Opts& o, std::ostream& out, std::ostream& err,
         const std::string& payload) {
  if (o.out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file " << o.out_path << "\n";
    return 1;
  }
  f << payload;
  return f ? 0 : 1;
}

int run_construct(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "csv" && format != "svg")
    return usage(err, "construct supports --format json, csv, or svg");
  if (!is_set(o.h)) return usage(err, "construct requires --h");

  CurveModel curve;
  bool sampled = false;
  if (int rc = build_curve(o, err, curve, sampled)) return rc;
  double u = resolve_p(*curve, o.p);
  auto g = curve->graph_at_param(u);
  Figure fig = build_figure(*g, o.h);
  double S = sector_area(*g, o.h, o.quad_tol);
  Measures m = measure(fig, S);

  std::ostringstream buf;
  if (format == "svg") {
    write_svg(buf, *g, fig);
  } else if (format == "csv") {
    buf << csv_header();
    RatioRow row;
    row.p_id = 0;
    row.p_param = u;
    row.h = o.h;
    row.ok = true;
    row.m = m;
    row.r_st = m.S / m.T;
    row.r_sv = m.S / m.V;
    row.r_sw = m.S / m.W;
    row.r_ut = m.U / m.T;
    row.r_ell_l = m.ell / m.L;
    csv_row(buf, row);
  } else {
    JsonWriter j(buf);
    j.open_obj();
    j.field("schema", 1);
    j.open_obj("config");
    j.field("subcommand", std::string("construct"));
    write_curve_config(j, o, sampled);
    j.field("p", u);
    j.field("h", o.h);
    j.field("quad_tol", o.quad_tol);
    j.field("format", format);
    j.close_obj();
    j.open_obj("results");
    j.open_obj("figure");
    j.point_field("p", fig.p);
    j.point_field("a1", fig.a1);
    j.point_field("a2", fig.a2);
    j.point_field("b", fig.b);
    j.point_field("b1", fig.b1);
    j.point_field("b2", fig.b2);
    j.field("s", fig.s);
    j.field("t", fig.t);
    j.field("h", fig.h);
    j.close_obj();
    j.open_obj("measures");
    j.field("L", m.L);
    j.field("ell", m.ell);
    j.field("T", m.T);
    j.field("U", m.U);
    j.field("V", m.V);
    j.field("W", m.W);
    j.field("S", m.S);
    j.field("alpha", m.alpha);
    j.close_obj();
    j.close_obj();
    j.open_arr("errors");
    j.close_arr();
    j.close_obj();
    buf << "\n";
  }
  return emit(o, out, err, buf.str());
}

int run_limits(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "csv")
    return usage(err, "limits supports --format json or csv");

  CurveModel curve;
  bool sampled = false;
  if (int rc = build_curve(o, err, curve, sampled)) return rc;
  double u = resolve_p(*curve, o.p);
  Point2 p = curve->point_at(u);
  double h0 = is_set(o.h0) ? o.h0 : default_h0(*curve, *curve->graph_at_param(u));
  SmallHReport rep = verify_small_h_laws(*curve, p, h0, o.levels);

  std::ostringstream buf;
  if (format == "csv") {
    buf << "name,target,extrapolated,abs_error,fit_error\n";
    for (const auto& law : rep.laws)
      buf << law.name << ',' << fmt_real(law.target) << ','
          << fmt_real(law.estimate.extrapolated) << ','
          << fmt_real(law.estimate.abs_error) << ','
          << fmt_real(law.estimate.fit_error) << "\n";
  } else {
    JsonWriter j(buf);
    j.open_obj();
    j.field("schema", 1);
    j.open_obj("config");
    j.field("subcommand", std::string("limits"));
    write_curve_config(j, o, sampled);
    j.field("p", u);
    j.field("h0", h0);
    j.field("levels", o.levels);
    j.field("format", format);
    j.close_obj();
    j.open_obj("results");
    j.field("kappa", rep.kappa);
    j.open_arr("laws");
    for (const auto& law : rep.laws) {
      j.open_obj();
      j.field("name", std::string(law.name));
      j.field("target", law.target);
      j.field("extrapolated", law.estimate.extrapolated);
      j.field("abs_error", law.estimate.abs_error);
      j.field("fit_error", law.estimate.fit_error);
      j.open_arr("samples");
      for (auto [h, q] : law.estimate.samples) j.elem_pair(h, q);
      j.close_arr();
      j.close_obj();
    }
    j.close_arr();
    j.close_obj();
    j.open_arr("errors");
    j.close_arr();
    j.close_obj();
    buf << "\n";
  }
  return emit(o, out, err, buf.str());
}

RatioTable profile_for(const Opts& o, const CurveModel& curve,
                       std::vector<double>& ps, std::vector<double>& hs) {
  ps = interior_params(*curve, o.p_count);
  std::optional<double> hmax;
  if (is_set(o.h_max)) hmax = o.h_max;
  hs = default_heights(*curve, ps, o.h_levels, hmax);
  return ratio_profile(*curve, ps, hs, o.quad_tol);
}

int run_ratios(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "json" && format != "csv")
    return usage(err, "ratios supports --format json or csv");

  CurveModel curve;
  bool sampled = false;
  if (int rc = build_curve(o, err, curve, sampled)) return rc;
  std::vector<double> ps, hs;
  RatioTable table = profile_for(o, curve, ps, hs);

  std::ostringstream buf;
  if (format == "csv") {
    buf << csv_header();
    for (const auto& row : table.rows) csv_row(buf, row);
  } else {
    JsonWriter j(buf);
    j.open_obj();
    j.field("schema", 1);
    j.open_obj("config");
    j.field("subcommand", std::string("ratios"));
    write_curve_config(j, o, sampled);
    j.field("p_count", o.p_count);
    j.field("h_levels", o.h_levels);
    j.field("h_max", hs.front());
    j.field("quad_tol", o.quad_tol);
    j.field("format", format);
    j.close_obj();
    j.open_obj("results");
    j.open_arr("rows");
    for (const auto& row : table.rows) {
      j.open_obj();
      j.field("p_id", row.p_id);
      j.field("p_param", row.p_param);
      j.field("h", row.h);
      j.field("ok", row.ok);
      if (row.ok) {
        j.field("L", row.m.L);
        j.field("ell", row.m.ell);
        j.field("T", row.m.T);
        j.field("U", row.m.U);
        j.field("V", row.m.V);
        j.field("W", row.m.W);
        j.field("S", row.m.S);
        j.field("r_ST", row.r_st);
        j.field("r_SV", row.r_sv);
        j.field("r_SW", row.r_sw);
        j.field("r_UT", row.r_ut);
        j.field("r_ellL", row.r_ell_l);
      } else {
        j.field("skip_reason", row.skip_reason);
      }
      j.close_obj();
    }
    j.close_arr();
    j.close_obj();
    j.open_arr("errors");
    j.close_arr();
    j.close_obj();
    buf << "\n";
  }
  return emit(o, out, err, buf.str());
}

int run_detect(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json") return usage(err, "detect supports --format json");

  CurveModel curve;
  bool sampled = false;
  if (int rc = build_curve(o, err, curve, sampled)) return rc;

  double noise = 0.0;
  double tol;
  if (o.tol == "auto") {
    if (sampled) {
      noise = std::dynamic_pointer_cast<const SampledCurve>(curve)
                  ->noise_estimate();
      tol = 50.0 * noise;
    } else {
      tol = 1e-6;
    }
  } else {
    if (!parse_positive(o.tol, tol))
      return usage(err, "--tol must be 'auto' or a positive number");
  }

  std::vector<double> ps, hs;
  RatioTable table = profile_for(o, curve, ps, hs);
  Verdict v = detect_parabola(table, tol);

  std::ostringstream buf;
  JsonWriter j(buf);
  j.open_obj();
  j.field("schema", 1);
  j.open_obj("config");
  j.field("subcommand", std::string("detect"));
  write_curve_config(j, o, sampled);
  j.field("p_count", o.p_count);
  j.field("h_levels", o.h_levels);
  j.field("h_max", hs.front());
  j.field("tol", o.tol);
  j.field("quad_tol", o.quad_tol);
  j.field("format", format);
  j.close_obj();
  j.open_obj("results");
  j.field("is_parabola", v.is_parabola);
  j.field("tolerance", v.tolerance);
  j.field("h_floor", v.h_floor);
  if (sampled) j.field("noise_estimate", noise);
  j.open_arr("families");
  for (const auto& fam : v.families) {
    j.open_obj();
    j.field("name", std::string(fam.name));
    j.field("target", fam.target);
    j.field("max_deviation", fam.max_deviation);
    j.field("within", fam.within);
    j.field("witness_p", fam.witness_p);
    j.field("witness_h", fam.witness_h);
    j.close_obj();
  }
  j.close_arr();
  j.field("lambda_spread", v.lambda_spread);
  j.field("lambda_agree", v.lambda_agree);
  j.field("cells_used", v.cells_used);
  j.close_obj();
  j.open_arr("errors");
  j.close_arr();
  j.close_obj();
  buf << "\n";
  return emit(o, out, err, buf.str());
}

int run_reconstruct(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json") return usage(err, "reconstruct supports --format json");

  CurveModel curve;
  bool sampled = false;
  if (int rc = build_curve(o, err, curve, sampled)) return rc;
  double u = resolve_p(*curve, o.p);
  auto g = curve->graph_at_param(u);
  Reconstruction rec = reconstruct_parabola(*g);

  std::ostringstream buf;
  JsonWriter j(buf);
  j.open_obj();
  j.field("schema", 1);
  j.open_obj("config");
  j.field("subcommand", std::string("reconstruct"));
  write_curve_config(j, o, sampled);
  j.field("p", u);
  j.field("format", format);
  j.close_obj();
  j.open_obj("results");
  j.field("a", rec.conic.a);
  j.field("b", rec.conic.b);
  j.open_arr("implicit");
  for (double c : rec.conic.implicit) j.elem(c);
  j.close_arr();
  j.field("max_residual", rec.max_residual);
  j.field("residual_scale", rec.residual_scale);
  j.field("conic_fits", rec.conic_fits);
  j.close_obj();
  j.open_arr("errors");
  j.close_arr();
  j.close_obj();
  buf << "\n";
  return emit(o, out, err, buf.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Opts o;
  CLI::App app{"chord and tangent constructions on strictly convex curves"};
  app.name("tritangent");
  // The chord-height flag is --h, so the help flag keeps only its long form.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  CLI::App* c_construct =
      app.add_subcommand("construct", "build one figure at (P, h)");
  add_curve_opts(c_construct, o);
  c_construct->add_option("--p", o.p, "curve parameter of the base point");
  c_construct->add_option("--h", o.h, "chord height");

  CLI::App* c_limits =
      app.add_subcommand("limits", "extrapolate the h->0 scaled quantities");
  add_curve_opts(c_limits, o);
  c_limits->add_option("--p", o.p, "curve parameter of the base point");
  c_limits->add_option("--h0", o.h0, "largest height of the geometric grid");
  c_limits->add_option("--levels", o.levels, "number of grid levels");

  CLI::App* c_ratios =
      app.add_subcommand("ratios", "sweep the five ratios over a grid");
  add_curve_opts(c_ratios, o);
  c_ratios->add_option("--p-count", o.p_count, "number of base points");
  c_ratios->add_option("--h-max", o.h_max, "largest height");
  c_ratios->add_option("--h-levels", o.h_levels, "number of height levels");

  CLI::App* c_detect =
      app.add_subcommand("detect", "decide whether the ratios are parabolic");
  add_curve_opts(c_detect, o);
  c_detect->add_option("--p-count", o.p_count, "number of base points");
  c_detect->add_option("--h-max", o.h_max, "largest height");
  c_detect->add_option("--h-levels", o.h_levels, "number of height levels");
  c_detect->add_option("--tol", o.tol, "'auto' or a relative tolerance");

  CLI::App* c_reconstruct = app.add_subcommand(
      "reconstruct", "recover the tangent conic from local derivatives");
  add_curve_opts(c_reconstruct, o);
  c_reconstruct->add_option("--p", o.p, "curve parameter of the base point");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_construct)) return run_construct(o, out, err);
    if (app.got_subcommand(c_limits)) return run_limits(o, out, err);
    if (app.got_subcommand(c_ratios)) return run_ratios(o, out, err);
    if (app.got_subcommand(c_detect)) return run_detect(o, out, err);
    if (app.got_subcommand(c_reconstruct)) return run_reconstruct(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace tritangent::cli
