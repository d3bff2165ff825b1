// Hand-derived closed-form values used as fixed expectations.  Everything
// here comes from elementary geometry of the specific model, worked out
// independently of the library code; keep these literals frozen.
#pragma once

namespace oracle {

// Parabola y = x^2/2, base point at the vertex, h = 0.5.
// Endpoints x = ±1, slopes ±1, tangent apex (0, -0.5).
namespace parabola_h05 {
inline constexpr double s = -1.0;
inline constexpr double t = 1.0;
inline constexpr double L = 2.0;
inline constexpr double ell = 1.0;
inline constexpr double T = 0.5;
inline constexpr double U = 0.25;
inline constexpr double V = 1.0;
inline constexpr double W = 0.75;
inline constexpr double S = 2.0 / 3.0;           // integral of h - x^2/2
inline constexpr double alpha = 1.4142135623730951;  // sqrt(2), kappa = 1
inline constexpr double bx = 0.0, by = -0.5;     // tangent intersection
inline constexpr double b1x = -0.5, b2x = 0.5;   // base-tangent crossings
}  // namespace parabola_h05

// Unit circle, base point at the bottom, h = 0.5.
// Chord endpoints x = ±sqrt(3)/2, endpoint slopes ±sqrt(3); the chord
// subtends a 120 degree arc, so the sector area is pi/3 - sqrt(3)/4.
namespace circle_h05 {
inline constexpr double L = 1.7320508075688772;      // sqrt(3)
inline constexpr double ell = 1.1547005383792515;    // 2/sqrt(3)
inline constexpr double T = 0.4330127018922193;      // sqrt(3)/4
inline constexpr double U = 0.57735026918962562;     // 1/sqrt(3)
inline constexpr double V = 1.2990381056766578;      // 3*sqrt(3)/4
inline constexpr double W = 0.72168783648703216;
inline constexpr double S = 0.61418484930437856;     // pi/3 - sqrt(3)/4
inline constexpr double alpha = 0.81649658092772592; // sqrt(2/3)
inline constexpr double bx = 0.0, by = -1.0;
// U/T happens to equal 4/3 here, far from the parabola value 1/2.
inline constexpr double ut = 1.3333333333333330;
}  // namespace circle_h05

// Ellipse x = q sin(u), y = p (1 - cos(u)) with p = 2, q = 1, h = 0.4.
// cos(u0) = 0.8 makes everything rational except the sector area.
namespace ellipse_h04 {
inline constexpr double L = 1.2;
inline constexpr double ell = 2.0 / 3.0;
inline constexpr double T = 0.24;
inline constexpr double U = 1.0 / 6.0;
inline constexpr double V = 0.54;
inline constexpr double W = 0.37333333333333333;
inline constexpr double S = 0.32700221758656894;
inline constexpr double kappa0 = 2.0;  // p/q^2 at the bottom point
}  // namespace ellipse_h04

// Graph f(x) = cosh(x) - 1, base at the origin, h = 0.3.
// t = acosh(1.3), slope sinh(t) = sqrt(0.69); S = 2((h+1)t - sinh t).
namespace cosh_h03 {
inline constexpr double L = 1.5128658217139193;
inline constexpr double ell = 0.79055070319930409;
inline constexpr double T = 0.22692987325708788;
inline constexpr double U = 0.12978485393205885;
inline constexpr double V = 0.47529733266904234;
inline constexpr double W = 0.34551247873698349;
inline constexpr double S = 0.30540079564448019;
inline constexpr double alpha = 1.318760946791574;
}  // namespace cosh_h03

// h -> 0 limits of the scaled quantities, each times sqrt(kappa) where the
// scaling calls for it.
namespace limits {
inline constexpr double L_scaled = 2.8284271247461903;    // 2 sqrt(2)
inline constexpr double ell_scaled = 1.4142135623730951;  // sqrt(2)
inline constexpr double S_scaled = 1.8856180831641269;    // 4 sqrt(2)/3
inline constexpr double T_scaled = 1.4142135623730951;    // sqrt(2)
inline constexpr double U_scaled = 0.70710678118654757;   // sqrt(2)/2
inline constexpr double V_scaled = 2.8284271247461903;    // 2 sqrt(2)
inline constexpr double W_scaled = 2.1213203435596428;    // 3 sqrt(2)/2
inline constexpr double alpha_scaled = 1.4142135623730951;
}  // namespace limits

// Exact parabola ratios, any (a, b), any admissible (P, h).
namespace ratios {
inline constexpr double st = 4.0 / 3.0;
inline constexpr double sv = 2.0 / 3.0;
inline constexpr double sw = 8.0 / 9.0;
inline constexpr double ut = 0.5;
inline constexpr double ell_l = 0.5;
}  // namespace ratios

}  // namespace oracle
