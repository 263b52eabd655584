#pragma once

// Worked examples shared by the unit tests and the acceptance runner.

#include <vector>

#include "birat/curve.hpp"
#include "birat/dixon.hpp"
#include "birat/movsurf.hpp"
#include "support.hpp"

namespace birat::fixtures {

inline PlaneCurveParam circle() {
  const RingPtr& r = rings::curve_t();
  return PlaneCurveParam(testing::poly("2*t", r), testing::poly("1 + t^2", r), testing::poly("1 - t^2", r),
                         testing::poly("1 + t^2", r));
}

/// The circle composed with t -> t^2: a degree-2 map onto the same curve.
inline PlaneCurveParam squared_circle() {
  const RingPtr& r = rings::curve_t();
  return PlaneCurveParam(testing::poly("2*t^2", r), testing::poly("1 + t^4", r), testing::poly("1 - t^4", r),
                         testing::poly("1 + t^4", r));
}

inline PolyMatrix circle_sylvester_expected() {
  return testing::matrix({{"-x", "0", "-1 - y", "0"},
                          {"2", "-x", "0", "-1 - y"},
                          {"-x", "2", "1 - y", "0"},
                          {"0", "-x", "0", "1 - y"}},
                         rings::curve_xy());
}

inline std::vector<Polynomial> circle_minors_expected() {
  return testing::polys({"2*x*(y - 1)", "-2*x^2", "-2*x*(y + 1)", "2*x^2 - 4*(y + 1)"}, rings::curve_xy());
}

inline SurfaceParam cubic() {
  const RingPtr& r = rings::surface_t();
  return SurfaceParam({testing::poly("t1^2*t2 + 2*t2^3 + t1^2*t3 + 4*t1*t2*t3 + 4*t2^2*t3 + 3*t1*t3^2 + "
                                     "2*t2*t3^2 + 2*t3^3",
                                     r),
                       testing::poly("-t1^3 - 2*t1*t2^2 - 2*t1^2*t3 - t1*t2*t3 + t1*t3^2 - 2*t2*t3^2 + 2*t3^3", r),
                       testing::poly("-t1^3 - 2*t1^2*t2 - 3*t1*t2^2 - 3*t1^2*t3 - 3*t1*t2*t3 + 2*t2^2*t3 - "
                                     "2*t1*t3^2 - 2*t2*t3^2",
                                     r),
                       testing::poly("t1^3 + t1^2*t2 + t2^3 + t1^2*t3 + t2^2*t3 - t1*t3^2 - t2*t3^2 - t3^3", r)});
}

inline std::vector<Polynomial> cubic_planes() {
  return testing::polys({"t1*X1 + t2*X2 + t3*X3", "t1*(X2 + X4) + t2*(2*X2 - X3) + t3*(X2 + 2*X4)",
                         "t1*(X3 - X2) + t2*(-X1 + 2*X4) + t3*(X1 - X2)"},
                        rings::surface_tx());
}

/// Displayed 3x3 array; its rows are the coefficient vectors of M3, -M2, M1.
inline PolyMatrix cubic_display() {
  return testing::matrix({{"X3 - X2", "-X1 + 2*X4", "X1 - X2"},
                          {"-X2 - X4", "X3 - 2*X2", "-X2 - 2*X4"},
                          {"X1", "X2", "X3"}},
                         rings::surface_x());
}

inline std::vector<Polynomial> cubic_inverse_expected() {
  const RingPtr& r = rings::surface_x();
  const PolyMatrix a = testing::matrix({{"X3 - 2*X2", "-X2 - 2*X4"}, {"X2", "X3"}}, r);
  const PolyMatrix b = testing::matrix({{"X2 + X4", "-X2 - 2*X4"}, {"-X1", "X3"}}, r);
  const PolyMatrix c = testing::matrix({{"-X2 - X4", "X3 - 2*X2"}, {"X1", "X2"}}, r);
  return {testing::leibniz_det(a), testing::leibniz_det(b), testing::leibniz_det(c)};
}

inline SurfaceParam toric() {
  const RingPtr& r = rings::surface_t();
  return SurfaceParam({testing::poly("t3^3 + t1*t3^2 - t2*t3^2 + t1*t2*t3 - t1^2*t2 - t1*t2^2", r),
                       testing::poly("t3^3 + t1*t3^2 - t2*t3^2 - t1*t2*t3 + t1^2*t2 - t1*t2^2", r),
                       testing::poly("t3^3 - t1*t3^2 + t2*t3^2 - t1*t2*t3 - t1^2*t2 + t1*t2^2", r),
                       testing::poly("t3^3 - t1*t3^2 - t2*t3^2 + t1*t2*t3 - t1^2*t2 + t1*t2^2", r)});
}

inline std::vector<Polynomial> toric_surfaces() {
  return testing::polys({"t1*(X4 - X3) + t3*(X1 - X2)",
                         "t1*(X2 - X3 + 2*X4) + t2*(X2 + X3) + t3*(-X2 - X3 + 2*X4)",
                         "t1*(X1*X2 + X1*X3) + t2*(X1*X3 - X1*X4 + X2^2 + X2*X4) + "
                         "t3*(-2*X1^2 + X2^2 + X2*X4 - X3*X4 + X4^2)"},
                        rings::surface_tx());
}

/// Displayed 3x3 array; its transpose is the implicitization matrix.
inline PolyMatrix toric_display() {
  return testing::matrix({{"X4 - X3", "0", "X1 - X2"},
                          {"X2 - X3 + 2*X4", "X2 + X3", "-X2 - X3 + 2*X4"},
                          {"X1*X2 + X1*X3", "X1*X3 - X1*X4 + X2^2 + X2*X4", "-2*X1^2 + X2^2 + X2*X4 - X3*X4 + X4^2"}},
                         rings::surface_x());
}

inline std::vector<Polynomial> toric_inverse_expected() {
  const RingPtr& r = rings::surface_x();
  const PolyMatrix a = testing::matrix({{"0", "X1 - X2"}, {"X2 + X3", "-X2 - X3 + 2*X4"}}, r);
  const PolyMatrix b = testing::matrix({{"X3 - X4", "X1 - X2"}, {"-X2 + X3 - 2*X4", "-X2 - X3 + 2*X4"}}, r);
  const PolyMatrix c = testing::matrix({{"X4 - X3", "0"}, {"X2 - X3 + 2*X4", "X2 + X3"}}, r);
  return {testing::leibniz_det(a), testing::leibniz_det(b), testing::leibniz_det(c)};
}

/// Affine quartic: X1 = t1^2/q, X2 = 2/q, X3 = (t1 + t2)/q with q = t1^2 + t2^2 + 1.
inline DixonSystem quartic_system() {
  const RingPtr& r = dixon_ring();
  return DixonSystem::from_affine(testing::poly("t1^2 + t2^2 + 1", r),
                                  {testing::poly("t1^2", r), testing::poly("2", r), testing::poly("t1 + t2", r)});
}

inline SurfaceParam quartic() { return quartic_system().param(); }

inline PolyMatrix quartic_dixon_display() {
  return testing::matrix({{"X1", "0", "0", "X1 - 1", "0", "X1"},
                          {"X2 - 2", "0", "0", "X2", "0", "X2"},
                          {"X3", "-1", "-1", "X3", "0", "X3"},
                          {"0", "-X2 - 2*X1 + 2", "2*X1", "0", "-2*X3", "0"},
                          {"-2*X1 + 2 - X2", "0", "-2*X3", "0", "X2", "0"},
                          {"2*X1", "-2*X3", "0", "0", "X2", "0"}},
                         rings::surface_x());
}

/// The 5x5 arrays whose determinant ratios give t1 and t2.
inline PolyMatrix quartic_t1_numerator() {
  return testing::matrix({{"X1", "0", "X1 - 1", "0", "X1"},
                          {"X2 - 2", "0", "X2", "0", "X2"},
                          {"X3", "-1", "X3", "0", "X3"},
                          {"0", "2*X1", "0", "-2*X3", "0"},
                          {"-X2 - 2*X1 + 2", "-2*X3", "0", "X2", "0"}},
                         rings::surface_x());
}

inline PolyMatrix quartic_denominator() {
  return testing::matrix({{"0", "0", "X1 - 1", "0", "X1"},
                          {"0", "0", "X2", "0", "X2"},
                          {"-1", "-1", "X3", "0", "X3"},
                          {"-X2 - 2*X1 + 2", "2*X1", "0", "-2*X3", "0"},
                          {"0", "-2*X3", "0", "X2", "0"}},
                         rings::surface_x());
}

inline PolyMatrix quartic_t2_numerator() {
  return testing::matrix({{"X1", "0", "X1 - 1", "0", "X1"},
                          {"X2 - 2", "0", "X2", "0", "X2"},
                          {"X3", "-1", "X3", "0", "X3"},
                          {"0", "-X2 - 2*X1 + 2", "0", "-2*X3", "0"},
                          {"-X2 - 2*X1 + 2", "0", "0", "X2", "0"}},
                         rings::surface_x());
}

/// Closed forms printed for the quartic: (numerator, denominator) of t1 and t2.
inline std::array<Polynomial, 4> quartic_closed_forms() {
  const RingPtr& r = rings::surface_x();
  return {testing::poly("-2*X3*(4*X3^2 + X2^2 - 2*X2)", r),
          testing::poly("-X2*(X2^2 + 4*X2*X1 - 2*X2 - 4*X3^2)", r), testing::poly("4*X3*(X2 + 2*X1 - 2)", r),
          testing::poly("X2^2 + 4*X2*X1 - 2*X2 - 4*X3^2", r)};
}

/// X1 = t1/(t1 + t2), X2 = (t1^2 - t1 + 1)/(t2 + 1), X3 = t1^2 + t2.
inline SurfaceParam jacobian_example() {
  const RingPtr& r = rings::surface_t();
  return SurfaceParam::from_affine(
      {testing::poly("t1", r), testing::poly("t1^2 - t1 + 1", r), testing::poly("t1^2 + t2", r)},
      {testing::poly("t1 + t2", r), testing::poly("t2 + 1", r), testing::poly("1", r)});
}

/// Transpose of the displayed 5x6 subresultant array, rows 1, t1, t2, t1^2, t1*t2, t2^2.
inline ElimMatrix jacobian_matrix() {
  const PolyMatrix display = testing::matrix({{"X2 - 1", "1", "X2", "-1", "0", "0"},
                                              {"X3", "0", "-1", "-1", "0", "0"},
                                              {"0", "X1 - 1", "X1", "0", "0", "0"},
                                              {"0", "0", "0", "X1 - 1", "X1", "0"},
                                              {"0", "0", "0", "0", "X1 - 1", "X1"}},
                                             rings::surface_x());
  return ElimMatrix::from_affine(display.transpose(), affine_monomials(2), MatrixKind::inversion_candidate);
}

inline std::array<Polynomial, 4> jacobian_closed_forms() {
  const RingPtr& r = rings::surface_x();
  return {testing::poly("X1*(X2 - 1 - X3)", r), testing::poly("X2*X1 - 1 - X2", r),
          testing::poly("X2*X1 - X2 - X1 + 1 - X1*X3 + X3", r), testing::poly("X2*X1 - 1 - X2", r)};
}

/// (t1^2 t3, t2 t3^2, t1^2 t2, t3^3): the quadric X1 X2 = X3 X4 covered twice.
inline SurfaceParam doubled_quadric() {
  const RingPtr& r = rings::surface_t();
  return SurfaceParam({testing::poly("t1^2*t3", r), testing::poly("t2*t3^2", r), testing::poly("t1^2*t2", r),
                       testing::poly("t3^3", r)});
}

}  // namespace birat::fixtures
