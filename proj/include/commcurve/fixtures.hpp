#pragma once

// Embedded curve fixtures. Affine coordinates x = z1/z4, y = z2/z4 and
// t = z3/z4 unless stated otherwise.

#include "commcurve/curve_models.hpp"

#include <string>
#include <vector>

namespace commcurve::fixtures {

/// The rational quartic [u^3 v, v^3 u, u^4, v^4].
CurveIdeal quartic_ideal();
/// Its multiplication matrices in the basis (1, x, y, y^2), k = (0,1,1,1).
MatPolyModel quartic_model();

/// Twisted cubic x = w^2, y = w, t = w^3; basis (1, x, y), k = (0,1,1).
CurveIdeal twisted_cubic_ideal();
MatPolyModel twisted_cubic_model();

/// Two lines x = t and x = -t in the plane (r = 2).
CurveIdeal two_lines_ideal();

/// Complete intersection of z1^2 - z2 z3 - z4^2 and z2^2 - z1 z4 - z3^2.
CurveIdeal quadric_intersection_ideal();

/// Two quadrics of a twisted cubic meeting in the cubic and a line:
/// t y - x^2 and x - y^2 with t = z1/z4, x = z2/z4, y = z3/z4.
CurveIdeal cubic_plus_line_ideal();

/// The rational normal quartic in P^4 with x1 = w^3, x2 = w, x3 = w^2, t = w^4.
MatPolyModel quartic_in_p4_model();

std::vector<std::string> names();

}  // namespace commcurve::fixtures
