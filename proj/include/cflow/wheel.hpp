#pragma once

#include <string>

#include "cflow/flow.hpp"
#include "cflow/point_sequence.hpp"

namespace cflow {

// Exact flow number of the wheel W_n: 2 for even n, and for odd n
// 1 + 2 sin(pi/6 * f) with f = n/(n-1) when n = 1, 3 (mod 6) and
// f = (n+1)/n when n = 5 (mod 6).  Strictly decreasing in n on each odd
// congruence class, never above 1 + sqrt(2), and tending to 2.
double wheel_flow_number(int n);

// Point sequence attaining wheel_flow_number(n) for odd n >= 3.  All points
// sit on the unit circle except, for n = 3 (mod 6), the single point p_1 at
// radius lambda; one or two chords have norm 1 and the rest norm lambda,
// where lambda = wheel_flow_number(n) - 1.
PointSequence optimal_sequence(int n);

// Alternating two-point sequence {1, e^{i pi/3}} for even n >= 4; every
// point and chord norm is exactly 1, so the induced flow certifies r = 2.
PointSequence even_wheel_sequence(int n);
FlowAssignment even_wheel_flow(int n);

// Optimal wheel flow for any n >= 3 (alternating construction for even n).
FlowAssignment optimal_flow(int n);

// Largest norm over all points and chords of the sequence.
double lambda_of(const PointSequence& seq);

// Derived angles of the two-circle picture with radii 1 and lambda:
//   alpha = asin(1/(2 lambda))  half-angle subtended by a norm-1 chord of the
//                               outer circle,
//   beta  = asin(lambda/2)      half-angle subtended by a norm-lambda chord
//                               of the unit circle,
// plus their complements.  For lambda in (1, sqrt(2)]:
// asin(sqrt(2)/4) <= alpha < pi/6 < beta <= pi/4 and alpha + beta > pi/3.
struct AngleSet {
  double alpha = 0.0;
  double beta = 0.0;
  double alpha_prime = 0.0;  // pi/2 - alpha
  double beta_prime = 0.0;   // pi/2 - beta
};
AngleSet angle_set(double lambda);

// Which circle a point lies on: the unit circle (I) or radius lambda (E).
enum class Circle { I, E };
enum class StepSign { plus, minus };

// Chord type: start/end circle of its endpoints and the sign of the
// argument step from p_{j-1} to p_j.
struct VectorTypeLabel {
  Circle start = Circle::I;
  Circle end = Circle::I;
  StepSign sign = StepSign::plus;
  friend bool operator==(const VectorTypeLabel&, const VectorTypeLabel&) = default;
};
std::string to_string(const VectorTypeLabel& label);  // "II+", "IE-", ...

// Types chord j of the sequence.  Each endpoint radius must match 1 or
// lambda within tol, and the argument step (reduced to (-pi, pi]) must be
// nonzero; otherwise UnclassifiableError.
VectorTypeLabel classify_vector(const PointSequence& seq, int j, double lambda,
                                double tol = 1e-9);

// The three cyclic chord patterns a minimal wheel sequence can have:
//  I   one norm-1 chord onto the outer circle, one norm-1 chord back, and
//      n-2 positive norm-lambda chords on the unit circle;
//  II  one negative norm-1 chord and n-1 positive norm-lambda chords, all
//      points on the unit circle;
//  III n positive norm-lambda chords, all points on the unit circle.
enum class ConfigKind { I, II, III };

// Smallest lambda in (1, 2) for which the pattern closes after a whole
// number of turns:
//   I:   (n-2) * 2 asin(l/2) - 2 (pi/2 - asin(l/2)) = 2 k pi
//   II:  (n-1) * 2 asin(l/2) - pi/3               = 2 k pi
//   III:      n * 2 asin(l/2)                     = 2 k pi, k = ceil(n/6)
// I and II are solved by bisection to 1e-14 and cross-checked against the
// closed form; III is evaluated in closed form.  Odd n only; pattern I needs
// n >= 5 (at n = 3 its closure degenerates to winding number zero).
double config_lambda(int n, ConfigKind kind);

// Closed forms the closure equations reduce to: 2 sin(pi/6 * num/den) with
// num/den depending on n mod 6 and the pattern.  Defined for all odd n >= 3.
double table_lambda(int n, ConfigKind kind);

// Rotates the cyclic block p_h..p_k (inclusive) about the origin by
// e^{i theta}.  Point norms are untouched; only the chords entering p_h and
// leaving p_k change length.  Requires h != k; note (h, k) and (k, h) name
// complementary blocks.
PointSequence rotate_block(const PointSequence& seq, int h, int k, double theta);

// Rotates p_h about the pivot p_k: p_h <- (p_h - p_k) e^{i theta} + p_k,
// preserving |p_h - p_k| and every other point.  Requires h != k.
PointSequence rotate_about(const PointSequence& seq, int h, int k, double theta);

// Nowhere-zero flow on prism_graph(n) with the wheel's norm profile: outer
// edge j carries p_j, inner edge j carries -p_j, rung j -> n+j carries
// p_{j-1} - p_j.  Attains wheel_flow_number(n), which is exact for odd n.
FlowAssignment prism_flow(int n);

}  // namespace cflow
