#include "cflow/wheel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cflow/errors.hpp"

namespace cflow {

namespace {

constexpr double pi = std::numbers::pi;

// e^{i pi/3} written so that std::abs of the point, and of its difference
// from 1, are both exactly 1.0 in binary64; keeps the even construction's
// norms literally equal.
const Complex sixth_root{0.5, std::sqrt(3.0) / 2.0};

}  // namespace

double wheel_flow_number(int n) {
  if (n < 3) throw std::invalid_argument("wheel_flow_number: need n >= 3");
  if (n % 2 == 0) return 2.0;
  const double f =
      (n % 6 == 5) ? static_cast<double>(n + 1) / n : static_cast<double>(n) / (n - 1);
  return 1.0 + 2.0 * std::sin(pi / 6.0 * f);
}

PointSequence optimal_sequence(int n) {
  if (n < 3) throw std::invalid_argument("optimal_sequence: need n >= 3");
  if (n % 2 == 0)
    throw std::invalid_argument(
        "optimal_sequence: defined for odd n; even wheels use even_wheel_sequence");
  ComplexVector p(n);
  switch (n % 6) {
    case 5: {
      // star polygon: n unit points stepping by pi/3 * (n+1)/n, every chord
      // of norm 2 sin(pi/6 * (n+1)/n)
      const double step = pi / 3.0 * (n + 1) / n;
      for (int j = 0; j < n; ++j) p[j] = std::polar(1.0, j * step);
      break;
    }
    case 1: {
      // one clockwise unit chord from p_0 = e^{i pi/3} to p_1 = 1, then
      // anticlockwise steps of pi/3 * n/(n-1)
      const double step = pi / 3.0 * n / (n - 1);
      p[0] = std::polar(1.0, pi / 3.0);
      for (int j = 0; j + 1 < n; ++j) p[j + 1] = std::polar(1.0, j * step);
      break;
    }
    default: {  // n = 3 (mod 6)
      // p_1 leaves the unit circle: two unit chords p_0 -> p_1 -> p_2 with
      // |p_1| = lambda, then anticlockwise steps of pi/3 * n/(n-1)
      const double step = pi / 3.0 * n / (n - 1);
      const double lambda = 2.0 * std::sin(pi / 6.0 * n / (n - 1));
      const double a = pi / 6.0 * (2 * n - 3) / (n - 1);
      p[0] = std::polar(1.0, 2.0 * a);
      p[1] = std::polar(lambda, a);
      for (int j = 0; j + 2 < n; ++j) p[j + 2] = std::polar(1.0, j * step);
      break;
    }
  }
  return PointSequence(std::move(p));
}

PointSequence even_wheel_sequence(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("even_wheel_sequence: need even n >= 4");
  ComplexVector p(n);
  for (int j = 0; j < n; ++j) p[j] = (j % 2 == 0) ? Complex(1.0, 0.0) : sixth_root;
  return PointSequence(std::move(p));
}

FlowAssignment even_wheel_flow(int n) { return points_to_flow(even_wheel_sequence(n)); }

FlowAssignment optimal_flow(int n) {
  if (n < 3) throw std::invalid_argument("optimal_flow: need n >= 3");
  return n % 2 == 0 ? even_wheel_flow(n) : points_to_flow(optimal_sequence(n));
}

double lambda_of(const PointSequence& seq) {
  return std::max(point_norms(seq).maxCoeff(), chord_norms(seq).maxCoeff());
}

AngleSet angle_set(double lambda) {
  const double sqrt2 = std::sqrt(2.0);
  if (!(lambda > 1.0 && lambda <= sqrt2 + 1e-12))
    throw std::domain_error("angle_set: lambda outside (1, sqrt(2)]");
  AngleSet a;
  a.alpha = std::asin(1.0 / (2.0 * lambda));
  a.beta = std::asin(lambda / 2.0);
  a.alpha_prime = pi / 2.0 - a.alpha;
  a.beta_prime = pi / 2.0 - a.beta;
  // sanity of the derived bounds, with slack for the endpoint lambda = sqrt(2)
  const double slack = 2e-12;
  if (!(a.alpha >= std::asin(sqrt2 / 4.0) - slack && a.alpha < pi / 6.0 + slack &&
        a.beta > pi / 6.0 - slack && a.beta <= pi / 4.0 + slack &&
        a.alpha + a.beta > pi / 3.0 - slack))
    throw std::logic_error("angle_set: derived angles escaped their bounds");
  return a;
}

std::string to_string(const VectorTypeLabel& label) {
  std::string s;
  s += (label.start == Circle::I) ? 'I' : 'E';
  s += (label.end == Circle::I) ? 'I' : 'E';
  s += (label.sign == StepSign::plus) ? '+' : '-';
  return s;
}

VectorTypeLabel classify_vector(const PointSequence& seq, int j, double lambda,
                                double tol) {
  const int n = seq.size();
  if (j < 0 || j >= n) throw std::invalid_argument("classify_vector: index out of range");
  if (!(lambda > 1.0)) throw std::invalid_argument("classify_vector: need lambda > 1");
  if (!(tol >= 0.0)) throw std::invalid_argument("classify_vector: need tol >= 0");
  const auto circle_of = [&](Complex p) {
    const double r = std::abs(p);
    const double di = std::abs(r - 1.0), de = std::abs(r - lambda);
    if (di > tol && de > tol)
      throw UnclassifiableError("classify_vector: point norm matches neither circle");
    return di <= de ? Circle::I : Circle::E;
  };
  const Complex a = seq.point((j + n - 1) % n);
  const Complex b = seq.point(j);
  VectorTypeLabel label;
  label.start = circle_of(a);
  label.end = circle_of(b);
  const double d = std::arg(b * std::conj(a));  // argument step in (-pi, pi]
  if (d == 0.0) throw UnclassifiableError("classify_vector: zero angular step");
  label.sign = d > 0.0 ? StepSign::plus : StepSign::minus;
  return label;
}

double table_lambda(int n, ConfigKind kind) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("table_lambda: need odd n >= 3");
  double num = 0.0, den = 1.0;
  switch (n % 6) {
    case 1:
      if (kind == ConfigKind::I) num = n + 2, den = n - 1;
      if (kind == ConfigKind::II) num = n, den = n - 1;
      if (kind == ConfigKind::III) num = n + 5, den = n;
      break;
    case 3:
      if (kind == ConfigKind::I) num = n, den = n - 1;
      if (kind == ConfigKind::II) num = n + 4, den = n - 1;
      if (kind == ConfigKind::III) num = n + 3, den = n;
      break;
    default:  // 5
      if (kind == ConfigKind::I) num = n + 4, den = n - 1;
      if (kind == ConfigKind::II) num = n + 2, den = n - 1;
      if (kind == ConfigKind::III) num = n + 1, den = n;
      break;
  }
  return 2.0 * std::sin(pi / 6.0 * num / den);
}

double config_lambda(int n, ConfigKind kind) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("config_lambda: need odd n >= 3");

  if (kind == ConfigKind::III) {
    // n chords of half-angle asin(l/2) wind k = ceil(n/6) times
    const int k = (n + 5) / 6;
    const double lambda = 2.0 * std::sin(k * pi / n);
    if (!(lambda > 1.0 && lambda < 2.0))
      throw InfeasibleConfigError("config_lambda: no radius in (1, 2)");
    if (std::abs(lambda - table_lambda(n, kind)) > 1e-12)
      throw std::logic_error("config_lambda: closed form mismatch");
    return lambda;
  }
  if (kind == ConfigKind::I && n < 5)
    throw std::invalid_argument(
        "config_lambda: the two unit chords of pattern I need n >= 5 "
        "(its closure at n = 3 degenerates to winding number zero)");

  // winding of the pattern as a function of the half-angle t = asin(l/2):
  //   I:  (n-2) * 2t - 2 (pi/2 - t)   two negative unit chords
  //   II: (n-1) * 2t - pi/3           one negative unit chord
  // pick the least k whose closure winding 2 k pi admits t in (pi/6, pi/2)
  const auto theta_for = [&](int k) {
    return kind == ConfigKind::I ? ((2.0 * k + 1.0) * pi) / (2.0 * (n - 1))
                                 : (2.0 * k * pi + pi / 3.0) / (2.0 * (n - 1));
  };
  int k = 0;
  while (k <= n && theta_for(k) <= pi / 6.0) ++k;
  if (theta_for(k) >= pi / 2.0)
    throw InfeasibleConfigError("config_lambda: no radius in (1, 2)");

  const double target = 2.0 * k * pi;
  const auto winding = [&](double lambda) {
    const double t = std::asin(lambda / 2.0);
    return kind == ConfigKind::I ? (n - 2) * 2.0 * t - 2.0 * (pi / 2.0 - t)
                                 : (n - 1) * 2.0 * t - pi / 3.0;
  };
  double lo = 1.0, hi = 2.0;  // winding is increasing in lambda
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (winding(mid) < target ? lo : hi) = mid;
  }
  const double lambda = 0.5 * (lo + hi);
  if (std::abs(lambda - table_lambda(n, kind)) > 1e-12)
    throw std::logic_error("config_lambda: closed form mismatch");
  return lambda;
}

PointSequence rotate_block(const PointSequence& seq, int h, int k, double theta) {
  const int n = seq.size();
  if (h < 0 || h >= n || k < 0 || k >= n)
    throw std::invalid_argument("rotate_block: index out of range");
  if (h == k) throw std::invalid_argument("rotate_block: need h != k");
  ComplexVector p = seq.points();
  const Complex rot = std::polar(1.0, theta);
  for (int j = h;; j = (j + 1) % n) {
    p[j] *= rot;
    if (j == k) break;
  }
  return PointSequence(std::move(p));
}

PointSequence rotate_about(const PointSequence& seq, int h, int k, double theta) {
  const int n = seq.size();
  if (h < 0 || h >= n || k < 0 || k >= n)
    throw std::invalid_argument("rotate_about: index out of range");
  if (h == k) throw std::invalid_argument("rotate_about: need h != k");
  ComplexVector p = seq.points();
  p[h] = (p[h] - p[k]) * std::polar(1.0, theta) + p[k];
  return PointSequence(std::move(p));
}

FlowAssignment prism_flow(int n) {
  if (n < 3) throw std::invalid_argument("prism_flow: need n >= 3");
  const PointSequence seq =
      (n % 2 == 0) ? even_wheel_sequence(n) : optimal_sequence(n);
  ComplexVector vals(3 * n);
  for (int j = 0; j < n; ++j) {
    vals[j] = seq.point(j);            // outer cycle edge j -> j+1
    vals[n + j] = -seq.point(j);       // inner cycle runs against the outer one
    vals[2 * n + j] = -seq.chord(j);   // rung j -> n+j balances both endpoints
  }
  return FlowAssignment(prism_graph(n), std::move(vals));
}

}  // namespace cflow
