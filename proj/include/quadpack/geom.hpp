/* Apache License, Version 2.0 */
//
// Geometric kernel: points, circles, polygons with holes, and the tangency /
// circumcircle / Apollonius predicates the packing and meshing layers build on.
// Everything here is a value type or a pure function; tolerances are relative
// to the local feature scale of the inputs.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadpack {

// ---------------------------------------------------------------------------
// errors

enum class ErrorCode {
  CollinearPoints,
  NotTangent,
  NoSolution,
  Overflow,
  InvalidPolygon,
  ParseError,
  Degenerate,
  CocircularityViolation,
  NonSimpleQuad,
  InvalidPackingMode,
  BadBoundaryGap,
  FootOutsideEdge,
  UnhandledGap,
  ThresholdNotMet,
  AspectViolation,
  NotAKite,
  AngleTargetMissed,
  IoError,
  Internal,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CocircularityViolation: return "CocircularityViolation";
    case ErrorCode::NonSimpleQuad: return "NonSimpleQuad";
    case ErrorCode::InvalidPackingMode: return "InvalidPackingMode";
    case ErrorCode::BadBoundaryGap: return "BadBoundaryGap";
    case ErrorCode::FootOutsideEdge: return "FootOutsideEdge";
    case ErrorCode::UnhandledGap: return "UnhandledGap";
    case ErrorCode::ThresholdNotMet: return "ThresholdNotMet";
    case ErrorCode::AspectViolation: return "AspectViolation";
    case ErrorCode::NotAKite: return "NotAKite";
    case ErrorCode::AngleTargetMissed: return "AngleTargetMissed";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// ---------------------------------------------------------------------------
// points and vectors

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_) : x(x_), y(y_) {}

  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  Point operator/(double s) const { return {x / s, y / s}; }
  Point operator-() const { return {-x, -y}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline Point operator*(double s, Point p) { return p * s; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) { return norm2(a - b); }
inline Point perp(Point p) { return {-p.y, p.x}; }  // +90 degrees

inline Point normalized(Point p) {
  double n = norm(p);
  if (n == 0.0) fail(ErrorCode::Degenerate, "cannot normalize zero vector");
  return p / n;
}

inline Point lerp(Point a, Point b, double t) { return a + (b - a) * t; }
inline Point midpoint(Point a, Point b) { return {(a.x + b.x) * 0.5, (a.y + b.y) * 0.5}; }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Angle of vector, in (-pi, pi].
inline double angle_of(Point v) { return std::atan2(v.y, v.x); }

// Counterclockwise angle at b formed by rays b->a and b->c, in [0, 2*pi).
inline double ccw_angle(Point a, Point b, Point c) {
  double ang = std::atan2(cross(a - b, c - b), dot(a - b, c - b));
  if (ang < 0) ang += 2.0 * M_PI;
  return ang;
}

// ---------------------------------------------------------------------------
// tolerances

struct Tolerances {
  double eps_rel = 1e-9;    // relative geometric tolerance
  double eps_angle = 1e-6;  // angular tolerance, radians

  void validate() const {
    if (!(eps_rel > 0.0 && eps_rel < 1e-3))
      fail(ErrorCode::Degenerate, "eps_rel out of range (0, 1e-3)");
    if (!(eps_angle > 0.0 && eps_angle < 1e-3))
      fail(ErrorCode::Degenerate, "eps_angle out of range (0, 1e-3)");
  }
};

// ---------------------------------------------------------------------------
// circles

struct Circle {
  Point center;
  double radius = 0.0;

  Circle() = default;
  Circle(Point c, double r) : center(c), radius(r) {}
};

// Power of a point with respect to a circle: r^2 - |p - center|^2.
// Positive inside, zero on the circle, negative outside.
inline double power(Point p, const Circle& c) {
  return c.radius * c.radius - dist2(p, c.center);
}

// Signed clearance from a point to the disk boundary (positive outside).
inline double clearance(Point p, const Circle& c) { return dist(p, c.center) - c.radius; }

struct Segment {
  Point a, b;
};

inline Point project_on_line(Point p, Point a, Point b) {
  Point d = b - a;
  double t = dot(p - a, d) / norm2(d);
  return a + d * t;
}

inline double dist_point_segment(Point p, Point a, Point b) {
  Point d = b - a;
  double l2 = norm2(d);
  if (l2 == 0.0) return dist(p, a);
  double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
  return dist(p, a + d * t);
}

// Intersection of segments [a,b] and [c,d], including endpoint touches.
inline bool segments_intersect(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    double v = cross(q - p, r - p);
    double scale = std::max({std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y),
                             std::abs(r.x), std::abs(r.y), 1.0});
    double eps = 1e-14 * scale * scale;
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  auto on_seg = [&](Point p, Point q, Point r) {
    return orient(p, q, r) == 0 && std::min(p.x, q.x) - 1e-14 <= r.x &&
           r.x <= std::max(p.x, q.x) + 1e-14 && std::min(p.y, q.y) - 1e-14 <= r.y &&
           r.y <= std::max(p.y, q.y) + 1e-14;
  };
  if (on_seg(a, b, c) || on_seg(a, b, d) || on_seg(c, d, a) || on_seg(c, d, b)) return true;
  return false;
}

// The two intersection points of a pair of overlapping circles.
inline std::optional<std::pair<Point, Point>> circle_circle_intersection(const Circle& a,
                                                                         const Circle& b) {
  double d = dist(a.center, b.center);
  if (d == 0.0) return std::nullopt;
  double ra = a.radius, rb = b.radius;
  if (d > ra + rb || d < std::abs(ra - rb)) return std::nullopt;
  double t = (d * d + ra * ra - rb * rb) / (2.0 * d);
  double h2 = ra * ra - t * t;
  if (h2 < 0) h2 = 0;
  double h = std::sqrt(h2);
  Point u = (b.center - a.center) / d;
  Point base = a.center + u * t;
  Point off = perp(u) * h;
  return std::make_pair(base + off, base - off);
}

// ---------------------------------------------------------------------------
// polygons (outer loop counterclockwise, holes clockwise)

struct Polygon {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;

  int n() const {
    int total = static_cast<int>(outer.size());
    for (const auto& h : holes) total += static_cast<int>(h.size());
    return total;
  }
};

inline double loop_area(const std::vector<Point>& loop) {
  double a = 0.0;
  for (size_t i = 0; i < loop.size(); ++i) {
    const Point& p = loop[i];
    const Point& q = loop[(i + 1) % loop.size()];
    a += cross(p, q);
  }
  return 0.5 * a;
}

inline double polygon_area(const Polygon& poly) {
  double a = loop_area(poly.outer);
  for (const auto& h : poly.holes) a += loop_area(h);  // holes are clockwise: negative
  return a;
}

inline std::pair<Point, Point> bounding_box(const Polygon& poly) {
  Point lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Point hi{-std::numeric_limits<double>::max(), -std::numeric_limits<double>::max()};
  auto feed = [&](const std::vector<Point>& loop) {
    for (Point p : loop) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  };
  feed(poly.outer);
  for (const auto& h : poly.holes) feed(h);
  return {lo, hi};
}

inline double bbox_diag(const Polygon& poly) {
  auto [lo, hi] = bounding_box(poly);
  return dist(lo, hi);
}

inline bool loop_simple(const std::vector<Point>& loop) {
  size_t k = loop.size();
  if (k < 3) return false;
  for (size_t i = 0; i < k; ++i) {
    Point a = loop[i], b = loop[(i + 1) % k];
    if (dist(a, b) == 0.0) return false;
    for (size_t j = i + 1; j < k; ++j) {
      // skip adjacent edges (they share an endpoint)
      if (j == i || (j + 1) % k == i || (i + 1) % k == j) continue;
      Point c = loop[j], d = loop[(j + 1) % k];
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

inline bool point_in_loop(const std::vector<Point>& loop, Point p) {
  // even-odd rule
  bool inside = false;
  size_t k = loop.size();
  for (size_t i = 0, j = k - 1; i < k; j = i++) {
    Point a = loop[i], b = loop[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

// Even-odd containment over outer loop and holes.
inline bool contains(const Polygon& poly, Point p) {
  if (!point_in_loop(poly.outer, p)) return false;
  for (const auto& h : poly.holes)
    if (point_in_loop(h, p)) return false;
  return true;
}

inline double dist_to_boundary(const Polygon& poly, Point p) {
  double d = std::numeric_limits<double>::max();
  auto feed = [&](const std::vector<Point>& loop) {
    for (size_t i = 0; i < loop.size(); ++i)
      d = std::min(d, dist_point_segment(p, loop[i], loop[(i + 1) % loop.size()]));
  };
  feed(poly.outer);
  for (const auto& h : poly.holes) feed(h);
  return d;
}

// True iff the open segment (a, b) stays inside the polygon: it must not cross
// or touch any boundary edge and its midpoint must be interior.
inline bool segment_inside(const Polygon& poly, Point a, Point b) {
  auto blocked = [&](const std::vector<Point>& loop) {
    for (size_t i = 0; i < loop.size(); ++i) {
      Point c = loop[i], d = loop[(i + 1) % loop.size()];
      // Shrink the query segment a hair so that segments *starting* on the
      // boundary (e.g. from a boundary mesh vertex) are not self-blocked.
      Point a2 = lerp(a, b, 1e-9), b2 = lerp(a, b, 1.0 - 1e-9);
      if (segments_intersect(a2, b2, c, d)) return true;
    }
    return false;
  };
  if (blocked(poly.outer)) return false;
  for (const auto& h : poly.holes)
    if (blocked(h)) return false;
  return contains(poly, midpoint(a, b));
}

// Validates loop structure; reorients loops in place if needed.
// Returns true if any loop had to be reoriented.
inline bool validate_and_orient(Polygon& poly) {
  bool reoriented = false;
  if (poly.outer.size() < 3) fail(ErrorCode::InvalidPolygon, "outer loop needs >= 3 vertices");
  for (const auto& loop : poly.holes)
    if (loop.size() < 3) fail(ErrorCode::InvalidPolygon, "hole loop needs >= 3 vertices");
  auto check_finite = [](const std::vector<Point>& loop) {
    for (Point p : loop)
      if (!finite(p)) fail(ErrorCode::InvalidPolygon, "non-finite vertex coordinate");
  };
  check_finite(poly.outer);
  for (const auto& h : poly.holes) check_finite(h);

  if (!loop_simple(poly.outer)) fail(ErrorCode::InvalidPolygon, "outer loop self-intersects");
  for (size_t i = 0; i < poly.holes.size(); ++i)
    if (!loop_simple(poly.holes[i]))
      fail(ErrorCode::InvalidPolygon, "hole loop " + std::to_string(i) + " self-intersects");

  if (loop_area(poly.outer) < 0) {
    std::reverse(poly.outer.begin(), poly.outer.end());
    reoriented = true;
  }
  for (auto& h : poly.holes) {
    if (loop_area(h) > 0) {
      std::reverse(h.begin(), h.end());
      reoriented = true;
    }
  }
  // holes strictly inside outer, pairwise disjoint
  for (size_t i = 0; i < poly.holes.size(); ++i) {
    for (Point p : poly.holes[i])
      if (!point_in_loop(poly.outer, p))
        fail(ErrorCode::InvalidPolygon, "hole " + std::to_string(i) + " not inside outer loop");
    for (size_t j = i + 1; j < poly.holes.size(); ++j) {
      for (size_t e1 = 0; e1 < poly.holes[i].size(); ++e1)
        for (size_t e2 = 0; e2 < poly.holes[j].size(); ++e2)
          if (segments_intersect(poly.holes[i][e1],
                                 poly.holes[i][(e1 + 1) % poly.holes[i].size()],
                                 poly.holes[j][e2],
                                 poly.holes[j][(e2 + 1) % poly.holes[j].size()]))
            fail(ErrorCode::InvalidPolygon, "holes intersect");
      if (point_in_loop(poly.holes[j], poly.holes[i][0]) ||
          point_in_loop(poly.holes[i], poly.holes[j][0]))
        fail(ErrorCode::InvalidPolygon, "nested holes");
    }
  }
  return reoriented;
}

// ---------------------------------------------------------------------------
// circumcircle

inline Circle circumcircle(Point p1, Point p2, Point p3, const Tolerances& tol = {}) {
  double scale = std::max({dist(p1, p2), dist(p2, p3), dist(p3, p1)});
  if (scale == 0.0) fail(ErrorCode::CollinearPoints, "coincident points");
  double area2 = cross(p2 - p1, p3 - p1);
  if (std::abs(area2) <= tol.eps_rel * scale * scale)
    fail(ErrorCode::CollinearPoints, "points are collinear within tolerance");
  double b1 = norm2(p2) - norm2(p1);
  double b2 = norm2(p3) - norm2(p1);
  double ax = 2.0 * (p2.x - p1.x), ay = 2.0 * (p2.y - p1.y);
  double bx = 2.0 * (p3.x - p1.x), by = 2.0 * (p3.y - p1.y);
  double det = ax * by - ay * bx;
  Point c{(b1 * by - b2 * ay) / det, (ax * b2 - bx * b1) / det};
  double r = (dist(c, p1) + dist(c, p2) + dist(c, p3)) / 3.0;
  return {c, r};
}

// ---------------------------------------------------------------------------
// tangency

// Point of tangency of two tangent circles (external or internal).
inline Point tangency_point(const Circle& a, const Circle& b, const Tolerances& tol = {}) {
  double d = dist(a.center, b.center);
  double rmax = std::max(a.radius, b.radius);
  double eps = tol.eps_rel * rmax;
  if (std::abs(d - (a.radius + b.radius)) <= eps) {
    // external: on the center line at distance rA from A
    return a.center + (b.center - a.center) * (a.radius / d);
  }
  if (std::abs(d - std::abs(a.radius - b.radius)) <= eps && d > 0) {
    // internal: along the center line on the far side of the smaller circle
    if (a.radius >= b.radius) return a.center + (b.center - a.center) * (a.radius / d);
    return b.center + (a.center - b.center) * (b.radius / d);
  }
  fail(ErrorCode::NotTangent, "circles are neither externally nor internally tangent");
}

inline bool externally_tangent(const Circle& a, const Circle& b, double eps_rel = 1e-9) {
  double d = dist(a.center, b.center);
  return std::abs(d - (a.radius + b.radius)) <= eps_rel * std::max(a.radius, b.radius);
}

// ---------------------------------------------------------------------------
// Apollonius: circle externally tangent to three circles (the inscribed
// splitter of a three-arc gap). Algebraic route: eliminate the quadratic terms
// pairwise (radical-axis style) to express the center linearly in r, then
// solve the remaining quadratic. Damped Newton on the three residuals as a
// fallback for near-degenerate configurations.

namespace detail {

struct LinearInR {
  // x = x0 + xr * r ; y = y0 + yr * r
  double x0, xr, y0, yr;
};

inline std::optional<LinearInR> center_linear_in_r(const Circle& a, const Circle& b,
                                                   const Circle& c) {
  // (x-xi)^2 + (y-yi)^2 = (ri + r)^2 for i in {a,b,c}; subtract pairs:
  // 2(xj-xi) x + 2(yj-yi) y + 2(rj-ri) r = (xj^2+yj^2-rj^2) - (xi^2+yi^2-ri^2)
  auto row = [](const Circle& i, const Circle& j) {
    return std::array<double, 4>{2.0 * (j.center.x - i.center.x), 2.0 * (j.center.y - i.center.y),
                                 2.0 * (j.radius - i.radius),
                                 (norm2(j.center) - j.radius * j.radius) -
                                     (norm2(i.center) - i.radius * i.radius)};
  };
  auto r1 = row(a, b), r2 = row(a, c);
  double det = r1[0] * r2[1] - r1[1] * r2[0];
  double scale = std::max({std::abs(r1[0]), std::abs(r1[1]), std::abs(r2[0]), std::abs(r2[1]), 1e-300});
  if (std::abs(det) < 1e-12 * scale * scale) return std::nullopt;  // collinear centers
  // [x; y] = A^{-1} (d - c_r * r), where c_r is the r-column.
  double x0 = (r1[3] * r2[1] - r2[3] * r1[1]) / det;
  double y0 = (r1[0] * r2[3] - r2[0] * r1[3]) / det;
  double xr = (-r1[2] * r2[1] + r2[2] * r1[1]) / det;
  double yr = (-r1[0] * r2[2] + r2[0] * r1[2]) / det;
  return LinearInR{x0, xr, y0, yr};
}

// Newton polish of a circle tangent externally to three circles.
inline bool newton_three_tangent(const Circle& a, const Circle& b, const Circle& c, Point& p,
                                 double& r) {
  const Circle* cs[3] = {&a, &b, &c};
  for (int it = 0; it < 100; ++it) {
    double f[3];
    double J[3][3];
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      Point d = p - cs[i]->center;
      double dn = norm(d);
      if (dn == 0) return false;
      f[i] = dn - cs[i]->radius - r;
      J[i][0] = d.x / dn;
      J[i][1] = d.y / dn;
      J[i][2] = -1.0;
      worst = std::max(worst, std::abs(f[i]));
    }
    double scale = std::max({a.radius, b.radius, c.radius, std::abs(r), 1e-300});
    if (worst < 1e-15 * scale) return true;
    // solve J * delta = -f
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] = J[i][j];
      m[i][3] = -f[i];
    }
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int row = col + 1; row < 3; ++row)
        if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
      if (std::abs(m[piv][col]) < 1e-300) return false;
      std::swap(m[piv], m[col]);
      for (int row = 0; row < 3; ++row) {
        if (row == col) continue;
        double fk = m[row][col] / m[col][col];
        for (int j = col; j < 4; ++j) m[row][j] -= fk * m[col][j];
      }
    }
    double dx = m[0][3] / m[0][0], dy = m[1][3] / m[1][1], dr = m[2][3] / m[2][2];
    double step = 1.0;
    if (r + dr <= 0) step = std::min(step, -0.5 * r / dr);
    p.x += step * dx;
    p.y += step * dy;
    r += step * dr;
    if (r <= 0) r = scale * 1e-9;
  }
  double worst = 0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(clearance(p, *cs[i]) - r));
  return worst < 1e-12 * std::max({a.radius, b.radius, c.radius, r});
}

}  // namespace detail

inline bool interiors_overlap(const Circle& a, const Circle& b, double eps_rel = 1e-9) {
  double d = dist(a.center, b.center);
  return d < a.radius + b.radius - eps_rel * std::max(a.radius, b.radius);
}

// Circle externally tangent to all three input circles, with interior disjoint
// from all three. Throws NoSolution if no such circle exists.
inline Circle apollonius_inscribed(const Circle& a, const Circle& b, const Circle& c,
                                   const Tolerances& tol = {}) {
  std::vector<Circle> candidates;
  if (auto lin = detail::center_linear_in_r(a, b, c)) {
    // Substitute center(r) into (x-xa)^2 + (y-ya)^2 = (ra + r)^2.
    double ex = lin->x0 - a.center.x, ey = lin->y0 - a.center.y;
    double qa = lin->xr * lin->xr + lin->yr * lin->yr - 1.0;
    double qb = 2.0 * (ex * lin->xr + ey * lin->yr) - 2.0 * a.radius;
    double qc = ex * ex + ey * ey - a.radius * a.radius;
    std::vector<double> roots;
    if (std::abs(qa) < 1e-14 * (std::abs(qb) + std::abs(qc))) {
      if (qb != 0.0) roots.push_back(-qc / qb);
    } else {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0) {
        double sq = std::sqrt(disc);
        roots.push_back((-qb + sq) / (2.0 * qa));
        roots.push_back((-qb - sq) / (2.0 * qa));
      }
    }
    for (double r : roots) {
      if (!(r > 0.0) || !std::isfinite(r)) continue;
      Point p{lin->x0 + lin->xr * r, lin->y0 + lin->yr * r};
      if (detail::newton_three_tangent(a, b, c, p, r) && r > 0) candidates.push_back({p, r});
    }
  }
  if (candidates.empty()) {
    // Newton fallback seeded at the centroid of the chord-intersection region.
    Point seed = (a.center + b.center + c.center) / 3.0;
    double r0 = std::max(
        1e-6 * std::max({a.radius, b.radius, c.radius}),
        std::min({clearance(seed, a), clearance(seed, b), clearance(seed, c)}));
    Point p = seed;
    double r = std::max(r0, 1e-9);
    if (detail::newton_three_tangent(a, b, c, p, r) && r > 0) candidates.push_back({p, r});
  }
  // Asymmetric triples can admit a second, larger externally tangent circle
  // nestled in the unbounded pocket; the inscribed one is the smallest.
  std::sort(candidates.begin(), candidates.end(),
            [](const Circle& l, const Circle& r) { return l.radius < r.radius; });
  for (const Circle& s : candidates) {
    bool ok = true;
    for (const Circle* o : {&a, &b, &c})
      if (interiors_overlap(s, *o, tol.eps_rel)) ok = false;
    if (ok) return s;
  }
  fail(ErrorCode::NoSolution, "no inscribed circle tangent to all three circles");
}

// Circle through `through`, externally tangent to circles a and b.
// Among real solutions, returns the smallest-radius circle whose interior is
// disjoint from both disks.
inline Circle tangent_circle_to_two(const Circle& a, const Circle& b, Point through,
                                    const Tolerances& tol = {}) {
  if (clearance(through, a) < -tol.eps_rel * a.radius ||
      clearance(through, b) < -tol.eps_rel * b.radius)
    fail(ErrorCode::NoSolution, "through-point inside an input disk");
  // (x-xi)^2+(y-yi)^2 = (ri+r)^2 and (x-px)^2+(y-py)^2 = r^2; subtracting the
  // point equation from each circle equation leaves, per circle i:
  //   2(px-xi) x + 2(py-yi) y = (ri^2 + |p|^2 - |ci|^2) + 2 ri r
  double A1 = 2.0 * (through.x - a.center.x), B1 = 2.0 * (through.y - a.center.y);
  double A2 = 2.0 * (through.x - b.center.x), B2 = 2.0 * (through.y - b.center.y);
  double d1 = a.radius * a.radius + norm2(through) - norm2(a.center);
  double d2 = b.radius * b.radius + norm2(through) - norm2(b.center);
  double det = A1 * B2 - A2 * B1;
  std::vector<Circle> candidates;
  if (std::abs(det) >
      1e-14 * (std::abs(A1) + std::abs(B1) + std::abs(A2) + std::abs(B2) + 1e-300) *
          (std::abs(A1) + std::abs(B1) + std::abs(A2) + std::abs(B2))) {
    // x = x0 + xr r, y = y0 + yr r
    double x0 = (d1 * B2 - d2 * B1) / det;
    double y0 = (A1 * d2 - A2 * d1) / det;
    double xr = (2.0 * a.radius * B2 - 2.0 * b.radius * B1) / det;
    double yr = (A1 * 2.0 * b.radius - A2 * 2.0 * a.radius) / det;
    double ex = x0 - through.x, ey = y0 - through.y;
    double qa = xr * xr + yr * yr - 1.0;
    double qb = 2.0 * (ex * xr + ey * yr);
    double qc = ex * ex + ey * ey;
    std::vector<double> roots;
    if (std::abs(qa) < 1e-14) {
      if (qb != 0.0) roots.push_back(-qc / qb);
    } else {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0) {
        double sq = std::sqrt(disc);
        roots.push_back((-qb + sq) / (2.0 * qa));
        roots.push_back((-qb - sq) / (2.0 * qa));
      }
    }
    for (double r : roots) {
      if (!(r > 0.0) || !std::isfinite(r)) continue;
      Point p{x0 + xr * r, y0 + yr * r};
      // polish with Newton on (tangency a, tangency b, through-point)
      for (int it = 0; it < 60; ++it) {
        double f0 = clearance(p, a) - r;
        double f1 = clearance(p, b) - r;
        double f2 = dist(p, through) - r;
        double scale = std::max({a.radius, b.radius, r});
        if (std::max({std::abs(f0), std::abs(f1), std::abs(f2)}) < 1e-15 * scale) break;
        Point g0 = normalized(p - a.center), g1 = normalized(p - b.center);
        Point g2 = (dist(p, through) > 0) ? normalized(p - through) : Point{1, 0};
        double m[3][4] = {{g0.x, g0.y, -1, -f0}, {g1.x, g1.y, -1, -f1}, {g2.x, g2.y, -1, -f2}};
        for (int col = 0; col < 3; ++col) {
          int piv = col;
          for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
          std::swap(m[piv], m[col]);
          if (std::abs(m[col][col]) < 1e-300) break;
          for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            double fk = m[row][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[row][j] -= fk * m[col][j];
          }
        }
        p.x += m[0][3] / m[0][0];
        p.y += m[1][3] / m[1][1];
        r += m[2][3] / m[2][2];
        if (r <= 0) r = 1e-12 * std::max(a.radius, b.radius);
      }
      if (r > 0) candidates.push_back({p, r});
    }
  }
  if (candidates.empty()) {
    // degenerate linear system (through-point on the center line): Newton from
    // symmetric seeds on either side of the line
    Point axis = b.center - a.center;
    Point n = norm(axis) > 0 ? normalized(perp(axis)) : Point{0, 1};
    double scale = std::max(a.radius, b.radius);
    for (double s : {1.0, -1.0}) {
      Point p = through + n * (0.1 * scale * s);
      double r = std::max(1e-3 * scale, 0.5 * std::min(clearance(p, a), clearance(p, b)));
      for (int it = 0; it < 80; ++it) {
        double f0 = clearance(p, a) - r;
        double f1 = clearance(p, b) - r;
        double f2 = dist(p, through) - r;
        if (std::max({std::abs(f0), std::abs(f1), std::abs(f2)}) < 1e-15 * std::max(scale, r))
          break;
        Point g0 = normalized(p - a.center), g1 = normalized(p - b.center);
        Point g2 = (dist(p, through) > 0) ? normalized(p - through) : Point{1, 0};
        double m[3][4] = {{g0.x, g0.y, -1, -f0}, {g1.x, g1.y, -1, -f1}, {g2.x, g2.y, -1, -f2}};
        bool singular = false;
        for (int col = 0; col < 3; ++col) {
          int piv = col;
          for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
          std::swap(m[piv], m[col]);
          if (std::abs(m[col][col]) < 1e-300) { singular = true; break; }
          for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            double fk = m[row][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[row][j] -= fk * m[col][j];
          }
        }
        if (singular) break;
        p.x += m[0][3] / m[0][0];
        p.y += m[1][3] / m[1][1];
        r += m[2][3] / m[2][2];
        if (r <= 0) r = 1e-12 * scale;
      }
      if (r > 0) candidates.push_back({p, r});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Circle& l, const Circle& rr) { return l.radius < rr.radius; });
  for (const Circle& s : candidates) {
    double res = std::max(std::abs(clearance(s.center, a) - s.radius),
                          std::abs(clearance(s.center, b) - s.radius));
    double resp = std::abs(dist(s.center, through) - s.radius);
    if (res > 1e-9 * std::max({a.radius, b.radius, s.radius})) continue;
    if (resp > 1e-9 * std::max(s.radius, 1e-300)) continue;
    if (!interiors_overlap(s, a, tol.eps_rel) && !interiors_overlap(s, b, tol.eps_rel)) return s;
  }
  fail(ErrorCode::NoSolution, "no circle through point tangent to both circles");
}

}  // namespace quadpack
