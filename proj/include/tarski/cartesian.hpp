#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tarski/vec.hpp"

namespace tarski {

// Cartesian model over the exact scalar field: points are coordinate
// vectors, segments compare by squared Euclidean norm, and betweenness is
// the existence of a ratio k in [0,1] with b-a = k*(c-a). All predicates are
// decided exactly; the witness constructions return points that can be
// re-checked against the predicates they are meant to satisfy.

using Ratio = Scalar;

inline bool cong(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  if (a.dim() != c.dim())
    throw std::invalid_argument("cong: dimension mismatch between segment pairs");
  return norm2(b - a) == norm2(d - c);
}

/// v1[i]/v2[i] for the first index with v2[i] != 0, and 0 when v2 is the
/// zero vector.
inline Ratio ratio(const Vec& v1, const Vec& v2) {
  if (v1.dim() != v2.dim())
    throw std::invalid_argument("ratio: dimension mismatch");
  for (int i = 0; i < v2.dim(); ++i)
    if (!v2[i].is_zero()) return v1[i] / v2[i];
  return Scalar(0);
}

inline Ratio betR(const Vec& a, const Vec& b, const Vec& c) {
  return ratio(b - a, c - a);
}

inline bool betE(const Vec& a, const Vec& b, const Vec& c) {
  return a == b || b == c;
}

inline bool betS(const Vec& a, const Vec& b, const Vec& c) {
  Ratio r = betR(a, b, c);
  if (!(Scalar(0) < r && r < Scalar(1))) return false;
  return b - a == r * (c - a);
}

inline bool bet(const Vec& a, const Vec& b, const Vec& c) {
  return betE(a, b, c) || betS(a, b, c);
}

/// Point E with bet(a,b,E) and cong(b,E,c,d). For a == b the direction is
/// free and the first basis vector is used.
inline Vec seg_construct_witness(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  Scalar len = sqrt_nonneg(norm2(d - c));
  if (a == b) {
    std::vector<Scalar> e1(static_cast<size_t>(a.dim()));
    e1[0] = Scalar(1);
    return b + len * Vec(std::move(e1));
  }
  Scalar scale = len / sqrt_nonneg(norm2(b - a));
  return b + scale * (b - a);
}

struct PaschWitness {
  Vec x;
  Ratio k3;
  Ratio k4;
};

inline bool col(const Vec& a, const Vec& b, const Vec& c) {
  return bet(a, b, c) || bet(b, c, a) || bet(c, a, b);
}

/// Inner-Pasch intersection for the non-degenerate configuration.
/// Requires betS(a,p,c), betS(b,q,c) and a non-collinear triangle a,b,c.
inline PaschWitness pasch_witness(const Vec& a, const Vec& b, const Vec& c,
                                  const Vec& p, const Vec& q) {
  if (!betS(a, p, c) || !betS(b, q, c))
    throw std::invalid_argument("pasch_witness: p, q must be strictly interior");
  if (col(a, b, c))
    throw std::invalid_argument("pasch_witness: a, b, c must not be collinear");
  Ratio k1 = betR(a, p, c);
  Ratio k2 = betR(b, q, c);
  Scalar denom = k1 + k2 - k1 * k2;
  Ratio k3 = k1 * (Scalar(1) - k2) / denom;
  Ratio k4 = k2 * (Scalar(1) - k1) / denom;
  return PaschWitness{p + k3 * (b - p), k3, k4};
}

/// Ratio k with b-a = k*(c-a) given b-a = k1*(d-a) and c-b = k2*(d-b).
inline Ratio transitivity_ratio(const Ratio& k1, const Ratio& k2) {
  if (!(Scalar(0) < k1 && k1 < Scalar(1) && Scalar(0) < k2 && k2 < Scalar(1)))
    throw std::invalid_argument("transitivity_ratio: ratios must lie in (0,1)");
  return k1 / (k1 + k2 - k1 * k2);
}

struct EuclidWitness {
  Vec x;
  Vec y;
};

/// Witness pair (X, Y) for the Euclid configuration: requires betS(a,d,t)
/// and bet(b,d,c); then bet(a,b,X), bet(a,c,Y) and t-X = k2*(Y-X) hold.
inline EuclidWitness euclid_witnesses(const Vec& a, const Vec& b, const Vec& c,
                                      const Vec& d, const Vec& t) {
  if (!betS(a, d, t))
    throw std::invalid_argument("euclid_witnesses: need betS(a,d,t)");
  if (!bet(b, d, c))
    throw std::invalid_argument("euclid_witnesses: need bet(b,d,c)");
  Ratio k1 = betR(a, d, t);
  Scalar inv_k1 = k1.inverse();
  return EuclidWitness{a + inv_k1 * (b - a), a + inv_k1 * (c - a)};
}

inline Vec midpoint(const Vec& p, const Vec& q) {
  return Scalar::from_rational(1, 2) * (p + q);
}

inline void require_dim2(const Vec& v, const char* who) {
  if (v.dim() != 2) throw std::invalid_argument(std::string(who) + ": dimension 2 required");
}

/// Right angle at the midpoint m of pq, seen from a:
/// (p0-m0)(m0-a0) + (p1-m1)(m1-a1) == 0.
inline bool cong_perp_check(const Vec& a, const Vec& p, const Vec& q) {
  require_dim2(a, "cong_perp_check");
  require_dim2(p, "cong_perp_check");
  require_dim2(q, "cong_perp_check");
  Vec m = midpoint(p, q);
  Scalar lhs = (p[0] - m[0]) * (m[0] - a[0]) + (p[1] - m[1]) * (m[1] - a[1]);
  return lhs.is_zero();
}

inline bool col_2d(const Vec& a, const Vec& b, const Vec& c) {
  require_dim2(a, "col_2d");
  require_dim2(b, "col_2d");
  require_dim2(c, "col_2d");
  return (a[0] - b[0]) * (b[1] - c[1]) == (a[1] - b[1]) * (b[0] - c[0]);
}

struct LowerDimWitness {
  Vec a;
  Vec b;
  Vec c;
};

/// Three points no one of which lies between the other two.
inline LowerDimWitness lower_dim_witness() {
  return LowerDimWitness{Vec{Scalar(0), Scalar(0)}, Vec{Scalar(0), Scalar(1)},
                         Vec{Scalar(1), Scalar(0)}};
}

/// Parallelism of lines ab and cd via the direction cross product; coincident
/// lines count as parallel.
inline bool par_2d(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  require_dim2(a, "par_2d");
  if (a == b || c == d) throw std::invalid_argument("par_2d: degenerate line");
  Vec u = b - a;
  Vec v = d - c;
  return (u[0] * v[1]) == (u[1] * v[0]);
}

/// Intersection of lines ab and cd. Returns the common point; for coincident
/// lines the representative a is returned, and for parallel distinct lines
/// there is none.
inline std::optional<Vec> line_intersection_2d(const Vec& a, const Vec& b,
                                               const Vec& c, const Vec& d) {
  require_dim2(a, "line_intersection_2d");
  if (a == b || c == d) throw std::invalid_argument("line_intersection_2d: degenerate line");
  Vec u = b - a;
  Vec v = d - c;
  Scalar det = u[0] * v[1] - u[1] * v[0];
  if (det.is_zero()) {
    if (col_2d(c, d, a)) return a;  // coincident
    return std::nullopt;
  }
  Vec w = c - a;
  Scalar s = (w[0] * v[1] - w[1] * v[0]) / det;
  return a + s * u;
}

struct A9nCounterexample {
  std::vector<Vec> ring;  // P_1..P_n on the unit circle of the first two axes
  Vec a;
  Vec b;
  Vec c;
};

/// The four-point circle configuration in dimension 4 whose congruence
/// premises hold while a, b, c are not collinear. Only n = 4 has rational
/// circle points.
inline A9nCounterexample a9n_counterexample(int n) {
  if (n != 4) throw std::invalid_argument("a9n_counterexample: only n = 4 is supported");
  auto v4 = [](int x0, int x1, int x2, int x3) {
    return Vec{Scalar(x0), Scalar(x1), Scalar(x2), Scalar(x3)};
  };
  A9nCounterexample out;
  out.ring = {v4(0, 1, 0, 0), v4(-1, 0, 0, 0), v4(0, -1, 0, 0), v4(1, 0, 0, 0)};
  out.a = v4(0, 0, 0, 0);
  out.b = v4(0, 0, 1, 0);
  out.c = v4(0, 0, 0, 1);
  return out;
}

/// Mirror image of p through the line a-b (the off-line component is
/// negated, which works in any dimension); requires a != b.
inline Vec reflect_across_line(const Vec& a, const Vec& b, const Vec& p) {
  if (a == b) throw std::invalid_argument("reflect_across_line: degenerate line");
  Vec u = b - a;
  Vec proj = a + (dot(p - a, u) / dot(u, u)) * u;
  return Scalar(2) * proj - p;
}

/// Rotation with exact coefficients cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
struct Rotation2 {
  Scalar c;
  Scalar s;

  Vec apply(const Vec& p) const {
    require_dim2(p, "Rotation2::apply");
    return Vec{c * p[0] - s * p[1], s * p[0] + c * p[1]};
  }
  Scalar m00() const { return c; }
  Scalar m01() const { return -s; }
  Scalar m10() const { return s; }
  Scalar m11() const { return c; }
};

inline Rotation2 rational_rotation(const Scalar& t) {
  Scalar den = Scalar(1) + t * t;
  return Rotation2{(Scalar(1) - t * t) / den, (Scalar(2) * t) / den};
}

inline Vec apply_isometry(const Rotation2& rot, const Vec& shift, const Vec& p) {
  return rot.apply(p) + shift;
}

}  // namespace tarski
