#pragma once

#include <stdexcept>
#include <string>

#include "tarski/cartesian.hpp"

namespace tarski {

struct outside_disk_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Point of Klein's disk model: a dimension-2 vector with squared norm
/// strictly below 1.
class KPoint {
 public:
  explicit KPoint(Vec v) : v_(std::move(v)) {
    if (v_.dim() != 2) throw std::invalid_argument("KPoint: dimension 2 required");
    if (!(norm2(v_) < Scalar(1)))
      throw outside_disk_error("point " + v_.str() + " is not inside the unit disk");
  }

  const Vec& coords() const { return v_; }
  std::string str() const { return v_.str(); }

  friend bool operator==(const KPoint& a, const KPoint& b) { return a.v_ == b.v_; }

 private:
  Vec v_;
};

inline KPoint mk_kpoint(const Vec& v) { return KPoint(v); }

inline std::optional<KPoint> try_kpoint(const Vec& v) {
  if (v.dim() != 2 || !(norm2(v) < Scalar(1))) return std::nullopt;
  return KPoint(v);
}

/// Betweenness delegates to the underlying Cartesian plane.
inline bool bet_k(const KPoint& a, const KPoint& b, const KPoint& c) {
  return bet(a.coords(), b.coords(), c.coords());
}

inline Scalar omd(const Vec& v, const Vec& w) { return Scalar(1) - dot(v, w); }

// (1 - v.w)^2 / ((1 - v.v)(1 - w.w)); denominators are positive for in-disk
// points, so the quotient is always defined.
inline Scalar cong_quotient(const Vec& v, const Vec& w) {
  Scalar top = omd(v, w);
  return top * top / (omd(v, v) * omd(w, w));
}

inline bool cong_k(const KPoint& a, const KPoint& b, const KPoint& c, const KPoint& d) {
  return cong_quotient(a.coords(), b.coords()) == cong_quotient(c.coords(), d.coords());
}

struct KleinConfig {
  KPoint a;
  KPoint b;
  KPoint c;
  KPoint d;
  KPoint t;
};

/// The fixed five-point configuration used to refute the parallel postulate:
/// bet_k(a,d,t), bet_k(b,d,c), b != d, d != c, and a, b, c not collinear.
inline KleinConfig euclid_counterexample_config() {
  auto pt = [](long nx, long dx, long ny, long dy) {
    return KPoint(Vec{Scalar::from_rational(nx, dx), Scalar::from_rational(ny, dy)});
  };
  return KleinConfig{pt(0, 1, 0, 1), pt(0, 1, 1, 2), pt(1, 2, 0, 1), pt(1, 4, 1, 4),
                     pt(1, 2, 1, 2)};
}

struct ForcedY {
  Scalar k1;
  Vec b_prime;
  Vec y;
  Scalar y_norm2;
};

/// For any in-disk x on the ray from the configuration's a through b, the
/// only candidate for the point the parallel postulate asserts lies on the
/// line a-c at ratio 1/k1, and that point falls outside the disk. The bound
/// k1 <= 1/2 (hence y.y >= 1) holds for every admissible x and is checked
/// exactly along with the two betweenness facts.
inline ForcedY euclid_forced_y(const KPoint& x) {
  KleinConfig cfg = euclid_counterexample_config();
  if (x == cfg.b) throw std::invalid_argument("euclid_forced_y: x = b is degenerate");
  const Vec& a = cfg.a.coords();
  const Vec& b = cfg.b.coords();
  const Vec& c = cfg.c.coords();
  const Vec& t = cfg.t.coords();
  const Vec& xv = x.coords();
  if (!bet(a, b, xv))
    throw std::invalid_argument("euclid_forced_y: x must lie on the ray a-b beyond b");

  ForcedY out{Scalar(0), xv + a - b, Vec{}, Scalar(0)};
  out.k1 = betR(a, out.b_prime, xv);
  if (!(out.k1 <= Scalar::from_rational(1, 2)))
    throw std::logic_error("euclid_forced_y: ratio bound violated");
  Scalar inv_k1 = out.k1.inverse();
  out.y = a + inv_k1 * (c - a);
  out.y_norm2 = norm2(out.y);
  if (out.y_norm2 < Scalar(1)) throw std::logic_error("euclid_forced_y: y inside the disk");
  if (!bet(xv, t, out.y) || !bet(a, c, out.y))
    throw std::logic_error("euclid_forced_y: betweenness check failed");
  return out;
}

}  // namespace tarski
