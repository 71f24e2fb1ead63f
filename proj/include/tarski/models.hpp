#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tarski/cartesian.hpp"
#include "tarski/engine.hpp"
#include "tarski/finite.hpp"
#include "tarski/klein.hpp"

namespace tarski {

// The three model bindings the engine can drive. Each binding supplies the
// primitive predicates, point (de)serialization, whatever witness oracles
// the model affords, and a premise-directed instance generator: uniform
// random tuples satisfy measure-zero premises with probability zero, so
// every generator constructs tuples whose premise holds and the evaluator
// re-checks that premise before counting the trial.

namespace detail_gen {

inline constexpr int kResampleLimit = 100000;

[[noreturn]] inline void resample_overflow(const char* where) {
  throw std::logic_error(std::string("generator stuck resampling in ") + where);
}

}  // namespace detail_gen

class CartesianModel {
 public:
  using Point = Vec;

  explicit CartesianModel(int dim, long bound = 100) : dim_(dim), bound_(bound) {
    if (dim < 1) throw std::invalid_argument("CartesianModel: dim must be >= 1");
    if (bound < 2) throw std::invalid_argument("CartesianModel: bound must be >= 2");
  }

  int dim() const { return dim_; }
  long bound() const { return bound_; }
  std::string name() const { return "cartesian:" + std::to_string(dim_); }

  bool eq(const Vec& a, const Vec& b) const { return a == b; }
  bool bet(const Vec& a, const Vec& b, const Vec& c) const { return tarski::bet(a, b, c); }
  bool cong(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
    return tarski::cong(a, b, c, d);
  }

  std::string point_str(const Vec& p) const { return p.str(); }
  Vec parse_point(std::string_view text) const { return Vec::parse(text, dim_); }

  // witness oracles; each is re-validated by the engine
  Vec segment_witness(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
    return seg_construct_witness(a, b, c, d);
  }
  std::optional<Vec> pasch_witness(const Vec& a, const Vec& b, const Vec& c, const Vec& p,
                                   const Vec& q) const {
    if (!betS(a, p, c) || !betS(b, q, c) || col(a, b, c)) return std::nullopt;
    return tarski::pasch_witness(a, b, c, p, q).x;
  }
  std::optional<std::pair<Vec, Vec>> euclid_witnesses(const Vec& a, const Vec& b,
                                                      const Vec& c, const Vec& d,
                                                      const Vec& t) const {
    if (!betS(a, d, t) || !tarski::bet(b, d, c)) return std::nullopt;
    EuclidWitness w = tarski::euclid_witnesses(a, b, c, d, t);
    return std::make_pair(w.x, w.y);
  }
  std::optional<std::array<Vec, 3>> lower_dim_witness() const {
    if (dim_ != 2) return std::nullopt;
    LowerDimWitness w = tarski::lower_dim_witness();
    return std::array<Vec, 3>{w.a, w.b, w.c};
  }
  bool par(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
    return par_2d(a, b, c, d);
  }
  std::optional<Vec> line_intersection(const Vec& a, const Vec& b, const Vec& c,
                                       const Vec& d) const {
    return line_intersection_2d(a, b, c, d);
  }

  std::optional<std::vector<Vec>> generate(AxiomId ax, SplitMix64& g) const {
    switch (ax) {
      case AxiomId::A0: {
        Vec p = random_point(g);
        return std::vector<Vec>{p, g.chance(1, 2) ? p : random_point(g)};
      }
      case AxiomId::A1:
        return std::vector<Vec>{random_point(g), random_point(g)};
      case AxiomId::A2:
      case AxiomId::A2p: {
        Vec a = random_point(g);
        Vec b = random_point(g);
        Iso f = random_iso(g);
        Iso h = random_iso(g);
        return std::vector<Vec>{a, b, f.apply(a), f.apply(b), h.apply(a), h.apply(b)};
      }
      case AxiomId::A3: {
        Vec a = random_point(g);
        return std::vector<Vec>{a, a, random_point(g)};
      }
      case AxiomId::A4: {
        Vec a = random_point(g);
        Vec b = g.chance(1, 20) ? a : random_point(g);
        Vec c = random_point(g);
        Vec d = g.chance(1, 20) ? c : random_point(g);  // zero-length extension
        return std::vector<Vec>{a, b, c, d};
      }
      case AxiomId::A5: {
        Vec a = random_point(g);
        Vec c = distinct_from(g, a);
        Scalar k = g.chance(1, 10) ? Scalar(1) : Scalar(random_ratio_open(g, bound_));
        Vec b = a + k * (c - a);
        Vec d = random_point(g);
        Iso f = random_iso(g);
        Vec a2 = f.apply(a), b2 = f.apply(b), c2 = f.apply(c), d2 = f.apply(d);
        // half the instances put the primed apex on the other side of the
        // base line; the premise only pins distances from a', b'
        if (g.chance(1, 2)) d2 = reflect_across_line(a2, b2, d2);
        return std::vector<Vec>{a, b, c, d, a2, b2, c2, d2};
      }
      case AxiomId::A6: {
        Vec a = random_point(g);
        return std::vector<Vec>{a, a};
      }
      case AxiomId::A7:
      case AxiomId::A7p: {
        if (dim_ < 2) return std::nullopt;
        auto [a, b, c] = random_triangle(g);
        Vec p = a + Scalar(random_ratio_open(g, bound_)) * (c - a);
        Vec q = b + Scalar(random_ratio_open(g, bound_)) * (c - b);
        return std::vector<Vec>{a, b, c, p, q};
      }
      case AxiomId::A8:
        if (dim_ != 2) return std::nullopt;
        return std::vector<Vec>{};
      case AxiomId::A9:
      case AxiomId::A9p: {
        if (dim_ != 2) return std::nullopt;
        Vec p = random_point(g);
        Vec q = distinct_from(g, p);
        Vec m = midpoint(p, q);
        Vec dir{m[1] - p[1], p[0] - m[0]};  // perpendicular to q - p
        Scalar s1(random_rational(g, bound_));
        Scalar s2(random_rational(g, bound_));
        Scalar s3(random_rational(g, bound_));
        if (ax == AxiomId::A9p) {
          for (int guard = 0; s1 == s2 || s1 == s3 || s2 == s3; ++guard) {
            if (guard > detail_gen::kResampleLimit) detail_gen::resample_overflow("A9p");
            s2 = Scalar(random_rational(g, bound_));
            s3 = Scalar(random_rational(g, bound_));
          }
        } else if (g.chance(1, 10)) {
          s2 = s1;  // the unprimed form admits repeated points
        }
        return std::vector<Vec>{m + s1 * dir, m + s2 * dir, m + s3 * dir, p, q};
      }
      case AxiomId::A10: {
        if (dim_ < 2) return std::nullopt;
        auto [a, b, c] = random_triangle(g);
        Scalar k2 = g.chance(1, 10) ? Scalar(g.chance(1, 2) ? 0 : 1)
                                    : Scalar(random_ratio_open(g, bound_));
        Vec d = b + k2 * (c - b);
        Scalar k1(random_ratio_open(g, bound_));
        Vec t = a + k1.inverse() * (d - a);
        return std::vector<Vec>{a, b, c, d, t};
      }
      case AxiomId::A10p: {
        if (dim_ != 2) return std::nullopt;
        Vec a = random_point(g);
        Vec b = distinct_from(g, a);
        Vec w = g.chance(1, 20) ? Scalar(random_rational(g, bound_)) * (b - a)
                                : random_point(g);
        Vec p = a + Scalar(random_rational(g, bound_)) * (b - a);
        Vec q = random_point(g);
        for (int guard = 0; col(a, b, q); ++guard) {
          if (guard > detail_gen::kResampleLimit) detail_gen::resample_overflow("A10p");
          q = random_point(g);
        }
        return std::vector<Vec>{a, b, a + w, b + w, p, q};
      }
      case AxiomId::A14: {
        Vec a = random_point(g);
        Vec c = g.chance(1, 20) ? a : random_point(g);
        Vec b = a + Scalar(random_ratio_closed(g, bound_)) * (c - a);
        return std::vector<Vec>{a, b, c};
      }
      case AxiomId::A15: {
        Vec a = random_point(g);
        Vec d = g.chance(1, 20) ? a : random_point(g);
        Vec b = a + Scalar(random_ratio_closed(g, bound_)) * (d - a);
        Vec c = b + Scalar(random_ratio_closed(g, bound_)) * (d - b);
        return std::vector<Vec>{a, b, c, d};
      }
      case AxiomId::A11:
      case AxiomId::A11p:
        return std::nullopt;
    }
    return std::nullopt;
  }

  Vec random_point(SplitMix64& g) const {
    std::vector<Scalar> coords;
    coords.reserve(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) coords.emplace_back(Scalar(random_rational(g, bound_)));
    return Vec(std::move(coords));
  }

 private:
  // exact congruence-preserving map: axis flips, a rational rotation in one
  // coordinate plane, then a translation
  struct Iso {
    std::vector<int> flip;
    int i = 0;
    int j = 1;
    Rotation2 rot{Scalar(1), Scalar(0)};
    Vec shift;

    Vec apply(const Vec& p) const {
      std::vector<Scalar> c;
      c.reserve(static_cast<size_t>(p.dim()));
      for (int k = 0; k < p.dim(); ++k)
        c.push_back(flip[static_cast<size_t>(k)] < 0 ? -p[k] : p[k]);
      if (p.dim() >= 2) {
        Scalar xi = rot.c * c[static_cast<size_t>(i)] - rot.s * c[static_cast<size_t>(j)];
        Scalar xj = rot.s * c[static_cast<size_t>(i)] + rot.c * c[static_cast<size_t>(j)];
        c[static_cast<size_t>(i)] = xi;
        c[static_cast<size_t>(j)] = xj;
      }
      return Vec(std::move(c)) + shift;
    }
  };

  Iso random_iso(SplitMix64& g) const {
    Iso iso;
    iso.flip.resize(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) iso.flip[static_cast<size_t>(k)] = g.chance(1, 2) ? -1 : 1;
    if (dim_ >= 2) {
      iso.i = static_cast<int>(g.below(static_cast<std::uint64_t>(dim_)));
      iso.j = static_cast<int>(g.below(static_cast<std::uint64_t>(dim_ - 1)));
      if (iso.j >= iso.i) ++iso.j;
      iso.rot = rational_rotation(Scalar(random_rational(g, bound_)));
    }
    iso.shift = random_point(g);
    return iso;
  }

  Vec distinct_from(SplitMix64& g, const Vec& a) const {
    for (int guard = 0; guard <= detail_gen::kResampleLimit; ++guard) {
      Vec b = random_point(g);
      if (!(b == a)) return b;
    }
    detail_gen::resample_overflow("distinct_from");
  }

  std::array<Vec, 3> random_triangle(SplitMix64& g) const {
    for (int guard = 0; guard <= detail_gen::kResampleLimit; ++guard) {
      Vec a = random_point(g);
      Vec b = random_point(g);
      Vec c = random_point(g);
      if (!col(a, b, c)) return {a, b, c};
    }
    detail_gen::resample_overflow("random_triangle");
  }

  int dim_;
  long bound_;
};

class KleinModel {
 public:
  using Point = KPoint;

  explicit KleinModel(long bound = 100) : bound_(bound) {
    if (bound < 3) throw std::invalid_argument("KleinModel: bound must be >= 3");
  }

  long bound() const { return bound_; }
  std::string name() const { return "klein"; }

  bool eq(const KPoint& a, const KPoint& b) const { return a == b; }
  bool bet(const KPoint& a, const KPoint& b, const KPoint& c) const { return bet_k(a, b, c); }
  bool cong(const KPoint& a, const KPoint& b, const KPoint& c, const KPoint& d) const {
    return cong_k(a, b, c, d);
  }

  std::string point_str(const KPoint& p) const { return p.str(); }
  KPoint parse_point(std::string_view text) const { return KPoint(Vec::parse(text, 2)); }

  // The parallel-postulate check runs in its Euclid form on the fixed
  // counterexample configuration (a, b, c, d, t) extended by a sixth point x
  // on the ray a-b: the only candidate for the asserted point is the
  // intersection of lines a-c and x-t, and the disk membership test on that
  // candidate is decided exactly.
  Evaluation eval_a10p(const std::vector<KPoint>& pts) const {
    const Vec& a = pts[0].coords();
    const Vec& b = pts[1].coords();
    const Vec& c = pts[2].coords();
    const Vec& d = pts[3].coords();
    const Vec& t = pts[4].coords();
    const Vec& x = pts[5].coords();
    bool prem = tarski::bet(a, d, t) && tarski::bet(b, d, c) && !(b == d) && !(d == c) &&
                !col(a, b, c) && tarski::bet(a, b, x);
    if (!prem) return Evaluation{Outcome::premise_false, {}};

    auto holds = [&](const Vec& y) {
      return norm2(y) < Scalar(1) && tarski::bet(a, c, y) && tarski::bet(x, t, y);
    };
    // a witness must be c, t, or the line intersection; the configuration
    // premises force lines a-c and x-t to be distinct
    if (holds(c))
      return Evaluation{Outcome::conclusion_true, {"witness=" + c.str()}};
    if (holds(t))
      return Evaluation{Outcome::conclusion_true, {"witness=" + t.str()}};
    if (x == t || a == c)
      return Evaluation{Outcome::conclusion_false, {"forced_y=none"}};
    std::optional<Vec> y = line_intersection_2d(a, c, x, t);
    if (!y) return Evaluation{Outcome::conclusion_false, {"forced_y=none"}};
    if (holds(*y))
      return Evaluation{Outcome::conclusion_true, {"witness=" + y->str()}};
    std::vector<std::string> evidence{"forced_y=" + y->str(),
                                      "forced_y_norm2=" + to_string(norm2(*y))};
    evidence.push_back(norm2(*y) < Scalar(1) ? "between_check=failed" : "in_disk=false");
    return Evaluation{Outcome::conclusion_false, std::move(evidence)};
  }

  std::optional<std::vector<KPoint>> generate(AxiomId ax, SplitMix64& g) const {
    switch (ax) {
      case AxiomId::A0: {
        KPoint p = random_point(g);
        return std::vector<KPoint>{p, g.chance(1, 2) ? p : random_point(g)};
      }
      case AxiomId::A1:
        return std::vector<KPoint>{random_point(g), random_point(g)};
      case AxiomId::A2:
      case AxiomId::A2p: {
        KPoint a = random_point(g);
        KPoint b = random_point(g);
        auto [c, d] = rotated_pair(g, a, b);
        auto [e, f] = rotated_pair(g, a, b);
        return std::vector<KPoint>{a, b, c, d, e, f};
      }
      case AxiomId::A3: {
        KPoint a = random_point(g);
        return std::vector<KPoint>{a, a, random_point(g)};
      }
      case AxiomId::A6: {
        KPoint a = random_point(g);
        return std::vector<KPoint>{a, a};
      }
      case AxiomId::A10p: {
        KleinConfig cfg = euclid_counterexample_config();
        // x = (0, s) with 1/2 < s < 1
        long den = g.range(3, bound_ < 3 ? 3 : bound_);
        long num = g.range(den / 2 + 1, den - 1);
        KPoint x(Vec{Scalar(0), Scalar::from_rational(num, den)});
        return std::vector<KPoint>{cfg.a, cfg.b, cfg.c, cfg.d, cfg.t, x};
      }
      case AxiomId::A14: {
        KPoint a = random_point(g);
        KPoint c = g.chance(1, 20) ? a : random_point(g);
        Vec b = a.coords() + Scalar(random_ratio_closed(g, bound_)) * (c.coords() - a.coords());
        return std::vector<KPoint>{a, KPoint(b), c};
      }
      case AxiomId::A15: {
        KPoint a = random_point(g);
        KPoint d = g.chance(1, 20) ? a : random_point(g);
        Vec b = a.coords() + Scalar(random_ratio_closed(g, bound_)) * (d.coords() - a.coords());
        Vec c = b + Scalar(random_ratio_closed(g, bound_)) * (d.coords() - b);
        return std::vector<KPoint>{a, KPoint(b), KPoint(c), d};
      }
      default:
        return std::nullopt;
    }
  }

  KPoint random_point(SplitMix64& g) const {
    for (int guard = 0; guard <= detail_gen::kResampleLimit; ++guard) {
      long den = g.range(2, bound_);
      Rational x(g.range(-(den - 1), den - 1), den);
      long den2 = g.range(2, bound_);
      Rational y(g.range(-(den2 - 1), den2 - 1), den2);
      x.canonicalize();
      y.canonicalize();
      Vec v{Scalar(x), Scalar(y)};
      if (norm2(v) < Scalar(1)) return KPoint(v);
    }
    detail_gen::resample_overflow("klein random_point");
  }

 private:
  // rotations about the center and axis reflections preserve all dot
  // products, hence cong_k; swapping a pair's endpoints is harmless because
  // the form is symmetric
  std::pair<KPoint, KPoint> rotated_pair(SplitMix64& g, const KPoint& a,
                                         const KPoint& b) const {
    Rotation2 rot = rational_rotation(Scalar(random_rational(g, bound_)));
    Vec va = rot.apply(a.coords());
    Vec vb = rot.apply(b.coords());
    if (g.chance(1, 2)) {
      va = Vec{va[0], -va[1]};
      vb = Vec{vb[0], -vb[1]};
    }
    KPoint c(va);
    KPoint d(vb);
    if (g.chance(1, 2)) return {d, c};
    return {c, d};
  }

  long bound_;
};

class FiniteBinding {
 public:
  using Point = int;

  explicit FiniteBinding(FiniteModel model, std::string name = "finite")
      : model_(std::move(model)), name_(std::move(name)) {}

  const FiniteModel& model() const { return model_; }
  std::string name() const { return name_; }

  bool eq(int a, int b) const { return a == b; }
  bool bet(int a, int b, int c) const { return model_.bet(a, b, c); }
  bool cong(int a, int b, int c, int d) const { return model_.cong(a, b, c, d); }

  int universe_size() const { return model_.size; }
  int point_at(int i) const { return i; }

  std::string point_str(int p) const { return std::to_string(p); }
  int parse_point(std::string_view text) const {
    size_t pos = 0;
    int v = std::stoi(std::string(text), &pos);
    if (pos != text.size() || v < 0 || v >= model_.size)
      throw std::invalid_argument("bad finite point '" + std::string(text) + "'");
    return v;
  }

 private:
  FiniteModel model_;
  std::string name_;
};

inline CheckReport check_exhaustive(const FiniteModel& m, AxiomId ax) {
  return exhaustive_check(ax, FiniteBinding(m));
}

/// The exact refutation certificate for the parallel postulate in the disk
/// model: the fixed configuration, x = (0, 3/4), and the forced outside-disk
/// intersection.
inline Certificate klein_refutation_certificate(const KleinModel& m) {
  KleinConfig cfg = euclid_counterexample_config();
  KPoint x(Vec{Scalar(0), Scalar::from_rational(3, 4)});
  std::vector<KPoint> pts{cfg.a, cfg.b, cfg.c, cfg.d, cfg.t, x};
  Evaluation ev = evaluate_instance(AxiomId::A10p, m, pts);
  if (ev.outcome != Outcome::conclusion_false)
    throw std::logic_error("refutation did not fail the parallel postulate");
  return make_certificate(AxiomId::A10p, m, pts, ev.evidence);
}

}  // namespace tarski
