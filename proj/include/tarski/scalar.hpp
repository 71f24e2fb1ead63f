#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tarski/rational.hpp"

namespace tarski {

// Exact arithmetic in an ordered field closed under square roots of
// non-negative elements. A value is either a rational or an element
// u + v*sqrt(d) of a quadratic extension; extensions stack into towers that
// grow lazily as sqrt_nonneg is applied. Every comparison is decided
// exactly, so downstream geometric predicates never see rounding.

class Scalar;
struct Level;
using LevelPtr = std::shared_ptr<const Level>;

namespace detail {
struct ExtNode;
struct Access;
}  // namespace detail

class Scalar {
 public:
  Scalar() : rat_(0) {}
  Scalar(int v) : rat_(v) {}
  Scalar(long v) : rat_(v) {}
  explicit Scalar(Rational q) : rat_(std::move(q)) { rat_.canonicalize(); }

  static Scalar from_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("from_rational: zero denominator");
    Rational q(Integer{num}, Integer{den});
    q.canonicalize();
    Scalar s;
    s.rat_ = std::move(q);
    return s;
  }

  static Scalar parse_rational(std::string_view text) {
    Scalar s;
    s.rat_ = parse_rational_text(text);
    return s;
  }

  bool is_rational() const noexcept { return ext_ == nullptr; }
  const Rational& as_rational() const {
    if (!is_rational()) throw std::logic_error("as_rational on an extension element");
    return rat_;
  }
  bool is_zero() const noexcept { return ext_ == nullptr && rat_ == 0; }

  int sign() const;
  Scalar abs() const;
  Scalar inverse() const;
  int height() const;
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  static int cmp(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational rat_;  // value when ext_ is null
  std::shared_ptr<const detail::ExtNode> ext_;

  friend struct detail::Access;
};

namespace detail {

// base + coef*sqrt(level->radicand); invariant: coef is never zero.
struct ExtNode {
  LevelPtr level;
  Scalar base;
  Scalar coef;
};

struct Access {
  static const ExtNode* ext(const Scalar& s) { return s.ext_.get(); }
  static const Rational& rat(const Scalar& s) { return s.rat_; }
  static Scalar make_rat(Rational q) {
    Scalar s;
    s.rat_ = std::move(q);
    return s;
  }
  static Scalar make_ext(LevelPtr level, Scalar base, Scalar coef) {
    if (coef.is_zero()) return base;
    Scalar s;
    s.ext_ = std::make_shared<const ExtNode>(
        ExtNode{std::move(level), std::move(base), std::move(coef)});
    return s;
  }
};

}  // namespace detail

// One step of the extension tower: the field below adjoined with
// sqrt(radicand). The radicand is a positive element of the field below that
// is not a square there. Levels are interned, so pointer equality decides
// level equality and `seq` orders every level after all of its dependencies.
struct Level {
  LevelPtr below;
  Scalar radicand;
  int height = 1;
  std::uint64_t seq = 0;
};

namespace detail {

inline const LevelPtr& level_of(const Scalar& x) {
  static const LevelPtr none;
  const ExtNode* e = Access::ext(x);
  return e ? e->level : none;
}

inline int height_of(const Scalar& x) {
  const LevelPtr& l = level_of(x);
  return l ? l->height : 0;
}

// chain(a) is a prefix of (or equal to) chain(b)
inline bool chain_prefix(const LevelPtr& a, const LevelPtr& b) {
  if (!a) return true;
  const Level* cur = b.get();
  while (cur && cur->height > a->height) cur = cur->below.get();
  return cur == a.get();
}

inline bool chains_comparable(const LevelPtr& a, const LevelPtr& b) {
  return chain_prefix(a, b) || chain_prefix(b, a);
}

Scalar add_cmp(const Scalar& x, const Scalar& y);
Scalar mul_cmp(const Scalar& x, const Scalar& y);
Scalar neg(const Scalar& x);
Scalar inv_cmp(const Scalar& x);
int sign_impl(const Scalar& x);
std::optional<Scalar> try_sqrt_in(const Scalar& x, const LevelPtr& field);
LevelPtr intern_level(const LevelPtr& below, const Scalar& radicand);
std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b);

inline Scalar sqrt_element(const LevelPtr& lv) {
  return Access::make_ext(lv, Scalar(0), Scalar(1));
}

inline Scalar add_cmp(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational())
    return Access::make_rat(Access::rat(x) + Access::rat(y));
  int hx = height_of(x), hy = height_of(y);
  if (hx == hy) {
    const ExtNode* ex = Access::ext(x);
    const ExtNode* ey = Access::ext(y);
    return Access::make_ext(ex->level, add_cmp(ex->base, ey->base),
                            add_cmp(ex->coef, ey->coef));
  }
  if (hx < hy) return add_cmp(y, x);
  const ExtNode* ex = Access::ext(x);
  return Access::make_ext(ex->level, add_cmp(ex->base, y), ex->coef);
}

inline Scalar neg(const Scalar& x) {
  if (x.is_rational()) return Access::make_rat(-Access::rat(x));
  const ExtNode* e = Access::ext(x);
  return Access::make_ext(e->level, neg(e->base), neg(e->coef));
}

inline Scalar mul_cmp(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational())
    return Access::make_rat(Access::rat(x) * Access::rat(y));
  if (x.is_zero() || y.is_zero()) return Scalar(0);
  int hx = height_of(x), hy = height_of(y);
  if (hx == hy) {
    const ExtNode* ex = Access::ext(x);
    const ExtNode* ey = Access::ext(y);
    const Scalar& r = ex->level->radicand;
    Scalar base = add_cmp(mul_cmp(ex->base, ey->base),
                          mul_cmp(mul_cmp(ex->coef, ey->coef), r));
    Scalar coef = add_cmp(mul_cmp(ex->base, ey->coef), mul_cmp(ex->coef, ey->base));
    return Access::make_ext(ex->level, std::move(base), std::move(coef));
  }
  if (hx < hy) return mul_cmp(y, x);
  const ExtNode* ex = Access::ext(x);
  return Access::make_ext(ex->level, mul_cmp(ex->base, y), mul_cmp(ex->coef, y));
}

inline Scalar inv_cmp(const Scalar& x) {
  if (x.is_rational()) {
    if (x.is_zero()) throw std::domain_error("division by zero");
    return Access::make_rat(1 / Access::rat(x));
  }
  const ExtNode* e = Access::ext(x);
  const Scalar& r = e->level->radicand;
  // conjugate trick: 1/(a+b*sqrt(r)) = (a-b*sqrt(r))/(a^2-b^2*r); the norm
  // a^2-b^2*r is nonzero because r is not a square in the field below
  Scalar norm = add_cmp(mul_cmp(e->base, e->base),
                        neg(mul_cmp(mul_cmp(e->coef, e->coef), r)));
  Scalar ni = inv_cmp(norm);
  return Access::make_ext(e->level, mul_cmp(e->base, ni), neg(mul_cmp(e->coef, ni)));
}

inline int sign_impl(const Scalar& x) {
  if (x.is_rational()) return sgn(Access::rat(x));
  const ExtNode* e = Access::ext(x);
  int sa = sign_impl(e->base);
  int sb = sign_impl(e->coef);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2*r; equality would make the
  // radicand a square below, which the level invariant rules out
  const Scalar& r = e->level->radicand;
  Scalar d = add_cmp(mul_cmp(e->base, e->base),
                     neg(mul_cmp(mul_cmp(e->coef, e->coef), r)));
  int t = sign_impl(d);
  return sa > 0 ? t : -t;
}

struct LevelRegistry {
  std::mutex mu;
  std::map<std::pair<const Level*, std::string>, LevelPtr> table;
  std::uint64_t next_seq = 1;
};

inline LevelRegistry& level_registry() {
  static LevelRegistry reg;
  return reg;
}

}  // namespace detail

inline std::string to_string(const Scalar& x) {
  if (x.is_rational()) return x.as_rational().get_str();
  const detail::ExtNode* e = detail::Access::ext(x);
  std::string radical = "sqrt(" + to_string(e->level->radicand) + ")";
  std::string term;
  if (e->coef.is_rational()) {
    const Rational& c = e->coef.as_rational();
    if (c == 1)
      term = radical;
    else if (c == -1)
      term = "-" + radical;
    else
      term = c.get_str() + "*" + radical;
  } else {
    term = "(" + to_string(e->coef) + ")*" + radical;
  }
  if (e->base.is_zero()) return term;
  std::string head = to_string(e->base);
  return term.front() == '-' ? head + term : head + "+" + term;
}

namespace detail {

inline LevelPtr intern_level(const LevelPtr& below, const Scalar& radicand) {
  LevelRegistry& reg = level_registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_pair(below.get(), to_string(radicand));
  auto it = reg.table.find(key);
  if (it != reg.table.end()) return it->second;
  auto lv = std::make_shared<Level>();
  lv->below = below;
  lv->radicand = radicand;
  lv->height = (below ? below->height : 0) + 1;
  lv->seq = reg.next_seq++;
  reg.table.emplace(std::move(key), lv);
  return lv;
}

// Necessary condition for squareness, used to prune the recursive search:
// the norm of a square down to the rationals is a perfect rational square.
// One multiplication chain instead of a branching search.
inline bool norm_square_filter(const Scalar& x, const LevelPtr& field) {
  Scalar cur = x;
  LevelPtr f = field;
  while (f) {
    if (level_of(cur).get() == f.get()) {
      const ExtNode* e = Access::ext(cur);
      cur = add_cmp(mul_cmp(e->base, e->base),
                    neg(mul_cmp(mul_cmp(e->coef, e->coef), f->radicand)));
    } else {
      cur = mul_cmp(cur, cur);
    }
    f = f->below;
  }
  const Rational& q = Access::rat(cur);
  return sgn(q) >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

// Square test (with root) of x inside the ambient tower `field`; requires
// chain(x) to be a prefix of chain(field). The returned root may have either
// sign.
inline std::optional<Scalar> try_sqrt_in(const Scalar& x, const LevelPtr& field) {
  if (sign_impl(x) < 0) return std::nullopt;
  if (field && !norm_square_filter(x, field)) return std::nullopt;
  if (!field) {
    const Rational& q = Access::rat(x);
    if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den()))
      return std::nullopt;
    Rational root(isqrt_floor(q.get_num()), isqrt_floor(q.get_den()));
    root.canonicalize();
    return Access::make_rat(std::move(root));
  }
  static const Scalar zero(0);
  const Scalar* a = &x;
  const Scalar* b = &zero;
  if (level_of(x).get() == field.get()) {
    const ExtNode* e = Access::ext(x);
    a = &e->base;
    b = &e->coef;
  }
  const LevelPtr& below = field->below;
  const Scalar& r = field->radicand;
  if (b->is_zero()) {
    // a square in F(sqrt(r)) with a in F: either a or a/r is a square in F
    if (auto s = try_sqrt_in(*a, below)) return s;
    Scalar q = mul_cmp(*a, inv_cmp(r));
    if (auto d = try_sqrt_in(q, below))
      return Access::make_ext(field, Scalar(0), *d);
    return std::nullopt;
  }
  // (c+d*sqrt(r))^2 = a+b*sqrt(r) forces c^2 = (a±n)/2 with n = sqrt(a^2-b^2*r)
  Scalar n2 = add_cmp(mul_cmp(*a, *a), neg(mul_cmp(mul_cmp(*b, *b), r)));
  auto n = try_sqrt_in(n2, below);
  if (!n) return std::nullopt;
  Scalar na = sign_impl(*n) < 0 ? neg(*n) : *n;
  const Scalar half(Rational(1, 2));
  for (int variant = 0; variant < 2; ++variant) {
    Scalar cc = mul_cmp(variant == 0 ? add_cmp(*a, na) : add_cmp(*a, neg(na)), half);
    if (auto c = try_sqrt_in(cc, below)) {
      if (c->is_zero()) continue;
      Scalar d = mul_cmp(*b, inv_cmp(mul_cmp(Scalar(2), *c)));
      return Access::make_ext(field, *c, std::move(d));
    }
  }
  return std::nullopt;
}

inline Scalar rewrite(const Scalar& x,
                      const std::unordered_map<const Level*, Scalar>& image) {
  if (x.is_rational()) return x;
  const ExtNode* e = Access::ext(x);
  const Scalar& root = image.at(e->level.get());
  return add_cmp(rewrite(e->base, image), mul_cmp(rewrite(e->coef, image), root));
}

// Re-expresses a and b over one common tower. Chains that already nest are
// returned untouched; otherwise the union of both chains is rebuilt in
// interning order, collapsing any radicand that became a square once the
// other chain's roots are present.
inline std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b) {
  const LevelPtr& la = level_of(a);
  const LevelPtr& lb = level_of(b);
  if (chains_comparable(la, lb)) return {a, b};

  std::vector<LevelPtr> levels;
  for (LevelPtr cur = la; cur; cur = cur->below) levels.push_back(cur);
  for (LevelPtr cur = lb; cur; cur = cur->below) levels.push_back(cur);
  std::sort(levels.begin(), levels.end(),
            [](const LevelPtr& x, const LevelPtr& y) { return x->seq < y->seq; });
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [](const LevelPtr& x, const LevelPtr& y) {
                             return x.get() == y.get();
                           }),
               levels.end());

  LevelPtr current;
  std::unordered_map<const Level*, Scalar> image;
  for (const LevelPtr& lv : levels) {
    Scalar r = rewrite(lv->radicand, image);
    if (auto s = try_sqrt_in(r, current)) {
      image.emplace(lv.get(), sign_impl(*s) < 0 ? neg(*s) : *s);
    } else {
      LevelPtr merged = intern_level(current, r);
      image.emplace(lv.get(), sqrt_element(merged));
      current = merged;
    }
  }
  return {rewrite(a, image), rewrite(b, image)};
}

}  // namespace detail

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  auto [x, y] = detail::aligned(a, b);
  return detail::add_cmp(x, y);
}

inline Scalar Scalar::operator-() const { return detail::neg(*this); }

inline Scalar operator-(const Scalar& a, const Scalar& b) {
  auto [x, y] = detail::aligned(a, b);
  return detail::add_cmp(x, detail::neg(y));
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  auto [x, y] = detail::aligned(a, b);
  return detail::mul_cmp(x, y);
}

inline Scalar Scalar::inverse() const { return detail::inv_cmp(*this); }

inline Scalar operator/(const Scalar& a, const Scalar& b) {
  auto [x, y] = detail::aligned(a, b);
  return detail::mul_cmp(x, detail::inv_cmp(y));
}

inline int Scalar::sign() const { return detail::sign_impl(*this); }

inline Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

inline int Scalar::height() const { return detail::height_of(*this); }

inline std::string Scalar::str() const { return to_string(*this); }

inline int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return ::tarski::detail::Access::rat(a) < ::tarski::detail::Access::rat(b)
               ? -1
               : (::tarski::detail::Access::rat(a) > ::tarski::detail::Access::rat(b) ? 1 : 0);
  return (a - b).sign();
}

inline int sign(const Scalar& x) { return x.sign(); }
inline Scalar abs(const Scalar& x) { return x.abs(); }
inline int cmp(const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b); }

/// Exact square root of x >= 0. Perfect squares (in the value's own tower)
/// resolve without growing the tower; anything else adjoins a new level.
inline Scalar sqrt_nonneg(const Scalar& x) {
  int s = x.sign();
  if (s < 0) throw std::domain_error("sqrt_nonneg: negative argument");
  if (s == 0) return Scalar(0);
  if (auto root = detail::try_sqrt_in(x, detail::level_of(x)))
    return root->sign() < 0 ? -*root : *root;
  if (x.is_rational()) {
    const Rational& q = x.as_rational();
    auto [sq, m] = extract_square_part(q.get_num() * q.get_den());
    LevelPtr lv = detail::intern_level(nullptr, Scalar(Rational(m)));
    Rational coef(sq, q.get_den());
    coef.canonicalize();
    return detail::Access::make_ext(lv, Scalar(0), Scalar(std::move(coef)));
  }
  LevelPtr lv = detail::intern_level(detail::level_of(x), x);
  return detail::sqrt_element(lv);
}

}  // namespace tarski
