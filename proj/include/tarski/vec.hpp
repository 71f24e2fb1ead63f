#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tarski/scalar.hpp"

namespace tarski {

/// Fixed-dimension coordinate vector of Scalars.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<Scalar> coords) : c_(std::move(coords)) {}
  Vec(std::initializer_list<Scalar> coords) : c_(coords) {}

  static Vec zero(int dim) { return Vec(std::vector<Scalar>(static_cast<size_t>(dim))); }

  int dim() const { return static_cast<int>(c_.size()); }
  const Scalar& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_dims(a, b);
    std::vector<Scalar> out;
    out.reserve(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) out.push_back(a.c_[i] + b.c_[i]);
    return Vec(std::move(out));
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_dims(a, b);
    std::vector<Scalar> out;
    out.reserve(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) out.push_back(a.c_[i] - b.c_[i]);
    return Vec(std::move(out));
  }
  friend Vec operator*(const Scalar& k, const Vec& v) {
    std::vector<Scalar> out;
    out.reserve(v.c_.size());
    for (const Scalar& x : v.c_) out.push_back(k * x);
    return Vec(std::move(out));
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  friend Scalar dot(const Vec& a, const Vec& b) {
    check_dims(a, b);
    Scalar acc;
    for (size_t i = 0; i < a.c_.size(); ++i) acc = acc + a.c_[i] * b.c_[i];
    return acc;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += to_string(c_[i]);
    }
    return out;
  }

  /// Parses "p/q,p/q,..." (exact rationals). When expect_dim >= 0 the literal
  /// must have exactly that many coordinates.
  static Vec parse(std::string_view text, int expect_dim = -1) {
    std::vector<Scalar> coords;
    size_t start = 0;
    while (true) {
      size_t comma = text.find(',', start);
      std::string_view part = comma == std::string_view::npos
                                  ? text.substr(start)
                                  : text.substr(start, comma - start);
      coords.push_back(Scalar::parse_rational(part));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (expect_dim >= 0 && static_cast<int>(coords.size()) != expect_dim)
      throw std::invalid_argument("point literal '" + std::string(text) + "' has " +
                                  std::to_string(coords.size()) + " coordinates, expected " +
                                  std::to_string(expect_dim));
    return Vec(std::move(coords));
  }

 private:
  static void check_dims(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim())
      throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                  " vs " + std::to_string(b.dim()));
  }

  std::vector<Scalar> c_;
};

inline Scalar norm2(const Vec& v) { return dot(v, v); }

}  // namespace tarski
