#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relufibre {

/// Exact rational scalar. Always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Accepts "[-+]digits" or "[-+]digits/digits"; the denominator must be
  /// nonzero. Throws Error(MalformedRational) otherwise.
  static Rat parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const { return Rat(::abs(v_)); }
  Rat inverse() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

/// max(0, x).
inline Rat relu(const Rat& x) { return x.sign() > 0 ? x : Rat(0); }

using RatVec = std::vector<Rat>;

bool is_zero(std::span<const Rat> v);
RatVec scaled(std::span<const Rat> v, const Rat& factor);
RatVec negated(std::span<const Rat> v);
RatVec add(std::span<const Rat> x, std::span<const Rat> y);
Rat dot(std::span<const Rat> x, std::span<const Rat> y);
std::string to_string(std::span<const Rat> v);

/// The row pair (a_i | b_i): a linear part of length m and a bias.
struct AffRow {
  RatVec a;
  Rat b;

  std::size_t dim() const { return a.size(); }
  bool is_zero() const { return b.is_zero() && relufibre::is_zero(a); }
  /// Coordinate access on the concatenation (a | b).
  const Rat& operator[](std::size_t i) const { return i < a.size() ? a[i] : b; }
  std::size_t size() const { return a.size() + 1; }
  RatVec concat() const {
    RatVec v(a);
    v.push_back(b);
    return v;
  }

  AffRow scaled(const Rat& factor) const;
  AffRow negated() const;
  /// Value of a . x + b.
  Rat apply(std::span<const Rat> x) const;

  friend bool operator==(const AffRow&, const AffRow&) = default;
};

std::string to_string(const AffRow& row);

/// Returns lambda > 0 with `to` == lambda * `from`, if one exists. Two zero
/// vectors give lambda = 1.
std::optional<Rat> positive_ratio(std::span<const Rat> from,
                                  std::span<const Rat> to);

/// Returns lambda > 0 with r2 == lambda * r1 on the concatenation (a|b).
/// Zero vs zero yields 1.
std::optional<Rat> semi_dep_ratio(const AffRow& r1, const AffRow& r2);

/// True iff every 2x2 minor of the pair (a1|b1), (a2|b2) vanishes.
bool lin_dep(const AffRow& r1, const AffRow& r2);

/// Lexicographic comparison on (a|b).
std::strong_ordering lex_cmp(const AffRow& r1, const AffRow& r2);

}  // namespace relufibre
