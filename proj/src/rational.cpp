#include "relufibre/rational.hpp"

#include <cctype>
#include <sstream>

#include "relufibre/error.hpp"

namespace relufibre {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::InvalidArchitecture: return "invalid_architecture";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::WidthCapExceeded: return "width_cap_exceeded";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

void check_dims(std::size_t x, std::size_t y) {
  if (x != y)
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths differ: " + std::to_string(x) + " vs " +
                    std::to_string(y));
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::MalformedRational, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorCode::MalformedRational,
                "malformed rational '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail();
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) fail();
  if (negative) p = -p;
  return Rat(mpq_class(p, q));
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Precondition, "inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::Precondition, "division by zero");
  v_ /= o.v_;
  return *this;
}

bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVec scaled(std::span<const Rat> v, const Rat& factor) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * factor);
  return out;
}

RatVec negated(std::span<const Rat> v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(-x);
  return out;
}

RatVec add(std::span<const Rat> x, std::span<const Rat> y) {
  check_dims(x.size(), y.size());
  RatVec out(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

Rat dot(std::span<const Rat> x, std::span<const Rat> y) {
  check_dims(x.size(), y.size());
  Rat s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::string to_string(std::span<const Rat> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

AffRow AffRow::scaled(const Rat& factor) const {
  return {relufibre::scaled(a, factor), b * factor};
}

AffRow AffRow::negated() const { return {relufibre::negated(a), -b}; }

Rat AffRow::apply(std::span<const Rat> x) const { return dot(a, x) + b; }

std::string to_string(const AffRow& row) {
  std::string s = to_string(std::span<const Rat>(row.a));
  s.insert(s.size() - 1, "|" + row.b.str());
  return s;
}

std::optional<Rat> positive_ratio(std::span<const Rat> from,
                                  std::span<const Rat> to) {
  check_dims(from.size(), to.size());
  std::optional<Rat> lambda;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!from[i].is_zero()) {
      lambda = to[i] / from[i];
      break;
    }
  }
  if (!lambda) {
    if (is_zero(to)) return Rat(1);
    return std::nullopt;
  }
  if (lambda->sign() <= 0) return std::nullopt;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (to[i] != from[i] * *lambda) return std::nullopt;
  return lambda;
}

std::optional<Rat> semi_dep_ratio(const AffRow& r1, const AffRow& r2) {
  check_dims(r1.dim(), r2.dim());
  return positive_ratio(r1.concat(), r2.concat());
}

bool lin_dep(const AffRow& r1, const AffRow& r2) {
  check_dims(r1.dim(), r2.dim());
  const std::size_t len = r1.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (r1[i] * r2[j] != r1[j] * r2[i]) return false;
  return true;
}

std::strong_ordering lex_cmp(const AffRow& r1, const AffRow& r2) {
  check_dims(r1.dim(), r2.dim());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    auto c = r1[i] <=> r2[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace relufibre
