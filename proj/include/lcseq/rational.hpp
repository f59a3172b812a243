#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lcseq {

/// Arbitrary-precision signed integer / rational. BigRat is the working type
/// for signed exact values (margins, the g decomposition); sequence data
/// itself lives in the nonnegative Rational below.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Sequence index. Indices may be negative (zero-extension), heads may not.
using Index = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A negative number where a nonnegative term or coefficient is required.
struct NegativeTermError : Error {
  using Error::Error;
};
/// Canonicalization would place the head at a negative index.
struct NegativeHeadError : Error {
  using Error::Error;
};
/// head/tail queried on the zero sequence.
struct ZeroSequenceError : Error {
  using Error::Error;
};
/// A relation applied to a sequence outside L.
struct NotInLError : Error {
  using Error::Error;
};
/// A theorem verifier invoked with its premise unsatisfied.
struct PremiseFailsError : Error {
  using Error::Error;
};
/// Coefficient and sequence lists of different lengths.
struct LengthMismatchError : Error {
  using Error::Error;
};
/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// Exact nonnegative rational, always in canonical form (coprime
/// numerator/denominator, denominator positive). Construction from a
/// negative value throws NegativeTermError; sums and products of
/// nonnegative rationals stay nonnegative, so arithmetic cannot leave
/// the type's domain.
class Rational {
 public:
  Rational() = default;

  Rational(int v) : Rational(static_cast<long long>(v)) {}

  Rational(long long v) {
    if (v < 0) throw NegativeTermError("negative value: " + std::to_string(v));
    v_ = v;
  }

  Rational(long long num, long long den) : Rational(BigRat(num, den)) {}

  explicit Rational(BigRat v) {
    if (v < 0) throw NegativeTermError("negative value: " + v.str());
    v_ = std::move(v);
  }

  /// Parses "p" or "p/q" with decimal digits. A leading '-' raises
  /// NegativeTermError, anything else malformed raises ParseError.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.front() == '-') throw NegativeTermError("negative value: " + std::string(s));
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    auto all_digits = [](std::string_view t) {
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational literal: \"" + std::string(text) + "\"");
    BigInt p(std::string(num));
    BigInt q(std::string(den));
    if (q == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    return Rational(BigRat(p, q));
  }

  const BigRat& raw() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.str(); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  BigRat v_{};
};

}  // namespace lcseq
