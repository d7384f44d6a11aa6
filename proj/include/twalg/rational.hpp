// Copyright 2026 The twalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWALG_RATIONAL_HPP_
#define TWALG_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace twalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact rational number in lowest terms with positive denominator.
//
// Values whose numerator and denominator fit in [-(2^63-1), 2^63-1] are held
// inline; anything larger lives in a shared immutable BigRational. The
// representation is canonical: a value that fits inline is never held big,
// so equality is a field comparison.
class Rational {
 public:
  Rational() noexcept = default;

  template <std::integral I>
    requires(sizeof(I) <= sizeof(std::int64_t))
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<std::int64_t>(value) != INT64_MIN) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    } else {
      if (static_cast<std::uint64_t>(value) <= INT64_MAX) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    }
    AssignBig(BigRational(BigInt(value)));
  }

  // Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const BigRational& value);
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const;
  BigInt denominator() const;
  BigRational to_big() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return !big_; }
  int sign() const;

  // Throws std::overflow_error unless the value is an integer in int64 range.
  std::int64_t to_int64() const;
  double to_double() const;
  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  Rational abs() const;
  // Throws std::domain_error on zero.
  Rational inverse() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  void AssignBig(BigRational value);
  void AssignWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.abs(); }

// Real-scalar hooks used by Eigen's generic code paths.
inline const Rational& conj(const Rational& r) { return r; }
inline const Rational& real(const Rational& r) { return r; }
inline Rational imag(const Rational&) { return Rational(); }
inline Rational abs2(const Rational& r) { return r * r; }

}  // namespace twalg

namespace Eigen {

template <>
struct NumTraits<twalg::Rational> : GenericNumTraits<twalg::Rational> {
  using Real = twalg::Rational;
  using NonInteger = twalg::Rational;
  using Nested = twalg::Rational;
  using Literal = twalg::Rational;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // TWALG_RATIONAL_HPP_
