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

#include "twalg/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace twalg {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kSmallMax = INT64_MAX;

std::uint64_t BinaryGcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 WideGcd(u128 a, u128 b) {
  while ((a >> 64) != 0 || (b >> 64) != 0) {
    if (b == 0) return a;
    u128 t = a % b;
    a = b;
    b = t;
  }
  return BinaryGcd(static_cast<std::uint64_t>(a),
                   static_cast<std::uint64_t>(b));
}

u128 Magnitude(i128 v) { return v < 0 ? -static_cast<u128>(v) : v; }

BigInt ToBig(i128 v) {
  u128 m = Magnitude(v);
  BigInt out = static_cast<std::uint64_t>(m >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(m);
  return v < 0 ? BigInt(-out) : out;
}

bool FitsSmall(const BigInt& v) {
  static const BigInt kMax(INT64_MAX);
  return v <= kMax && v >= -kMax;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  AssignWide(num, den);
}

Rational::Rational(const BigRational& value) { AssignBig(value); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  // cpp_rational rejects a negative denominator, so move the sign up.
  AssignBig(den < 0 ? BigRational(-num, -den) : BigRational(num, den));
}

void Rational::AssignWide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (den != 1) {
    const u128 g = WideGcd(Magnitude(num), static_cast<u128>(den));
    if (g != 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  big_ = std::make_shared<const BigRational>(ToBig(num), ToBig(den));
  num_ = 0;
  den_ = 1;
}

void Rational::AssignBig(BigRational value) {
  const BigInt& n = boost::multiprecision::numerator(value);
  const BigInt& d = boost::multiprecision::denominator(value);
  if (FitsSmall(n) && FitsSmall(d)) {
    num_ = n.convert_to<std::int64_t>();
    den_ = d.convert_to<std::int64_t>();
    big_.reset();
    return;
  }
  big_ = std::make_shared<const BigRational>(std::move(value));
  num_ = 0;
  den_ = 1;
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_))
              : BigInt(den_);
}

BigRational Rational::to_big() const {
  return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_));
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

std::int64_t Rational::to_int64() const {
  if (big_ || den_ != 1) {
    throw std::overflow_error("Rational: " + to_string() +
                              " is not an int64 integer");
  }
  return num_;
}

double Rational::to_double() const {
  if (big_) return big_->convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational out;
  if (big_) {
    out.AssignBig(1 / *big_);
  } else if (num_ < 0) {
    out.num_ = -den_;
    out.den_ = -num_;
  } else {
    out.num_ = den_;
    out.den_ = num_;
  }
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.big_ = std::make_shared<const BigRational>(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (!big_ && !other.big_) {
    if (den_ == other.den_) {
      std::int64_t sum;
      if (den_ == 1 && !__builtin_add_overflow(num_, other.num_, &sum) &&
          sum != INT64_MIN) {
        num_ = sum;
        return *this;
      }
      AssignWide(static_cast<i128>(num_) + other.num_, den_);
      return *this;
    }
    AssignWide(static_cast<i128>(num_) * other.den_ +
                   static_cast<i128>(other.num_) * den_,
               static_cast<i128>(den_) * other.den_);
    return *this;
  }
  AssignBig(to_big() + other.to_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = other;
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t prod;
      if (!__builtin_mul_overflow(num_, other.num_, &prod) &&
          prod != INT64_MIN) {
        num_ = prod;
        return *this;
      }
      AssignWide(static_cast<i128>(num_) * other.num_, 1);
      return *this;
    }
    // Cross-cancel so the product is already in lowest terms.
    const auto g1 = static_cast<std::int64_t>(BinaryGcd(
        static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_),
        static_cast<std::uint64_t>(other.den_)));
    const auto g2 = static_cast<std::int64_t>(BinaryGcd(
        static_cast<std::uint64_t>(other.num_ < 0 ? -other.num_ : other.num_),
        static_cast<std::uint64_t>(den_)));
    const i128 n = static_cast<i128>(num_ / g1) * (other.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (other.den_ / g1);
    if (n <= kSmallMax && n >= -kSmallMax && d <= kSmallMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    AssignWide(n, d);
    return *this;
  }
  AssignBig(to_big() * other.to_big());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  return *this *= other.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const BigRational lhs = a.to_big();
  const BigRational rhs = b.to_big();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace twalg
