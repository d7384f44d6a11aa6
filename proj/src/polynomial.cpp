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

#include "twalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twalg {
namespace {

void Trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Polynomial MakeMonic(Polynomial p) {
  Trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  if (!lead.is_one()) {
    for (Rational& c : p) c /= lead;
  }
  return p;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Positive divisors of |v|, ascending. Trial division; v must be nonzero
// and small enough to factor.
std::vector<BigInt> Divisors(const BigInt& v) {
  BigInt m = boost::multiprecision::abs(v);
  if (m > BigInt(1000000000000LL)) {
    throw std::invalid_argument("rational_roots: leading coefficient " +
                                m.str() + " too large to factor");
  }
  const auto u = m.convert_to<std::int64_t>();
  std::vector<BigInt> small, large;
  for (std::int64_t q = 1; q * q <= u; ++q) {
    if (u % q != 0) continue;
    small.emplace_back(q);
    if (q != u / q) large.emplace_back(u / q);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a,
                                         const Polynomial& b) {
  Polynomial den = b;
  Trim(den);
  if (den.empty()) throw std::domain_error("divide: zero divisor");
  Polynomial rem = a;
  Trim(rem);
  if (rem.size() < den.size()) return {Polynomial{}, rem};
  Polynomial quot(rem.size() - den.size() + 1);
  const Rational lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = rem[k + den.size() - 1] / lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  Trim(rem);
  Trim(quot);
  return {quot, rem};
}

Polynomial derivative(const Polynomial& p) {
  Polynomial out;
  for (std::size_t k = 1; k < p.size(); ++k) {
    out.push_back(p[k] * Rational(static_cast<std::int64_t>(k)));
  }
  Trim(out);
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  Trim(x);
  Trim(y);
  while (!y.empty()) {
    Polynomial r = divide(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return MakeMonic(x);
}

bool is_square_free(const Polynomial& p) {
  return gcd(p, derivative(p)).size() <= 1;
}

std::string to_string(const Polynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p[k] << ")";
    if (k > 0) os << "x^" << k;
  }
  if (first) os << "0";
  return os.str();
}

Polynomial minimal_polynomial(const RationalMatrix& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionError("minimal_polynomial: not square");
  const Index flat = n * n;
  RowEchelon<Rational> echelon(flat + n + 1);
  RationalMatrix power = RationalMatrix::Identity(n, n);
  for (Index k = 0; k <= n; ++k) {
    // Tagging each power with e_k records which combination reached zero.
    std::vector<Rational> v(flat + n + 1);
    std::copy(power.data(), power.data() + flat, v.begin());
    v[flat + k] = Rational(1);
    echelon.reduce(v);
    const bool dependent = std::all_of(
        v.begin(), v.begin() + flat, [](const Rational& c) { return c.is_zero(); });
    if (dependent) {
      Polynomial out(v.begin() + flat, v.begin() + flat + k + 1);
      return MakeMonic(std::move(out));
    }
    echelon.insert(std::move(v));
    power = multiply(m, power);
  }
  throw VerificationError("minimal_polynomial: degree exceeded matrix order");
}

std::vector<Rational> rational_roots(const Polynomial& p,
                                     const Rational& bound) {
  Polynomial q = p;
  Trim(q);
  if (q.empty()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < q.size() && q[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (q.size() == 1) return roots;

  BigInt lcm = 1;
  for (const Rational& c : q) lcm = Lcm(lcm, c.denominator());
  std::vector<BigInt> a;
  a.reserve(q.size());
  for (const Rational& c : q) {
    a.push_back(c.numerator() * (lcm / c.denominator()));
  }
  const BigInt& constant = a.front();
  const bool constant_small =
      boost::multiprecision::abs(constant) <= BigInt(INT64_MAX);
  const std::int64_t constant64 =
      constant_small ? constant.convert_to<std::int64_t>() : 0;

  for (const BigInt& den : Divisors(a.back())) {
    const Rational limit = bound.abs() * Rational(den, BigInt(1));
    const BigInt top = limit.numerator() / limit.denominator();
    if (top > BigInt(100000000)) {
      throw std::invalid_argument("rational_roots: root bound too large");
    }
    const auto top64 = top.convert_to<std::int64_t>();
    for (std::int64_t s = -top64; s <= top64; ++s) {
      if (s == 0) continue;
      if (constant_small ? constant64 % s != 0 : constant % s != 0) continue;
      const Rational candidate(BigInt(s), den);
      if (!evaluate(q, candidate).is_zero()) continue;
      if (std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
        roots.push_back(candidate);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_eigenvalues(const RationalMatrix& m) {
  BigInt scale = 1;
  for (Index i = 0; i < m.size(); ++i) {
    scale = Lcm(scale, m.data()[i].denominator());
  }
  const Rational factor(scale, BigInt(1));
  const RationalMatrix integral = m * factor;
  Rational bound;
  for (Index i = 0; i < integral.rows(); ++i) {
    Rational row;
    for (Index j = 0; j < integral.cols(); ++j) row += integral(i, j).abs();
    bound = std::max(bound, row);
  }
  const Polynomial mp = minimal_polynomial(integral);
  std::vector<Rational> roots = rational_roots(mp, bound);
  if (roots.size() + 1 != mp.size()) {
    if (!is_square_free(mp)) {
      throw VerificationError("minimal polynomial " + to_string(mp) +
                              " is not square-free");
    }
    throw IrrationalEigenvalueError(
        "minimal polynomial " + to_string(mp) + " has " +
        std::to_string(mp.size() - 1 - roots.size()) + " non-rational roots");
  }
  for (Rational& r : roots) r /= factor;
  return roots;
}

}  // namespace twalg
