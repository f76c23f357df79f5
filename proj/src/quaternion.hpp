/*
   Copyright 2026 quatpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rational.hpp"
#include "rational_matrix.hpp"

namespace quatpol {

// Raised by the literal parsers; position is a 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/**
 * Element a + b*i + c*j + d*k of the rational quaternions.
 *
 * Multiplication follows i^2 = j^2 = k^2 = ijk = -1; the center consists of
 * the elements with b = c = d = 0. All arithmetic is exact.
 */
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() = default;
  Quaternion(Rational ra, Rational rb, Rational rc, Rational rd)
      : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}
  explicit Quaternion(Rational scalar) : a(std::move(scalar)) {}
  explicit Quaternion(int scalar) : a(scalar) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(1); }
  static Quaternion unit_i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion unit_j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion unit_k() { return Quaternion(0, 0, 0, 1); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_central() const { return b == 0 && c == 0 && d == 0; }

  Quaternion conjugate() const { return Quaternion(a, -b, -c, -d); }
  Rational norm_sq() const { return a * a + b * b + c * c + d * d; }

  // Two-sided inverse, conjugate / norm. Throws std::domain_error on zero.
  Quaternion inverse() const;

  Quaternion operator-() const { return Quaternion(-a, -b, -c, -d); }

  Quaternion& operator+=(const Quaternion& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) {
    *this = *this * o;
    return *this;
  }

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return Quaternion(x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                      x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                      x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                      x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a);
  }
  friend Quaternion operator*(const Rational& s, const Quaternion& q) {
    return Quaternion(s * q.a, s * q.b, s * q.c, s * q.d);
  }
  friend Quaternion operator*(const Quaternion& q, const Rational& s) { return s * q; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) = default;
};

// Parses an ASCII quaternion literal: a signed sum of terms, each a rational
// optionally followed by a unit i/j/k, or a bare (optionally signed) unit.
// Repeated terms accumulate ("k-k" denotes 0). Whitespace is ignored.
Quaternion parse_quaternion(std::string_view text);

// Canonical printing: zero components omitted, "0" for zero, unit
// coefficients 1/-1 print as "i"/"-i".
std::string to_string(const Quaternion& q);

// Coordinates of q in the basis (1, i, j, k).
std::array<Rational, 4> vec4(const Quaternion& q);
Quaternion quat_from_vec4(const std::array<Rational, 4>& v);

// Matrix of x -> q*x in the basis (1, i, j, k): an injective unital ring
// homomorphism into the 4x4 rationals.
RationalMatrix realify_scalar(const Quaternion& q);

// Matrix of x -> x*q in the same basis. Commutes with every realify_scalar
// image; realify_scalar_right(q*r) = realify_scalar_right(r) * realify_scalar_right(q).
RationalMatrix realify_scalar_right(const Quaternion& q);

}  // namespace quatpol
