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

#include "quaternion.hpp"

#include <cctype>

namespace quatpol {

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero quaternion");
  const Rational n = norm_sq();
  Quaternion r = conjugate();
  r.a /= n;
  r.b /= n;
  r.c /= n;
  r.d /= n;
  return r;
}

namespace {

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  void parse_into(Quaternion& out) {
    skip_space();
    if (done()) throw ParseError("empty quaternion literal", pos_);
    parse_term(out, read_optional_sign());
    skip_space();
    while (!done()) {
      int sign = 1;
      if (peek() == '+') {
        ++pos_;
      } else if (peek() == '-') {
        sign = -1;
        ++pos_;
      } else {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      skip_space();
      parse_term(out, sign);
      skip_space();
    }
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  int read_optional_sign() {
    if (!done() && (peek() == '+' || peek() == '-')) {
      const int s = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_space();
      return s;
    }
    return 1;
  }

  static bool is_unit(char ch) { return ch == 'i' || ch == 'j' || ch == 'k'; }

  BigInt read_digits() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digits", pos_);
    BigInt value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return value;
  }

  // term := rational [unit] | unit  (the sign was consumed by the caller)
  void parse_term(Quaternion& out, int sign) {
    if (done()) throw ParseError("expected term", pos_);
    Rational value;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const BigInt num = read_digits();
      BigInt den = 1;
      skip_space();
      if (!done() && peek() == '/') {
        const std::size_t slash = pos_;
        ++pos_;
        skip_space();
        den = read_digits();
        if (den == 0) throw ParseError("zero denominator", slash + 1);
      }
      value = Rational(num, den);
      if (sign < 0) value = -value;
      skip_space();
      if (!done() && is_unit(peek())) {
        add_unit(out, peek(), value);
        ++pos_;
      } else {
        out.a += value;
      }
    } else if (is_unit(peek())) {
      add_unit(out, peek(), sign < 0 ? Rational(-1) : Rational(1));
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
  }

  static void add_unit(Quaternion& out, char unit, const Rational& value) {
    switch (unit) {
      case 'i': out.b += value; break;
      case 'j': out.c += value; break;
      default: out.d += value; break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_term(std::string& s, const Rational& value, const char* unit) {
  if (value == 0) return;
  std::string body;
  if (*unit == '\0') {
    body = to_string(value);
  } else if (value == 1) {
    body = unit;
  } else if (value == -1) {
    body = std::string("-") + unit;
  } else {
    body = to_string(value) + unit;
  }
  if (s.empty()) {
    s = body;
  } else if (body[0] == '-') {
    s += "-";
    s += body.substr(1);
  } else {
    s += "+";
    s += body;
  }
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  LiteralScanner(text).parse_into(q);
  return q;
}

std::string to_string(const Quaternion& q) {
  std::string s;
  append_term(s, q.a, "");
  append_term(s, q.b, "i");
  append_term(s, q.c, "j");
  append_term(s, q.d, "k");
  return s.empty() ? "0" : s;
}

std::array<Rational, 4> vec4(const Quaternion& q) { return {q.a, q.b, q.c, q.d}; }

Quaternion quat_from_vec4(const std::array<Rational, 4>& v) {
  return Quaternion(v[0], v[1], v[2], v[3]);
}

RationalMatrix realify_scalar(const Quaternion& q) {
  RationalMatrix m(4, 4);
  const Rational& a = q.a;
  const Rational& b = q.b;
  const Rational& c = q.c;
  const Rational& d = q.d;
  m.at(0, 0) = a;  m.at(0, 1) = -b; m.at(0, 2) = -c; m.at(0, 3) = -d;
  m.at(1, 0) = b;  m.at(1, 1) = a;  m.at(1, 2) = -d; m.at(1, 3) = c;
  m.at(2, 0) = c;  m.at(2, 1) = d;  m.at(2, 2) = a;  m.at(2, 3) = -b;
  m.at(3, 0) = d;  m.at(3, 1) = -c; m.at(3, 2) = b;  m.at(3, 3) = a;
  return m;
}

RationalMatrix realify_scalar_right(const Quaternion& q) {
  RationalMatrix m(4, 4);
  const Rational& a = q.a;
  const Rational& b = q.b;
  const Rational& c = q.c;
  const Rational& d = q.d;
  m.at(0, 0) = a;  m.at(0, 1) = -b; m.at(0, 2) = -c; m.at(0, 3) = -d;
  m.at(1, 0) = b;  m.at(1, 1) = a;  m.at(1, 2) = d;  m.at(1, 3) = -c;
  m.at(2, 0) = c;  m.at(2, 1) = -d; m.at(2, 2) = a;  m.at(2, 3) = b;
  m.at(3, 0) = d;  m.at(3, 1) = c;  m.at(3, 2) = -b; m.at(3, 3) = a;
  return m;
}

}  // namespace quatpol
