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

#include "poly.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace quatpol {

SkewPoly SkewPoly::monomial(Quaternion c, std::size_t m) {
  std::vector<Quaternion> coeffs(m + 1);
  coeffs[m] = std::move(c);
  return SkewPoly(std::move(coeffs));
}

bool SkewPoly::is_central() const {
  for (const Quaternion& q : coeffs_)
    if (!q.is_central()) return false;
  return true;
}

const Quaternion& SkewPoly::coeff(std::size_t m) const {
  static const Quaternion kZero{};
  return m < coeffs_.size() ? coeffs_[m] : kZero;
}

const Quaternion& SkewPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

SkewPoly SkewPoly::operator-() const {
  std::vector<Quaternion> c(coeffs_.size());
  for (std::size_t m = 0; m < coeffs_.size(); ++m) c[m] = -coeffs_[m];
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::operator+(const SkewPoly& other) const {
  std::vector<Quaternion> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = coeff(m) + other.coeff(m);
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::operator-(const SkewPoly& other) const {
  std::vector<Quaternion> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = coeff(m) - other.coeff(m);
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::operator*(const SkewPoly& other) const {
  if (is_zero() || other.is_zero()) return SkewPoly();
  std::vector<Quaternion> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::left_scaled(const Quaternion& q) const {
  std::vector<Quaternion> c(coeffs_.size());
  for (std::size_t m = 0; m < coeffs_.size(); ++m) c[m] = q * coeffs_[m];
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::right_scaled(const Quaternion& q) const {
  std::vector<Quaternion> c(coeffs_.size());
  for (std::size_t m = 0; m < coeffs_.size(); ++m) c[m] = coeffs_[m] * q;
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::shifted_up(std::size_t m) const {
  if (is_zero()) return SkewPoly();
  std::vector<Quaternion> c(coeffs_.size() + m);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) c[t + m] = coeffs_[t];
  return SkewPoly(std::move(c));
}

SkewPoly SkewPoly::monic_left() const { return left_scaled(leading().inverse()); }
SkewPoly SkewPoly::monic_right() const { return right_scaled(leading().inverse()); }

VectorPoly VectorPoly::from_column_times_poly(const Matrix& v, const SkewPoly& f) {
  if (v.cols() != 1) throw std::invalid_argument("expected a column vector");
  VectorPoly out;
  out.column = true;
  out.parts.reserve(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) out.parts.push_back(f.left_scaled(v.at(i, 0)));
  return out;
}

VectorPoly VectorPoly::from_poly_times_row(const SkewPoly& f, const Matrix& u) {
  if (u.rows() != 1) throw std::invalid_argument("expected a row vector");
  VectorPoly out;
  out.column = false;
  out.parts.reserve(u.cols());
  for (std::size_t j = 0; j < u.cols(); ++j) out.parts.push_back(f.right_scaled(u.at(0, j)));
  return out;
}

VectorPoly VectorPoly::constant_column(const Matrix& value) {
  if (value.cols() != 1) throw std::invalid_argument("expected a column vector");
  VectorPoly out;
  out.column = true;
  out.parts.reserve(value.rows());
  for (std::size_t t = 0; t < value.rows(); ++t) out.parts.push_back(SkewPoly(value.at(t, 0)));
  return out;
}

VectorPoly VectorPoly::constant_row(const Matrix& value) {
  if (value.rows() != 1) throw std::invalid_argument("expected a row vector");
  VectorPoly out;
  out.column = false;
  out.parts.reserve(value.cols());
  for (std::size_t t = 0; t < value.cols(); ++t) out.parts.push_back(SkewPoly(value.at(0, t)));
  return out;
}

int VectorPoly::degree() const {
  int d = -1;
  for (const SkewPoly& p : parts) d = std::max(d, p.degree());
  return d;
}

Matrix VectorPoly::coeff(std::size_t m) const {
  Matrix out = column ? Matrix(parts.size(), 1) : Matrix(1, parts.size());
  for (std::size_t t = 0; t < parts.size(); ++t)
    (column ? out.at(t, 0) : out.at(0, t)) = parts[t].coeff(m);
  return out;
}

VectorPoly VectorPoly::operator+(const VectorPoly& other) const {
  if (column != other.column || parts.size() != other.parts.size())
    throw std::invalid_argument("vector polynomial orientation mismatch");
  VectorPoly out;
  out.column = column;
  out.parts.reserve(parts.size());
  for (std::size_t t = 0; t < parts.size(); ++t) out.parts.push_back(parts[t] + other.parts[t]);
  return out;
}

VectorPoly VectorPoly::operator-(const VectorPoly& other) const {
  if (column != other.column || parts.size() != other.parts.size())
    throw std::invalid_argument("vector polynomial orientation mismatch");
  VectorPoly out;
  out.column = column;
  out.parts.reserve(parts.size());
  for (std::size_t t = 0; t < parts.size(); ++t) out.parts.push_back(parts[t] - other.parts[t]);
  return out;
}

VectorPoly VectorPoly::shifted_up() const {
  VectorPoly out;
  out.column = column;
  out.parts.reserve(parts.size());
  for (const SkewPoly& p : parts) out.parts.push_back(p.shifted_up(1));
  return out;
}

VectorPoly apply_matrix_left(const Matrix& a, const VectorPoly& g) {
  if (!g.column) throw std::invalid_argument("apply_matrix_left expects a column");
  if (a.cols() != g.size()) throw std::invalid_argument("apply_matrix_left shape mismatch");
  VectorPoly out;
  out.column = true;
  out.parts.assign(a.rows(), SkewPoly());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.parts[i] = out.parts[i] + g.parts[j].left_scaled(a.at(i, j));
  return out;
}

VectorPoly apply_matrix_right(const VectorPoly& h, const Matrix& a) {
  if (h.column) throw std::invalid_argument("apply_matrix_right expects a row");
  if (h.size() != a.rows()) throw std::invalid_argument("apply_matrix_right shape mismatch");
  VectorPoly out;
  out.column = false;
  out.parts.assign(a.cols(), SkewPoly());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      out.parts[j] = out.parts[j] + h.parts[i].right_scaled(a.at(i, j));
  return out;
}

DivisionResult left_divide(const SkewPoly& f, const SkewPoly& p) {
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("left_divide: divisor must be monic");
  const int n = p.degree();
  SkewPoly rem = f;
  SkewPoly quot;
  while (rem.degree() >= n) {
    const std::size_t m = static_cast<std::size_t>(rem.degree() - n);
    const SkewPoly term = SkewPoly::monomial(rem.leading(), m);
    quot = quot + term;
    rem = rem - p * term;
  }
  return {quot, rem};
}

DivisionResult right_divide(const SkewPoly& f, const SkewPoly& q) {
  if (q.is_zero() || !q.is_monic())
    throw std::invalid_argument("right_divide: divisor must be monic");
  const int k = q.degree();
  SkewPoly rem = f;
  SkewPoly quot;
  while (rem.degree() >= k) {
    const std::size_t m = static_cast<std::size_t>(rem.degree() - k);
    const SkewPoly term = SkewPoly::monomial(rem.leading(), m);
    quot = quot + term;
    rem = rem - term * q;
  }
  return {quot, rem};
}

Quaternion eval_scalar(const SkewPoly& f, const Quaternion& alpha, Side side) {
  Quaternion acc;
  for (int m = f.degree(); m >= 0; --m)
    acc = (side == Side::Left ? alpha * acc : acc * alpha) + f.coeff(static_cast<std::size_t>(m));
  return acc;
}

Matrix eval_matrix(const SkewPoly& f, const Matrix& a, Side side) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eval_matrix needs a square matrix");
  Matrix acc(a.rows(), a.rows());
  for (int m = f.degree(); m >= 0; --m) {
    acc = side == Side::Left ? a * acc : acc * a;
    const Quaternion& c = f.coeff(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < a.rows(); ++i)
      acc.at(i, i) += c;
  }
  return acc;
}

Matrix eval_tangential_left(const Matrix& v, const SkewPoly& f, const Matrix& a) {
  if (v.cols() != 1 || a.rows() != a.cols() || v.rows() != a.rows())
    throw std::invalid_argument("eval_tangential_left shape mismatch");
  Matrix acc(v.rows(), 1);
  for (int m = f.degree(); m >= 0; --m)
    acc = a * acc + v.right_scaled(f.coeff(static_cast<std::size_t>(m)));
  return acc;
}

Matrix eval_tangential_right(const SkewPoly& f, const Matrix& u, const Matrix& b) {
  if (u.rows() != 1 || b.rows() != b.cols() || u.cols() != b.rows())
    throw std::invalid_argument("eval_tangential_right shape mismatch");
  Matrix acc(1, u.cols());
  for (int m = f.degree(); m >= 0; --m)
    acc = acc * b + u.left_scaled(f.coeff(static_cast<std::size_t>(m)));
  return acc;
}

VectorPoly quotient_operator_left(const Matrix& v, const SkewPoly& f, const Matrix& a) {
  if (v.cols() != 1 || a.rows() != a.cols() || v.rows() != a.rows())
    throw std::invalid_argument("quotient_operator_left shape mismatch");
  VectorPoly out;
  out.column = true;
  const int deg = f.degree();
  std::vector<std::vector<Quaternion>> cols(v.rows());
  // coefficient of z^m is (v R_0^{m+1} f)^{el}(A)
  for (int m = 0; m < deg; ++m) {
    const Matrix cm = eval_tangential_left(v, backward_shift(f, static_cast<std::size_t>(m) + 1), a);
    for (std::size_t i = 0; i < v.rows(); ++i) cols[i].push_back(cm.at(i, 0));
  }
  out.parts.reserve(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) out.parts.emplace_back(std::move(cols[i]));
  if (out.parts.empty()) out.parts.assign(v.rows(), SkewPoly());
  return out;
}

VectorPoly quotient_operator_right(const SkewPoly& f, const Matrix& u, const Matrix& b) {
  if (u.rows() != 1 || b.rows() != b.cols() || u.cols() != b.rows())
    throw std::invalid_argument("quotient_operator_right shape mismatch");
  VectorPoly out;
  out.column = false;
  const int deg = f.degree();
  std::vector<std::vector<Quaternion>> rows(u.cols());
  for (int m = 0; m < deg; ++m) {
    const Matrix cm = eval_tangential_right(backward_shift(f, static_cast<std::size_t>(m) + 1), u, b);
    for (std::size_t j = 0; j < u.cols(); ++j) rows[j].push_back(cm.at(0, j));
  }
  out.parts.reserve(u.cols());
  for (std::size_t j = 0; j < u.cols(); ++j) out.parts.emplace_back(std::move(rows[j]));
  if (out.parts.empty()) out.parts.assign(u.cols(), SkewPoly());
  return out;
}

Matrix two_sided_eval(const Matrix& v, const SkewPoly& f, const Matrix& u, const Matrix& a,
                      const Matrix& b) {
  if (v.cols() != 1 || u.rows() != 1 || a.rows() != a.cols() || b.rows() != b.cols() ||
      v.rows() != a.rows() || u.cols() != b.rows())
    throw std::invalid_argument("two_sided_eval shape mismatch");
  const int deg = f.degree();
  Matrix acc(v.rows(), u.cols());
  if (deg >= 1) {
    // precompute A^i v and u B^j for i + j <= deg - 1
    std::vector<Matrix> av{v};
    std::vector<Matrix> ub{u};
    for (int t = 1; t < deg; ++t) {
      av.push_back(a * av.back());
      ub.push_back(ub.back() * b);
    }
    for (int i = 0; i < deg; ++i)
      for (int j = 0; i + j < deg; ++j)
        acc = acc + av[static_cast<std::size_t>(i)].right_scaled(
                        f.coeff(static_cast<std::size_t>(i + j + 1))) *
                        ub[static_cast<std::size_t>(j)];
  }
#ifndef NDEBUG
  assert(detail::two_sided_eval_via_left(v, f, u, a, b) == acc);
  assert(detail::two_sided_eval_via_right(v, f, u, a, b) == acc);
#endif
  return acc;
}

namespace detail {

Matrix two_sided_eval_via_left(const Matrix& v, const SkewPoly& f, const Matrix& u,
                               const Matrix& a, const Matrix& b) {
  // (L_A(v f u))^{er}(B) with L_A(v f u) = L_A(v f) u
  const VectorPoly l = quotient_operator_left(v, f, a);
  Matrix acc(v.rows(), u.cols());
  Matrix bp = Matrix::identity(b.rows());
  for (int m = 0; m <= l.degree(); ++m) {
    acc = acc + l.coeff(static_cast<std::size_t>(m)) * u * bp;
    bp = bp * b;
  }
  return acc;
}

Matrix two_sided_eval_via_right(const Matrix& v, const SkewPoly& f, const Matrix& u,
                                const Matrix& a, const Matrix& b) {
  // (R_B(v f u))^{el}(A) with R_B(v f u) = v R_B(f u)
  const VectorPoly r = quotient_operator_right(f, u, b);
  Matrix acc(v.rows(), u.cols());
  Matrix ap = Matrix::identity(a.rows());
  for (int m = 0; m <= r.degree(); ++m) {
    acc = acc + ap * v * r.coeff(static_cast<std::size_t>(m));
    ap = ap * a;
  }
  return acc;
}

}  // namespace detail

Matrix companion(const SkewPoly& p, Side side) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  Matrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = Quaternion::one();
  for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
  return side == Side::Left ? c : c.transpose();
}

SkewPoly backward_shift(const SkewPoly& f, std::size_t j) {
  if (f.degree() < static_cast<int>(j)) return SkewPoly();
  std::vector<Quaternion> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(j), f.coeffs().end());
  return SkewPoly(std::move(c));
}

SkewPoly rho(const Quaternion& alpha) { return SkewPoly({-alpha, Quaternion::one()}); }

SkewPoly poly_from_coeff_column(const Matrix& c) {
  if (c.cols() != 1) throw std::invalid_argument("expected a coefficient column");
  std::vector<Quaternion> coeffs(c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i) coeffs[i] = c.at(i, 0);
  return SkewPoly(std::move(coeffs));
}

SkewPoly poly_from_coeff_row(const Matrix& r) {
  if (r.rows() != 1) throw std::invalid_argument("expected a coefficient row");
  std::vector<Quaternion> coeffs(r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) coeffs[j] = r.at(0, j);
  return SkewPoly(std::move(coeffs));
}

Matrix coeff_column(const SkewPoly& f, std::size_t n) {
  if (f.degree() >= static_cast<int>(n))
    throw std::invalid_argument("coeff_column: polynomial degree too high");
  Matrix c(n, 1);
  for (std::size_t i = 0; i < n; ++i) c.at(i, 0) = f.coeff(i);
  return c;
}

Matrix coeff_row(const SkewPoly& f, std::size_t n) { return coeff_column(f, n).transpose(); }

std::string to_string(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int m = f.degree(); m >= 0; --m) {
    const Quaternion& c = f.coeff(static_cast<std::size_t>(m));
    if (c.is_zero()) continue;
    std::string body;
    const std::string power = m == 0 ? "" : (m == 1 ? "z" : "z^" + std::to_string(m));
    int components = (c.a != 0) + (c.b != 0) + (c.c != 0) + (c.d != 0);
    if (m == 0) {
      body = components > 1 ? "(" + to_string(c) + ")" : to_string(c);
    } else if (components > 1) {
      body = "(" + to_string(c) + ")" + power;
    } else if (c == Quaternion::one()) {
      body = power;
    } else if (c == -Quaternion::one()) {
      body = "-" + power;
    } else {
      body = to_string(c) + power;
    }
    if (s.empty()) {
      s = body;
    } else if (body[0] == '-') {
      s += " - " + body.substr(1);
    } else {
      s += " + " + body;
    }
  }
  return s;
}

namespace {

// term := [coefficient] ["z" ["^" digits]]; coefficient := "(" literal ")" |
// rational [unit] | unit. The caller has folded the leading sign into `sign`.
struct PolyScanner {
  std::string_view t;
  std::size_t i = 0;

  bool done() const { return i >= t.size(); }
  char peek() const { return t[i]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++i;
  }

  std::size_t read_power() {
    // assumes peek() == 'z'
    ++i;
    if (!done() && peek() == '^') {
      ++i;
      if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected exponent digits", i);
      std::size_t e = 0;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<std::size_t>(peek() - '0');
        ++i;
      }
      return e;
    }
    return 1;
  }

  SkewPoly parse_term(int sign) {
    skip();
    if (done()) throw ParseError("expected term", i);
    Quaternion coeff = Quaternion::one();
    bool have_coeff = false;
    if (peek() == '(') {
      const std::size_t open = i;
      std::size_t close = i + 1;
      while (close < t.size() && t[close] != ')') ++close;
      if (close == t.size()) throw ParseError("unbalanced '(' in polynomial", open);
      coeff = parse_quaternion(t.substr(i + 1, close - i - 1));
      i = close + 1;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i' ||
               peek() == 'j' || peek() == 'k') {
      // single quaternion term, ends before 'z' / '+' / '-' / end
      const std::size_t start = i;
      while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' ||
                         peek() == 'i' || peek() == 'j' || peek() == 'k'))
        ++i;
      coeff = parse_quaternion(t.substr(start, i - start));
      have_coeff = true;
    }
    skip();
    std::size_t power = 0;
    bool have_z = false;
    if (!done() && peek() == 'z') {
      power = read_power();
      have_z = true;
    }
    if (!have_coeff && !have_z) throw ParseError("expected term", i);
    if (sign < 0) coeff = -coeff;
    return SkewPoly::monomial(coeff, power);
  }

  SkewPoly parse() {
    skip();
    if (done()) throw ParseError("empty polynomial literal", i);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++i;
    }
    SkewPoly acc = parse_term(sign);
    skip();
    while (!done()) {
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-' between polynomial terms", i);
      }
      ++i;
      acc = acc + parse_term(sign);
      skip();
    }
    return acc;
  }
};

}  // namespace

SkewPoly parse_poly(std::string_view text) { return PolyScanner{text}.parse(); }

}  // namespace quatpol
