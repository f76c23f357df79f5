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

// Batch front-end over the C API of libquatpol. One subcommand per
// invocation; JSON on input, canonical text or JSON on output.
//
// Exit codes: 0 solved/printed; 1 well-posed problem with no solution
// (machine-readable status on stdout); 2 malformed input (diagnostic on
// stderr).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quatpol/quatpol.h"

using nlohmann::json;

namespace {

struct CliError {
  std::string message;
};

struct Unsolved {
  qp_status status;
};

const char* status_name(qp_status st) {
  switch (st) {
    case QP_NO_SOLUTION: return "no-solution";
    case QP_NOT_CONTROLLABLE: return "not-controllable";
    case QP_NOT_OBSERVABLE: return "not-observable";
    case QP_NOT_SIMILAR: return "not-similar";
    case QP_NOT_FOUND: return "not-found";
    case QP_NODES_NOT_P_INDEPENDENT: return "nodes-not-p-independent";
    case QP_TRIVIALLY_NOT_SIMILAR: return "trivially-not-similar";
    case QP_NO_WITNESS_FOUND: return "no-witness-found";
    case QP_SINGULAR: return "singular";
    default: return "error";
  }
}

void check(qp_status st) {
  if (st == QP_OK) return;
  if (st >= 10) throw Unsolved{st};
  throw CliError{qp_last_error()};
}

// RAII over the C handles
using QuatPtr = std::unique_ptr<qp_quat, decltype(&qp_quat_free)>;
using PolyPtr = std::unique_ptr<qp_poly, decltype(&qp_poly_free)>;
using MatPtr = std::unique_ptr<qp_mat, decltype(&qp_mat_free)>;
using FamilyPtr = std::unique_ptr<qp_family, decltype(&qp_family_free)>;
using MatListPtr = std::unique_ptr<qp_mat_list, decltype(&qp_mat_list_free)>;
using PolyListPtr = std::unique_ptr<qp_poly_list, decltype(&qp_poly_list_free)>;

QuatPtr wrap(qp_quat* p) { return {p, &qp_quat_free}; }
PolyPtr wrap(qp_poly* p) { return {p, &qp_poly_free}; }
MatPtr wrap(qp_mat* p) { return {p, &qp_mat_free}; }
FamilyPtr wrap(qp_family* p) { return {p, &qp_family_free}; }
MatListPtr wrap(qp_mat_list* p) { return {p, &qp_mat_list_free}; }
PolyListPtr wrap(qp_poly_list* p) { return {p, &qp_poly_list_free}; }

std::string take_string(char* s) {
  std::string out = s ? s : "";
  qp_string_free(s);
  return out;
}

std::string quat_text(const qp_quat* q) {
  char* s = nullptr;
  check(qp_quat_to_string(q, &s));
  return take_string(s);
}

std::string poly_text(const qp_poly* f) {
  char* s = nullptr;
  check(qp_poly_to_string(f, &s));
  return take_string(s);
}

std::string mat_text(const qp_mat* m) {
  char* s = nullptr;
  check(qp_mat_to_string(m, &s));
  return take_string(s);
}

json poly_json(const qp_poly* f) {
  json arr = json::array();
  const int deg = qp_poly_degree(f);
  for (int m = 0; m <= deg; ++m) {
    qp_quat* c = nullptr;
    check(qp_poly_coeff(f, static_cast<size_t>(m), &c));
    arr.push_back(quat_text(wrap(c).get()));
  }
  return arr;
}

json mat_json(const qp_mat* m) {
  json rows = json::array();
  for (size_t i = 0; i < qp_mat_rows(m); ++i) {
    json row = json::array();
    for (size_t j = 0; j < qp_mat_cols(m); ++j) {
      qp_quat* q = nullptr;
      check(qp_mat_entry(m, i, j, &q));
      row.push_back(quat_text(wrap(q).get()));
    }
    rows.push_back(row);
  }
  return rows;
}

json vec_json(const qp_mat* m) {
  // flat array for n x 1 / 1 x n values, mirroring the input schema
  json arr = json::array();
  for (size_t i = 0; i < qp_mat_rows(m); ++i)
    for (size_t j = 0; j < qp_mat_cols(m); ++j) {
      qp_quat* q = nullptr;
      check(qp_mat_entry(m, i, j, &q));
      arr.push_back(quat_text(wrap(q).get()));
    }
  return arr;
}

// Ordered text lines + mirrored JSON, so both output modes stay in sync.
class Emitter {
 public:
  explicit Emitter(bool as_json) : as_json_(as_json) { obj_["status"] = "ok"; }

  void text_line(const std::string& key, const std::string& value) {
    lines_.push_back(key.empty() ? value : key + ": " + value);
  }

  void field(const std::string& key, const std::string& text, json j) {
    text_line(key, text);
    obj_[key] = std::move(j);
  }

  void poly(const std::string& key, const qp_poly* f, bool bare_text = false) {
    text_line(bare_text ? "" : key, poly_text(f));
    obj_[key] = poly_json(f);
  }

  void mat(const std::string& key, const qp_mat* m) {
    text_line(key, mat_text(m));
    obj_[key] = mat_json(m);
  }

  void print() const {
    if (as_json_) {
      std::cout << obj_.dump() << "\n";
    } else {
      for (const std::string& line : lines_) std::cout << line << "\n";
    }
  }

  json& raw() { return obj_; }

 private:
  bool as_json_;
  json obj_;
  std::vector<std::string> lines_;
};

// ---- input helpers (quaternion components must be JSON strings) ----

const json& need(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw CliError{std::string("missing field \"") + key + "\""};
  return *it;
}

std::string need_string(const json& j, const char* what) {
  if (!j.is_string())
    throw CliError{std::string(what) + " must be a JSON string (numbers are not accepted)"};
  return j.get<std::string>();
}

QuatPtr quat_from(const json& j, const char* what) {
  qp_quat* q = nullptr;
  check(qp_quat_parse(need_string(j, what).c_str(), &q));
  return wrap(q);
}

PolyPtr poly_from(const json& j, const char* what) {
  qp_poly* f = nullptr;
  if (j.is_string()) {
    check(qp_poly_parse(j.get<std::string>().c_str(), &f));
    return wrap(f);
  }
  if (!j.is_array())
    throw CliError{std::string(what) +
                   " must be an array of quaternion literals (index = degree) or a display string"};
  std::vector<QuatPtr> owned;
  std::vector<const qp_quat*> raw;
  for (const json& c : j) {
    owned.push_back(quat_from(c, "polynomial coefficient"));
    raw.push_back(owned.back().get());
  }
  check(qp_poly_create(raw.data(), raw.size(), &f));
  return wrap(f);
}

MatPtr mat_from(const json& j, const char* what) {
  if (!j.is_array() || (!j.empty() && !j.front().is_array()))
    throw CliError{std::string(what) + " must be an array of rows of quaternion literals"};
  const size_t rows = j.size();
  const size_t cols = rows == 0 ? 0 : j.front().size();
  std::vector<QuatPtr> owned;
  std::vector<const qp_quat*> raw;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw CliError{std::string(what) + " has ragged rows"};
    for (const json& e : row) {
      owned.push_back(quat_from(e, "matrix entry"));
      raw.push_back(owned.back().get());
    }
  }
  qp_mat* m = nullptr;
  check(qp_mat_create(rows, cols, raw.data(), &m));
  return wrap(m);
}

MatPtr vec_from(const json& j, const char* what, bool column) {
  if (!j.is_array()) throw CliError{std::string(what) + " must be an array of quaternion literals"};
  std::vector<QuatPtr> owned;
  std::vector<const qp_quat*> raw;
  for (const json& e : j) {
    owned.push_back(quat_from(e, what));
    raw.push_back(owned.back().get());
  }
  qp_mat* m = nullptr;
  if (column)
    check(qp_mat_create(raw.size(), 1, raw.data(), &m));
  else
    check(qp_mat_create(1, raw.size(), raw.data(), &m));
  return wrap(m);
}

qp_side side_from(const json& j) {
  const std::string s = need_string(j, "side");
  if (s == "left") return QP_SIDE_LEFT;
  if (s == "right") return QP_SIDE_RIGHT;
  throw CliError{"side must be \"left\" or \"right\""};
}

struct Options {
  std::string input = "-";
  std::string output = "text";
  std::uint64_t seed = 0;
  std::size_t trials = 64;
};

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw CliError{"cannot open input file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw CliError{std::string("invalid JSON: ") + e.what()};
  }
}

// ---- command handlers ----

void cmd_eval(const json& in, Emitter& out) {
  const PolyPtr f = poly_from(need(in, "f"), "f");
  if (in.contains("v") && in.contains("u")) {
    const MatPtr a = mat_from(need(in, "A"), "A");
    const MatPtr b = mat_from(need(in, "B"), "B");
    const MatPtr v = vec_from(need(in, "v"), "v", true);
    const MatPtr u = vec_from(need(in, "u"), "u", false);
    qp_mat* r = nullptr;
    check(qp_eval_two_sided(v.get(), f.get(), u.get(), a.get(), b.get(), &r));
    const MatPtr res = wrap(r);
    out.field("value", mat_text(res.get()), mat_json(res.get()));
    return;
  }
  if (in.contains("v")) {
    const MatPtr a = mat_from(need(in, "A"), "A");
    const MatPtr v = vec_from(need(in, "v"), "v", true);
    qp_mat* r = nullptr;
    check(qp_eval_tangential(v.get(), f.get(), a.get(), QP_SIDE_LEFT, &r));
    const MatPtr res = wrap(r);
    out.field("value", mat_text(res.get()), mat_json(res.get()));
    return;
  }
  if (in.contains("u")) {
    const MatPtr b = mat_from(need(in, "B"), "B");
    const MatPtr u = vec_from(need(in, "u"), "u", false);
    qp_mat* r = nullptr;
    check(qp_eval_tangential(u.get(), f.get(), b.get(), QP_SIDE_RIGHT, &r));
    const MatPtr res = wrap(r);
    out.field("value", mat_text(res.get()), mat_json(res.get()));
    return;
  }
  const qp_side side = side_from(need(in, "side"));
  if (in.contains("A")) {
    const MatPtr a = mat_from(need(in, "A"), "A");
    qp_mat* r = nullptr;
    check(qp_poly_eval_matrix(f.get(), a.get(), side, &r));
    const MatPtr res = wrap(r);
    out.field("value", mat_text(res.get()), mat_json(res.get()));
    return;
  }
  if (in.contains("at")) {
    const QuatPtr alpha = quat_from(need(in, "at"), "at");
    qp_quat* r = nullptr;
    check(qp_poly_eval_scalar(f.get(), alpha.get(), side, &r));
    const QuatPtr res = wrap(r);
    out.field("value", quat_text(res.get()), quat_text(res.get()));
    return;
  }
  throw CliError{"eval needs \"at\", \"A\", (\"A\",\"v\"), (\"B\",\"u\"), or all four"};
}

void cmd_divide(const json& in, Emitter& out) {
  const PolyPtr f = poly_from(need(in, "f"), "f");
  const PolyPtr by = poly_from(need(in, "by"), "by");
  const qp_side side = side_from(need(in, "side"));
  qp_poly* q = nullptr;
  qp_poly* r = nullptr;
  check(qp_poly_divide(f.get(), by.get(), side, &q, &r));
  const PolyPtr qq = wrap(q), rr = wrap(r);
  out.poly("quotient", qq.get());
  out.poly("remainder", rr.get());
}

void cmd_minpoly(const json& in, Emitter& out) {
  if (in.contains("A") && in.contains("v")) {
    const MatPtr a = mat_from(need(in, "A"), "A");
    const MatPtr v = vec_from(need(in, "v"), "v", true);
    qp_poly* p = nullptr;
    size_t degree = 0;
    int full = 0;
    check(qp_minpoly_pair(a.get(), v.get(), QP_SIDE_LEFT, &p, &degree, &full));
    const PolyPtr pp = wrap(p);
    out.poly("minpoly", pp.get());
    out.field("degree", std::to_string(degree), degree);
    out.field("controllable", full ? "true" : "false", static_cast<bool>(full));
    return;
  }
  if (in.contains("u") && in.contains("B")) {
    const MatPtr b = mat_from(need(in, "B"), "B");
    const MatPtr u = vec_from(need(in, "u"), "u", false);
    qp_poly* p = nullptr;
    size_t degree = 0;
    int full = 0;
    check(qp_minpoly_pair(b.get(), u.get(), QP_SIDE_RIGHT, &p, &degree, &full));
    const PolyPtr pp = wrap(p);
    out.poly("minpoly", pp.get());
    out.field("degree", std::to_string(degree), degree);
    out.field("observable", full ? "true" : "false", static_cast<bool>(full));
    return;
  }
  if (in.contains("A")) {
    const MatPtr a = mat_from(need(in, "A"), "A");
    qp_poly* l = nullptr;
    qp_poly* r = nullptr;
    qp_poly* c = nullptr;
    check(qp_matrix_minpolys(a.get(), &l, &r));
    const PolyPtr ll = wrap(l), rr = wrap(r);
    check(qp_central_minpoly(a.get(), &c));
    const PolyPtr cc = wrap(c);
    out.poly("left", ll.get());
    out.poly("right", rr.get());
    out.poly("central", cc.get());
    return;
  }
  throw CliError{"minpoly needs (\"A\",\"v\"), (\"u\",\"B\"), or \"A\""};
}

void cmd_lcm(const json& in, Emitter& out, bool left) {
  const json& polys = need(in, "polys");
  if (!polys.is_array() || polys.empty())
    throw CliError{"\"polys\" must be a nonempty array of polynomials"};
  std::vector<PolyPtr> owned;
  std::vector<const qp_poly*> raw;
  for (const json& j : polys) {
    owned.push_back(poly_from(j, "polynomial"));
    raw.push_back(owned.back().get());
  }
  qp_poly* m = nullptr;
  check(left ? qp_lrcm(raw.data(), raw.size(), &m) : qp_llcm(raw.data(), raw.size(), &m));
  const PolyPtr mm = wrap(m);
  out.poly(left ? "lrcm" : "llcm", mm.get(), /*bare_text=*/true);
}

void cmd_canonical(const json& in, Emitter& out, const Options& opt) {
  qp_side side = QP_SIDE_LEFT;
  MatPtr a{nullptr, &qp_mat_free};
  MatPtr vec{nullptr, &qp_mat_free};
  bool searched = false;
  if (in.contains("A") && in.contains("v")) {
    a = mat_from(need(in, "A"), "A");
    vec = vec_from(need(in, "v"), "v", true);
  } else if (in.contains("u") && in.contains("B")) {
    side = QP_SIDE_RIGHT;
    a = mat_from(need(in, "B"), "B");
    vec = vec_from(need(in, "u"), "u", false);
  } else if (in.contains("A")) {
    a = mat_from(need(in, "A"), "A");
    qp_mat* v = nullptr;
    check(qp_find_cyclic_vector(a.get(), opt.trials, opt.seed, &v));
    vec = wrap(v);
    searched = true;
  } else {
    throw CliError{"canonical needs (\"A\",\"v\"), (\"u\",\"B\"), or \"A\""};
  }
  qp_mat* comp = nullptr;
  qp_mat* t = nullptr;
  qp_poly* p = nullptr;
  check(qp_canonical_form(a.get(), vec.get(), side, &comp, &t, &p));
  const MatPtr cc = wrap(comp), tt = wrap(t);
  const PolyPtr pp = wrap(p);
  out.poly("minpoly", pp.get());
  out.mat("companion", cc.get());
  out.mat("T", tt.get());
  if (searched) out.field("v", mat_text(vec.get()), vec_json(vec.get()));
}

void cmd_similar_pairs(const json& in, Emitter& out) {
  const json& first = need(in, "first");
  const json& second = need(in, "second");
  const bool left = first.contains("A") && first.contains("v");
  qp_mat* t = nullptr;
  if (left) {
    const MatPtr a1 = mat_from(need(first, "A"), "A");
    const MatPtr v1 = vec_from(need(first, "v"), "v", true);
    const MatPtr a2 = mat_from(need(second, "A"), "A");
    const MatPtr v2 = vec_from(need(second, "v"), "v", true);
    check(qp_pairs_similar(a1.get(), v1.get(), a2.get(), v2.get(), QP_SIDE_LEFT, &t));
  } else {
    const MatPtr b1 = mat_from(need(first, "B"), "B");
    const MatPtr u1 = vec_from(need(first, "u"), "u", false);
    const MatPtr b2 = mat_from(need(second, "B"), "B");
    const MatPtr u2 = vec_from(need(second, "u"), "u", false);
    check(qp_pairs_similar(b1.get(), u1.get(), b2.get(), u2.get(), QP_SIDE_RIGHT, &t));
  }
  const MatPtr tt = wrap(t);
  out.mat("T", tt.get());
}

void cmd_similar_polys(const json& in, Emitter& out, const Options& opt) {
  const PolyPtr f = poly_from(need(in, "f"), "f");
  const PolyPtr g = poly_from(need(in, "g"), "g");
  qp_poly* h = nullptr;
  qp_poly* hp = nullptr;
  check(qp_polys_similar(f.get(), g.get(), opt.trials, opt.seed, &h, &hp));
  const PolyPtr hh = wrap(h), hhp = wrap(hp);
  out.field("verdict", "witness", "witness");
  out.poly("h", hh.get());
  out.poly("h_prime", hhp.get());
}

void cmd_pindep(const json& in, Emitter& out) {
  const json& nodes = need(in, "nodes");
  if (!nodes.is_array() || nodes.empty())
    throw CliError{"\"nodes\" must be a nonempty array of quaternion literals"};
  std::vector<QuatPtr> owned;
  std::vector<const qp_quat*> raw;
  for (const json& j : nodes) {
    owned.push_back(quat_from(j, "node"));
    raw.push_back(owned.back().get());
  }
  const qp_side side = side_from(need(in, "side"));
  int flag = 0;
  check(qp_p_independent(raw.data(), raw.size(), side, &flag));
  out.text_line("", flag ? "true" : "false");
  out.raw()["p_independent"] = static_cast<bool>(flag);
}

void cmd_sylvester(const json& in, Emitter& out) {
  const MatPtr a = mat_from(need(in, "A"), "A");
  const MatPtr b = mat_from(need(in, "B"), "B");
  const MatPtr c = mat_from(need(in, "C"), "C");
  qp_mat* part = nullptr;
  qp_mat_list* null = nullptr;
  check(qp_solve_sylvester(a.get(), b.get(), c.get(), &part, &null));
  const MatPtr pp = wrap(part);
  const MatListPtr nn = wrap(null);
  out.mat("particular", pp.get());
  json arr = json::array();
  for (size_t i = 0; i < qp_mat_list_count(nn.get()); ++i) {
    qp_mat* m = nullptr;
    check(qp_mat_list_at(nn.get(), i, &m));
    const MatPtr mm = wrap(m);
    out.text_line("nullspace[" + std::to_string(i) + "]", mat_text(mm.get()));
    arr.push_back(mat_json(mm.get()));
  }
  out.raw()["nullspace"] = arr;
}

void emit_family(Emitter& out, const qp_family* fam) {
  qp_poly* part = nullptr;
  check(qp_family_particular(fam, &part));
  const PolyPtr pp = wrap(part);
  out.poly("particular", pp.get());
  if (qp_family_has_left_modulus(fam)) {
    qp_poly* m = nullptr;
    check(qp_family_left_modulus(fam, &m));
    const PolyPtr mm = wrap(m);
    out.poly("left_modulus", mm.get());
  }
  if (qp_family_has_right_modulus(fam)) {
    qp_poly* m = nullptr;
    check(qp_family_right_modulus(fam, &m));
    const PolyPtr mm = wrap(m);
    out.poly("right_modulus", mm.get());
  }
  if (qp_family_has_sylvester_particular(fam)) {
    qp_mat* y = nullptr;
    check(qp_family_sylvester_particular(fam, &y));
    const MatPtr yy = wrap(y);
    out.mat("sylvester_particular", yy.get());
    json arr = json::array();
    for (size_t i = 0; i < qp_family_nullspace_count(fam); ++i) {
      qp_mat* m = nullptr;
      check(qp_family_nullspace_at(fam, i, &m));
      const MatPtr mm = wrap(m);
      out.text_line("sylvester_nullspace[" + std::to_string(i) + "]", mat_text(mm.get()));
      arr.push_back(mat_json(mm.get()));
    }
    out.raw()["sylvester_nullspace"] = arr;
  }
}

void cmd_solve_left(const json& in, Emitter& out) {
  const json& left = need(in, "left");
  const MatPtr a = mat_from(need(left, "A"), "A");
  const MatPtr v = vec_from(need(left, "v"), "v", true);
  const MatPtr b = vec_from(need(left, "b"), "b", true);
  qp_family* fam = nullptr;
  check(qp_solve_left(a.get(), v.get(), b.get(), &fam));
  const FamilyPtr ff = wrap(fam);
  emit_family(out, ff.get());
}

void cmd_solve_right(const json& in, Emitter& out) {
  const json& right = need(in, "right");
  const MatPtr bm = mat_from(need(right, "B"), "B");
  const MatPtr u = vec_from(need(right, "u"), "u", false);
  const MatPtr d = vec_from(need(right, "d"), "d", false);
  qp_family* fam = nullptr;
  check(qp_solve_right(u.get(), bm.get(), d.get(), &fam));
  const FamilyPtr ff = wrap(fam);
  emit_family(out, ff.get());
}

void cmd_solve_two_sided(const json& in, Emitter& out) {
  const json& left = need(in, "left");
  const json& right = need(in, "right");
  const MatPtr a = mat_from(need(left, "A"), "A");
  const MatPtr v = vec_from(need(left, "v"), "v", true);
  const MatPtr bm = mat_from(need(right, "B"), "B");
  const MatPtr u = vec_from(need(right, "u"), "u", false);
  const bool have_targets = left.contains("b") && right.contains("d");
  if (in.contains("S")) {
    if (have_targets)
      throw CliError{"data with \"b\", \"d\" and \"S\" is the augmented problem; use solve-atsp"};
    const MatPtr s = mat_from(need(in, "S"), "S");
    qp_poly* f = nullptr;
    check(qp_solve_two_sided_only(a.get(), v.get(), u.get(), bm.get(), s.get(), &f));
    const PolyPtr ff = wrap(f);
    out.poly("particular", ff.get());
    out.field("free_constant", "true", true);
    return;
  }
  if (!have_targets) throw CliError{"solve-two-sided needs \"b\" and \"d\", or \"S\""};
  const MatPtr b = vec_from(need(left, "b"), "b", true);
  const MatPtr d = vec_from(need(right, "d"), "d", false);
  qp_family* fam = nullptr;
  check(qp_solve_tsp(a.get(), v.get(), u.get(), bm.get(), b.get(), d.get(), &fam));
  const FamilyPtr ff = wrap(fam);
  emit_family(out, ff.get());
}

void cmd_solve_atsp(const json& in, Emitter& out) {
  const json& left = need(in, "left");
  const json& right = need(in, "right");
  const MatPtr a = mat_from(need(left, "A"), "A");
  const MatPtr v = vec_from(need(left, "v"), "v", true);
  const MatPtr b = vec_from(need(left, "b"), "b", true);
  const MatPtr bm = mat_from(need(right, "B"), "B");
  const MatPtr u = vec_from(need(right, "u"), "u", false);
  const MatPtr d = vec_from(need(right, "d"), "d", false);
  const MatPtr s = mat_from(need(in, "S"), "S");
  qp_poly* f = nullptr;
  check(qp_solve_atsp(a.get(), v.get(), u.get(), bm.get(), b.get(), d.get(), s.get(), &f));
  const PolyPtr ff = wrap(f);
  out.poly("f", ff.get(), /*bare_text=*/true);
}

void cmd_lagrange(const json& in, Emitter& out) {
  auto parse_nodes = [](const json& j, const char* what, std::vector<QuatPtr>& owned,
                        std::vector<const qp_quat*>& nodes, std::vector<const qp_quat*>& values) {
    if (!j.is_array()) throw CliError{std::string(what) + " must be an array of [node, value]"};
    for (const json& entry : j) {
      if (!entry.is_array() || entry.size() != 2)
        throw CliError{std::string(what) + " entries must be [node, value] pairs"};
      owned.push_back(quat_from(entry[0], "node"));
      nodes.push_back(owned.back().get());
      owned.push_back(quat_from(entry[1], "value"));
      values.push_back(owned.back().get());
    }
  };
  std::vector<QuatPtr> owned;
  std::vector<const qp_quat*> ln, lv, rn, rv;
  if (in.contains("left_nodes")) parse_nodes(in["left_nodes"], "left_nodes", owned, ln, lv);
  if (in.contains("right_nodes")) parse_nodes(in["right_nodes"], "right_nodes", owned, rn, rv);
  qp_family* fam = nullptr;
  check(qp_lagrange(ln.data(), lv.data(), ln.size(), rn.data(), rv.data(), rn.size(), &fam));
  const FamilyPtr ff = wrap(fam);
  emit_family(out, ff.get());
}

void cmd_quasi_ideal(const json& in, Emitter& out) {
  const PolyPtr p = poly_from(need(in, "p"), "p");
  const PolyPtr q = poly_from(need(in, "q"), "q");
  qp_mat_list* xs = nullptr;
  qp_poly_list* fs = nullptr;
  check(qp_quasi_ideal_basis(p.get(), q.get(), &xs, &fs));
  const MatListPtr mm = wrap(xs);
  const PolyListPtr pp = wrap(fs);
  json arr = json::array();
  for (size_t i = 0; i < qp_mat_list_count(mm.get()); ++i) {
    qp_mat* x = nullptr;
    check(qp_mat_list_at(mm.get(), i, &x));
    const MatPtr xx = wrap(x);
    qp_poly* f = nullptr;
    check(qp_poly_list_at(pp.get(), i, &f));
    const PolyPtr ffp = wrap(f);
    out.text_line("basis[" + std::to_string(i) + "].X", mat_text(xx.get()));
    out.text_line("basis[" + std::to_string(i) + "].f", poly_text(ffp.get()));
    arr.push_back(json{{"X", mat_json(xx.get())}, {"f", poly_json(ffp.get())}});
  }
  out.raw()["basis"] = arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quaternion polynomial calculus and interpolation"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> names = {
      "eval",          "divide",        "minpoly",       "lrcm",
      "llcm",          "canonical",     "similar-pairs", "similar-polys",
      "pindep",        "sylvester",     "solve-left",    "solve-right",
      "solve-two-sided", "solve-atsp",  "lagrange",      "quasi-ideal"};
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", opt.input, "input file (JSON), '-' for stdin");
    sub->add_option("--output", opt.output, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "seed for randomized subroutines");
    sub->add_option("--trials", opt.trials, "trial budget for randomized searches");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const json in = read_input(opt.input);
    Emitter out(opt.output == "json");
    if (command == "eval") cmd_eval(in, out);
    else if (command == "divide") cmd_divide(in, out);
    else if (command == "minpoly") cmd_minpoly(in, out);
    else if (command == "lrcm") cmd_lcm(in, out, true);
    else if (command == "llcm") cmd_lcm(in, out, false);
    else if (command == "canonical") cmd_canonical(in, out, opt);
    else if (command == "similar-pairs") cmd_similar_pairs(in, out);
    else if (command == "similar-polys") cmd_similar_polys(in, out, opt);
    else if (command == "pindep") cmd_pindep(in, out);
    else if (command == "sylvester") cmd_sylvester(in, out);
    else if (command == "solve-left") cmd_solve_left(in, out);
    else if (command == "solve-right") cmd_solve_right(in, out);
    else if (command == "solve-two-sided") cmd_solve_two_sided(in, out);
    else if (command == "solve-atsp") cmd_solve_atsp(in, out);
    else if (command == "lagrange") cmd_lagrange(in, out);
    else if (command == "quasi-ideal") cmd_quasi_ideal(in, out);
    out.print();
    return 0;
  } catch (const Unsolved& u) {
    if (opt.output == "json") {
      json j{{"status", status_name(u.status)}, {"reason", qp_last_error()}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "status: " << status_name(u.status) << "\n";
      std::cout << "reason: " << qp_last_error() << "\n";
    }
    return 1;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
