// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace monolie::io {

namespace {

cplx complex_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("expected a number or an [re, im] pair");
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

int require_dimension(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("expected an object with integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 0 || n > 16) throw std::invalid_argument("'n' out of range");
  return n;
}

}  // namespace

json multivector_to_json(const Multivector& u) {
  json coeffs = json::array();
  for (unsigned mask = 0; mask < u.size(); ++mask)
    coeffs.push_back(complex_to_json(u[mask]));
  return json{{"n", u.generators()}, {"coeffs", std::move(coeffs)}};
}

Multivector multivector_from_json(const json& j) {
  int n = require_dimension(j);
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("multivector: missing 'coeffs' array");
  const json& coeffs = j["coeffs"];
  Multivector u(n);
  if (coeffs.size() != u.size())
    throw std::invalid_argument("multivector: expected 2^n coefficients");
  for (unsigned mask = 0; mask < u.size(); ++mask)
    u[mask] = complex_from_json(coeffs[mask]);
  return u;
}

json poly_to_json(const PolyMultivector& p) {
  json terms = json::array();
  for (const auto& [expo, coeff] : p.terms()) {
    for (unsigned mask = 0; mask < coeff.size(); ++mask) {
      if (coeff[mask] == cplx(0.0, 0.0)) continue;
      terms.push_back(json{{"exp", expo},
                           {"coeff",
                            json{{"blade", mask},
                                 {"re", coeff[mask].real()},
                                 {"im", coeff[mask].imag()}}}});
    }
  }
  return json{{"n", p.generators()}, {"terms", std::move(terms)}};
}

PolyMultivector poly_from_json(const json& j) {
  int n = require_dimension(j);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial: missing 'terms' array");
  PolyMultivector p(n);
  for (const json& term : j["terms"]) {
    if (!term.contains("exp") || !term["exp"].is_array())
      throw std::invalid_argument("polynomial term: missing 'exp' array");
    Exponent e = term["exp"].get<Exponent>();
    if (static_cast<int>(e.size()) != n + 1)
      throw std::invalid_argument("polynomial term: 'exp' must have n+1 entries");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("polynomial term: negative exponent");
    if (!term.contains("coeff") || !term["coeff"].is_object())
      throw std::invalid_argument("polynomial term: missing 'coeff' object");
    const json& c = term["coeff"];
    unsigned mask = c.value("blade", 0u);
    if (mask >= (1u << n))
      throw std::invalid_argument("polynomial term: blade out of range");
    cplx value(c.value("re", 0.0), c.value("im", 0.0));
    p.add_term(e, Multivector::blade(n, mask, value));
  }
  return p;
}

json tuple_to_json(const MatrixTuple& A) {
  json mats = json::array();
  for (const Eigen::MatrixXcd& M : A.A) {
    json flat = json::array();
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < M.cols(); ++c) flat.push_back(complex_to_json(M(r, c)));
    mats.push_back(std::move(flat));
  }
  return json{{"n", A.n}, {"d", A.d}, {"matrices", std::move(mats)}};
}

MatrixTuple tuple_from_json(const json& j) {
  int n = require_dimension(j);
  if (!j.contains("d") || !j["d"].is_number_integer())
    throw std::invalid_argument("tuple: missing integer field 'd'");
  int d = j["d"].get<int>();
  if (!j.contains("matrices") || !j["matrices"].is_array())
    throw std::invalid_argument("tuple: missing 'matrices' array");
  const json& mats = j["matrices"];
  if (static_cast<int>(mats.size()) != n)
    throw std::invalid_argument("tuple: expected n matrices");
  MatrixTuple A;
  A.n = n;
  A.d = d;
  for (const json& flat : mats) {
    if (!flat.is_array() || static_cast<int>(flat.size()) != d * d)
      throw std::invalid_argument("tuple: each matrix needs d*d entries");
    Eigen::MatrixXcd M(d, d);
    int idx = 0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) M(r, c) = complex_from_json(flat[idx++]);
    A.A.push_back(std::move(M));
  }
  A.validate();
  return A;
}

json decomposition_to_json(const LieDecomposition& dec) {
  json entries = json::array();
  for (const auto& [mk, poly] : dec.entries)
    entries.push_back(json{
        {"m", mk.first}, {"k", mk.second}, {"poly", poly_to_json(poly)}});
  return json{{"n", dec.n},
              {"maxDegree", dec.max_degree},
              {"entries", std::move(entries)}};
}

LieDecomposition decomposition_from_json(const json& j) {
  LieDecomposition dec;
  dec.n = require_dimension(j);
  if (!j.contains("maxDegree") || !j["maxDegree"].is_number_integer())
    throw std::invalid_argument("decomposition: missing 'maxDegree'");
  dec.max_degree = j["maxDegree"].get<int>();
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("decomposition: missing 'entries' array");
  for (const json& entry : j["entries"]) {
    int m = entry.at("m").get<int>();
    int k = entry.at("k").get<int>();
    if (k < 0 || k > m || (m - k) % 2 != 0)
      throw std::invalid_argument("decomposition: invalid (m, k) index");
    dec.entries.emplace(std::make_pair(m, k), poly_from_json(entry.at("poly")));
  }
  return dec;
}

std::vector<Paravector> points_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("points: expected an array");
  std::vector<Paravector> pts;
  for (const json& pj : j) {
    if (!pj.is_array() || pj.empty())
      throw std::invalid_argument("points: each point is a coordinate array");
    std::vector<cplx> coords;
    coords.reserve(pj.size());
    for (const json& cj : pj) coords.push_back(complex_from_json(cj));
    pts.emplace_back(static_cast<int>(coords.size()) - 1, std::move(coords));
  }
  return pts;
}

json points_to_json(const std::vector<Paravector>& pts) {
  json out = json::array();
  for (const Paravector& p : pts) {
    json pj = json::array();
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      pj.push_back(complex_to_json(p[i]));
    out.push_back(std::move(pj));
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace monolie::io
