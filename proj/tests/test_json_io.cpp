// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/json_io.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "monolie/lie_sphere.hpp"
#include "monolie/poly.hpp"

using namespace monolie;
using monolie::io::json;

namespace {

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("multivector round trip") {
  Multivector u(3);
  u[0] = cplx(0.1, -0.2);
  u[5] = cplx(2.0, 3.0);
  u[7] = cplx(-1.0, 0.0);

  const json j = io::multivector_to_json(u);
  CHECK(j["n"] == 3);
  CHECK(j["coeffs"].size() == 8);
  const Multivector back = io::multivector_from_json(j);
  CHECK((back - u).norm() == 0.0);

  // Through text as well: doubles print in round-trip form.
  const Multivector text = io::multivector_from_json(json::parse(j.dump()));
  CHECK((text - u).norm() == 0.0);

  json bad = j;
  bad["coeffs"].erase(0);
  CHECK_THROWS_AS(io::multivector_from_json(bad), std::invalid_argument);
}

TEST_CASE("polynomial round trip keeps blades and exponents") {
  PolyMultivector p(2);
  p.add_term({1, 0, 2}, Multivector::blade(2, 1, cplx(0.5, -0.25)));
  Multivector mixed(2);
  mixed[0] = cplx(1.0, 0.0);
  mixed[3] = cplx(0.0, 2.0);
  p.add_term({0, 1, 0}, mixed);

  const json j = io::poly_to_json(p);
  // The mixed coefficient expands to one entry per blade.
  CHECK(j["terms"].size() == 3);
  const PolyMultivector back = io::poly_from_json(j);
  CHECK((back - p).max_abs() == 0.0);

  CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"n":2,"terms":[{"exp":[1,0],"coeff":{"blade":0,"re":1,"im":0}}]})")),
                  std::invalid_argument);
}

TEST_CASE("matrix tuple round trip") {
  MatrixTuple A;
  A.n = 2;
  A.d = 2;
  Eigen::MatrixXcd m1(2, 2), m2(2, 2);
  m1 << cplx(0, 1), 2, 3, cplx(4, -1);
  m2 << 1, 0, 0, -1;
  A.A = {m1, m2};

  const json j = io::tuple_to_json(A);
  const MatrixTuple back = io::tuple_from_json(j);
  CHECK(back.n == 2);
  CHECK(back.d == 2);
  CHECK((back.A[0] - m1).norm() == 0.0);
  CHECK((back.A[1] - m2).norm() == 0.0);

  json bad = j;
  bad["matrices"][0].erase(0);
  CHECK_THROWS_AS(io::tuple_from_json(bad), std::invalid_argument);
}

TEST_CASE("decomposition round trip") {
  const PolyMultivector z1 = PolyMultivector::variable(2, 1);
  const LieDecomposition dec = decompose(z1 * z1, 4);
  const json j = io::decomposition_to_json(dec);
  const LieDecomposition back = io::decomposition_from_json(j);
  CHECK(back.n == dec.n);
  CHECK(back.max_degree == dec.max_degree);
  REQUIRE(back.entries.size() == dec.entries.size());
  for (const auto& [mk, poly] : dec.entries) {
    REQUIRE(back.entries.count(mk) == 1);
    CHECK((back.entries.at(mk) - poly).max_abs() == 0.0);
  }

  CHECK_THROWS_AS(io::decomposition_from_json(json::parse(
                      R"({"n":2,"maxDegree":2,"entries":[{"m":2,"k":1,"poly":{"n":2,"terms":[]}}]})")),
                  std::invalid_argument);
}

TEST_CASE("points accept plain numbers and re/im pairs") {
  const json j = json::parse(R"([[0.5, [0.1, -0.2]], [1, 2]])");
  const auto pts = io::points_from_json(j);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].generators() == 1);
  CHECK(pts[0][0] == cplx(0.5, 0.0));
  CHECK(pts[0][1] == cplx(0.1, -0.2));
  CHECK(pts[1][1] == cplx(2.0, 0.0));

  const auto round = io::points_from_json(io::points_to_json(pts));
  REQUIRE(round.size() == 2);
  for (int i = 0; i < 2; ++i) CHECK(round[i][1] == pts[i][1]);

  CHECK_THROWS_AS(io::points_from_json(json::parse("[[1, [2]]]")),
                  std::invalid_argument);
}

TEST_CASE("file round trip") {
  const std::string path = "monolie_io_test.json";
  const json j = {{"n", 1}, {"coeffs", {{1.0, 0.0}, {0.5, -0.5}}}};
  io::save_json_file(path, j);
  const json back = io::load_json_file(path);
  CHECK(back == j);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::load_json_file("does_not_exist.json"), std::runtime_error);
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(io::format_g17(0.5) == "0.5");
  CHECK(io::format_g17(1.0) == "1");
  CHECK(io::format_g17(0.1) == "0.10000000000000001");
}
