#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "strmod/generators.hpp"
#include "strmod/io.hpp"

using namespace strmod;

namespace {
const FieldSpec fp = FieldSpec::prime(32003);
const FieldSpec fq = FieldSpec::rationals();
} // namespace

TEST_CASE("module documents round-trip bit for bit") {
  Rng rng(83);
  for (int i = 0; i < 10; ++i) {
    const ModuleRep m = random_module(rng, fp, 9);
    const std::string doc = module_to_json(m);
    const ModuleRep back = module_from_json(doc);
    CHECK(back == m);
    CHECK(module_to_json(back) == doc);
  }
}

TEST_CASE("rational modules use num/den strings") {
  Matrix x(fq, 2, 2), y(fq, 2, 2);
  x.set(1, 0, fq.from_fraction(1, 2));
  const ModuleRep m = ModuleRep::make(x, y);
  const std::string doc = module_to_json(m);
  CHECK(doc.find("\"1/2\"") != std::string::npos);
  CHECK(doc.find("\"field\":\"Q\"") != std::string::npos);
  const ModuleRep back = module_from_json(doc);
  CHECK(back == m);
  CHECK(module_to_json(back) == doc);
}

TEST_CASE("lenient inputs normalize to the canonical document") {
  // unreduced fractions and bare integers are accepted
  const char* text =
      R"({"dim":2,"field":"Q","x":[[0,0],["2/4",0]],"y":[[0,0],[0,0]]})";
  const ModuleRep m = module_from_json(text);
  CHECK(m.act_x().at(1, 0) == fq.from_fraction(1, 2));
  const std::string canonical = module_to_json(m);
  CHECK(canonical.find("\"1/2\"") != std::string::npos);
  CHECK(module_to_json(module_from_json(canonical)) == canonical);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(module_from_json("{"), DomainError);
  CHECK_THROWS_AS(module_from_json("{}"), DomainError);
  CHECK_THROWS_AS(
      module_from_json(R"({"dim":1,"field":"R","x":[[0]],"y":[[0]]})"),
      DomainError);
  CHECK_THROWS_AS(
      module_from_json(R"({"dim":2,"field":"Q","x":[[0]],"y":[[0]]})"),
      DomainError);
  CHECK_THROWS_AS(
      module_from_json(R"({"dim":1,"field":"Q","x":[["1/0"]],"y":[[0]]})"),
      DomainError);
  CHECK_THROWS_AS(
      module_from_json(R"({"dim":1,"field":"Q","x":[["zz"]],"y":[[0]]})"),
      DomainError);
  // algebra violations are caught by the module constructor
  CHECK_THROWS_AS(
      module_from_json(R"({"dim":1,"field":"Q","x":[["1/2"]],"y":[[0]]})"),
      DomainError);
  CHECK_THROWS_AS(
      module_from_json(
          R"({"dim":2,"field":{"Fp":7},"x":[[0,0],[1,0]],"y":[[0,1],[0,0]]})"),
      DomainError);
}

TEST_CASE("file save and load") {
  Rng rng(89);
  const ModuleRep m = random_module(rng, fp, 6);
  const std::string path = "strmod_test_module.json";
  save_module(m, path);
  const ModuleRep back = load_module(path);
  CHECK(back == m);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_module("does_not_exist.json"), DomainError);
}

TEST_CASE("scalar text helpers") {
  CHECK(scalar_from_text(fp, "17") == fp.from_int(17));
  CHECK(scalar_from_text(fp, "-1") == fp.from_int(-1));
  CHECK(scalar_from_text(fp, "1/2") == fp.from_fraction(1, 2));
  CHECK(scalar_from_text(fq, "-3/6") == fq.from_fraction(-1, 2));
  CHECK(scalar_to_text(fq, fq.from_fraction(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(scalar_from_text(fq, "x"), DomainError);
  CHECK_THROWS_AS(scalar_from_text(fq, "1/0"), DomainError);
}
