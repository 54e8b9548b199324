#include <doctest.h>

#include <sstream>

#include "monocone/catalog.hpp"
#include "monocone/cdd_io.hpp"
#include "monocone/error.hpp"
#include "monocone/json_io.hpp"
#include "monocone/monotonicity.hpp"
#include "monocone/symmetric.hpp"
#include "monocone/witness.hpp"

using namespace monocone;

namespace {

HRep parse_h(const std::string& text) {
  std::istringstream in(text);
  return read_cdd_hrep(in);
}

VRep parse_v(const std::string& text) {
  std::istringstream in(text);
  return read_cdd_vrep(in);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("cdd text for the n=2 facets") {
  auto text = to_cdd(single_system_facets(1, 2));
  CHECK(text ==
        "* cone: M_1 n=2\n"
        "* systems n=2\n"
        "H-representation\n"
        "linearity 1 2\n"
        "begin\n"
        "2 4 rational\n"
        "0 1 0 0\n"
        "0 1 0 1\n"
        "end\n");
}

TEST_CASE("cdd round trips") {
  for (int n = 2; n <= 4; ++n) {
    auto h = monotonicity_cone(SystemSet::full(n));
    auto back = parse_h(to_cdd(h));
    CHECK(back.dim == h.dim);
    CHECK(back.n == n);
    CHECK(back.name == h.name);
    CHECK(back.inequalities == h.inequalities);
    CHECK(back.equalities == h.equalities);
  }
  auto g = single_system_generators(2, 3).generators;
  auto v = parse_v(to_cdd(g));
  CHECK(v.rays == g.rays);
  CHECK(v.lineality == g.lineality);
  auto s = parse_h(to_cdd(symmetric_facets(4)));
  CHECK(s.n == 0);
  CHECK(s.inequalities == symmetric_facets(4).inequalities);
}

TEST_CASE("empty generator list becomes the origin") {
  VRep zero;
  zero.dim = 2;
  auto text = to_cdd(zero);
  CHECK(text.find("1 0 0") != std::string::npos);
  auto back = parse_v(text);
  CHECK(back.rays.empty());
  CHECK(back.dim == 2);
}

TEST_CASE("third-party style input") {
  auto h = parse_h(
      "some comment line\n"
      "H-representation\n"
      "begin\n"
      " 3 3 integer\n"
      " 0 1 0\n"
      " 0 0 1\n"
      " 0 0 0\n"
      "end\n"
      "incidence\n");
  CHECK(h.dim == 2);
  CHECK(h.inequalities.size() == 2);
  auto v = parse_v("V-representation\nlinearity 1 1\nbegin\n2 3 rational\n0 1/2 0\n1 0 0\nend\n");
  CHECK(v.lineality == RationalMatrix{{Rational(1, 2), 0}});
  CHECK(v.rays.empty());
}

TEST_CASE("malformed cdd input") {
  CHECK_THROWS_AS(parse_h(""), ParseError);
  CHECK_THROWS_AS(parse_h("H-representation\nbegin\n1 3 rational\n0 1\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_h("H-representation\nbegin\n1 3 rational\n1 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_h("H-representation\nbegin\n2 3 rational\n0 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_h("H-representation\nbegin\n1 3 real\n0 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_h("H-representation\nbegin\n1 3 rational\n0 1 x\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_h("H-representation\nbegin\n1 3 rational\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_h("* systems n=x\nH-representation\nbegin\n1 3 rational\n0 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_h("* systems n=3\nH-representation\nbegin\n1 3 rational\n0 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_v("V-representation\nbegin\n1 3 rational\n1 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_v("H-representation\nbegin\n1 3 rational\n0 1 0\nend\n"), ParseError);
  CHECK_THROWS_AS(read_cdd_hrep_file("/nonexistent/file.ine"), ParseError);
}

TEST_CASE("functional JSON") {
  auto u = u_monotone4();
  auto j = to_json(u);
  CHECK(j["n"] == 4);
  CHECK(j["coeffs"]["1,3,4"] == "-1");
  CHECK(j["coeffs"].size() == 5);
  CHECK(functional_from_json(j) == u);
  CHECK(functional_from_json(Json::parse(R"({"n": 2, "coeffs": {"1": 1, "2": "1", "1,2": "-1"}})")) ==
        mutual_information(1, 2, 2));
  CHECK(functional_from_json(Json::parse(R"({"n": 3, "coeffs": {}})")).is_zero());
  CHECK_THROWS_AS(functional_from_json(Json::parse(R"({"n": 2, "coeffs": {"3": "1"}})")), ParseError);
  CHECK_THROWS_AS(functional_from_json(Json::parse(R"({"n": 2, "coeffs": {"1": 0.5}})")), ParseError);
  CHECK_THROWS_AS(functional_from_json(Json::parse(R"({"coeffs": {}})")), ParseError);
  CHECK_THROWS_AS(functional_from_json(Json::parse(R"({"n": 40, "coeffs": {}})")), ParseError);
}

TEST_CASE("distribution JSON") {
  auto d = facet_witness_distribution(facet_lower_sets(1, 3)[1]);
  auto back = distribution_from_json(to_json(d));
  CHECK(back.variables == d.variables);
  CHECK(back.cardinalities == d.cardinalities);
  REQUIRE(back.atoms.size() == d.atoms.size());
  for (std::size_t k = 0; k < d.atoms.size(); ++k) {
    CHECK(back.atoms[k].outcome == d.atoms[k].outcome);
    CHECK(back.atoms[k].p == d.atoms[k].p);
  }
  auto parsed = distribution_from_json(Json::parse(
      R"({"variables": [1,2], "cardinalities": [2,2], "atoms": [{"outcome": [0,0], "p": "1/2"}, {"outcome": [1,1], "p": "1/2"}]})"));
  CHECK(parsed.atoms.size() == 2);
  CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({"variables": [1], "cardinalities": [2], "atoms": [{"outcome": [0], "p": "1/2"}]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({"variables": [1]})")), ParseError);
}

TEST_CASE("certificate JSON round trips") {
  auto dec = decompose_monotone(u_monotone4(), 2);
  auto dec_back = decomposition_from_json(to_json(dec));
  CHECK(dec_back.anchor == 2);
  CHECK(dec_back.v == dec.v);
  CHECK(dec_back.w == dec.w);
  CHECK(verify_decomposition(dec_back, u_monotone4()));

  auto vc = *violation_certificate(zhang_yeung4(), {4});
  auto j = to_json(vc);
  CHECK(j["value_before"].is_string());
  auto vc_back = violation_certificate_from_json(j);
  CHECK(vc_back.system == 4);
  CHECK(vc_back.value_after == vc.value_after);
  CHECK(vc_back.lower_set == vc.lower_set);
  CHECK(verify_certificate(vc_back));
  j["value_after"] = "100";
  CHECK_FALSE(verify_certificate(violation_certificate_from_json(j)));
  j["operation"] = "teleport";
  CHECK_THROWS_AS(violation_certificate_from_json(j), ParseError);
}

TEST_CASE("cone JSON") {
  auto j = to_json(single_system_facets(1, 2));
  CHECK(j["dim"] == 3);
  CHECK(j["inequalities"].size() == 1);
  CHECK(j["equalities"][0][2] == "1");
  auto v = to_json(single_system_generators(1, 2).generators);
  CHECK(v["rays"].size() == 1);
  CHECK(v["lineality"].size() == 1);
}

}
