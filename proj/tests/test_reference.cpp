#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "monocone/monotonicity.hpp"

using namespace monocone;

TEST_SUITE("reference") {

TEST_CASE("n=5 rays match the cddlib export") {
  std::ifstream in(MONOCONE_TEST_DATA "/m5_rays_cddlib.txt");
  REQUIRE(in);
  std::set<RationalVector> expected;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    RationalVector r;
    std::string token;
    while (row >> token) r.emplace_back(parse_rational(token));
    REQUIRE(r.size() == 31);
    expected.insert(r);
  }
  CHECK(expected.size() == 821);

  auto rays = enumerate_monotone_rays(5).rays;
  CHECK(rays.rays.size() == 821);
  CHECK(std::set<RationalVector>(rays.rays.begin(), rays.rays.end()) == expected);
}

}
