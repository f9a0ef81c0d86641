#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "jpm/profile.hpp"

using namespace jpm;

namespace {
Profile sample() { return Profile({0, 1, 2, 2}, {1, 2, 2, 2}); }
}  // namespace

TEST_CASE("occurs examples") {
  const auto p = sample();
  CHECK(occurs(p, 2, 1));
  CHECK(occurs(p, 2, 2));
  CHECK_FALSE(occurs(p, 2, 0));
  CHECK(occurs(p, 1, 0));
  CHECK(occurs(p, 4, 2));
  CHECK_FALSE(occurs(p, 4, 3));
}

TEST_CASE("queries outside the domain answer no") {
  const auto p = sample();
  CHECK_FALSE(occurs(p, 0, 0));
  CHECK_FALSE(occurs(p, -1, 0));
  CHECK_FALSE(occurs(p, 5, 2));
  CHECK_FALSE(occurs(p, 1, -1));
  CHECK_FALSE(occurs(p, 3, 100));
  CHECK_FALSE(occurs(Profile{}, 1, 0));
}

TEST_CASE("accessors are 1-based") {
  const auto p = sample();
  CHECK(p.min_ones(1) == 0);
  CHECK(p.max_ones(4) == 2);
  CHECK_THROWS_AS(p.min_ones(0), std::out_of_range);
  CHECK_THROWS_AS(p.max_ones(5), std::out_of_range);
}

TEST_CASE("mismatched array lengths are rejected") {
  CHECK_THROWS_AS(Profile({0, 1}, {1}), std::invalid_argument);
}

TEST_CASE("merge examples") {
  const Profile a({0, 1}, {1, 1});
  const Profile b({1, 1}, {1, 2});
  CHECK(merge_profiles(a, b) == Profile({0, 1}, {1, 2}));
  const auto inf = Profile::infeasible(2);
  CHECK(merge_profiles(a, inf) == a);
  CHECK(merge_profiles(inf, a) == a);
  const Profile shorter({1}, {1});
  CHECK(merge_profiles(shorter, a) == Profile({0, 1}, {1, 1}));
}

TEST_CASE("merge is commutative, associative and idempotent") {
  std::mt19937_64 rng(23);
  auto random_profile = [&](std::size_t n) {
    std::vector<Cost> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 7 == 0) {
        lo[k] = kInf;
        hi[k] = kNegInf;
      } else {
        lo[k] = static_cast<Cost>(rng() % (k + 2));
        hi[k] = lo[k] + static_cast<Cost>(rng() % 3);
      }
    }
    return Profile(lo, hi);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto a = random_profile(n), b = random_profile(n), c = random_profile(n);
    REQUIRE(merge_profiles(a, b) == merge_profiles(b, a));
    REQUIRE(merge_profiles(merge_profiles(a, b), c) == merge_profiles(a, merge_profiles(b, c)));
    REQUIRE(merge_profiles(a, a) == a);
  }
}

TEST_CASE("describe_violation") {
  CHECK(describe_violation(sample()).empty());
  CHECK_FALSE(describe_violation(Profile({0, 2}, {1, 2})).empty());   // min jumps by 2
  CHECK_FALSE(describe_violation(Profile({1, 1}, {0, 1})).empty());   // min > max
  CHECK_FALSE(describe_violation(Profile({0, 0}, {1, 3})).empty());   // max > size
  CHECK_FALSE(describe_violation(Profile::infeasible(1)).empty());
}

TEST_CASE("CSV round trip") {
  const auto p = sample();
  const auto text = profile_to_csv(p);
  CHECK(text == "size,min_ones,max_ones\n1,0,1\n2,1,2\n3,2,2\n4,2,2\n");
  CHECK(parse_profile_csv(text) == p);
  std::istringstream in(text);
  CHECK(read_profile_csv(in) == p);
}

TEST_CASE("CSV writer refuses infeasible entries") {
  CHECK_THROWS_AS(profile_to_csv(Profile::infeasible(2)), std::invalid_argument);
}

TEST_CASE("malformed CSV reports the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_profile_csv(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("size,lo,hi\n1,0,1\n") == 1);
  CHECK(line_of("size,min_ones,max_ones\n1,0,1\n3,1,2\n") == 3);
  CHECK(line_of("size,min_ones,max_ones\n1,0,x\n") == 2);
  CHECK(line_of("size,min_ones,max_ones\n1,1,0\n") == 2);
  CHECK(line_of("size,min_ones,max_ones\n1,0,2\n") == 2);
  CHECK(line_of("size,min_ones,max_ones\n1,0,1,5\n") == 2);
}
