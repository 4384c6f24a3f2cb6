#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pq/axioms.hpp"
#include "pq/classification.hpp"
#include "pq/families.hpp"

using namespace pq;

using PP = std::vector<PrimePower>;

TEST_CASE("primary_decomposition") {
  CHECK(primary_decomposition("Z12") == AbelianSpec{0, PP{{2, 2}, {3, 1}}});
  CHECK(primary_decomposition("Z7") == AbelianSpec{0, PP{{7, 1}}});
  CHECK(primary_decomposition("Z4xZ2") == AbelianSpec{0, PP{{2, 1}, {2, 2}}});
  CHECK(primary_decomposition("Z1") == AbelianSpec{0, {}});
  CHECK(primary_decomposition("Z360") == AbelianSpec{0, PP{{2, 3}, {3, 2}, {5, 1}}});
  CHECK(primary_decomposition("ZxZ4") == AbelianSpec{1, PP{{2, 2}}});
  CHECK(primary_decomposition("ZxZ") == AbelianSpec{2, {}});
  for (auto bad : {"S3", "D8", "Q8", "A4", "Z3xS3"}) {
    CHECK_THROWS_AS(primary_decomposition(bad), NotAbelian);
  }
  for (auto bad : {"", "Z0", "Zx", "W5", "Z-3"}) {
    CHECK_THROWS_AS(primary_decomposition(bad), ParseError);
  }
}

TEST_CASE("build_L") {
  auto chain = build_L(AbelianSpec{0, PP{{5, 2}}}, 1);
  CHECK(chain.factors == std::vector<LFactor>{{LFactor::Kind::max_chain, 3}});
  CHECK(chain.realized == max_chain(3));

  auto free = build_L(AbelianSpec{1, {}}, 6);
  CHECK(free.realized.size() == 6);
  CHECK(free.realized.op(3, 5) == 1);  // gcd(4, 6) = 2

  auto empty = build_L(AbelianSpec{}, 1);
  CHECK(empty.realized.size() == 1);
  CHECK(describe(empty) == "[1]");

  auto twelve = build_L(primary_decomposition("Z12"), 1);
  CHECK(describe(twelve) == "[3]⊕[2]");
  CHECK(twelve.realized.size() == 6);
  CHECK(describe(build_L(primary_decomposition("ZxZ4"), 6)) == "Z+[1..6]⊕[3]");
}

TEST_CASE("L structures are commutative pseudoquandles") {
  for (auto spec : {"Z1", "Z12", "Z8xZ9", "Z2xZ2", "Z4xZ2", "ZxZ4", "ZxZ"}) {
    auto const l  = build_L(primary_decomposition(spec), 6);
    auto const ax = check_axioms(l.realized);
    CHECK_MESSAGE(ax.idempotent, spec);
    CHECK_MESSAGE(ax.commutative, spec);
    CHECK_MESSAGE(ax.right_self_distributive, spec);
  }
}

TEST_CASE("classification holds for cyclic and coprime groups") {
  for (auto spec : {"Z1", "Z2", "Z3", "Z7", "Z12", "Z30", "Z8xZ9", "Z4xZ3xZ5", "Z60"}) {
    auto w = verify_theorem1(spec, 1);
    CHECK_MESSAGE(w.verified, spec);
  }
  for (auto spec : {"Z2", "Z4", "Z8", "Z16", "Z32", "Z64", "Z3", "Z9", "Z27", "Z81", "Z5",
                    "Z25", "Z125"}) {
    auto const l = build_L(primary_decomposition(spec), 1);
    CHECK(l.realized.size() == l.factors.front().size);
    CHECK_MESSAGE(verify_theorem1(spec, 1).verified, spec);
  }
}

TEST_CASE("classification with a free factor") {
  for (std::size_t bound : {1u, 4u, 6u, 12u}) {
    CHECK(verify_theorem1("Z", bound).verified);
    CHECK(verify_theorem1("ZxZ4", bound).verified);
  }
}

TEST_CASE("classification fails for repeated primes") {
  CHECK_THROWS_WITH_AS(verify_theorem1("Z2xZ2", 1),
                       "P_G(Z2xZ2) has 5 elements but L[2]⊕[2] has 4", TheoremViolation);
  CHECK_THROWS_AS(verify_theorem1("Z4xZ2", 1), TheoremViolation);
  CHECK_THROWS_AS(verify_theorem1("Z3xZ3", 1), TheoremViolation);
  CHECK_THROWS_AS(verify_theorem1("S3", 1), NotAbelian);
}

TEST_CASE("max and min chains are isomorphic") {
  for (std::size_t k = 1; k <= 8; ++k) {
    auto w = find_isomorphism(max_chain(k), min_chain(k));
    REQUIRE(w);
    for (Index i = 0; i < k; ++i) {
      CHECK(w->mapping[i] == k - 1 - i);
    }
  }
}

TEST_CASE("divisor lattices under gcd match P_G of cyclic groups") {
  for (std::size_t n : {1u, 6u, 12u, 30u, 36u}) {
    auto g = build_pg(build_group("Z" + std::to_string(n)));
    auto d = divisor_gcd(n);
    CHECK_MESSAGE(find_isomorphism(g, d).has_value(), n);
  }
}

TEST_CASE("truncated integer subgroups are the gcd segment") {
  for (std::size_t bound : {1u, 2u, 6u, 12u, 30u}) {
    CHECK(truncated_integer_subgroups(bound).table() == gcd_segment(bound).table());
  }
  auto const s = gcd_segment(12);
  CHECK(s.op(7, 9) == 1);   // gcd(8, 10) = 2
  CHECK(s.op(5, 11) == 5);  // gcd(6, 12) = 6
}

TEST_CASE("json") {
  auto j = l_structure_json(build_L(primary_decomposition("Z12"), 1));
  CHECK(j["description"] == "[3]⊕[2]");
  CHECK(j["factors"].size() == 2);
}
