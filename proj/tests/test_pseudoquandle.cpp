#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pq/axioms.hpp"
#include "pq/classification.hpp"
#include "pq/corpus.hpp"
#include "pq/families.hpp"
#include "pq/isomorphism.hpp"
#include "pq/source.hpp"

using namespace pq;

namespace {

  FiniteMagma relabel(FiniteMagma const& m, std::vector<Index> const& perm) {
    std::size_t const  n = m.size();
    std::vector<Index> inv(n);
    for (Index x = 0; x < n; ++x) {
      inv[perm[x]] = x;
    }
    return tabulate(
        n, [&](std::size_t a, std::size_t b) { return perm[m.op(inv[a], inv[b])]; }, {},
        "relabelled " + m.provenance());
  }

  std::vector<Index> random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  FiniteMagma from_code(std::size_t n, std::size_t code) {
    std::vector<Index> op(n * n);
    for (auto& e : op) {
      e = static_cast<Index>(code % n);
      code /= n;
    }
    return FiniteMagma(n, std::move(op), {}, "enumerated");
  }

}  // namespace

TEST_CASE("build_pg: small cases") {
  auto trivial = build_pg(build_group("Z1"));
  CHECK(trivial.size() == 1);
  CHECK(trivial.op(0, 0) == 0);

  auto z9 = build_pg(build_group("Z9"));
  REQUIRE(z9.size() == 3);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      CHECK(z9.op(i, j) == std::max(i, j));
    }
  }

  auto q8 = build_pg(build_group("Q8"));
  CHECK(q8.size() == 6);
  CHECK(q8.label(2) == "{1,-1,i,-i}");
  CHECK(q8.provenance() == "P_G of Q8");
}

TEST_CASE("build_pg: always a commutative pseudoquandle, both-sided distributive") {
  for (auto spec : {"Z1", "Z12", "Q8", "D8", "D12", "S3", "S4", "A4", "A5", "Z2xZ2xZ2",
                    "Z3xS3", "Z2xQ8"}) {
    auto r = check_axioms(build_pg(build_group(spec)));
    CHECK_MESSAGE(r.idempotent, spec);
    CHECK_MESSAGE(r.commutative, spec);
    CHECK_MESSAGE(r.right_self_distributive, spec);
    CHECK_MESSAGE(r.left_self_distributive, spec);
  }
}

TEST_CASE("check_axioms: example families are quandles") {
  CHECK(check_axioms(dihedral_quandle(3)).classification == Classification::quandle);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(check_axioms(trivial_quandle(n)).classification == Classification::quandle);
    CHECK(check_axioms(dihedral_quandle(n)).classification == Classification::quandle);
  }
  CHECK(check_axioms(alexander_quandle(5, 2)).classification == Classification::quandle);
  CHECK(check_axioms(alexander_quandle(7, 3)).classification == Classification::quandle);
  CHECK(check_axioms(alexander_quandle(9, -1)).classification == Classification::quandle);
  CHECK(check_axioms(symplectic_quandle(3)).classification == Classification::quandle);
  CHECK(check_axioms(symplectic_quandle(5)).classification == Classification::quandle);
  for (auto spec : {"S3", "Q8", "A4", "D10"}) {
    for (long long e : {1, 2, -1}) {
      CHECK(check_axioms(conjugation_quandle(build_group(spec), e)).classification
            == Classification::quandle);
    }
  }
}

TEST_CASE("check_axioms: P_G(Q8) is a pseudoquandle with witness {±1,±i}, {±1,±j}") {
  auto m = build_pg(build_group("Q8"));
  auto r = check_axioms(m);
  CHECK(r.classification == Classification::pseudoquandle);
  REQUIRE(r.bijectivity_witness);
  CHECK(m.label(r.bijectivity_witness->p) == "{1,-1,i,-i}");
  CHECK(m.label(r.bijectivity_witness->q) == "{1,-1,j,-j}");
  CHECK(r.bijectivity_witness->solutions == 0);
  CHECK(right_division_solutions(m, r.bijectivity_witness->p, r.bijectivity_witness->q).empty());
}

TEST_CASE("check_axioms: counterexamples and other classifications") {
  SUBCASE("chain falls back to the first failing pair") {
    auto r = check_axioms(max_chain(3));
    CHECK(r.classification == Classification::pseudoquandle);
    REQUIRE(r.bijectivity_witness);
    CHECK(r.bijectivity_witness->p == 0);
    CHECK(r.bijectivity_witness->q == 1);
  }
  SUBCASE("rack: a * b = sigma(a)") {
    // constant permutation rack on 2 elements
    auto m = tabulate(2, [](std::size_t a, std::size_t) { return 1 - a; }, {}, "swap");
    auto r = check_axioms(m);
    CHECK(r.classification == Classification::rack);
    CHECK_FALSE(r.idempotent);
    CHECK(r.idempotence_counterexample == Index{0});
  }
  SUBCASE("magma-only: group multiplication of Z3") {
    auto m = tabulate(3, [](std::size_t a, std::size_t b) { return (a + b) % 3; }, {}, "Z3");
    auto r = check_axioms(m);
    CHECK(r.classification == Classification::magma_only);
    CHECK_FALSE(r.right_self_distributive);
    // (0+0)+1 = 1 but (0+1)+(0+1) = 2
    CHECK(r.right_distributivity_counterexample == std::array<Index, 3>{0, 0, 1});
    CHECK(r.commutative);
  }
  SUBCASE("non-commutative dihedral quandle") {
    auto r = check_axioms(dihedral_quandle(4));
    CHECK_FALSE(r.commutative);
    // 0 * 1 = 2, 1 * 0 = 3
    CHECK(r.commutativity_counterexample == std::pair<Index, Index>{0, 1});
  }
  SUBCASE("left distributivity can fail alone") {
    // trivial quandle is right distributive; a*b = b is left distributive only
    auto m = tabulate(2, [](std::size_t, std::size_t b) { return b; }, {}, "right zero");
    auto r = check_axioms(m);
    CHECK(r.left_self_distributive);
    CHECK(r.right_self_distributive);
    CHECK(r.classification == Classification::pseudoquandle);
  }
}

TEST_CASE("check_axioms: classification invariants on every 2-element magma") {
  for (std::size_t code = 0; code < 16; ++code) {
    auto m = from_code(2, code);
    auto r = check_axioms(m);
    CHECK(r.idempotent == !r.idempotence_counterexample.has_value());
    CHECK(r.right_self_distributive == !r.right_distributivity_counterexample.has_value());
    CHECK(r.left_self_distributive == !r.left_distributivity_counterexample.has_value());
    CHECK(r.commutative == !r.commutativity_counterexample.has_value());
    CHECK(r.right_translations_bijective == !r.bijectivity_witness.has_value());
    bool const i = r.idempotent, d = r.right_self_distributive,
               b = r.right_translations_bijective;
    CHECK((r.classification == Classification::quandle) == (i && d && b));
    CHECK((r.classification == Classification::rack) == (!i && d && b));
    CHECK((r.classification == Classification::pseudoquandle) == (i && d && !b));
  }
}

TEST_CASE("build_example: formulas") {
  auto t = build_example("trivial:3");
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      CHECK(t.op(i, j) == i);
    }
  }
  CHECK(build_example("dihedral:3").op(0, 1) == 2);
  CHECK(build_example("alexander:5:2").op(1, 3) == 4);
  // (1,0) * (0,1): <x,y> = 1, so x + y = (1,1)
  auto s = build_example("symplectic:3");
  CHECK(s.size() == 9);
  CHECK(s.op(3, 1) == 4);
  auto c = build_example("conj:S3");
  CHECK(c.provenance() == "conj:S3:1");
  CHECK(build_example("conj:S3:2").provenance() == "conj:S3:2");
  CHECK(build_example("pg:Q8").size() == 6);
}

TEST_CASE("build_example: errors") {
  CHECK_THROWS_AS(build_example("alexander:6:2"), BadParameter);
  CHECK_THROWS_AS(build_example("alexander:6:3"), BadParameter);
  CHECK_THROWS_AS(build_example("symplectic:4"), BadParameter);
  CHECK_THROWS_AS(build_example("trivial:0"), BadParameter);
  CHECK_THROWS_AS(build_example("dihedral:x"), ParseError);
  CHECK_THROWS_AS(build_example("alexander:5"), ParseError);
  CHECK_THROWS_AS(build_example("nope:3"), ParseError);
  CHECK_THROWS_AS(build_example("trivial"), ParseError);
  CHECK_THROWS_AS(build_example("pg:Q9"), ParseError);
}

TEST_CASE("direct_sum") {
  auto p   = build_pg(build_group("Q8"));
  auto one = max_chain(1);
  auto s   = direct_sum(p, one);
  CHECK(s.size() == 6);
  CHECK(find_isomorphism(s, p));

  auto m = direct_sum(max_chain(3), max_chain(2));
  CHECK(m.size() == 6);
  // (2,1) * (1,2) = (2,2) in 1-based labels
  Index const a = 1 * 2 + 0, b = 0 * 2 + 1;
  CHECK(m.label(m.op(a, b)) == "(2,2)");

  Limits small;
  small.max_magma = 5;
  CHECK_THROWS_AS(direct_sum(max_chain(3), max_chain(2), small), SizeLimit);
}

TEST_CASE("magma document round trip") {
  std::mt19937 rng(7);
  for (auto const& nm : corpus_magmas()) {
    if (nm.magma.size() > 40) {
      continue;
    }
    auto back = magma_from_json(magma_to_json(nm.magma));
    CHECK(back == nm.magma);
    CHECK(back.labels() == nm.magma.labels());
  }
  CHECK_THROWS_AS(magma_from_json(nlohmann::json{{"size", 2}, {"op", {{0, 1}, {1, 2}}}}),
                  ParseError);
  CHECK_THROWS_AS(magma_from_json(nlohmann::json{{"size", 2}}), ParseError);
  CHECK_THROWS_AS(FiniteMagma(2, {0, 1, 1}, {}, "short"), ParseError);
}

TEST_CASE("find_isomorphism: examples") {
  auto p = build_pg(build_group("S4"));
  auto w = find_isomorphism(p, p);
  REQUIRE(w);
  CHECK(w->verified);
  CHECK(w->mapping == std::vector<Index>{0, 1, 2, 3});

  CHECK(find_isomorphism(build_pg(build_group("Z4")), build_pg(build_group("Z9"))));
  CHECK(find_isomorphism(build_pg(build_group("Z12")),
                         direct_sum(max_chain(3), max_chain(2))));
  CHECK_FALSE(find_isomorphism(trivial_quandle(3), dihedral_quandle(3)));
  CHECK_FALSE(find_isomorphism(max_chain(3), max_chain(4)));
  auto t = find_isomorphism(trivial_quandle(2), trivial_quandle(2));
  REQUIRE(t);
  CHECK(t->mapping == std::vector<Index>{0, 1});

  Limits small;
  small.max_iso = 5;
  CHECK_THROWS_AS(find_isomorphism(max_chain(6), max_chain(6), small), SizeLimit);
}

TEST_CASE("find_isomorphism: same order cyclic groups and different primes") {
  for (auto [a, b] : std::vector<std::pair<char const*, char const*>>{
           {"Z4", "Z9"}, {"Z8", "Z27"}, {"Z2", "Z3"}, {"Z25", "Z49"}, {"Z6", "Z15"}}) {
    CHECK_MESSAGE(find_isomorphism(build_pg(build_group(a)), build_pg(build_group(b))),
                  a << " vs " << b);
  }
  CHECK_FALSE(find_isomorphism(build_pg(build_group("Z4")), build_pg(build_group("Z6"))));
}

TEST_CASE("find_isomorphism: relabelled copies are found and witnesses invert") {
  std::mt19937 rng(20261015);
  for (auto const& nm : corpus_magmas()) {
    if (nm.magma.size() > 64) {
      continue;
    }
    auto const perm  = random_perm(nm.magma.size(), rng);
    auto const other = relabel(nm.magma, perm);
    auto const w     = find_isomorphism(nm.magma, other);
    REQUIRE_MESSAGE(w, nm.name);
    CHECK(w->verified);
    auto const back = inverse(*w);
    CHECK(is_isomorphism(other, nm.magma, back.mapping));
    auto const w2 = find_isomorphism(other, nm.magma);
    REQUIRE(w2);
    CHECK(is_isomorphism(other, nm.magma, w2->mapping));

    auto [ca, cb] = refined_colours(nm.magma, other);
    for (Index x = 0; x < nm.magma.size(); ++x) {
      CHECK(ca[x] == cb[perm[x]]);
    }
  }
}

TEST_CASE("find_isomorphism agrees with the unpruned search on all magmas of size <= 3") {
  std::mt19937 rng(3);
  for (std::size_t a = 0; a < 16; ++a) {
    for (std::size_t b = 0; b < 16; ++b) {
      auto ma = from_code(2, a), mb = from_code(2, b);
      CHECK(find_isomorphism(ma, mb).has_value()
            == find_isomorphism_unpruned(ma, mb).has_value());
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, 19682);
  for (std::size_t code = 0; code < 19683; ++code) {
    auto m     = from_code(3, code);
    auto other = from_code(3, pick(rng));
    auto copy  = relabel(m, random_perm(3, rng));
    auto got   = find_isomorphism(m, other);
    REQUIRE(got.has_value() == find_isomorphism_unpruned(m, other).has_value());
    REQUIRE(find_isomorphism(m, copy).has_value());
  }
}

TEST_CASE("find_isomorphism_unpruned: limits") {
  CHECK_THROWS_AS(find_isomorphism_unpruned(max_chain(10), max_chain(10)), SizeLimit);
  CHECK(find_isomorphism_unpruned(max_chain(4), min_chain(4)));
}

TEST_CASE("check_homomorphism") {
  auto chain = max_chain(3);
  auto sum   = direct_sum(max_chain(3), max_chain(2));

  for (Index target = 0; target < 3; ++target) {
    std::vector<Index> constant(sum.size(), target);
    CHECK(check_homomorphism(sum, chain, constant).holds);
  }

  std::vector<Index> projection(sum.size());
  for (Index x = 0; x < sum.size(); ++x) {
    projection[x] = x / 2;
  }
  CHECK(check_homomorphism(sum, chain, projection).holds);

  std::vector<Index> swap = {2, 1, 0};
  auto               r    = check_homomorphism(chain, chain, swap);
  CHECK_FALSE(r.holds);
  // f(1*2) = f(2) = 2 but f(1)*f(2) = 3*2 = 3, 1-based
  CHECK(r.counterexample == std::pair<Index, Index>{0, 1});

  std::vector<Index> bad = {0, 1, 5};
  CHECK_THROWS_AS(check_homomorphism(chain, chain, bad), BadMap);
  std::vector<Index> short_map = {0, 1};
  CHECK_THROWS_AS(check_homomorphism(chain, chain, short_map), BadMap);
}

TEST_CASE("load_source") {
  CHECK(load_source("max:4") == max_chain(4));
  CHECK(load_source("gcd:6") == gcd_segment(6));
  CHECK(load_source("L:Z12").size() == 6);
  CHECK(load_source("L:ZxZ4", {}, 5).size() == 15);
  CHECK(is_pg_source("pg:Q8"));
  CHECK_FALSE(is_pg_source("max:3"));
  CHECK_THROWS_AS(load_source("max:0"), ParseError);
  CHECK_THROWS_AS(load_source("file:/nonexistent"), ParseError);
}
