#include <doctest.h>

#include <random>
#include <set>

#include "halfshift/root.hpp"
#include "halfshift/signed_permutation.hpp"
#include "halfshift/weyl.hpp"
#include "oracles.hpp"

using namespace halfshift;

namespace {

Root eps(int size, int a, int scale = 1) {
  return Root::epsilon(size, a, scale);
}

}  // namespace

TEST_CASE("generator action in one-line notation") {
  auto id = SignedPermutation::identity(Family::C, 2);
  CHECK(id.apply_generator(1).values() == std::vector<int>{2, 1});
  CHECK(id.apply_generator(0).values() == std::vector<int>{-1, 2});

  auto idD = SignedPermutation::identity(Family::D, 2);  // three letters
  CHECK(idD.apply_generator(0).values() == std::vector<int>{-2, -1, 3});

  SUBCASE("involution") {
    std::mt19937 rng(7);
    for (Family f : {Family::B, Family::C, Family::D}) {
      auto group = test::bfs_group(f, 3);
      for (const auto& [w, len] : group)
        for (int i = 0; i < w.num_generators(); ++i)
          CHECK(w.apply_generator(i).apply_generator(i) == w);
    }
  }
}

TEST_CASE("family D keeps an even number of bars") {
  CHECK_THROWS_AS(SignedPermutation(Family::D, 2, {-1, 2, 3}),
                  std::invalid_argument);
  for (const auto& [w, len] : test::bfs_group(Family::D, 2)) {
    int bars = 0;
    for (int v : w.values())
      if (v < 0) ++bars;
    CHECK(bars % 2 == 0);
  }
}

TEST_CASE("length equals BFS depth and inversion-set size") {
  for (Family f : {Family::B, Family::C, Family::D}) {
    const int n = 3;
    for (const auto& [w, depth] : test::bfs_group(f, n)) {
      CHECK(length(w) == depth);
      CHECK(static_cast<int>(inversion_set(w).size()) == depth);
    }
  }
}

TEST_CASE("root action") {
  const int n = 2;
  auto id = SignedPermutation::identity(Family::C, n);
  CHECK(act(id, eps(2, 1) - eps(2, 2)) == eps(2, 1) - eps(2, 2));

  SignedPermutation w(Family::C, n, {-2, 1});
  CHECK(act(w, eps(2, 1)) == -eps(2, 2));

  auto s0 = id.apply_generator(0);
  CHECK(act(s0, eps(2, 1, 2)) == -eps(2, 1, 2));
}

TEST_CASE("beta sequences") {
  CHECK(beta_sequence(Family::C, 2, std::vector<int>{}).empty());

  auto b = beta_sequence(Family::C, 2, std::vector<int>{0});
  REQUIRE(b.size() == 1);
  CHECK(b[0] == eps(2, 1, 2));

  SUBCASE("non-reduced words are rejected") {
    CHECK_THROWS_AS(beta_sequence(Family::C, 2, std::vector<int>{0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(beta_sequence(Family::B, 3, std::vector<int>{1, 2, 1, 2, 1, 2}),
                    std::invalid_argument);
    CHECK(is_reduced(Family::B, 3, std::vector<int>{1, 2, 1}));
  }

  SUBCASE("set of betas equals the inversion set, any reduced word") {
    std::mt19937 rng(11);
    for (Family f : {Family::B, Family::C, Family::D}) {
      for (const auto& [w, len] : test::bfs_group(f, 3)) {
        auto word = random_reduced_word(w, rng);
        CHECK(static_cast<int>(word.size()) == len);
        auto betas = beta_sequence(f, w.n(), word);
        std::set<Root> expect;
        for (const Root& r : inversion_set(w)) expect.insert(r);
        CHECK(std::set<Root>(betas.begin(), betas.end()) == expect);
      }
    }
  }
}

TEST_CASE("inversion sums are word independent") {
  CHECK(inversion_sum(SignedPermutation::identity(Family::B, 2)).is_zero());
  auto s0 = SignedPermutation::identity(Family::C, 2).apply_generator(0);
  CHECK(inversion_sum(s0) == eps(2, 1, 2));

  std::mt19937 rng(3);
  for (const auto& [w, len] : test::bfs_group(Family::C, 3)) {
    Root phi = inversion_sum(w);
    for (int trial = 0; trial < 3; ++trial) {
      auto word = random_reduced_word(w, rng);
      Root sum = Root::zero(w.size());
      for (const Root& b : beta_sequence(Family::C, 3, word)) sum = sum + b;
      CHECK(sum == phi);
    }
  }
}

TEST_CASE("covering root detection") {
  // s_beta * w' = w with a unique positive root beta.
  auto id = SignedPermutation::identity(Family::C, 2);
  auto s0 = id.apply_generator(0);
  auto beta = covering_root(s0, id);
  REQUIRE(beta.has_value());
  CHECK(*beta == eps(2, 1, 2));
  CHECK(!covering_root(id, s0).has_value());

  for (Family f : {Family::B, Family::C, Family::D}) {
    auto group = test::bfs_group(f, 2);
    for (const auto& [w, lw] : group)
      for (const auto& [w2, lw2] : group) {
        auto b = covering_root(w, w2);
        if (!b) continue;
        CHECK(lw == lw2 + 1);
        CHECK(reflection(f, 2, *b) * w2 == w);
        CHECK(b->is_positive());
        CHECK(b->is_root_of(f));
      }
  }
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(Family::B, 3).size() == 9);
  CHECK(positive_roots(Family::C, 3).size() == 9);
  CHECK(positive_roots(Family::D, 3).size() == 12);  // D_4
}
