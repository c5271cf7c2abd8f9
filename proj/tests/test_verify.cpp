#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "yamada/families.hpp"
#include "yamada/verify.hpp"

using namespace yamada;

namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

void expect_pass(const CheckReport& r) {
  EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
  EXPECT_TRUE(r.witness.empty());
}

}  // namespace

TEST(CheckEuler, Examples) {
  expect_pass(check_euler(multiedge(2)));
  expect_pass(check_euler(triangle()));
  expect_pass(check_euler(Multigraph()));
  EXPECT_EQ(check_euler(Multigraph()).name, "euler");
}

TEST(CheckPermutation, Examples) {
  const std::vector<std::size_t> swap{1, 0};
  expect_pass(check_permutation_invariance(multiedge(2), swap));
  const std::vector<std::size_t> rotate{1, 2, 0};
  expect_pass(check_permutation_invariance(triangle(), rotate));
  const std::vector<std::size_t> identity{0, 1, 2};
  expect_pass(check_permutation_invariance(triangle(), identity));
  const Multigraph mixed(3, {{0, 1}, {1, 1}, {0, 1}, {1, 2}});
  const std::vector<std::size_t> shuffle{3, 0, 2, 1};
  expect_pass(check_permutation_invariance(mixed, shuffle));
  const std::vector<std::size_t> bad{0, 0, 1};
  EXPECT_THROW(check_permutation_invariance(triangle(), bad), std::invalid_argument);
}

TEST(CheckRetraction, Examples) {
  expect_pass(check_retraction(multiedge(2)));
  expect_pass(check_retraction(path_tree(2)));
  expect_pass(check_retraction(edgeless(1)));
}

TEST(CheckDeletionContraction, Examples) {
  expect_pass(check_deletion_contraction(multiedge(2)));
  expect_pass(check_deletion_contraction(triangle()));
  expect_pass(check_deletion_contraction(path_tree(1)));
}

TEST(CheckProjection, Examples) {
  expect_pass(check_projection(multiedge(2), StateSubset(0b01, 2)));
  expect_pass(check_projection(multiedge(2), StateSubset::full(2)));
  expect_pass(check_projection(triangle(), StateSubset(0b011, 3)));
  EXPECT_THROW(check_projection(triangle(), StateSubset(0b01, 2)), std::invalid_argument);
}

TEST(Checks, AreDeterministic) {
  const Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
  const CheckReport a = check_retraction(g);
  const CheckReport b = check_retraction(g);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Corpus, Enumeration) {
  const auto tiny = small_multigraphs(1, 2);
  ASSERT_EQ(tiny.size(), 4u);
  EXPECT_EQ(tiny[0].graph, Multigraph());
  EXPECT_EQ(tiny[3].graph, bouquet(2));

  // Multisets of size <= 4 over the 6, 3 and 1 endpoint pairs of 3, 2 and 1 vertices.
  EXPECT_EQ(small_multigraphs(3, 4).size(), 1u + 5u + 35u + 210u);

  const auto corpus = curated_corpus();
  EXPECT_EQ(corpus.size(), 251u + 16u + 2u);
  for (const auto& ng : corpus) EXPECT_FALSE(ng.name.empty());
}
