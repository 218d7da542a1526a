#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "rqv/canonical.hpp"
#include "rqv/enumeration.hpp"
#include "rqv/graph6.hpp"
#include "rqv/sampling.hpp"

using rqv::Graph;

namespace {

std::set<std::uint64_t> brute_connected_classes(int n) {
  std::set<std::uint64_t> classes;
  for (const Graph& g : oracle::labeled_graphs(n)) {
    if (g.is_connected()) classes.insert(oracle::brute_canonical(g));
  }
  return classes;
}

}  // namespace

TEST(EnumerationOracle, CountsMatchBruteForceClasses) {
  for (int n = 1; n <= 5; ++n) {
    const auto classes = brute_connected_classes(n);
    const auto graphs = rqv::all_connected(n);
    EXPECT_EQ(graphs.size(), classes.size()) << "n = " << n;
    std::set<std::uint64_t> seen;
    for (const Graph& g : graphs) seen.insert(oracle::brute_canonical(g));
    // Every labeled connected graph is isomorphic to some representative.
    EXPECT_EQ(seen, classes) << "n = " << n;
  }
  EXPECT_EQ(rqv::all_connected(3).size(), 2u);
  EXPECT_EQ(rqv::all_connected(4).size(), 6u);
  EXPECT_EQ(rqv::all_connected(5).size(), 21u);
}

TEST(EnumerationOracle, RepresentativesPairwiseNonIsomorphic) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    std::size_t count = 0;
    for (const Graph& g : rqv::enumerate_connected(n)) {
      ASSERT_TRUE(g.is_connected());
      codes.insert(oracle::brute_canonical(g));
      ++count;
    }
    EXPECT_EQ(codes.size(), count) << "n = " << n;
  }
}

TEST(Enumeration, KnownCountsUpToEight) {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(rqv::all_connected(n).size(), expected[n]) << n;
}

TEST(Enumeration, FilterEqualsPostFilter) {
  for (int n = 1; n <= 7; ++n) {
    const rqv::GraphFilter filter{rqv::IntRange{n, n + 3}, rqv::IntRange{2, n - 1}, std::nullopt};
    std::vector<Graph> post;
    for (const Graph& g : rqv::enumerate_connected(n)) {
      if (filter.accepts(g)) post.push_back(g);
    }
    EXPECT_EQ(rqv::all_connected(n, filter), post) << n;
  }
}

TEST(Enumeration, DeterministicOrder) {
  EXPECT_EQ(rqv::all_connected(6), rqv::all_connected(6));
}

TEST(Enumeration, ResourceGuard) {
  EXPECT_THROW(rqv::enumerate_connected(11), rqv::InputError);
  EXPECT_THROW(rqv::enumerate_connected(0), rqv::InputError);
  try {
    rqv::enumerate_connected(11);
  } catch (const rqv::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("sampling"), std::string::npos);
  }
}

TEST(Canonical, AgreesWithBruteForceOnLabeledGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const auto graphs = oracle::labeled_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); i += 7) {
      for (std::size_t j = i; j < graphs.size(); j += 13) {
        const bool brute = oracle::brute_canonical(graphs[i]) == oracle::brute_canonical(graphs[j]);
        ASSERT_EQ(rqv::isomorphic(graphs[i], graphs[j]), brute);
      }
    }
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  const Graph g = rqv::make_family(rqv::Family::star_plus_edge, 9);
  std::vector<int> order = {8, 3, 5, 0, 1, 7, 2, 6, 4};
  EXPECT_EQ(rqv::canonical_form(g), rqv::canonical_form(g.permuted(order)));
  EXPECT_FALSE(rqv::isomorphic(g, rqv::make_family(rqv::Family::star, 9)));
}

TEST(Sampling, TreesWhenMIsNMinusOne) {
  rqv::SamplerConfig cfg{5, rqv::IntRange{4, 4}, std::nullopt, 3, 200};
  for (const Graph& g : rqv::sample_connected(cfg)) {
    EXPECT_TRUE(g.is_connected());
    EXPECT_EQ(g.size(), 4);
  }
}

TEST(Sampling, CompleteWhenMIsMaximal) {
  rqv::SamplerConfig cfg{13, rqv::IntRange{78, 78}, std::nullopt, 11, 5};
  for (const Graph& g : rqv::sample_connected(cfg)) EXPECT_TRUE(rqv::is_complete(g));
}

TEST(Sampling, UnicyclicWhenMEqualsN) {
  rqv::SamplerConfig cfg{6, rqv::IntRange{6, 6}, std::nullopt, 1, 10};
  std::size_t count = 0;
  for (const Graph& g : rqv::sample_connected(cfg)) {
    EXPECT_TRUE(g.is_connected());
    EXPECT_EQ(g.size(), 6);
    ++count;
  }
  EXPECT_EQ(count, 10u);
}

TEST(Sampling, SameSeedSameBytes) {
  rqv::SamplerConfig cfg{12, rqv::IntRange{11, 40}, std::nullopt, 42, 300};
  auto dump = [&](const rqv::SamplerConfig& c) {
    std::string out;
    for (const Graph& g : rqv::sample_connected(c)) out += rqv::write_graph6(g) + "\n";
    return out;
  };
  EXPECT_EQ(dump(cfg), dump(cfg));
  rqv::SamplerConfig other = cfg;
  other.seed = 43;
  EXPECT_NE(dump(cfg), dump(other));
}

TEST(Sampling, EdgeProbabilityMode) {
  rqv::SamplerConfig cfg{8, std::nullopt, 0.5, 9, 50};
  for (const Graph& g : rqv::sample_connected(cfg)) EXPECT_TRUE(g.is_connected());
}

TEST(Sampling, RejectsInfeasibleConfigs) {
  EXPECT_THROW(rqv::sample_connected({5, rqv::IntRange{3, 3}, std::nullopt, 0, 1}), rqv::InputError);
  EXPECT_THROW(rqv::sample_connected({5, rqv::IntRange{4, 11}, std::nullopt, 0, 1}), rqv::InputError);
  EXPECT_THROW(rqv::sample_connected({1, rqv::IntRange{0, 0}, std::nullopt, 0, 1}), rqv::InputError);
  EXPECT_THROW(rqv::sample_connected({5, std::nullopt, std::nullopt, 0, 1}), rqv::InputError);
}
