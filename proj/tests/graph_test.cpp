#include <gtest/gtest.h>

#include <sstream>

#include "oracle.hpp"
#include "rqv/graph.hpp"
#include "rqv/graph6.hpp"

using rqv::Family;
using rqv::Graph;
using rqv::make_family;

TEST(Graph, DegreesOfSmallFamilies) {
  const Graph k4 = make_family(Family::complete, 4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(rqv::degree(k4, v), 3);
  EXPECT_EQ(rqv::degree(make_family(Family::star, 13), 0), 12);
  EXPECT_EQ(rqv::degree(make_family(Family::path, 3), 1), 2);
  EXPECT_THROW(rqv::degree(k4, 4), rqv::InputError);
  EXPECT_THROW(rqv::degree(k4, -1), rqv::InputError);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(rqv::is_connected(make_family(Family::complete, 4)));
  EXPECT_FALSE(rqv::is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(rqv::is_connected(Graph(1)));
  EXPECT_EQ(Graph::from_edges(4, {{0, 1}, {2, 3}}).components().size(), 2u);
}

TEST(Graph, DeleteVertexExamples) {
  EXPECT_EQ(rqv::delete_vertex(make_family(Family::star, 5), 3), make_family(Family::star, 4));
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(rqv::delete_vertex(make_family(Family::complete, 4), v), make_family(Family::complete, 3));
  }
  // C_5 minus vertex 4 leaves the path 0-1-2-3 in original labels.
  EXPECT_EQ(rqv::delete_vertex(make_family(Family::cycle, 5), 4), make_family(Family::path, 4));
  EXPECT_THROW(rqv::delete_vertex(Graph(1), 0), rqv::InputError);
}

TEST(Graph, FamilyExamples) {
  const Graph k4 = make_family(Family::complete, 4);
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.size(), 6);

  const auto p = make_family(Family::star_plus_edge, 5).degree_profile();
  EXPECT_EQ(p.degrees, (std::vector<int>{4, 2, 2, 1, 1}));
  EXPECT_EQ(p.m, 5);

  const auto c = make_family(Family::cycle, 6).degree_profile();
  EXPECT_EQ(c.delta_min, 2);
  EXPECT_EQ(c.delta_max, 2);
  EXPECT_EQ(c.m, 6);

  EXPECT_THROW(make_family(Family::star_plus_edge, 2), rqv::InputError);
  EXPECT_THROW(make_family("wheel", 5), rqv::InputError);
  EXPECT_EQ(make_family("star", 6), make_family(Family::star, 6));
}

TEST(Graph, FamiliesAreConnected) {
  for (Family f : {Family::complete, Family::star, Family::cycle, Family::path, Family::star_plus_edge}) {
    for (int n = rqv::family_min_order(f); n <= 64; ++n) {
      EXPECT_TRUE(make_family(f, n).is_connected()) << rqv::family_name(f) << " " << n;
    }
  }
}

TEST(Graph, RejectsLoopsRepeatsAndAsymmetry) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), rqv::InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), rqv::InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), rqv::InputError);
  EXPECT_THROW(Graph::from_rows(2, {0b10, 0b00}), rqv::InputError);
  EXPECT_THROW(Graph(0), rqv::InputError);
  EXPECT_THROW(Graph(65), rqv::InputError);
  EXPECT_NO_THROW(Graph(64));
}

TEST(GraphProperty, DeletionKeepsSurvivingAdjacency) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::labeled_graphs(n)) {
      const auto p = g.degree_profile();
      int twice = 0;
      for (int d : p.degrees) twice += d;
      ASSERT_EQ(twice, 2 * p.m);
      ASSERT_LE(p.delta_min, p.delta_max);
      for (int v = 0; v < n; ++v) {
        const Graph h = g.delete_vertex(v);
        ASSERT_EQ(h.size(), g.size() - g.degree(v));
        for (int a = 0; a < n - 1; ++a) {
          for (int b = 0; b < n - 1; ++b) {
            const int oa = a < v ? a : a + 1;
            const int ob = b < v ? b : b + 1;
            ASSERT_EQ(h.adjacent(a, b), g.adjacent(oa, ob));
          }
        }
      }
    }
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(rqv::write_graph6(make_family(Family::complete, 3)), "Bw");
  EXPECT_EQ(rqv::write_graph6(Graph(1)), "@");
  EXPECT_EQ(rqv::write_graph6(make_family(Family::complete, 6)), "E~~w");
  EXPECT_EQ(rqv::read_graph6("E^~w").size(), 14);
}

TEST(Graph6, RoundTrip) {
  const Graph s13 = make_family(Family::star, 13);
  EXPECT_EQ(rqv::read_graph6(rqv::write_graph6(s13)), s13);
  for (int n : {1, 2, 30, 62, 63, 64}) {
    for (Family f : {Family::complete, Family::path}) {
      const Graph g = make_family(f, n);
      EXPECT_EQ(rqv::read_graph6(rqv::write_graph6(g)), g) << n;
    }
  }
  for (const Graph& g : oracle::labeled_graphs(5)) EXPECT_EQ(rqv::read_graph6(rqv::write_graph6(g)), g);
}

TEST(Graph6, LongFormForLargeOrders) {
  const std::string s = rqv::write_graph6(make_family(Family::path, 63));
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(rqv::read_graph6(s).order(), 63);
}

TEST(Graph6, HeaderAndLineEndingsTolerated) {
  EXPECT_EQ(rqv::read_graph6(">>graph6<<Bw\r\n"), make_family(Family::complete, 3));
  std::istringstream in(">>graph6<<\nBw\n\nC~\n");
  const auto graphs = rqv::read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[1], make_family(Family::complete, 4));
}

TEST(Graph6, MalformedInputReportsOffset) {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      rqv::read_graph6(s);
    } catch (const rqv::ParseError& e) {
      return e.offset();
    }
    ADD_FAILURE() << "no parse error for '" << s << "'";
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("B"), 1u);      // truncated
  EXPECT_EQ(offset_of("Bx"), 1u);     // padding bits set
  EXPECT_EQ(offset_of("B w"), 1u);    // byte outside 63..126
  EXPECT_EQ(offset_of("Bww"), 2u);    // trailing data
  EXPECT_EQ(offset_of("?"), 0u);      // n = 0
  EXPECT_EQ(offset_of("~??}"), 1u);   // long form for n = 62
  EXPECT_EQ(offset_of("~??~"), 4u);   // n = 63 with no adjacency bytes
}

TEST(Graph6, StreamErrorsCarryLineNumbers) {
  std::istringstream in("Bw\nBx\n");
  try {
    rqv::read_graph6_stream(in);
    FAIL();
  } catch (const rqv::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    EXPECT_EQ(e.offset(), 1u);
  }
}
