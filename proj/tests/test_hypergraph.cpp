#include <gtest/gtest.h>

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tds/error.hpp"
#include "tds/families.hpp"
#include "tds/hypergraph.hpp"

using namespace tds;

namespace {

Hypergraph sets(int ground, std::vector<std::vector<int>> edges) {
  std::vector<VertexSet> e;
  for (const auto& edge : edges) e.push_back(VertexSet::of(edge));
  return Hypergraph(ground, e);
}

}  // namespace

TEST(Hypergraph, Construction) {
  EXPECT_THROW(sets(2, {{0}, {}}), ParameterError);
  EXPECT_THROW(sets(3, {{0, 1}}), DomainError);
  EXPECT_THROW(sets(2, {{0, 2}}), ParameterError);
  const auto h = sets(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(h.duplicate_edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(h.star(1).size(), 2);
  EXPECT_EQ(h.edge_tag(1), "E1");
}

TEST(Hypergraph, SmallValues) {
  const auto single = sets(3, {{0, 1, 2}});
  EXPECT_EQ(grundy_covering_number(single).value, 1);
  EXPECT_EQ(grundy_transversal_number(single).value, 1);
  const auto three = sets(2, {{0}, {1}, {0, 1}});
  EXPECT_EQ(grundy_covering_number(three).value, 2);
  EXPECT_EQ(grundy_transversal_number(three).value, 2);
  EXPECT_EQ(edge_cover_number(three).value, 1);
  EXPECT_EQ(grundy_transversal_number(sets(2, {{0, 1}})).value, 1);
}

TEST(Hypergraph, OpenNeighborhoods) {
  const auto c4 = open_neighborhood_hypergraph(cycle_graph(4));
  EXPECT_EQ(c4.edge_count(), 4);
  EXPECT_EQ(c4.edge(0).to_vector(), (std::vector<int>{1, 3}));
  EXPECT_EQ(c4.duplicate_edges().size(), 2u);
  EXPECT_EQ(grundy_covering_number(c4).value, 2);
  EXPECT_EQ(grundy_covering_number(open_neighborhood_hypergraph(path_graph(5))).value, 4);
  EXPECT_EQ(grundy_covering_number(open_neighborhood_hypergraph(path_graph(3))).value, 2);
  EXPECT_EQ(grundy_covering_number(open_neighborhood_hypergraph(path_graph(2))).value, 2);
  EXPECT_THROW(open_neighborhood_hypergraph(Graph(2, std::vector<Edge>{})), DomainError);
}

TEST(Hypergraph, Reversals) {
  const auto three = sets(2, {{0}, {1}, {0, 1}});
  const auto t = grundy_transversal_number(three);
  const auto c = transversal_to_cover(three, t.witness);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(check_edge_sequence(three, c).legal);
  EXPECT_EQ(transversal_to_cover(sets(1, {{0}}), {0}), (EdgeSequence{0}));
  EXPECT_THROW(cover_to_transversal(three, {2, 0}), PreconditionError);
  EXPECT_THROW(transversal_to_cover(three, {0}), PreconditionError);
  EXPECT_THROW(check_edge_sequence(three, {0, 0}), SequenceError);
}

TEST(Hypergraph, Incidence) {
  const auto single = sets(2, {{0, 1}});
  const Graph g = incidence_graph(single);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_TRUE(is_edge_side(single, 2));
  const auto three = sets(2, {{0}, {1}, {0, 1}});
  const Graph g3 = incidence_graph(three);
  EXPECT_EQ(g3.degree(0), 2);
  EXPECT_EQ(g3.degree(4), 2);
  EXPECT_TRUE(bipartition(g3).has_value());
  const auto check = verify_incidence_theorem(three);
  EXPECT_EQ(check.rho_gr, 2);
  EXPECT_EQ(check.gamma_grt_of_incidence, 4);
  EXPECT_TRUE(check.equal);
  EXPECT_EQ(verify_incidence_theorem(single).gamma_grt_of_incidence, 2);
}

TEST(Hypergraph, RandomProperties) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 150; ++trial) {
    const auto h = gen::hypergraph(6, 6, rng);
    const auto cover = grundy_covering_number(h);
    const auto trans = grundy_transversal_number(h);
    EXPECT_EQ(cover.value, oracle::grundy_covering(h));
    EXPECT_EQ(trans.value, oracle::grundy_transversal(h));
    EXPECT_EQ(cover.value, trans.value);
    EXPECT_EQ(edge_cover_number(h).value, oracle::edge_cover(h));

    const auto c = transversal_to_cover(h, trans.witness);
    EXPECT_EQ(c.size(), trans.witness.size());
    const auto cl = check_edge_sequence(h, c);
    EXPECT_TRUE(cl.legal && cl.complete);
    const auto t = cover_to_transversal(h, cover.witness);
    EXPECT_EQ(t.size(), cover.witness.size());
    const auto tl = check_transversal_sequence(h, t);
    EXPECT_TRUE(tl.legal && tl.complete);

    EXPECT_TRUE(verify_incidence_theorem(h).equal);

    const auto w = covering_interpolation_witnesses(h);
    const auto lengths = oracle::covering_sequence_lengths(h);
    EXPECT_EQ(w.size(), lengths.size());
  }
}

TEST(Hypergraph, TextFormat) {
  const auto h = parse_hypergraph("# comment\n3 2\n0 1\n1 2 # trailing\n");
  EXPECT_EQ(h.ground_size(), 3);
  EXPECT_EQ(h.edge(1).to_vector(), (std::vector<int>{1, 2}));
  EXPECT_EQ(to_hypergraph_text(h), "3 2\n0 1\n1 2\n");
  auto line_of = [](const std::string& text) {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("2 1\n0 5\n"), 2);
  EXPECT_EQ(line_of("2 1\n0 x\n"), 2);
  EXPECT_EQ(line_of("2\n"), 1);
  EXPECT_EQ(line_of("2 1\n0 1\n1\n"), 3);
  EXPECT_EQ(line_of("2 2\n0 1\n"), 2);
}
