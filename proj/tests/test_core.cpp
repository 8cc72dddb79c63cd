#include <random>
#include <set>

#include "booksat/canonical.hpp"
#include "booksat/graph.hpp"
#include "booksat/graph6.hpp"
#include "booksat/named.hpp"
#include "booksat/srg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace booksat;
using namespace booksat::testing;

TEST_CASE("bitset rows") {
  CHECK(Bits128::below(0).empty());
  CHECK(Bits128::below(128).count() == 128);
  CHECK(Bits128::below(64).count() == 64);
  for (int i : {0, 5, 63, 64, 100, 127}) {
    CHECK(Bits128::single(i).lowest() == i);
    CHECK(Bits128::below(i + 1).test(i));
    CHECK(!Bits128::below(i).test(i));
  }
  Bits128 a = Bits128::single(3) | Bits128::single(70);
  std::vector<int> seen;
  a.for_each([&](int v) { seen.push_back(v); });
  CHECK(seen == std::vector<int>{3, 70});
  CHECK(a.minus(Bits128::single(3)) == Bits128::single(70));
  CHECK(intersection_count(Bits128::below(80), Bits128::below(90)) == 80);
  CHECK(a.is_subset_of(Bits128::below(128)));
  CHECK(!Bits128::below(5).is_subset_of(a));
}

TEST_CASE("from_edges basics") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3 == complete_graph(3));

  Graph empty4 = Graph::from_edges(4, {});
  CHECK(empty4.n() == 4);
  CHECK(empty4.edge_count() == 0);

  Graph p = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  CHECK(p == paw());

  // duplicates collapse
  CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(129, {}), std::invalid_argument);
}

TEST_CASE("degrees, neighbors, common neighbors") {
  Graph s5 = star_graph(5);
  CHECK(s5.degree(0) == 4);
  CHECK(s5.degree(1) == 1);

  Graph c4 = cycle_graph(4);
  CHECK(common_neighbors(c4, 0, 2).count() == 2);

  Graph pet = petersen();
  for (auto [u, v] : pet.edges()) CHECK(common_neighbors(pet, u, v).count() == 0);

  CHECK_THROWS_AS(common_neighbors(c4, 0, 9), std::out_of_range);
}

TEST_CASE("distance, diameter, girth, connectivity") {
  Graph pet = petersen();
  CHECK(diameter(pet) == 2);
  CHECK(girth(pet) == 5);
  CHECK(is_connected(pet));

  CHECK(girth(folded_5cube()) == 4);

  Graph tree = star_graph(6);
  CHECK(girth(tree).is_infinite());

  Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(!is_connected(two_k3));
  CHECK(diameter(two_k3).is_infinite());
  CHECK(distance(two_k3, 0, 4).is_infinite());
  CHECK(girth(two_k3) == 3);

  CHECK(diameter(Graph::from_edges(0, {})) == 0);
  CHECK(diameter(complete_graph(1)) == 0);

  Graph p5 = path_graph(5);
  CHECK(distance(p5, 0, 4) == 4);
  CHECK(diameter(p5) == 4);
}

TEST_CASE("girth matches the cycle-enumeration oracle at n <= 8") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 7;
    Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 8));
    CHECK(girth(g) == girth_oracle(g));
  }
}

TEST_CASE("distance is a metric; diameter is the max distance") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 8, 0.4);
    int best = 0;
    bool all_finite = true;
    for (int u = 0; u < g.n(); ++u) {
      CHECK(distance(g, u, u) == 0);
      for (int v = 0; v < g.n(); ++v) {
        auto duv = distance(g, u, v);
        CHECK(duv == distance(g, v, u));
        if (!duv.is_finite()) {
          all_finite = false;
          continue;
        }
        best = std::max(best, duv.finite_value());
        for (int w = 0; w < g.n(); ++w) {
          auto duw = distance(g, u, w);
          auto dwv = distance(g, w, v);
          if (duw.is_finite() && dwv.is_finite())
            CHECK(duv.finite_value() <= duw.finite_value() + dwv.finite_value());
        }
      }
    }
    if (all_finite) CHECK(diameter(g) == best);
    else CHECK(diameter(g).is_infinite());
  }
}

TEST_CASE("add_edge") {
  Graph c4 = cycle_graph(4);
  Graph diamond = add_edge(c4, 0, 2);
  CHECK(canonical_form(diamond) == canonical_form(book_graph(2)));
  CHECK(c4.edge_count() == 4);  // input untouched
  CHECK(diamond.edge_count() == 5);

  Graph p3 = path_graph(3);
  CHECK(canonical_form(add_edge(p3, 0, 2)) == canonical_form(complete_graph(3)));

  CHECK_THROWS_AS(add_edge(c4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(add_edge(c4, 2, 2), std::invalid_argument);
}

TEST_CASE("join and disjoint union") {
  CHECK(canonical_form(join(complete_graph(1), complete_graph(2))) ==
        canonical_form(complete_graph(3)));
  for (int p = 1; p <= 5; ++p)
    CHECK(canonical_form(join(complete_graph(2), Graph::from_edges(p, {}))) ==
          canonical_form(book_graph(p)));

  Graph bk = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(bk.n() == 6);
  CHECK(bk.edge_count() == 6);
  CHECK(!bk.adjacent(0, 3));

  CHECK_THROWS_AS(join(complete_graph(64), complete_graph(65)), std::invalid_argument);
}

TEST_CASE("graph6 hand-checked values") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6("?").n() == 0);
  CHECK(to_graph6(Graph::from_edges(0, {})) == "?");
  CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("~"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("~?"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);   // too long
  CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);    // too short
  CHECK_THROWS_AS(parse_graph6("D?@"), Graph6Error);   // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6("C\x1b"), Graph6Error); // bad character
  // n = 129 exceeds the cap even with a well-formed body
  std::string big = "~?B?";
  big.append(129 * 128 / 2 / 6 + 1, '?');
  CHECK_THROWS_AS(parse_graph6(big), Graph6Error);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 60);
    Graph g = random_graph(rng, n, 0.3);
    Graph back = parse_graph6(to_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph6 round trip on every named graph") {
  for (const auto& [name, g] : all_named_graphs()) {
    CAPTURE(name);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("named graph shapes") {
  CHECK(folded_5cube().n() == 16);
  for (int v = 0; v < 16; ++v) CHECK(folded_5cube().degree(v) == 5);

  Graph b2 = book_graph(2);
  CHECK(b2.n() == 4);
  CHECK(b2.edge_count() == 5);

  CHECK(gewirtz().n() == 56);
  for (int v = 0; v < 56; ++v) CHECK(gewirtz().degree(v) == 10);

  CHECK(house().n() == 5);
  CHECK(house().edge_count() == 6);
  CHECK(bowknot().n() == 5);
  CHECK(bowknot().edge_count() == 6);
  CHECK(!iso_oracle(house(), bowknot()));

  Graph ds = double_star(2, 3);
  CHECK(ds.n() == 7);
  CHECK(ds.degree(0) == 3);
  CHECK(ds.degree(1) == 4);

  CHECK_THROWS_AS(named_graph("no_such_graph", {}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(book_graph(0), std::invalid_argument);
}

TEST_CASE("named spec parsing") {
  CHECK(parse_named_spec("k5") == complete_graph(5));
  CHECK(parse_named_spec("c4") == cycle_graph(4));
  CHECK(parse_named_spec("book:3") == book_graph(3));
  CHECK(parse_named_spec("doublestar:2,3") == double_star(2, 3));
  CHECK(parse_named_spec("k23") == k23());  // the fixed K_{2,3}, not K_23
  CHECK(parse_named_spec("multipartite:3,2").n() == 6);
  CHECK(parse_named_spec("cliques:2,3") ==
        disjoint_union(complete_graph(3), complete_graph(3)));
  CHECK(parse_named_spec("paw") == paw());
  CHECK_THROWS_AS(parse_named_spec("book:x"), std::invalid_argument);
}

TEST_CASE("large named graphs verify their parameters") {
  CHECK(srg_params(pentagon()) == SrgParams{5, 2, 0, 1});
  CHECK(srg_params(petersen()) == SrgParams{10, 3, 0, 1});
  CHECK(srg_params(hoffman_singleton()) == SrgParams{50, 7, 0, 1});
  CHECK(srg_params(folded_5cube()) == SrgParams{16, 5, 0, 2});
  CHECK(srg_params(gewirtz()) == SrgParams{56, 10, 0, 2});
  CHECK(srg_params(m22_graph()) == SrgParams{77, 16, 0, 4});
  CHECK(srg_params(higman_sims()) == SrgParams{100, 22, 0, 6});
}

TEST_CASE("canonical form identifies relabelings") {
  Graph c4a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Graph c4b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_form(c4a) == canonical_form(c4b));
  CHECK(canonical_form(paw()) != canonical_form(cycle_graph(4)));
}

TEST_CASE("canonical forms of the 11 four-vertex classes are distinct") {
  std::set<std::string> forms;
  for (const Graph& g : all_labeled_graphs(4)) forms.insert(canonical_form(g).g6);
  CHECK(forms.size() == 11);
  // cross-check class count with the backtracking isomorphism oracle
  std::vector<Graph> reps;
  for (const Graph& g : all_labeled_graphs(4)) {
    bool found = false;
    for (const Graph& r : reps)
      if (iso_oracle(g, r)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(g);
  }
  CHECK(reps.size() == 11);
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + trial % 9;
    Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
    Graph relabeled = apply_permutation(g, random_permutation(rng, n));
    CHECK(canonical_form(g) == canonical_form(relabeled));
  }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
  std::mt19937 rng(29);
  int tested = 0;
  while (tested < 200) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph a = random_graph(rng, n, 0.4);
    Graph b = random_graph(rng, n, 0.4);
    if (iso_oracle(a, b)) continue;
    CHECK(canonical_form(a) != canonical_form(b));
    ++tested;
  }
}

TEST_CASE("canonical relabel yields an isomorphic graph") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 7, 0.5);
    CHECK(iso_oracle(g, canonical_relabel(g)));
  }
}

TEST_CASE("canonical form at n = 10") {
  std::mt19937 rng(37);
  Graph pet = petersen();
  Graph relabeled = apply_permutation(pet, random_permutation(rng, 10));
  CHECK(canonical_form(pet) == canonical_form(relabeled));
  CHECK(canonical_form(pet) != canonical_form(cycle_graph(10)));
  // same degree sequence, different graph: two 5-cycles vs one 10-cycle
  CHECK(canonical_form(disjoint_union(cycle_graph(5), cycle_graph(5))) !=
        canonical_form(cycle_graph(10)));
}
