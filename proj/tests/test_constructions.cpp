#include <stdexcept>

#include "booksat/canonical.hpp"
#include "booksat/constructions.hpp"
#include "booksat/named.hpp"
#include "booksat/pattern.hpp"
#include "booksat/saturation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace booksat;
using namespace booksat::testing;

TEST_CASE("book/srg equivalence on named instances") {
  auto k33 = book_srg_equivalence(complete_bipartite(3, 3), 3);
  CHECK(k33.lhs);
  CHECK(k33.rhs);
  CHECK(k33.agree);
  CHECK(k33.params == SrgParams{6, 3, 0, 3});

  auto pet1 = book_srg_equivalence(petersen(), 1);
  CHECK(pet1.lhs);
  CHECK(pet1.rhs);
  CHECK(pet1.agree);

  auto folded = book_srg_equivalence(folded_5cube(), 2);
  CHECK(folded.lhs);
  CHECK(folded.rhs);
  CHECK(folded.agree);

  auto pet2 = book_srg_equivalence(petersen(), 2);
  CHECK(!pet2.lhs);
  CHECK(!pet2.rhs);
  CHECK(pet2.agree);

  auto pw = book_srg_equivalence(paw(), 2);
  CHECK(pw.unique_saturated);
  CHECK(!pw.lhs);  // girth 3
  CHECK(pw.agree);
}

TEST_CASE("complete multipartite family") {
  auto ex = multipartite_example(3, 2);
  CHECK(ex.p_free == 3);
  CHECK(ex.p_sat == 4);
  CHECK(!contains_book(ex.graph, 3));
  CHECK(verdict(ex.graph, Pattern{book_graph(4)}).unique);
  CHECK(srg_params(ex.graph) == SrgParams{6, 4, 2, 4});

  auto k33 = multipartite_example(2, 3);
  CHECK(k33.p_sat == 3);
  CHECK(canonical_form(k33.graph) == canonical_form(complete_bipartite(3, 3)));
  CHECK(verdict(k33.graph, Pattern{book_graph(3)}).unique);

  CHECK_THROWS_AS(multipartite_example(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_example(2, 80), std::invalid_argument);
}

TEST_CASE("multipartite claims verified for a small family sweep") {
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      auto report = verify_claim(MultipartiteSpec{r, k});
      CHECK(report.all_pass);
    }
}

TEST_CASE("clique deletion: the 12-vertex example") {
  Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  std::vector<Graph> removed = {two_k3, two_k3};
  auto built = clique_deletion(2, removed);
  CHECK(built.graph.n() == 12);
  CHECK(built.p == 9);
  for (int v = 0; v < 12; ++v) CHECK(built.graph.degree(v) == 9);
  CHECK(verdict(built.graph, Pattern{book_graph(9)}).unique);
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v)
      if (!built.graph.adjacent(u, v))
        CHECK(common_neighbors(built.graph, u, v).count() == 9);

  auto report = verify_claim(CliqueDeletionSpec{2, removed});
  CHECK(report.all_pass);
}

TEST_CASE("clique deletion preconditions") {
  Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  // lambda < mu: C4 is (4, 2, 0, 2)
  std::vector<Graph> c4s = {cycle_graph(4), cycle_graph(4)};
  CHECK_THROWS_AS(clique_deletion(2, c4s), ConstructionError);
  // pentagon is (5, 2, 0, 1): degree matches r = 2 but lambda < mu
  std::vector<Graph> c5s = {pentagon(), pentagon()};
  CHECK_THROWS_AS(clique_deletion(2, c5s), ConstructionError);
  // degree must equal the copy count
  std::vector<Graph> three = {two_k3, two_k3, two_k3};
  CHECK_THROWS_AS(clique_deletion(3, three), ConstructionError);
  // not strongly regular at all
  std::vector<Graph> paws = {paw(), paw()};
  CHECK_THROWS_AS(clique_deletion(2, paws), ConstructionError);
  // wrong list length
  std::vector<Graph> one = {two_k3};
  CHECK_THROWS_AS(clique_deletion(2, one), std::invalid_argument);
}

TEST_CASE("clique deletion: three copies of 2K4") {
  Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
  REQUIRE(srg_params(two_k4) == SrgParams{8, 3, 2, 0});
  std::vector<Graph> removed = {two_k4, two_k4, two_k4};
  auto built = clique_deletion(3, removed);
  CHECK(built.graph.n() == 24);
  CHECK(built.p == 24 - 6 + 2);
  auto report = verify_claim(CliqueDeletionSpec{3, removed});
  CHECK(report.all_pass);
}

TEST_CASE("cone construction") {
  Graph c = cone_construction(complete_graph(2), 2);
  CHECK(canonical_form(c) == canonical_form(paw()));

  Graph k4_pendant = cone_construction(complete_graph(3), 3);
  CHECK(k4_pendant.n() == 5);
  CHECK(verdict(k4_pendant, Pattern{book_graph(3)}).unique);

  CHECK(verdict(cone_construction(complete_graph(4), 4), Pattern{book_graph(4)}).unique);

  // base must be (p-1)-regular
  CHECK_THROWS_AS(cone_construction(path_graph(3), 2), ConstructionError);
  // base must be uniquely B_{p-1}-saturated: C5 is 2-regular but non-adjacent
  // vertices have a single common neighbor, so nothing is created
  CHECK_THROWS_AS(cone_construction(cycle_graph(5), 3), ConstructionError);
  CHECK_THROWS_AS(cone_construction(complete_graph(2), 1), std::invalid_argument);
}

TEST_CASE("cone over a base with internal non-edges is saturated, not uniquely") {
  // Adding a diagonal of the C4 base creates three books, not one: the
  // base diamond extended with the universal vertex, plus one book rooted
  // on the universal vertex and either diagonal endpoint (its pages are the
  // endpoint's base neighbors together with the other endpoint). Only
  // complete bases avoid the extra universal-rootlet copies.
  Graph g = cone_construction(cycle_graph(4), 3);
  auto v = verdict(g, Pattern{book_graph(3)});
  CHECK(v.h_free);
  CHECK(v.saturated);
  CHECK(!v.unique);
  for (const auto& e : v.per_nonedge) {
    bool diagonal = e.u < 4 && e.v < 4;
    CHECK(e.copies == (diagonal ? 3 : 1));
    if (diagonal) {
      auto split = book_new_copies_split(g, e.u, e.v, 3);
      CHECK(split.as_rootlet == 1);
      CHECK(split.as_page == 2);
    }
  }
}

TEST_CASE("verify_claim reports") {
  auto cone_report = verify_claim(ConeSpec{complete_graph(2), 2});
  CHECK(cone_report.all_pass);
  CHECK(cone_report.family == "cone");
  CHECK(cone_report.p == 2);
  CHECK(canonical_form(cone_report.graph) == canonical_form(paw()));

  auto srg_report = verify_claim(SrgGirth4Spec{folded_5cube(), 2});
  CHECK(srg_report.all_pass);

  auto pet_report = verify_claim(SrgGirth4Spec{petersen(), 1});
  CHECK(pet_report.all_pass);

  // agreement also means both-false: the petersen graph is not B_2 material
  auto pet2_report = verify_claim(SrgGirth4Spec{petersen(), 2});
  CHECK(pet2_report.all_pass);

  auto bad = verify_claim(SrgGirth4Spec{paw(), 2});
  CHECK(bad.all_pass);  // lhs and rhs are both false, which agrees
}

TEST_CASE("verified outputs are K_{2,p+1}-free") {
  std::vector<ClaimReport> reports;
  reports.push_back(verify_claim(MultipartiteSpec{2, 3}));
  reports.push_back(verify_claim(MultipartiteSpec{3, 2}));
  reports.push_back(verify_claim(ConeSpec{complete_graph(3), 3}));
  reports.push_back(verify_claim(ConeSpec{complete_graph(4), 4}));
  for (const auto& r : reports) {
    CHECK(r.all_pass);
    CHECK(!contains_k2q(r.graph, r.p + 1));
  }
}

TEST_CASE("rootlet-only creation on girth-4 and multipartite instances") {
  struct Case {
    Graph g;
    int p;
  };
  std::vector<Case> cases = {{folded_5cube(), 2},
                             {cycle_graph(4), 2},
                             {complete_bipartite(3, 3), 3},
                             {multipartite_example(3, 2).graph, 4}};
  for (const auto& [g, p] : cases) {
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        if (g.adjacent(u, v)) continue;
        CHECK(common_neighbors(g, u, v).count() == p);
        auto split = book_new_copies_split(g, u, v, p);
        CHECK(split.as_rootlet == 1);
        CHECK(split.as_page == 0);
      }
  }
}
