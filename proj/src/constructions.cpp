#include "booksat/constructions.hpp"

#include "booksat/named.hpp"
#include "booksat/pattern.hpp"
#include "booksat/saturation.hpp"

namespace booksat {

BookSrgReport book_srg_equivalence(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("book page count must be >= 1");
  BookSrgReport report;
  report.p = p;
  report.unique_saturated = nontrivial_uniquely_saturated(g, Pattern(book_graph(p)));
  report.girth_value = girth(g);
  report.lhs = report.unique_saturated && report.girth_value.is_finite() &&
               report.girth_value.finite_value() >= 4;
  report.params = srg_params(g);
  report.rhs = report.params && report.params->lambda == 0 && report.params->mu == p;
  report.agree = report.lhs == report.rhs;
  return report;
}

MultipartiteExample multipartite_example(int r, int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("multipartite family needs r >= 2, k >= 1");
  if (r * k > Graph::max_vertices)
    throw std::invalid_argument("multipartite family exceeds the 128-vertex cap");
  std::vector<int> parts(r, k);
  return MultipartiteExample{
      .graph = complete_multipartite(parts),
      .r = r,
      .k = k,
      .p_free = (r - 2) * k + 1,
      .p_sat = (r - 1) * k,
  };
}

CliqueDeletionResult clique_deletion(int r, std::span<const Graph> removed) {
  if (r < 1) throw std::invalid_argument("clique deletion needs r >= 1");
  if (static_cast<int>(removed.size()) != r)
    throw std::invalid_argument("clique deletion needs exactly r removal graphs");

  std::optional<SrgParams> params;
  for (const Graph& h : removed) {
    auto p = srg_params(h);
    if (!p) throw ConstructionError("removal graph is not strongly regular");
    if (params && !(*p == *params))
      throw ConstructionError("removal graphs must share one parameter set");
    params = p;
  }
  if (params->k != r)
    throw ConstructionError("removal graphs must be " + std::to_string(r) +
                            "-regular to match the copy count, got degree " +
                            std::to_string(params->k));
  if (params->lambda < params->mu)
    throw ConstructionError("clique deletion needs lambda >= mu in the removal graphs");
  int m = params->n;
  if (r * m > Graph::max_vertices)
    throw std::invalid_argument("clique deletion exceeds the 128-vertex cap");

  GraphBuilder b(r * m);
  for (int u = 0; u < r * m; ++u)
    for (int v = u + 1; v < r * m; ++v) {
      int cu = u / m, cv = v / m;
      if (cu == cv && removed[cu].adjacent(u % m, v % m)) continue;
      b.add_edge(u, v);
    }
  return CliqueDeletionResult{
      .graph = std::move(b).freeze(),
      .p = r * m - 2 * r + params->lambda,
      .removed_params = *params,
  };
}

Graph cone_construction(const Graph& base, int p) {
  if (p < 2) throw std::invalid_argument("cone construction needs p >= 2");
  for (int v = 0; v < base.n(); ++v)
    if (base.degree(v) != p - 1)
      throw ConstructionError("base graph must be " + std::to_string(p - 1) + "-regular");
  if (!verdict(base, Pattern(book_graph(p - 1))).unique)
    throw ConstructionError("base graph is not uniquely B_" + std::to_string(p - 1) +
                            "-saturated");

  int n0 = base.n();
  if (n0 + 2 > Graph::max_vertices)
    throw std::invalid_argument("cone construction exceeds the 128-vertex cap");
  GraphBuilder b(n0 + 2);
  for (auto [u, v] : base.edges()) b.add_edge(u, v);
  for (int v = 0; v < n0; ++v) b.add_edge(v, n0);  // universal vertex
  b.add_edge(n0, n0 + 1);                          // pendant
  return std::move(b).freeze();
}

namespace {

std::string nonedge_str(int u, int v) {
  return "non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void add_check(ClaimReport& report, std::string name, bool pass, std::string witness = {}) {
  report.all_pass = report.all_pass && pass;
  report.checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
}

// Checks shared by every family once the member graph and its page count
// are known: the saturation claim itself and K_{2,p+1}-freeness.
void check_saturation_claims(ClaimReport& report) {
  const Graph& g = report.graph;
  int p = report.p;
  auto v = verdict(g, Pattern(book_graph(p)));
  std::string witness;
  for (const auto& e : v.per_nonedge)
    if (e.copies != 1) {
      witness = nonedge_str(e.u, e.v) + " creates " + std::to_string(e.copies) + " copies";
      break;
    }
  if (!v.h_free) witness = "host already contains the book";
  add_check(report, "uniquely_b" + std::to_string(p) + "_saturated", v.unique, witness);
  add_check(report, "k_2_" + std::to_string(p + 1) + "_free", !contains_k2q(g, p + 1),
            "some vertex pair has more than p common neighbors");
}

// Rootlet-only structure: every non-edge has exactly p common neighbors and
// the created copy never uses the new edge as a page edge.
void check_rootlet_only(ClaimReport& report) {
  const Graph& g = report.graph;
  int p = report.p;
  bool commons_ok = true, rootlet_ok = true;
  std::string commons_witness, rootlet_witness;
  for (int u = 0; u < g.n() && (commons_ok || rootlet_ok); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      if (commons_ok && intersection_count(g.neighbors(u), g.neighbors(v)) != p) {
        commons_ok = false;
        commons_witness = nonedge_str(u, v);
      }
      if (rootlet_ok) {
        auto split = book_new_copies_split(g, u, v, p);
        if (split.as_page != 0 || split.as_rootlet != 1) {
          rootlet_ok = false;
          rootlet_witness = nonedge_str(u, v);
        }
      }
    }
  add_check(report, "nonedges_have_p_common_neighbors", commons_ok, commons_witness);
  add_check(report, "created_copy_rootlet_only", rootlet_ok, rootlet_witness);
}

ClaimReport verify_srg_girth4(const SrgGirth4Spec& spec) {
  ClaimReport report{.family = "srg_girth4", .graph = spec.graph, .p = spec.p};
  auto eq = book_srg_equivalence(spec.graph, spec.p);
  add_check(report, "equivalence_agree", eq.agree,
            std::string("lhs=") + (eq.lhs ? "true" : "false") + " rhs=" +
                (eq.rhs ? "true" : "false"));
  if (eq.rhs) {
    check_saturation_claims(report);
    check_rootlet_only(report);
  }
  return report;
}

ClaimReport verify_multipartite(const MultipartiteSpec& spec) {
  auto ex = multipartite_example(spec.r, spec.k);
  ClaimReport report{.family = "multipartite", .graph = ex.graph, .p = ex.p_sat};
  add_check(report, "b" + std::to_string(ex.p_free) + "_free",
            !contains_book(ex.graph, ex.p_free),
            "family member contains the smaller book");
  check_saturation_claims(report);
  if (spec.k >= 2) {
    SrgParams want{spec.r * spec.k, (spec.r - 1) * spec.k, (spec.r - 2) * spec.k,
                   (spec.r - 1) * spec.k};
    auto got = srg_params(ex.graph);
    add_check(report, "srg_params", got && *got == want, "parameter mismatch");
    check_rootlet_only(report);
  }
  return report;
}

ClaimReport verify_clique_deletion(const CliqueDeletionSpec& spec) {
  auto built = clique_deletion(spec.r, spec.removed);
  ClaimReport report{.family = "clique_deletion", .graph = built.graph, .p = built.p};
  int want_degree = built.graph.n() - spec.r - 1;
  bool regular = true;
  std::string witness;
  for (int v = 0; v < built.graph.n(); ++v)
    if (built.graph.degree(v) != want_degree) {
      regular = false;
      witness = "vertex " + std::to_string(v) + " has degree " +
                std::to_string(built.graph.degree(v));
      break;
    }
  add_check(report, std::to_string(want_degree) + "_regular", regular, witness);
  check_saturation_claims(report);

  bool commons_ok = true;
  std::string commons_witness;
  for (int u = 0; u < built.graph.n() && commons_ok; ++u)
    for (int v = u + 1; v < built.graph.n(); ++v)
      if (!built.graph.adjacent(u, v) &&
          intersection_count(built.graph.neighbors(u), built.graph.neighbors(v)) != built.p) {
        commons_ok = false;
        commons_witness = nonedge_str(u, v);
        break;
      }
  add_check(report, "nonedges_have_p_common_neighbors", commons_ok, commons_witness);
  return report;
}

ClaimReport verify_cone(const ConeSpec& spec) {
  Graph g = cone_construction(spec.base, spec.p);
  ClaimReport report{.family = "cone", .graph = std::move(g), .p = spec.p};
  check_saturation_claims(report);
  return report;
}

}  // namespace

namespace {

struct ClaimVisitor {
  ClaimReport operator()(const SrgGirth4Spec& s) const { return verify_srg_girth4(s); }
  ClaimReport operator()(const MultipartiteSpec& s) const { return verify_multipartite(s); }
  ClaimReport operator()(const CliqueDeletionSpec& s) const { return verify_clique_deletion(s); }
  ClaimReport operator()(const ConeSpec& s) const { return verify_cone(s); }
};

}  // namespace

ClaimReport verify_claim(const BookFamilySpec& spec) {
  return std::visit(ClaimVisitor{}, spec);
}

}  // namespace booksat
