// booksat: saturation checking, searching, and construction verification
// for diamond/book patterns, with graph6 I/O and JSON reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "booksat/canonical.hpp"
#include "booksat/constructions.hpp"
#include "booksat/enumerate.hpp"
#include "booksat/graph6.hpp"
#include "booksat/named.hpp"
#include "booksat/pattern.hpp"
#include "booksat/saturation.hpp"
#include "booksat/srg.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace booksat;

namespace {

constexpr const char* kVersion = "0.1.0";

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest(std::string_view description) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(description)));
  return buf;
}

// Graph specs are named forms first ("paw", "book:3", "k5"), then graph6.
Graph resolve_graph(const std::string& spec) {
  try {
    return parse_named_spec(spec);
  } catch (const std::invalid_argument&) {
  }
  try {
    return parse_graph6(spec);
  } catch (const Graph6Error&) {
    throw std::invalid_argument("not a known graph name or a graph6 value: " + spec);
  }
}

json bits_json(Bits128 bits) {
  json out = json::array();
  bits.for_each([&](int v) { out.push_back(v); });
  return out;
}

json params_json(const std::optional<SrgParams>& p) {
  if (!p) return nullptr;
  return json{{"n", p->n}, {"k", p->k}, {"lambda", p->lambda}, {"mu", p->mu}};
}

json girth_json(ExtendedDistance d) {
  if (d.is_infinite()) return "infinite";
  return d.finite_value();
}

json verdict_json(const SaturationVerdict& v, bool per_edge) {
  json out{{"h_free", v.h_free},     {"saturated", v.saturated}, {"unique", v.unique},
           {"nontrivial", v.nontrivial}, {"vacuous", v.vacuous}};
  if (per_edge) {
    json edges = json::array();
    for (const auto& e : v.per_nonedge) edges.push_back({e.u, e.v, e.copies});
    out["per_nonedge"] = std::move(edges);
  }
  return out;
}

json matches_json(const SearchReport& report) {
  json per_n = json::object();
  for (const auto& [n, counts] : report.per_n)
    per_n[std::to_string(n)] = {{"examined", counts.examined}, {"matched", counts.matched}};
  json matches = json::array();
  for (const auto& m : report.matches)
    matches.push_back({{"n", m.n},
                       {"graph6", m.canonical_g6},
                       {"triangles", m.triangles},
                       {"girth", girth_json(m.girth_value)},
                       {"srg", params_json(m.params)},
                       {"non_edges", m.non_edges},
                       {"unique", true}});
  return json{{"per_n", std::move(per_n)}, {"matches", std::move(matches)}};
}

json claim_json(const ClaimReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  return json{{"family", report.family},
              {"p", report.p},
              {"n", report.graph.n()},
              {"graph6", to_graph6(report.graph)},
              {"checks", std::move(checks)},
              {"all_pass", report.all_pass}};
}

void render_human(const json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        render_human(value, os, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_human(value, os, indent + 2);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

struct Output {
  bool human = false;
  bool timing = false;
};

void emit(const Output& output, const std::string& command, const std::string& input_desc,
          json results, double elapsed_ms) {
  json report{{"command", command},
              {"input", digest(input_desc)},
              {"results", std::move(results)},
              {"version", kVersion}};
  if (output.timing) report["timing_ms"] = elapsed_ms;
  if (output.human) {
    render_human(report, std::cout, 0);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

std::vector<Graph> read_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

void write_g6_lines(const std::string& path, const SearchReport& report) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  for (const auto& m : report.matches) out << m.canonical_g6 << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"uniquely saturated graph toolkit"};
  app.require_subcommand(1);
  Output output;
  app.add_flag("--human", output.human, "human-readable rendering of the JSON report");
  app.add_flag("--timing", output.timing, "include wall time in the report");

  // check: saturation verdict for one graph against one pattern
  auto* check = app.add_subcommand("check", "saturation verdict for a graph");
  std::string check_named, check_g6, check_pattern = "c4plus";
  bool check_per_edge = false;
  check->add_option("--named", check_named, "graph by name, e.g. paw, petersen, book:3");
  check->add_option("--g6", check_g6, "graph as a graph6 value");
  check->add_option("--pattern", check_pattern, "pattern name or graph6 (default c4plus)");
  check->add_flag("--per-edge", check_per_edge, "include per-non-edge created-copy counts");
  check->callback([&] {
    if (check_named.empty() == check_g6.empty())
      throw std::invalid_argument("check needs exactly one of --named / --g6");
    Timer timer;
    Graph g = check_named.empty() ? parse_graph6(check_g6) : resolve_graph(check_named);
    Pattern h{resolve_graph(check_pattern)};
    auto v = verdict(g, h);
    json results = verdict_json(v, check_per_edge);
    results["n"] = g.n();
    results["edges"] = g.edge_count();
    emit(output, "check", "check|" + to_graph6(g) + "|" + to_graph6(h.graph()), results,
         timer.ms());
  });

  // count: copy counts for a pattern in a host
  auto* count = app.add_subcommand("count", "pattern copy counts in a host graph");
  std::string count_named, count_g6, count_pattern = "c4plus";
  count->add_option("--named", count_named, "host graph by name");
  count->add_option("--g6", count_g6, "host graph as graph6");
  count->add_option("--pattern", count_pattern, "pattern name or graph6");
  count->callback([&] {
    if (count_named.empty() == count_g6.empty())
      throw std::invalid_argument("count needs exactly one of --named / --g6");
    Timer timer;
    Graph g = count_named.empty() ? parse_graph6(count_g6) : resolve_graph(count_named);
    Pattern h{resolve_graph(count_pattern)};
    uint64_t copies = h.book_pages() ? count_book_copies(g, *h.book_pages())
                                     : count_subgraph_copies(g, h);
    json results{{"copies", copies},
                 {"automorphisms", h.automorphisms()},
                 {"triangles", count_triangles(g)},
                 {"contains", contains(g, h)}};
    emit(output, "count", "count|" + to_graph6(g) + "|" + to_graph6(h.graph()), results,
         timer.ms());
  });

  // classify: diamond-saturating edge types
  auto* classify = app.add_subcommand("classify", "diamond saturating-edge classification");
  std::string classify_named, classify_g6, classify_edge;
  classify->add_option("--named", classify_named, "graph by name");
  classify->add_option("--g6", classify_g6, "graph as graph6");
  classify->add_option("--edge", classify_edge, "one non-edge as u,v (default: all)");
  classify->callback([&] {
    if (classify_named.empty() == classify_g6.empty())
      throw std::invalid_argument("classify needs exactly one of --named / --g6");
    Timer timer;
    Graph g = classify_named.empty() ? parse_graph6(classify_g6) : resolve_graph(classify_named);
    std::vector<std::pair<int, int>> targets;
    if (!classify_edge.empty()) {
      int u, v;
      if (std::sscanf(classify_edge.c_str(), "%d,%d", &u, &v) != 2)
        throw std::invalid_argument("--edge wants u,v");
      targets.emplace_back(u, v);
    } else {
      for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
          if (!g.adjacent(u, v)) targets.emplace_back(u, v);
    }
    json edges = json::array();
    for (auto [u, v] : targets) {
      json classes = json::array();
      for (const auto& c : classify_c4plus_edge(g, u, v))
        classes.push_back({{"kind", c.kind == EdgeKind::type_one ? "I" : "II"},
                           {"witness", c.witness},
                           {"induced_g6", to_graph6(c.induced_shape)}});
      edges.push_back({{"u", u}, {"v", v}, {"classes", std::move(classes)}});
    }
    emit(output, "classify", "classify|" + to_graph6(g) + "|" + classify_edge,
         json{{"edges", std::move(edges)}}, timer.ms());
  });

  // decompose: triangle decomposition or whole-cover report
  auto* decompose = app.add_subcommand("decompose", "triangle structure decomposition");
  std::string dec_named, dec_g6, dec_triangle;
  bool dec_cover = false;
  decompose->add_option("--named", dec_named, "graph by name");
  decompose->add_option("--g6", dec_g6, "graph as graph6");
  decompose->add_option("--triangle", dec_triangle, "triangle as a,b,c (default: first)");
  decompose->add_flag("--cover", dec_cover, "report the all-triangles cover instead");
  decompose->callback([&] {
    if (dec_named.empty() == dec_g6.empty())
      throw std::invalid_argument("decompose needs exactly one of --named / --g6");
    Timer timer;
    Graph g = dec_named.empty() ? parse_graph6(dec_g6) : resolve_graph(dec_named);
    json results;
    if (dec_cover) {
      auto cover = triangle_cover(g);
      json counts = json::array();
      for (auto [u, c] : cover.a_neighbor_counts) counts.push_back({u, c});
      results = json{{"a", bits_json(cover.a)},
                     {"shell1", bits_json(cover.shell1)},
                     {"shell2", bits_json(cover.shell2)},
                     {"a_neighbor_counts", std::move(counts)},
                     {"triangles", cover.triangle_count},
                     {"t_param", cover.t_param ? json(*cover.t_param) : json(nullptr)}};
    } else {
      std::array<int, 3> s{};
      if (!dec_triangle.empty()) {
        if (std::sscanf(dec_triangle.c_str(), "%d,%d,%d", &s[0], &s[1], &s[2]) != 3)
          throw std::invalid_argument("--triangle wants a,b,c");
      } else {
        auto triangles = triangle_list(g);
        if (triangles.empty()) throw std::invalid_argument("graph has no triangle");
        s = triangles.front();
      }
      auto d = decompose_triangle(g, s);
      json n_ij = json::object();
      for (int i = 0; i < 3; ++i)
        for (int j = 1; j <= 2; ++j)
          n_ij["n_" + std::to_string(i + 1) + "_" + std::to_string(j)] =
              bits_json(d.n_ij[i][j - 1]);
      results = json{{"s", d.s},
                     {"v_sets", {bits_json(d.v_sets[0]), bits_json(d.v_sets[1]),
                                 bits_json(d.v_sets[2])}},
                     {"shell1", bits_json(d.shell1)},
                     {"shell2", bits_json(d.shell2)},
                     {"n_ij", std::move(n_ij)},
                     {"clauses",
                      {{"shells_cover", d.clauses.shells_cover},
                       {"v_sets_disjoint", d.clauses.v_sets_disjoint},
                       {"shell1_independent", d.clauses.shell1_independent},
                       {"shell2_degrees", d.clauses.shell2_degrees}}},
                     {"all_pass", d.clauses.all()}};
    }
    emit(output, "decompose", "decompose|" + to_graph6(g) + "|" + dec_triangle, results,
         timer.ms());
  });

  // srg: parameter extraction plus the girth-4 equivalence report
  auto* srg = app.add_subcommand("srg", "strongly regular parameters");
  std::string srg_named, srg_g6;
  srg->add_option("--named", srg_named, "graph by name");
  srg->add_option("--g6", srg_g6, "graph as graph6");
  srg->callback([&] {
    if (srg_named.empty() == srg_g6.empty())
      throw std::invalid_argument("srg needs exactly one of --named / --g6");
    Timer timer;
    Graph g = srg_named.empty() ? parse_graph6(srg_g6) : resolve_graph(srg_named);
    auto eq = girth4_srg_equivalence(g);
    json results{{"params", params_json(eq.params)},
                 {"girth", girth_json(eq.girth_value)},
                 {"girth4_equivalence",
                  {{"unique_saturated", eq.unique_saturated},
                   {"lhs", eq.lhs},
                   {"rhs", eq.rhs},
                   {"agree", eq.agree}}}};
    emit(output, "srg", "srg|" + to_graph6(g), results, timer.ms());
  });

  // search: enumerate + filter
  auto* search_cmd = app.add_subcommand("search", "exhaustive search over small graphs");
  int n_min = 0, n_max = 0, workers = 1;
  std::string search_pattern = "c4plus", g6_out;
  bool connected = false, prune = false;
  search_cmd->add_option("n_min", n_min, "smallest vertex count")->required();
  search_cmd->add_option("n_max", n_max, "largest vertex count")->required();
  search_cmd->add_option("pattern", search_pattern, "pattern name or graph6 (default c4plus)");
  search_cmd->add_flag("--connected", connected, "only consider connected graphs");
  search_cmd->add_flag("--prune", prune, "apply the diamond necessary-condition filters");
  search_cmd->add_option("--workers", workers, "parallel workers (output-independent)");
  search_cmd->add_option("--g6-out", g6_out, "write matching canonical graph6 lines here");
  search_cmd->callback([&] {
    Timer timer;
    Pattern h{resolve_graph(search_pattern)};
    SearchOptions opts{.n_min = n_min,
                       .n_max = n_max,
                       .connected_only = connected,
                       .pruning = prune,
                       .workers = workers};
    auto report = search(h, opts);
    if (!g6_out.empty()) write_g6_lines(g6_out, report);
    std::ostringstream desc;
    desc << "search|" << n_min << ".." << n_max << "|" << to_graph6(h.graph());
    emit(output, "search", desc.str(), matches_json(report), timer.ms());
  });

  // filter: same verdicting over an externally supplied stream
  auto* filter_cmd = app.add_subcommand("filter", "filter a graph6 stream for matches");
  std::string filter_pattern = "c4plus", filter_file, filter_g6_out;
  int filter_workers = 1;
  bool filter_stdin = false, filter_connected = false, filter_prune = false;
  filter_cmd->add_option("pattern", filter_pattern, "pattern name or graph6 (default c4plus)");
  filter_cmd->add_flag("--stdin", filter_stdin, "read graph6 lines from standard input");
  filter_cmd->add_option("--file", filter_file, "read graph6 lines from a file");
  filter_cmd->add_flag("--connected", filter_connected, "only consider connected graphs");
  filter_cmd->add_flag("--prune", filter_prune, "apply the diamond necessary-condition filters");
  filter_cmd->add_option("--workers", filter_workers, "parallel workers");
  filter_cmd->add_option("--g6-out", filter_g6_out, "write matching canonical graph6 lines here");
  filter_cmd->callback([&] {
    if (filter_stdin == !filter_file.empty())
      throw std::invalid_argument("filter needs exactly one of --stdin / --file");
    Timer timer;
    Pattern h{resolve_graph(filter_pattern)};
    std::vector<Graph> graphs;
    if (filter_stdin) {
      graphs = read_stream(std::cin);
    } else {
      std::ifstream in(filter_file);
      if (!in) throw std::invalid_argument("cannot open " + filter_file);
      graphs = read_stream(in);
    }
    SearchOptions opts{.connected_only = filter_connected,
                       .pruning = filter_prune,
                       .workers = filter_workers};
    auto report = filter_graphs(graphs, h, opts);
    if (!filter_g6_out.empty()) write_g6_lines(filter_g6_out, report);
    emit(output, "filter",
         "filter|" + std::to_string(graphs.size()) + "|" + to_graph6(h.graph()),
         matches_json(report), timer.ms());
  });

  // construct: build and verify one of the book-saturated families
  auto* construct = app.add_subcommand("construct", "build and verify a family member");
  construct->require_subcommand(1);

  auto* cone = construct->add_subcommand("cone", "universal vertex plus pendant over a base");
  std::string cone_base;
  int cone_p = 2;
  cone->add_option("--base", cone_base, "base graph (name or graph6)")->required();
  cone->add_option("--p", cone_p, "target page count")->required();
  cone->callback([&] {
    Timer timer;
    auto report = verify_claim(ConeSpec{resolve_graph(cone_base), cone_p});
    emit(output, "construct", "cone|" + cone_base + "|" + std::to_string(cone_p),
         claim_json(report), timer.ms());
  });

  auto* multi = construct->add_subcommand("multipartite", "complete r-partite with equal parts");
  int multi_r = 0, multi_k = 0;
  multi->add_option("--r", multi_r, "number of parts")->required();
  multi->add_option("--k", multi_k, "part size")->required();
  multi->callback([&] {
    Timer timer;
    auto report = verify_claim(MultipartiteSpec{multi_r, multi_k});
    emit(output, "construct",
         "multipartite|" + std::to_string(multi_r) + "," + std::to_string(multi_k),
         claim_json(report), timer.ms());
  });

  auto* cdel = construct->add_subcommand("clique-deletion",
                                         "complete graph minus disjoint regular graphs");
  int cdel_r = 0;
  std::vector<std::string> cdel_removed;
  cdel->add_option("--r", cdel_r, "number of removed copies")->required();
  cdel->add_option("--removed", cdel_removed,
                   "removal graph (name or graph6); repeat or give once for all copies")
      ->required();
  cdel->callback([&] {
    Timer timer;
    std::vector<Graph> removed;
    for (const auto& spec : cdel_removed) removed.push_back(resolve_graph(spec));
    if (removed.size() == 1 && cdel_r > 1)
      removed.assign(static_cast<size_t>(cdel_r), removed.front());
    auto report = verify_claim(CliqueDeletionSpec{cdel_r, std::move(removed)});
    std::ostringstream desc;
    desc << "clique-deletion|" << cdel_r;
    for (const auto& s : cdel_removed) desc << "|" << s;
    emit(output, "construct", desc.str(), claim_json(report), timer.ms());
  });

  auto* bsrg = construct->add_subcommand("srg-girth4", "book/srg equivalence check");
  std::string bsrg_graph;
  int bsrg_p = 2;
  bsrg->add_option("--graph", bsrg_graph, "graph (name or graph6)")->required();
  bsrg->add_option("--p", bsrg_p, "page count")->required();
  bsrg->callback([&] {
    Timer timer;
    auto report = verify_claim(SrgGirth4Spec{resolve_graph(bsrg_graph), bsrg_p});
    emit(output, "construct", "srg-girth4|" + bsrg_graph + "|" + std::to_string(bsrg_p),
         claim_json(report), timer.ms());
  });

  auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
    for (CLI::App* sub : node->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // input errors are exit 2; help stays 0
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConstructionError& e) {
    std::cerr << "construction precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
