#include "booksat/named.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "booksat/graph6.hpp"
#include "booksat/srg.hpp"

namespace booksat {

namespace named_data {
extern const char* const gewirtz_g6;
extern const char* const m22_g6;
extern const char* const higman_sims_g6;
}  // namespace named_data

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw std::invalid_argument(what);
}

Graph load_verified_srg(const char* g6, SrgParams want, const char* name) {
  Graph g = parse_graph6(g6);
  auto params = srg_params(g);
  if (!params || !(*params == want))
    throw std::logic_error(std::string("embedded data for ") + name +
                           " failed its strongly-regular parameter check");
  return g;
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) bad_params("path needs n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).freeze();
}

Graph cycle_graph(int n) {
  if (n < 3) bad_params("cycle needs n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).freeze();
}

Graph complete_graph(int n) {
  if (n < 0) bad_params("complete graph needs n >= 0");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).freeze();
}

Graph star_graph(int n) {
  if (n < 1) bad_params("star needs n >= 1");
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) b.add_edge(0, i);
  return std::move(b).freeze();
}

Graph double_star(int s, int t) {
  if (s < 0 || t < 0) bad_params("double star needs s, t >= 0");
  GraphBuilder b(2 + s + t);
  b.add_edge(0, 1);
  for (int i = 0; i < s; ++i) b.add_edge(0, 2 + i);
  for (int i = 0; i < t; ++i) b.add_edge(1, 2 + s + i);
  return std::move(b).freeze();
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) bad_params("multipartite part sizes must be >= 1");
    n += p;
  }
  GraphBuilder b(n);
  int u_base = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int v_base = u_base + parts[i];
    for (size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = 0; u < parts[i]; ++u)
        for (int v = 0; v < parts[j]; ++v) b.add_edge(u_base + u, v_base + v);
      v_base += parts[j];
    }
    u_base += parts[i];
  }
  return std::move(b).freeze();
}

Graph complete_bipartite(int a, int b) {
  std::array<int, 2> parts{a, b};
  return complete_multipartite(parts);
}

Graph book_graph(int pages) {
  if (pages < 1) bad_params("book needs >= 1 page");
  GraphBuilder b(pages + 2);
  b.add_edge(0, 1);
  for (int i = 0; i < pages; ++i) {
    b.add_edge(0, 2 + i);
    b.add_edge(1, 2 + i);
  }
  return std::move(b).freeze();
}

Graph paw() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
}

Graph house() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
}

Graph bowknot() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph k23() { return complete_bipartite(2, 3); }

Graph pentagon() { return cycle_graph(5); }

Graph petersen() {
  // Kneser graph K(5,2): the ten 2-subsets of [5], adjacent when disjoint.
  std::vector<int> sets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) sets.push_back((1 << i) | (1 << j));
  GraphBuilder b(10);
  for (size_t x = 0; x < sets.size(); ++x)
    for (size_t y = x + 1; y < sets.size(); ++y)
      if ((sets[x] & sets[y]) == 0) b.add_edge(static_cast<int>(x), static_cast<int>(y));
  return std::move(b).freeze();
}

Graph folded_5cube() {
  // Vertices are 5-bit strings modulo complementation (representatives with
  // top bit clear); classes adjacent at Hamming distance 1 or 4.
  GraphBuilder b(16);
  for (int x = 0; x < 16; ++x)
    for (int y = x + 1; y < 16; ++y) {
      int h = std::popcount(static_cast<unsigned>(x ^ y));
      if (h == 1 || h == 4) b.add_edge(x, y);
    }
  return std::move(b).freeze();
}

Graph hoffman_singleton() {
  // Five pentagons P_h and five pentagrams Q_i; P_h(j) ~ Q_i(h*i + j mod 5).
  auto pent = [](int h, int j) { return 5 * h + j; };
  auto gram = [](int i, int j) { return 25 + 5 * i + j; };
  GraphBuilder b(50);
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      b.add_edge(pent(h, j), pent(h, (j + 1) % 5));
      b.add_edge(gram(h, j), gram(h, (j + 2) % 5));
    }
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) b.add_edge(pent(h, j), gram(i, (h * i + j) % 5));
  return std::move(b).freeze();
}

Graph gewirtz() {
  static const Graph g = load_verified_srg(named_data::gewirtz_g6, {56, 10, 0, 2}, "Gewirtz graph");
  return g;
}

Graph m22_graph() {
  static const Graph g = load_verified_srg(named_data::m22_g6, {77, 16, 0, 4}, "M22 graph");
  return g;
}

Graph higman_sims() {
  static const Graph g =
      load_verified_srg(named_data::higman_sims_g6, {100, 22, 0, 6}, "Higman-Sims graph");
  return g;
}

namespace {

struct ParamSpec {
  const char* name;
  int min_params;
  int max_params;
  Graph (*make)(std::span<const int>);
};

Graph named_fixed(std::string_view name) {
  if (name == "paw" || name == "c3star") return paw();
  if (name == "house") return house();
  if (name == "bowknot") return bowknot();
  if (name == "k23") return k23();
  if (name == "pentagon") return pentagon();
  if (name == "petersen") return petersen();
  if (name == "c4plus" || name == "diamond") return book_graph(2);
  if (name == "triangle") return complete_graph(3);
  if (name == "folded5cube" || name == "folded_5cube") return folded_5cube();
  if (name == "hoffman_singleton" || name == "hoffman-singleton") return hoffman_singleton();
  if (name == "gewirtz") return gewirtz();
  if (name == "m22") return m22_graph();
  if (name == "higman_sims" || name == "higman-sims") return higman_sims();
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

}  // namespace

Graph named_graph(std::string_view name, std::span<const int> params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      bad_params(std::string(name) + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "path" || name == "p") { want(1); return path_graph(params[0]); }
  if (name == "cycle" || name == "c") { want(1); return cycle_graph(params[0]); }
  if (name == "complete" || name == "k") { want(1); return complete_graph(params[0]); }
  if (name == "star" || name == "s") { want(1); return star_graph(params[0]); }
  if (name == "book" || name == "b") { want(1); return book_graph(params[0]); }
  if (name == "doublestar") { want(2); return double_star(params[0], params[1]); }
  if (name == "bipartite") { want(2); return complete_bipartite(params[0], params[1]); }
  if (name == "multipartite") {
    want(2);
    if (params[0] < 1) bad_params("multipartite needs r >= 1");
    std::vector<int> parts(params[0], params[1]);
    return complete_multipartite(parts);
  }
  if (name == "cliques") {  // c disjoint copies of K_s
    want(2);
    if (params[0] < 1) bad_params("cliques needs >= 1 copy");
    Graph g = complete_graph(params[1]);
    Graph out = g;
    for (int i = 1; i < params[0]; ++i) out = disjoint_union(out, g);
    return out;
  }
  if (params.empty()) return named_fixed(name);
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

Graph parse_named_spec(std::string_view spec) {
  std::string_view name = spec;
  std::vector<int> params;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      size_t comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad parameter in graph spec: " + std::string(spec));
      params.push_back(value);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  } else if (spec.size() >= 2 && spec.find(',') == std::string_view::npos) {
    // Short forms k5, c6, p3, s4, b2 -- but fixed names like k23 win.
    char head = spec[0];
    std::string_view digits = spec.substr(1);
    bool all_digits = !digits.empty() &&
                      digits.find_first_not_of("0123456789") == std::string_view::npos;
    if (all_digits && (head == 'k' || head == 'c' || head == 'p' || head == 's' || head == 'b')) {
      try {
        return named_fixed(spec);
      } catch (const std::invalid_argument&) {
      }
      int value = 0;
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
      return named_graph(std::string_view(&head, 1), std::span<const int>(&value, 1));
    }
  }
  return named_graph(name, params);
}

std::vector<std::pair<std::string, Graph>> all_named_graphs() {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("paw", paw());
  out.emplace_back("house", house());
  out.emplace_back("bowknot", bowknot());
  out.emplace_back("k23", k23());
  out.emplace_back("pentagon", pentagon());
  out.emplace_back("petersen", petersen());
  out.emplace_back("c4plus", book_graph(2));
  out.emplace_back("folded5cube", folded_5cube());
  out.emplace_back("hoffman_singleton", hoffman_singleton());
  out.emplace_back("gewirtz", gewirtz());
  out.emplace_back("m22", m22_graph());
  out.emplace_back("higman_sims", higman_sims());
  return out;
}

}  // namespace booksat
