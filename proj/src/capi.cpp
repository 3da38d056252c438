#include "thetawb.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "canonical.hpp"
#include "claims.hpp"
#include "constructions.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "theta.hpp"

struct twb_graph {
  thetawb::Graph g;
};

namespace {

thread_local std::string t_error;

twb_status map_errc(thetawb::Errc c) {
  switch (c) {
    case thetawb::Errc::invalid_argument: return TWB_ERR_INVALID_ARGUMENT;
    case thetawb::Errc::too_large: return TWB_ERR_TOO_LARGE;
    case thetawb::Errc::parse: return TWB_ERR_PARSE;
    case thetawb::Errc::unsupported: return TWB_ERR_UNSUPPORTED;
  }
  return TWB_ERR_INTERNAL;
}

template <typename F>
twb_status guarded(F&& f) {
  try {
    f();
    t_error.clear();
    return TWB_OK;
  } catch (const thetawb::Error& e) {
    t_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    t_error = e.what();
    return TWB_ERR_INTERNAL;
  } catch (...) {
    t_error = "unknown error";
    return TWB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

twb_status require(bool cond, const char* msg) {
  if (cond) return TWB_OK;
  t_error = msg;
  return TWB_ERR_INVALID_ARGUMENT;
}

std::vector<int> lengths_vec(const int* lengths, size_t count) {
  return std::vector<int>(lengths, lengths + count);
}

thetawb::Graph cycle_graph(int n) {
  if (n < 3) throw thetawb::Error(thetawb::Errc::invalid_argument, "a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return thetawb::Graph::build(n, e);
}

}  // namespace

extern "C" {

const char* twb_last_error(void) { return t_error.c_str(); }

void twb_string_free(char* s) { std::free(s); }

void twb_graph_free(twb_graph* g) { delete g; }

twb_status twb_graph_build(int n, const int* edges, size_t edge_count, twb_graph** out) {
  if (twb_status s = require(out && (edges || edge_count == 0), "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    std::vector<std::pair<int, int>> e;
    e.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) e.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new twb_graph{thetawb::Graph::build(n, e)};
  });
}

twb_status twb_graph_from_graph6(const char* text, twb_graph** out) {
  if (twb_status s = require(text && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] { *out = new twb_graph{thetawb::graph6_decode(text)}; });
}

twb_status twb_graph_to_graph6(const twb_graph* g, char** out) {
  if (twb_status s = require(g && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] { *out = dup_string(thetawb::graph6_encode(g->g)); });
}

int twb_graph_order(const twb_graph* g) { return g ? g->g.order() : -1; }

long twb_graph_edge_count(const twb_graph* g) { return g ? static_cast<long>(g->g.edge_count()) : -1; }

int twb_graph_has_edge(const twb_graph* g, int u, int v) {
  if (!g || u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order()) return 0;
  return g->g.has_edge(u, v) ? 1 : 0;
}

int twb_graph_is_bipartite(const twb_graph* g) {
  return g && thetawb::is_bipartite(g->g).has_value() ? 1 : 0;
}

int twb_graph_odd_girth(const twb_graph* g) {
  if (!g) return 0;
  auto og = thetawb::odd_girth(g->g);
  return og ? *og : 0;
}

twb_status twb_graph_canonical(const twb_graph* g, twb_graph** out) {
  if (twb_status s = require(g && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] { *out = new twb_graph{thetawb::canonical_graph(g->g)}; });
}

twb_status twb_canonical_form(const twb_graph* g, char** out) {
  if (twb_status s = require(g && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] { *out = dup_string(thetawb::canonical_form(g->g)); });
}

twb_status twb_is_isomorphic(const twb_graph* a, const twb_graph* b, int* out) {
  if (twb_status s = require(a && b && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] { *out = thetawb::is_isomorphic(a->g, b->g) ? 1 : 0; });
}

twb_status twb_contains_theta(const twb_graph* g, const int* lengths, size_t len_count, int* out) {
  if (twb_status s = require(g && lengths && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    auto pat = thetawb::ThetaPattern::of(lengths_vec(lengths, len_count));
    *out = thetawb::contains_theta(g->g, pat).has_value() ? 1 : 0;
  });
}

twb_status twb_construct_turan(int n, int r, twb_graph** out) {
  if (twb_status s = require(out != nullptr, "null argument"); s != TWB_OK) return s;
  return guarded([&] { *out = new twb_graph{thetawb::turan(n, r)}; });
}

twb_status twb_construct(const char* name, int n, twb_graph** out) {
  if (twb_status s = require(name && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    std::string id = name;
    using namespace thetawb;
    int half1 = (n - 1) / 2, half2 = (n - 2) / 2;
    if (id == "subdivided-bipartite") *out = new twb_graph{sk(n - 1 - half1, half1)};
    else if (id == "apex-triangle") *out = new twb_graph{bullet_k3(n - 1 - half1, half1)};
    else if (id == "pendant-triangle") *out = new twb_graph{circ_k3(n - 2 - half2, half2)};
    else if (id == "two-apex-family") *out = new twb_graph{family_member({Family::H, n, 0, 1, 0})};
    else if (id == "triangle-family") *out = new twb_graph{family_member({Family::G, n, 0, 0, 0})};
    else if (id == "cycle") *out = new twb_graph{cycle_graph(n)};
    else if (id == "complete") *out = new twb_graph{turan(n, n)};
    else throw Error(Errc::invalid_argument, "unknown construction: " + id);
  });
}

twb_status twb_construct_sides(const char* name, int a, int b, twb_graph** out) {
  if (twb_status s = require(name && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    std::string id = name;
    using namespace thetawb;
    if (id == "complete-bipartite") {
      if (a < 1 || b < 1) throw Error(Errc::invalid_argument, "side sizes must be positive");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
      *out = new twb_graph{Graph::build(a + b, e)};
    } else if (id == "subdivided-bipartite") *out = new twb_graph{sk(a, b)};
    else if (id == "apex-triangle") *out = new twb_graph{bullet_k3(a, b)};
    else if (id == "pendant-triangle") *out = new twb_graph{circ_k3(a, b)};
    else throw Error(Errc::invalid_argument, "unknown construction: " + id);
  });
}

twb_status twb_rho_bracket(const twb_graph* g, double tol, char** lo, char** hi) {
  if (twb_status s = require(g && lo && hi, "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    thetawb::RhoInterval iv = thetawb::rho_bracket(g->g, tol);
    *lo = dup_string(iv.lo.get_str());
    *hi = dup_string(iv.hi.get_str());
  });
}

twb_status twb_compare_rho(const twb_graph* a, const twb_graph* b, int* out) {
  if (twb_status s = require(a && b && out, "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    switch (thetawb::compare_rho(a->g, b->g)) {
      case thetawb::Cmp::Less: *out = -1; break;
      case thetawb::Cmp::Equal: *out = 0; break;
      case thetawb::Cmp::Greater: *out = 1; break;
    }
  });
}

twb_status twb_search_run(int n, const int* lengths, size_t len_count, int nonbipartite,
                          const char* objective, int jobs, char** report_json) {
  if (twb_status s = require(lengths && objective && report_json, "null argument"); s != TWB_OK)
    return s;
  return guarded([&] {
    using namespace thetawb;
    std::string obj = objective;
    SearchSpec spec;
    spec.n = n;
    spec.pattern = ThetaPattern::of(lengths_vec(lengths, len_count));
    spec.require_nonbipartite = nonbipartite != 0;
    spec.jobs = jobs;
    ExtremalRecord rec;
    if (obj == "edges") rec = ex_search(spec);
    else if (obj == "rho") rec = spex_search(spec);
    else throw Error(Errc::invalid_argument, "objective must be 'edges' or 'rho'");
    nlohmann::ordered_json j;
    j["schema"] = "thetawb-search/1";
    j["n"] = n;
    j["pattern"] = spec.pattern.lengths;
    j["objective"] = obj;
    j["nonbipartite"] = spec.require_nonbipartite;
    j["classes_scanned"] = rec.classes_scanned;
    j["best_edges"] = rec.best_edges;
    j["rho_lo"] = rec.rho.lo.get_str();
    j["rho_hi"] = rec.rho.hi.get_str();
    j["verified"] = rec.verified;
    j["maximizers"] = nlohmann::ordered_json::array();
    for (const Graph& g : rec.maximizers) j["maximizers"].push_back(graph6_encode(g));
    *report_json = dup_string(j.dump(2) + "\n");
  });
}

twb_status twb_claim_list(char** out) {
  if (twb_status s = require(out != nullptr, "null argument"); s != TWB_OK) return s;
  return guarded([&] {
    std::string s;
    for (const auto& info : thetawb::claim_catalog()) {
      s += info.id;
      s += '\n';
    }
    *out = dup_string(s);
  });
}

twb_status twb_verify(const char* ids, int n_min, int n_max, long trials, uint64_t seed,
                      int jobs, const char* format, char** report, int* passed) {
  if (twb_status s = require(ids && format && report && passed, "null argument"); s != TWB_OK)
    return s;
  return guarded([&] {
    using namespace thetawb;
    std::vector<std::string> want;
    std::string idstr = ids;
    if (idstr == "all") {
      for (const auto& info : claim_catalog()) want.push_back(info.id);
    } else {
      std::stringstream ss(idstr);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) want.push_back(tok);
      }
    }
    if (want.empty()) throw Error(Errc::invalid_argument, "no claims named");
    ClaimParams params;
    params.n_min = n_min;
    params.n_max = n_max;
    params.trials = trials;
    params.seed = seed;
    params.jobs = jobs;
    std::vector<ClaimReport> reports;
    for (const std::string& id : want) reports.push_back(run_claim(id, params));
    std::string fmt = format;
    std::string text;
    if (fmt == "json") text = render_report_json(reports);
    else if (fmt == "csv") text = render_report_csv(reports);
    else throw Error(Errc::invalid_argument, "format must be 'json' or 'csv'");
    *report = dup_string(text);
    *passed = reports_pass(reports) ? 1 : 0;
  });
}

}  // extern "C"
