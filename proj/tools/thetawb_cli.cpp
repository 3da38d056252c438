// Command line front end; talks to the library through the public C API only.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetawb.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  twb_string_free(s);
  return out;
}

int fail(twb_status status, const std::string& context) {
  std::cerr << "error: " << context << ": " << twb_last_error() << "\n";
  return status == TWB_ERR_PARSE ? 2 : 1;
}

bool parse_pattern(const std::string& text, std::vector<int>& out) {
  std::stringstream ss(text);
  std::string tok;
  out.clear();
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) return false;
      out.push_back(v);
    } catch (...) {
      return false;
    }
  }
  return out.size() >= 2;
}

struct GraphHandle {
  twb_graph* g = nullptr;
  ~GraphHandle() { twb_graph_free(g); }
};

int run_construct(const std::string& family, int n, int r, int a, int b) {
  GraphHandle h;
  twb_status st;
  if (family == "turan") {
    st = twb_construct_turan(n, r, &h.g);
  } else if (a > 0 || b > 0) {
    st = twb_construct_sides(family.c_str(), a, b, &h.g);
  } else {
    st = twb_construct(family.c_str(), n, &h.g);
  }
  if (st != TWB_OK) return fail(st, "construct " + family);
  char* s = nullptr;
  if ((st = twb_graph_to_graph6(h.g, &s)) != TWB_OK) return fail(st, "encode");
  std::cout << take(s) << "\n";
  return 0;
}

int run_check(bool odd_girth, bool bipartite, const std::string& theta) {
  std::vector<int> lengths;
  if (!theta.empty() && !parse_pattern(theta, lengths)) {
    std::cerr << "error: --theta expects comma-separated path lengths, e.g. 1,2,3\n";
    return 2;
  }
  std::string line;
  long lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.empty()) continue;
    GraphHandle h;
    twb_status st = twb_graph_from_graph6(line.c_str(), &h.g);
    if (st != TWB_OK) return fail(st, "line " + std::to_string(lineno));
    std::cout << line << " n=" << twb_graph_order(h.g) << " m=" << twb_graph_edge_count(h.g);
    if (bipartite) std::cout << " bipartite=" << (twb_graph_is_bipartite(h.g) ? "yes" : "no");
    if (odd_girth) {
      int og = twb_graph_odd_girth(h.g);
      std::cout << " odd-girth=";
      if (og == 0) std::cout << "none";
      else std::cout << og;
    }
    if (!lengths.empty()) {
      int has = 0;
      st = twb_contains_theta(h.g, lengths.data(), lengths.size(), &has);
      if (st != TWB_OK) return fail(st, "theta check");
      std::cout << " theta=" << (has ? "contains" : "free");
    }
    std::cout << "\n";
  }
  return 0;
}

int run_spectral(double tol) {
  std::string line;
  long lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.empty()) continue;
    GraphHandle h;
    twb_status st = twb_graph_from_graph6(line.c_str(), &h.g);
    if (st != TWB_OK) return fail(st, "line " + std::to_string(lineno));
    char *lo = nullptr, *hi = nullptr;
    st = twb_rho_bracket(h.g, tol, &lo, &hi);
    if (st != TWB_OK) return fail(st, "spectral bracket");
    std::cout << line << " rho-lo=" << take(lo) << " rho-hi=" << take(hi) << "\n";
  }
  return 0;
}

int run_search(int n, const std::string& pattern, const std::string& objective,
               const std::string& constraint, int jobs) {
  std::vector<int> lengths;
  if (!parse_pattern(pattern, lengths)) {
    std::cerr << "error: --pattern expects comma-separated path lengths, e.g. 1,2,3\n";
    return 2;
  }
  int nonbip = constraint == "non-bipartite" ? 1 : 0;
  char* report = nullptr;
  twb_status st = twb_search_run(n, lengths.data(), lengths.size(), nonbip, objective.c_str(),
                                 jobs, &report);
  if (st != TWB_OK) return fail(st, "search");
  std::cout << take(report);
  return 0;
}

int run_verify(std::vector<std::string> claims, int n_min, int n_max, long trials,
               std::uint64_t seed, int jobs, const std::string& format, bool list) {
  if (list) {
    char* ids = nullptr;
    twb_status st = twb_claim_list(&ids);
    if (st != TWB_OK) return fail(st, "claim list");
    std::cout << take(ids);
    return 0;
  }
  if (claims.empty()) claims.push_back("all");
  std::string joined;
  for (size_t i = 0; i < claims.size(); ++i) {
    if (i) joined += ",";
    joined += claims[i];
  }
  char* report = nullptr;
  int passed = 0;
  twb_status st = twb_verify(joined.c_str(), n_min, n_max, trials, seed, jobs, format.c_str(),
                             &report, &passed);
  if (st != TWB_OK) return fail(st, "verify");
  std::cout << take(report);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal search and certification for theta-free non-bipartite graphs"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Emit a named construction as graph6");
  std::string family;
  int c_n = 0, c_r = 0, c_a = 0, c_b = 0;
  construct->add_option("family", family, "turan, subdivided-bipartite, apex-triangle, pendant-triangle, two-apex-family, triangle-family, cycle, complete, complete-bipartite")->required();
  construct->add_option("--n", c_n, "order (balanced forms)");
  construct->add_option("--r", c_r, "number of parts (turan)");
  construct->add_option("--a", c_a, "first side size");
  construct->add_option("--b", c_b, "second side size");

  auto* check = app.add_subcommand("check", "Check graph6 lines from stdin");
  bool k_odd = false, k_bip = false;
  std::string k_theta;
  check->add_flag("--odd-girth", k_odd, "report the shortest odd cycle length");
  check->add_flag("--bipartite", k_bip, "report bipartiteness");
  check->add_option("--theta", k_theta, "report containment of this theta pattern (e.g. 1,2,3)");

  auto* spectral = app.add_subcommand("spectral", "Certified spectral radius brackets for graph6 lines from stdin");
  double s_tol = 1e-9;
  spectral->add_option("--tol", s_tol, "target bracket width");

  auto* search = app.add_subcommand("search", "Exhaustive extremal search over isomorphism classes");
  int e_n = 0, e_jobs = 1;
  std::string e_pattern, e_objective = "edges", e_constraint = "non-bipartite";
  search->add_option("--n", e_n, "graph order")->required();
  search->add_option("--pattern", e_pattern, "theta pattern path lengths, e.g. 1,2,3")->required();
  search->add_option("--objective", e_objective, "edges or rho");
  search->add_option("--constraint", e_constraint, "non-bipartite or any");
  search->add_option("--jobs", e_jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "Run registered claims and render a report");
  std::vector<std::string> v_claims;
  int v_nmin = -1, v_nmax = -1, v_jobs = 1;
  long v_trials = -1;
  std::uint64_t v_seed = 2026;
  std::string v_format = "json";
  bool v_list = false;
  verify->add_option("--claim", v_claims, "claim id (repeatable), or 'all'");
  verify->add_option("--n-min", v_nmin, "override the smallest order");
  verify->add_option("--n-max", v_nmax, "override the largest order");
  verify->add_option("--trials", v_trials, "override the sample size");
  verify->add_option("--seed", v_seed, "random seed");
  verify->add_option("--jobs", v_jobs, "worker threads");
  verify->add_option("--format", v_format, "json or csv");
  verify->add_flag("--list", v_list, "list claim ids and exit");

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) return run_construct(family, c_n, c_r, c_a, c_b);
  if (check->parsed()) return run_check(k_odd, k_bip, k_theta);
  if (spectral->parsed()) return run_spectral(s_tol);
  if (search->parsed()) return run_search(e_n, e_pattern, e_objective, e_constraint, e_jobs);
  if (verify->parsed()) return run_verify(v_claims, v_nmin, v_nmax, v_trials, v_seed, v_jobs, v_format, v_list);
  return 0;
}
