#include "search.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "canonical.hpp"
#include "enumeration.hpp"

namespace thetawb {

namespace {

struct EngineSpec {
  int n = 0;
  Objective obj = Objective::Edges;
  int jobs = 1;
  long lb = -1;
  HereditaryFilter filter;
  std::function<bool(const Graph&)> target_ok;  // non-hereditary, checked at target order
  std::function<bool(const Graph&)> recheck;    // independent maximizer validation
};

void sort_by_form(std::vector<Graph>& gs) {
  std::sort(gs.begin(), gs.end(), [](const Graph& a, const Graph& b) {
    return graph6_encode(a) < graph6_encode(b);
  });
}

bool verify_record(const EngineSpec& es, const ExtremalRecord& rec) {
  if (rec.maximizers.empty()) return false;
  for (const Graph& m : rec.maximizers) {
    if (m.order() != es.n) return false;
    Graph back = graph6_decode(graph6_encode(m));
    if (!(back == m)) return false;
    if (es.target_ok && !es.target_ok(m)) return false;
    if (es.recheck && !es.recheck(m)) return false;
    if (es.obj == Objective::Edges && static_cast<long>(m.edge_count()) != rec.best_edges) return false;
  }
  return true;
}

ExtremalRecord run_edges(const EngineSpec& es) {
  ExtremalRecord rec;
  rec.n = es.n;
  rec.objective = Objective::Edges;
  std::mutex mu;
  long best = -1, scanned = 0;
  std::vector<Graph> winners;
  EnumerateOptions opts;
  opts.jobs = es.jobs;
  opts.filter = es.filter;
  opts.min_edges_at_target = es.lb;
  enumerate_all(es.n, [&](const Graph& g) {
    long e = g.edge_count();
    bool ok = !es.target_ok || es.target_ok(g);
    std::lock_guard<std::mutex> lk(mu);
    ++scanned;
    if (!ok || e < best) return;
    if (e > best) {
      best = e;
      winners.clear();
    }
    winners.push_back(canonical_graph(g));
  }, opts);
  rec.best_edges = best;
  rec.maximizers = std::move(winners);
  sort_by_form(rec.maximizers);
  rec.classes_scanned = scanned;
  if (!rec.maximizers.empty()) rec.rho = rho_bracket(rec.maximizers.front(), 1e-9);
  rec.verified = verify_record(es, rec);
  return rec;
}

ExtremalRecord run_rho(const EngineSpec& es) {
  ExtremalRecord rec;
  rec.n = es.n;
  rec.objective = Objective::SpectralRadius;
  struct Cand {
    std::string form;
    double lo, hi;
  };
  std::mutex mu;
  std::vector<Cand> cands;
  long scanned = 0;
  EnumerateOptions opts;
  opts.jobs = es.jobs;
  opts.filter = es.filter;
  enumerate_all(es.n, [&](const Graph& g) {
    bool ok = !es.target_ok || es.target_ok(g);
    RhoInterval iv;
    std::string form;
    if (ok) {
      iv = rho_bracket(g, 1e-7);
      form = canonical_form(g);
    }
    std::lock_guard<std::mutex> lk(mu);
    ++scanned;
    if (ok) cands.push_back({std::move(form), iv.lo.get_d() - 1e-9, iv.hi.get_d() + 1e-9});
  }, opts);
  rec.classes_scanned = scanned;
  if (cands.empty()) return rec;
  double best_lo = cands[0].lo;
  for (const Cand& c : cands) best_lo = std::max(best_lo, c.lo);
  std::vector<std::string> survivors;
  for (const Cand& c : cands)
    if (c.hi >= best_lo) survivors.push_back(c.form);
  std::sort(survivors.begin(), survivors.end());
  // Exact confirmation of the shortlist.
  std::vector<Graph> winners;
  AlgebraicReal best_root;
  bool have_best = false;
  for (const std::string& f : survivors) {
    Graph g = graph6_decode(f);
    AlgebraicReal r = largest_root(char_poly(g));
    if (!have_best) {
      best_root = r;
      winners = {g};
      have_best = true;
      continue;
    }
    int c = compare(r, best_root);
    if (c > 0) {
      best_root = r;
      winners = {g};
    } else if (c == 0) {
      winners.push_back(g);
    }
  }
  rec.maximizers = std::move(winners);
  sort_by_form(rec.maximizers);
  for (const Graph& g : rec.maximizers)
    rec.best_edges = std::max(rec.best_edges, static_cast<long>(g.edge_count()));
  refine_below(best_root, mpq_class(1, 1000000000000L));
  rec.rho = {best_root.lo < 0 ? mpq_class(0) : best_root.lo, best_root.hi};
  rec.verified = verify_record(es, rec);
  return rec;
}

HereditaryFilter theta_free_filter(const ThetaPattern& pattern) {
  return [pattern](const Graph& g) { return !contains_theta(g, pattern).has_value(); };
}

void validate_common(int n, int jobs, int n_max) {
  if (n < 1 || n > n_max)
    throw Error(Errc::too_large, "search order out of range");
  if (jobs < 1) throw Error(Errc::invalid_argument, "jobs must be positive");
}

}  // namespace

ExtremalRecord ex_search(const SearchSpec& spec) {
  validate_common(spec.n, spec.jobs, 10);
  if (spec.pattern.lengths.size() < 2)
    throw Error(Errc::invalid_argument, "pattern must have at least two paths");
  EngineSpec es;
  es.n = spec.n;
  es.obj = Objective::Edges;
  es.jobs = spec.jobs;
  es.lb = spec.known_lower_bound;
  es.filter = theta_free_filter(spec.pattern);
  if (spec.require_nonbipartite)
    es.target_ok = [](const Graph& g) { return !is_bipartite(g).has_value(); };
  ThetaPattern pat = spec.pattern;
  bool nonbip = spec.require_nonbipartite;
  es.recheck = [pat, nonbip](const Graph& g) {
    if (contains_theta(g, pat).has_value()) return false;
    if (nonbip && is_bipartite(g).has_value()) return false;
    return true;
  };
  return run_edges(es);
}

ExtremalRecord spex_search(const SearchSpec& spec) {
  validate_common(spec.n, spec.jobs, 9);
  if (spec.pattern.lengths.size() < 2)
    throw Error(Errc::invalid_argument, "pattern must have at least two paths");
  EngineSpec es;
  es.n = spec.n;
  es.obj = Objective::SpectralRadius;
  es.jobs = spec.jobs;
  es.filter = theta_free_filter(spec.pattern);
  if (spec.require_nonbipartite)
    es.target_ok = [](const Graph& g) { return !is_bipartite(g).has_value(); };
  ThetaPattern pat = spec.pattern;
  bool nonbip = spec.require_nonbipartite;
  es.recheck = [pat, nonbip](const Graph& g) {
    if (contains_theta(g, pat).has_value()) return false;
    if (nonbip && is_bipartite(g).has_value()) return false;
    return true;
  };
  return run_rho(es);
}

ExtremalRecord odd_girth_search(int n, int min_odd_girth, Objective objective, int jobs) {
  validate_common(n, jobs, 10);
  if (min_odd_girth < 3 || min_odd_girth % 2 == 0)
    throw Error(Errc::invalid_argument, "minimum odd girth must be an odd number at least 3");
  EngineSpec es;
  es.n = n;
  es.obj = objective;
  es.jobs = jobs;
  es.filter = [min_odd_girth](const Graph& g) {
    auto og = odd_girth(g);
    return !og || *og >= min_odd_girth;
  };
  es.target_ok = [](const Graph& g) { return !is_bipartite(g).has_value(); };
  es.recheck = [min_odd_girth](const Graph& g) {
    auto og = odd_girth(g);
    return og && *og >= min_odd_girth;
  };
  return objective == Objective::Edges ? run_edges(es) : run_rho(es);
}

}  // namespace thetawb
