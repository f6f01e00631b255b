#include "hypcert/weight_search.hpp"

#include <algorithm>
#include <thread>

#include "hypcert/errors.hpp"

namespace hypcert {

WeightedBoundary to_boundary(const SurfaceConfig& cfg, const std::vector<long>& weights) {
  std::vector<Rational> w;
  w.reserve(weights.size());
  for (long x : weights) w.emplace_back(x);
  return WeightedBoundary(cfg, std::move(w));
}

WeightedBoundary ansatz_weights(const SurfaceConfig& cfg) {
  const auto& comps = cfg.components();
  if (comps.size() != 4 || !comps[3].hyperplane) {
    throw ConfigError("ansatz needs three paired components followed by the hyperplane");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!comps[i].paired) throw ConfigError("ansatz needs three paired components");
  }
  const long c = 4L * comps[0].degree * comps[1].degree * comps[2].degree;
  std::vector<long> w{c / comps[0].degree, c / comps[1].degree, c / comps[2].degree, 3 * c / 4};
  return to_boundary(cfg, w);
}

bool ampleness_monotone(const SurfaceConfig& cfg) {
  for (std::size_t i = 0; i < cfg.component_count(); ++i) {
    for (std::size_t j = i; j < cfg.component_count(); ++j) {
      if (intersect(strict_transform(cfg, i), strict_transform(cfg, j)) < 0) return false;
    }
  }
  return true;
}

namespace {

bool passes_ampleness(const SurfaceConfig& cfg, const std::vector<long>& w) {
  return ample_sufficient(cfg, to_boundary(cfg, w)).certified;
}

void scan_prefix(const SurfaceConfig& cfg, const SearchOptions& opt, bool prune, std::vector<long>& w,
                 std::size_t pos, std::vector<SearchHit>& out) {
  const std::size_t r = w.size();
  if (pos + 1 < r) {
    for (long v = 1; v <= opt.bound; ++v) {
      w[pos] = v;
      if (prune) {
        // Everything below this prefix is dominated by the all-bound completion.
        std::vector<long> top = w;
        std::fill(top.begin() + static_cast<long>(pos) + 1, top.end(), opt.bound);
        if (!passes_ampleness(cfg, top)) continue;
      }
      scan_prefix(cfg, opt, prune, w, pos + 1, out);
    }
    return;
  }
  long first = 1;
  if (prune) {
    w[pos] = opt.bound;
    if (!passes_ampleness(cfg, w)) return;
    long lo = 1, hi = opt.bound;
    while (lo < hi) {
      long mid = lo + (hi - lo) / 2;
      w[pos] = mid;
      if (passes_ampleness(cfg, w)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    first = lo;
  }
  for (long v = first; v <= opt.bound; ++v) {
    w[pos] = v;
    CZReport report = evaluate_cz(cfg, to_boundary(cfg, w), opt.cz);
    if (report.overall == Verdict::pass) out.push_back({w, *report.epsilon});
  }
}

}  // namespace

std::vector<SearchHit> search(const SurfaceConfig& cfg, const SearchOptions& options) {
  if (options.bound < 1) throw ConfigError("search bound must be >= 1");
  const std::size_t r = cfg.component_count();
  if (r == 0) return {};
  const bool prune = options.prune && ampleness_monotone(cfg);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.bound)));
  std::vector<std::vector<SearchHit>> partial(workers);
  auto run = [&](unsigned worker) {
    std::vector<long> w(r, 1);
    for (long v = 1 + worker; v <= options.bound; v += workers) {
      if (r == 1) {
        w[0] = v;
        CZReport report = evaluate_cz(cfg, to_boundary(cfg, w), options.cz);
        if (report.overall == Verdict::pass) partial[worker].push_back({w, *report.epsilon});
        continue;
      }
      w[0] = v;
      if (prune) {
        std::vector<long> top(r, options.bound);
        top[0] = v;
        if (!passes_ampleness(cfg, top)) continue;
      }
      scan_prefix(cfg, options, prune, w, 1, partial[worker]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run, k);
  }

  std::vector<SearchHit> hits;
  for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());

  auto sum = [](const SearchHit& h) {
    long s = 0;
    for (long x : h.weights) s += x;
    return s;
  };
  if (options.objective == Objective::min_sum) {
    std::sort(hits.begin(), hits.end(), [&](const SearchHit& a, const SearchHit& b) {
      const long sa = sum(a), sb = sum(b);
      if (sa != sb) return sa < sb;
      return a.weights < b.weights;
    });
  } else {
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
      const int c = compare_cross(a.epsilon, b.epsilon);
      if (c != 0) return c > 0;
      return a.weights < b.weights;
    });
  }
  if (options.top && hits.size() > *options.top) hits.resize(*options.top);
  return hits;
}

}  // namespace hypcert
