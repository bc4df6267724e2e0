#include "dynhull/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <new>
#include <ostream>
#include <set>

#include "dynhull/determinants.hpp"
#include "dynhull/dyndet.hpp"
#include "dynhull/hull.hpp"

namespace dynhull {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

/// Incremental FNV-1a over ';'-separated fields.
struct Fnv {
  std::uint64_t h = 14695981039346656037ull;
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>(';');
    h *= 1099511628211ull;
  }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ExactRat to_rat(const ExactInt& v) { return ExactRat(v); }

SquareMatrix<ExactRat> to_rat(const SquareMatrix<ExactInt>& m) {
  SquareMatrix<ExactRat> r(m.dim());
  for (int c = 0; c < m.dim(); ++c)
    for (int rw = 0; rw < m.dim(); ++rw) r(rw, c) = to_rat(m(rw, c));
  return r;
}

ColumnUpdate<ExactRat> to_rat(const ColumnUpdate<ExactInt>& u) {
  ColumnUpdate<ExactRat> r;
  r.col = u.col;
  r.values.reserve(u.values.size());
  for (const auto& v : u.values) r.values.push_back(to_rat(v));
  return r;
}

PointSet<ExactRat> to_rat(const PointSet<ExactInt>& ps) {
  PointSet<ExactRat> r(ps.dim);
  r.pts.reserve(ps.size());
  for (const auto& p : ps.pts) {
    std::vector<ExactRat> q;
    q.reserve(p.size());
    for (const auto& v : p) q.push_back(to_rat(v));
    r.pts.push_back(std::move(q));
  }
  return r;
}

constexpr std::uint64_t kMsToNs = 1000000ull;

/// Times one static algorithm over a list of matrices; per-trial clocking,
/// hashing and bookkeeping outside the clock.
template <class S, class F>
BenchRecord time_static(const std::string& name, const std::vector<SquareMatrix<S>>& mats,
                        std::uint64_t budget_ms, F&& det) {
  BenchRecord rec;
  rec.algorithm = name;
  Fnv hash;
  for (const auto& m : mats) {
    if (budget_ms && rec.wall_time_ns > budget_ms * kMsToNs) {
      rec.status = "budget";
      break;
    }
    const auto t0 = Clock::now();
    S v = det(m);
    rec.wall_time_ns += ns_since(t0);
    hash.feed(v.str());
    rec.peak_mem_bytes_estimate =
        std::max(rec.peak_mem_bytes_estimate,
                 static_cast<std::uint64_t>(m.bytes_estimate() + v.bytes_estimate()));
    ++rec.trials;
  }
  rec.result_hash = hash.h;
  if (!mats.empty()) {
    CountScope scope(rec.op_counts);
    (void)det(mats.front());
  }
  return rec;
}

/// Times a dynamic-update chain: one untimed init, then per-update clocks.
template <class State, class S, class Init>
BenchRecord time_dynamic(const std::string& name, const SquareMatrix<S>& base,
                         const std::vector<ColumnUpdate<S>>& updates, std::uint64_t budget_ms,
                         Init&& init) {
  BenchRecord rec;
  rec.algorithm = name;
  State state = init(base);
  Fnv hash;
  for (const auto& u : updates) {
    if (budget_ms && rec.wall_time_ns > budget_ms * kMsToNs) {
      rec.status = "budget";
      break;
    }
    const auto t0 = Clock::now();
    state.apply(u);
    rec.wall_time_ns += ns_since(t0);
    hash.feed(state.det().str());
    rec.peak_mem_bytes_estimate = std::max(rec.peak_mem_bytes_estimate,
                                           static_cast<std::uint64_t>(state.bytes_estimate()));
    ++rec.trials;
  }
  rec.result_hash = hash.h;
  if (!updates.empty()) {
    State fresh = init(base);
    CountScope scope(rec.op_counts);
    fresh.apply(updates.front());
  }
  return rec;
}

template <class S>
void run_det_batch(std::vector<BenchRecord>& out, Scenario sc, int d, std::uint64_t trials,
                   const DetBenchConfig& cfg, std::set<std::string>& dead) {
  MatrixChain<S> chain;
  if constexpr (scalar_traits<S>::is_field) {
    chain = gen_matrix_rat(d, sc, mix_seed(cfg.seed, (static_cast<std::uint64_t>(scenario_tag(sc)) << 8) | static_cast<std::uint64_t>(d)), trials);
  } else {
    chain = gen_matrix_int(d, sc, mix_seed(cfg.seed, (static_cast<std::uint64_t>(scenario_tag(sc)) << 8) | static_cast<std::uint64_t>(d)), trials);
  }
  // Materialize the matrix after each update; every algorithm sees the
  // exact same inputs, so result hashes must agree.
  std::vector<SquareMatrix<S>> mats;
  mats.reserve(chain.updates.size());
  SquareMatrix<S> cur = chain.base;
  for (const auto& u : chain.updates) {
    cur.set_column(u.col, std::span<const S>(u.values));
    mats.push_back(cur);
  }
  // lu and dyninv run over the field; integer scenarios get converted twins.
  std::vector<SquareMatrix<ExactRat>> rmats;
  SquareMatrix<ExactRat> rbase;
  std::vector<ColumnUpdate<ExactRat>> rupdates;
  const bool needs_rat =
      std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                  [](const std::string& a) { return a == "lu" || a == "dyninv"; });
  if constexpr (!scalar_traits<S>::is_field) {
    if (needs_rat) {
      rbase = to_rat(chain.base);
      rmats.reserve(mats.size());
      for (const auto& m : mats) rmats.push_back(to_rat(m));
      rupdates.reserve(chain.updates.size());
      for (const auto& u : chain.updates) rupdates.push_back(to_rat(u));
    }
  }

  for (const std::string& algo : cfg.algorithms) {
    BenchRecord rec;
    if (dead.count(algo)) {
      rec.algorithm = algo;
      rec.status = "skipped";
    } else if (algo == "laplace") {
      rec = time_static<S>(algo, mats, cfg.budget_ms, [](const auto& m) { return det_laplace(m); });
    } else if (algo == "bird") {
      rec = time_static<S>(algo, mats, cfg.budget_ms, [](const auto& m) { return det_bird(m); });
    } else if (algo == "lu") {
      if constexpr (scalar_traits<S>::is_field) {
        rec = time_static<S>(algo, mats, cfg.budget_ms, [](const auto& m) { return det_lu(m); });
      } else {
        rec = time_static<ExactRat>(algo, rmats, cfg.budget_ms,
                                    [](const auto& m) { return det_lu(m); });
      }
    } else if (algo == "dynadj") {
      rec = time_dynamic<DynAdjState<S>>(algo, chain.base, chain.updates, cfg.budget_ms,
                                         [](const auto& b) { return dynadj_init(b); });
    } else if (algo == "dyninv") {
      if constexpr (scalar_traits<S>::is_field) {
        rec = time_dynamic<DynInvState<S>>(algo, chain.base, chain.updates, cfg.budget_ms,
                                           [](const auto& b) { return dyninv_init(b); });
      } else {
        rec = time_dynamic<DynInvState<ExactRat>>(algo, rbase, rupdates, cfg.budget_ms,
                                                  [](const auto& b) { return dyninv_init(b); });
      }
    } else {
      throw Error("unknown determinant algorithm '" + algo + "'");
    }
    if (rec.status == "budget") dead.insert(algo);
    rec.d = d;
    rec.scenario = scenario_tag(sc);
    rec.seed = cfg.seed;
    out.push_back(std::move(rec));
  }
}

}  // namespace

std::vector<BenchRecord> bench_determinants(const DetBenchConfig& cfg) {
  std::vector<BenchRecord> out;
  std::vector<int> dims = cfg.dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  for (Scenario sc : cfg.scenarios) {
    std::set<std::string> dead;
    for (int d : dims) {
      const std::uint64_t trials =
          cfg.trials_override ? cfg.trials_override : (d < 7 ? 1000u : 100u);
      if (scenario_is_integer(sc)) {
        run_det_batch<ExactInt>(out, sc, d, trials, cfg, dead);
      } else {
        run_det_batch<ExactRat>(out, sc, d, trials, cfg, dead);
      }
    }
  }
  return out;
}

namespace {

template <class S>
BenchRecord hull_build_record(const std::string& variant, const PointSet<S>& pts,
                              const HullConfig& hc, std::uint64_t budget_ms) {
  BenchRecord rec;
  rec.algorithm = variant;
  rec.trials = 1;
  try {
    const auto t0 = Clock::now();
    Triangulation<S> tri = convex_hull(pts, hc);
    rec.wall_time_ns = ns_since(t0);
    const HullStats st = tri.stats();
    rec.peak_mem_bytes_estimate = st.cache_bytes_estimate;
    Fnv hash;
    hash.feed(tri.volume().str());
    for (VertexId v : tri.hull_vertices()) hash.feed(std::to_string(v));
    rec.result_hash = hash.h;
    rec.note = "cells=" + std::to_string(st.t_cells) +
               " verts=" + std::to_string(tri.hull_vertices().size());
    if (budget_ms && rec.wall_time_ns > budget_ms * kMsToNs) rec.status = "budget";
    // Representative per-predicate cost: one boundary facet test.
    if (!tri.boundary().empty()) {
      const auto& f = tri.boundary().begin()->second;
      const auto& c = tri.cells()[static_cast<std::size_t>(f.cell)];
      CountScope scope(rec.op_counts);
      if (tri.has_states()) {
        (void)tri.cached_orientation(std::span<const VertexId>(f.ridge),
                                     std::span<const S>(pts[f.opposite]));
      } else {
        SquareMatrix<S> m = orientation_matrix(pts, std::span<const VertexId>(c.colmap));
        (void)det_laplace(m);
      }
    }
  } catch (const std::bad_alloc&) {
    rec.status = "oom";
  } catch (const DegenerateInput& e) {
    rec.status = "degenerate";
    rec.note = e.what();
  }
  return rec;
}

}  // namespace

std::vector<BenchRecord> bench_hull(const HullBenchConfig& cfg) {
  std::vector<BenchRecord> out;
  std::vector<int> dims = cfg.dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  std::vector<long> ns = cfg.n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::set<std::string> dead;
  for (int d : dims) {
    for (long n : ns) {
      const std::uint64_t seed_dn =
          mix_seed(cfg.seed, (static_cast<std::uint64_t>(d) << 32) | static_cast<std::uint64_t>(n));
      PointSet<ExactInt> pi;
      PointSet<ExactRat> pq;
      if (cfg.integer_input) {
        pi = gen_points_int(n, d, cfg.dist, seed_dn);
        pq = to_rat(pi);
      } else {
        pq = gen_points_rat(n, d, cfg.dist, seed_dn);
      }
      std::uint64_t ok_hash = 0;
      bool have_hash = false;
      for (const std::string& variant : cfg.variants) {
        BenchRecord rec;
        if (!cfg.integer_input && variant == "hashed-z") {
          rec.algorithm = variant;
          rec.status = "n/a";
          rec.note = "integer kernel undefined for rational input";
        } else if (dead.count(variant)) {
          rec.algorithm = variant;
          rec.status = "skipped";
        } else {
          HullConfig hc;
          hc.threshold_dim = cfg.threshold_dim;
          if (variant == "hashed-z") {
            hc.predicate_mode = PredicateMode::Hashed;
            rec = hull_build_record(variant, pi, hc, cfg.budget_ms);
          } else if (variant == "hashed-q") {
            hc.predicate_mode = PredicateMode::Hashed;
            rec = hull_build_record(variant, pq, hc, cfg.budget_ms);
          } else if (variant == "laplace") {
            hc.predicate_mode = PredicateMode::Laplace;
            if (cfg.integer_input) {
              rec = hull_build_record(variant, pi, hc, cfg.budget_ms);
            } else {
              rec = hull_build_record(variant, pq, hc, cfg.budget_ms);
            }
          } else {
            throw Error("unknown hull variant '" + variant + "'");
          }
          if (rec.status == "budget" || rec.status == "oom") dead.insert(variant);
          if (rec.status == "ok" || rec.status == "budget") {
            if (!have_hash) {
              ok_hash = rec.result_hash;
              have_hash = true;
            } else if (rec.result_hash != ok_hash) {
              rec.status = "mismatch";  // variants must agree exactly
            }
          }
        }
        rec.d = d;
        rec.n = n;
        rec.distribution = distribution_name(cfg.dist);
        rec.scenario = cfg.integer_input ? 'd' : 'b';
        rec.seed = cfg.seed;
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

std::vector<BenchRecord> bench_locate(const LocateBenchConfig& cfg) {
  std::vector<BenchRecord> out;
  PointSet<ExactInt> pts = gen_points_int(cfg.n, cfg.d, cfg.build_dist, mix_seed(cfg.seed, 1));
  PointSet<ExactInt> queries =
      gen_points_int(cfg.q_count, cfg.d, cfg.query_dist, mix_seed(cfg.seed, 2));

  HullConfig hc;
  hc.predicate_mode = PredicateMode::Hashed;
  BenchRecord build = hull_build_record<ExactInt>("build-hashed", pts, hc, cfg.budget_ms);
  build.d = cfg.d;
  build.n = cfg.n;
  build.distribution = distribution_name(cfg.build_dist);
  build.scenario = 'd';
  build.seed = cfg.seed;
  const bool build_ok = build.status == "ok";
  out.push_back(build);
  if (!build_ok) return out;

  // The record above rebuilt nothing we can reuse; build once more for the
  // query phase (untimed here; the timing lives in the record already).
  Triangulation<ExactInt> tri = convex_hull(pts, hc);

  auto run_queries = [&](auto&& locate_fn) {
    std::vector<CellId> answers;
    answers.reserve(queries.size());
    CellId hint = 0;
    const auto t0 = Clock::now();
    for (const auto& q : queries.pts) {
      CellId r = locate_fn(std::span<const ExactInt>(q), hint);
      if (r != kOutsideCell) hint = r;
      answers.push_back(r);
    }
    return std::pair<std::uint64_t, std::vector<CellId>>(ns_since(t0), std::move(answers));
  };

  auto [hashed_ns, hashed_ans] = run_queries(
      [&](std::span<const ExactInt> q, CellId hint) { return tri.locate(q, hint); });
  auto [scratch_ns, scratch_ans] = run_queries([&](std::span<const ExactInt> q, CellId hint) {
    return tri.locate_scratch(q, StaticDetKind::Auto, hint);
  });

  Fnv h1, h2;
  for (CellId c : hashed_ans) h1.feed(std::to_string(c));
  for (CellId c : scratch_ans) h2.feed(std::to_string(c));

  BenchRecord qh;
  qh.algorithm = "locate-hashed";
  qh.trials = static_cast<std::uint64_t>(hashed_ans.size());
  qh.wall_time_ns = hashed_ns;
  qh.result_hash = h1.h;
  qh.peak_mem_bytes_estimate = tri.stats().cache_bytes_estimate;
  {
    CountScope scope(qh.op_counts);
    (void)tri.locate(std::span<const ExactInt>(queries.pts.front()), 0);
  }

  BenchRecord qs;
  qs.algorithm = "locate-scratch";
  qs.trials = static_cast<std::uint64_t>(scratch_ans.size());
  qs.wall_time_ns = scratch_ns;
  qs.result_hash = h2.h;
  {
    CountScope scope(qs.op_counts);
    (void)tri.locate_scratch(std::span<const ExactInt>(queries.pts.front()), StaticDetKind::Auto, 0);
  }
  if (hashed_ans != scratch_ans) {
    qs.status = "mismatch";
  } else if (hashed_ns > 0) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "speedup=%.2f",
                  static_cast<double>(scratch_ns) / static_cast<double>(hashed_ns));
    qs.note = buf;
  }
  for (BenchRecord* r : {&qh, &qs}) {
    r->d = cfg.d;
    r->n = cfg.q_count;
    r->distribution = distribution_name(cfg.query_dist);
    r->scenario = 'd';
    r->seed = cfg.seed;
  }
  out.push_back(std::move(qh));
  out.push_back(std::move(qs));
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "# dynhull-bench v1\n";
  out << "# op counts describe one representative operation (determinant, update, predicate or "
         "query), collected untimed; a fused multiply-add counts as one mul\n";
  out << "# mem_bytes: GMP limb bytes plus fixed container overhead constants\n";
  out << "algorithm,d,n,scenario,distribution,seed,trials,wall_time_ns,ns_per_trial,adds,muls,"
         "divs,mem_bytes,result_hash,status,note\n";
  for (const auto& r : records) {
    out << r.algorithm << ',' << r.d << ',' << r.n << ',' << r.scenario << ',' << r.distribution
        << ',' << r.seed << ',' << r.trials << ',';
    if (r.trials == 0) {
      out << "--,--,";
    } else {
      out << r.wall_time_ns << ',' << (r.wall_time_ns / r.trials) << ',';
    }
    out << r.op_counts.adds << ',' << r.op_counts.muls << ',' << r.op_counts.divs << ','
        << r.peak_mem_bytes_estimate << ',';
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(r.result_hash));
    out << hex << ',' << r.status << ',' << r.note << '\n';
  }
}

}  // namespace dynhull
