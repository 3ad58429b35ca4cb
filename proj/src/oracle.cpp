#include "treefpp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "treefpp/errors.hpp"
#include "treefpp/solver.hpp"
#include "treefpp/spectrum.hpp"

namespace treefpp {

namespace {

// f_k, sigma_k for k = 0..n through the level recursion
// f_{k+1} = sum_j D(j) sigma_k^{d-j} (sigma_k^j - (sigma_k - f_k)^j),
// from sigma_0 = 1, f_0 = 1.
std::pair<Int, Int> recursion_level(const DerangementProfile& profile, int n) {
  const int d = profile.degree;
  Int sigma(1), f(1);
  for (int k = 0; k < n; ++k) {
    Int next(0);
    for (int j = 1; j <= d; ++j) {
      if (profile.counts[j] == 0) continue;
      next += int_of(profile.counts[j]) * int_pow(sigma, static_cast<unsigned long>(d - j)) *
              (int_pow(sigma, j) - int_pow(sigma - f, j));
    }
    f = std::move(next);
    sigma = int_pow(sigma, d) * int_of(profile.total);
  }
  return {f, sigma};
}

struct PortraitEnumerator {
  int degree;
  int levels;          // internal levels 0..n-1
  int internal_count;  // (d^n - 1)/(d - 1)
  int label_count;
  std::vector<std::vector<int>> fixed;  // fixed points per label
  std::vector<int> assignment;          // label index per internal vertex

  // Vertices in breadth-first order: children of internal vertex v are
  // v*d + 1 .. v*d + d.
  bool has_fixed_leaf(int v, int level) const {
    for (int c : fixed[assignment[v]]) {
      if (level + 1 == levels) return true;
      if (has_fixed_leaf(v * degree + 1 + c, level + 1)) return true;
    }
    return false;
  }
};

}  // namespace

OracleReport brute_count(const PermSet& s, int n, std::uint64_t budget) {
  if (n < 1) throw precondition_error("brute_count: n must be >= 1");
  const int d = s.degree();
  const auto label_count = static_cast<std::uint64_t>(s.size());

  std::uint64_t internal = 0, per_level = 1;
  for (int l = 0; l < n; ++l) {
    internal += per_level;
    per_level *= static_cast<std::uint64_t>(d);
  }
  // sigma_n = (#S)^internal must stay within the enumeration budget
  long double sigma_estimate = 1.0L;
  for (std::uint64_t i = 0; i < internal && sigma_estimate <= budget; ++i)
    sigma_estimate *= static_cast<long double>(label_count);
  if (sigma_estimate > static_cast<long double>(budget))
    throw budget_error("brute_count: (#S)^" + std::to_string(internal) +
                       " exceeds the enumeration budget");

  PortraitEnumerator e;
  e.degree = d;
  e.levels = n;
  e.internal_count = static_cast<int>(internal);
  e.label_count = static_cast<int>(label_count);
  for (const auto& perm : s.elements()) e.fixed.push_back(perm.fixed_points());
  e.assignment.assign(e.internal_count, 0);

  std::uint64_t hits = 0, total = 0;
  for (;;) {
    ++total;
    if (e.has_fixed_leaf(0, 0)) ++hits;
    int v = 0;  // mixed-radix increment over label indices
    while (v < e.internal_count && ++e.assignment[v] == e.label_count) e.assignment[v++] = 0;
    if (v == e.internal_count) break;
  }

  OracleReport r;
  r.degree = d;
  r.level = n;
  r.sigma = Int(static_cast<unsigned long>(total));
  r.f_brute = Int(static_cast<unsigned long>(hits));

  auto profile = derangement_profile(s);
  auto [f_rec, sigma_rec] = recursion_level(profile, n);
  r.f_recursion = f_rec;

  IterationTrace trace = fpp_iterate(profile, n);
  r.p = trace.p.back();
  r.agrees = (r.f_brute == r.f_recursion) && (sigma_rec == r.sigma) &&
             (r.p * Rat(r.sigma) == Rat(r.f_brute));
  return r;
}

GqpOracleReport gqp_brute(const PermSet& q, const PermSet& p, int n, std::uint64_t budget) {
  validate_gqp_pair(q, p);
  GqpOracleReport out;
  out.sigma_total = 0;
  out.f_total = 0;
  Rat sum(0);
  for (const auto& a : cosets(p, q)) {
    OracleReport r = brute_count(a, n, budget);
    sum += r.p;
    out.sigma_total += r.sigma;
    out.f_total += r.f_brute;
    out.per_coset.emplace_back(a.representative(), std::move(r));
  }
  out.p = sum / Rat(int_of(static_cast<long long>(out.per_coset.size())));
  return out;
}

std::uint64_t default_frontier_cap(int degree) {
  std::uint64_t cap = 1;
  for (int i = 0; i < 12; ++i) cap *= static_cast<std::uint64_t>(degree);
  return cap;
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index) {
  // splitmix64 applied twice to decorrelate the (seed, sample) key
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  state_ = mix(seed + 0x9e3779b97f4a7c15ull * (sample_index + 1));
  state_ = mix(state_ ^ 0xd1b54a32d192ed03ull);
}

std::uint64_t SampleRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint32_t SampleRng::next_below(std::uint32_t n) {
  return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

namespace {

std::uint64_t run_samples(const std::vector<std::uint8_t>& fix_counts, int depth,
                          std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                          std::uint64_t cap) {
  const auto labels = static_cast<std::uint32_t>(fix_counts.size());
  std::uint64_t survivors = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    SampleRng rng(seed, i);
    std::uint64_t frontier = 1;
    bool survived = true;
    for (int level = 0; level < depth && survived; ++level) {
      std::uint64_t next = 0;
      for (std::uint64_t v = 0; v < frontier; ++v) {
        next += fix_counts[rng.next_below(labels)];
        if (next >= cap) break;
      }
      if (next >= cap) break;  // extinction from here is negligible
      frontier = next;
      survived = frontier > 0;
    }
    if (survived) ++survivors;
  }
  return survivors;
}

}  // namespace

McEstimate mc_estimate(const PermSet& s, int depth, std::uint64_t samples, std::uint64_t seed,
                       std::uint64_t cap, unsigned workers) {
  if (depth < 1) throw precondition_error("mc_estimate: depth must be >= 1");
  if (samples < 1) throw precondition_error("mc_estimate: samples must be >= 1");
  if (cap == 0) cap = default_frontier_cap(s.degree());

  std::vector<std::uint8_t> fix_counts;
  fix_counts.reserve(s.elements().size());
  for (const auto& p : s.elements())
    fix_counts.push_back(static_cast<std::uint8_t>(p.fixed_point_count()));

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));

  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = samples / workers * w + std::min<std::uint64_t>(w, samples % workers);
    std::uint64_t end = begin + samples / workers + (w < samples % workers ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      counts[w] = run_samples(fix_counts, depth, seed, begin, end, cap);
    });
  }
  for (auto& t : pool) t.join();

  McEstimate m;
  m.samples = samples;
  for (auto c : counts) m.survivors += c;
  m.estimate = static_cast<double>(m.survivors) / static_cast<double>(samples);
  m.standard_error = std::sqrt(m.estimate * (1.0 - m.estimate) / static_cast<double>(samples));
  m.seed = seed;
  m.depth = depth;
  m.cap = cap;
  return m;
}

}  // namespace treefpp
