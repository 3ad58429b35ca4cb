#include "treefpp/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

#include "treefpp/errors.hpp"

namespace treefpp {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t totient(std::uint64_t d) {
  std::uint64_t out = d;
  for (auto [p, e] : factorize(d)) out = out / p * (p - 1);
  return out;
}

std::uint64_t psi(std::uint64_t d) {
  std::uint64_t out = d;
  for (auto [p, e] : factorize(d)) out = out / p * (p - 2);
  return out;
}

Rat unit_pair_ratio(std::uint64_t d) {
  Rat prod(1);
  for (auto [p, e] : factorize(d)) prod *= make_rat(Int(static_cast<long>(p - 2)), Int(static_cast<long>(p - 1)));
  return prod;
}

std::vector<std::uint64_t> unit_subgroup(std::uint64_t d,
                                         const std::vector<std::uint64_t>& generators) {
  if (d < 1) throw precondition_error("unit_subgroup: d must be >= 1");
  if (generators.empty()) {
    std::vector<std::uint64_t> full;
    for (std::uint64_t a = 1; a <= d; ++a)
      if (std::gcd(a % d, d) == 1) full.push_back(a % d == 0 ? 0 : a % d);
    if (d == 1) full = {0};
    std::sort(full.begin(), full.end());
    return full;
  }
  std::set<std::uint64_t> closure{1 % d};
  for (auto g : generators) {
    if (std::gcd(g % d, d) != 1)
      throw precondition_error("unit_subgroup: " + std::to_string(g) + " is not a unit mod " +
                               std::to_string(d));
    closure.insert(g % d);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(closure.begin(), closure.end());
    for (auto a : cur)
      for (auto b : cur)
        if (closure.insert(a * b % d).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

std::vector<std::vector<std::uint64_t>> all_unit_subgroups(std::uint64_t d) {
  std::vector<std::uint64_t> units = unit_subgroup(d, {});
  std::set<std::vector<std::uint64_t>> found;
  found.insert(unit_subgroup(d, {1}));
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto current : std::set<std::vector<std::uint64_t>>(found)) {
      for (auto u : units) {
        if (std::binary_search(current.begin(), current.end(), u)) continue;
        auto gens = current;
        gens.push_back(u);
        if (found.insert(unit_subgroup(d, gens)).second) grew = true;
      }
    }
  }
  return {found.begin(), found.end()};
}

bool f2_invertible(const BitMatrixF2& m) {
  std::array<std::uint16_t, 16> rows = m.rows;
  for (int col = 0; col < m.n; ++col) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << col);
    int pivot = -1;
    for (int r = col; r < m.n; ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(rows[col], rows[pivot]);
    for (int r = col + 1; r < m.n; ++r)
      if (rows[r] & bit) rows[r] ^= rows[col];
  }
  return true;
}

BitMatrixF2 f2_add_identity(BitMatrixF2 m) {
  for (int i = 0; i < m.n; ++i) m.rows[i] ^= static_cast<std::uint16_t>(1u << i);
  return m;
}

namespace {

// Rank check on raw rows; used in the hot enumeration loop.
inline bool rows_invertible(std::uint32_t* rows, int n) {
  for (int col = 0; col < n; ++col) {
    const std::uint32_t bit = 1u << col;
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(rows[col], rows[pivot]);
    for (int r = col + 1; r < n; ++r)
      if (rows[r] & bit) rows[r] ^= rows[col];
  }
  return true;
}

void count_range(int n, std::uint64_t begin, std::uint64_t end, std::uint64_t& good,
                 std::uint64_t& total) {
  const std::uint32_t row_mask = (1u << n) - 1;
  std::uint64_t g = 0, t = 0;
  std::uint32_t rows[8], work[8];
  for (std::uint64_t cand = begin; cand < end; ++cand) {
    std::uint64_t bits = cand;
    for (int i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>(bits) & row_mask;
      bits >>= n;
    }
    for (int i = 0; i < n; ++i) work[i] = rows[i];
    if (!rows_invertible(work, n)) continue;
    ++t;
    for (int i = 0; i < n; ++i) work[i] = rows[i] ^ (1u << i);
    if (rows_invertible(work, n)) ++g;
  }
  good = g;
  total = t;
}

}  // namespace

Glnf2Count glnf2_count(int n, bool allow_heavy, unsigned workers) {
  if (n < 1 || n > 6) throw budget_error("glnf2_count: n must be in 1..6");
  if (n == 6 && !allow_heavy)
    throw budget_error("glnf2_count: n = 6 enumerates 2^36 matrices; pass the heavy-budget flag");
  const std::uint64_t space = 1ull << (n * n);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::uint64_t>(workers, space);

  std::vector<std::uint64_t> good(workers, 0), total(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = space / workers * w + std::min<std::uint64_t>(w, space % workers);
    std::uint64_t end = begin + space / workers + (w < space % workers ? 1 : 0);
    pool.emplace_back(count_range, n, begin, end, std::ref(good[w]), std::ref(total[w]));
  }
  for (auto& t : pool) t.join();

  Glnf2Count out;
  for (unsigned w = 0; w < workers; ++w) {
    out.good += good[w];
    out.total += total[w];
  }
  return out;
}

BitMatrixF2 witness_matrix(int n) {
  if (n <= 1)
    throw precondition_error("witness_matrix: no witness exists for n <= 1 (GL_1(F_2) = {I})");
  if (n > 16) throw budget_error("witness_matrix: n exceeds the 16-bit row storage");

  BitMatrixF2 m;
  m.n = n;
  auto put = [&](int row, int col, int bit) {
    if (bit) m.rows[row] |= static_cast<std::uint16_t>(1u << col);
  };
  const int a2[2][2] = {{1, 1}, {1, 0}};
  const int a3[3][3] = {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};

  int at = 0;
  int two_blocks = (n % 2 == 0) ? n / 2 : (n - 3) / 2;
  for (int blk = 0; blk < two_blocks; ++blk, at += 2)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) put(at + i, at + j, a2[i][j]);
  if (n % 2 == 1)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) put(at + i, at + j, a3[i][j]);

  if (!f2_invertible(m) || !f2_invertible(f2_add_identity(m)))
    throw std::logic_error("witness_matrix: constructed matrix failed verification");
  return m;
}

namespace {

Permutation affine_perm(int d, std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint8_t> img(d);
  for (int x = 0; x < d; ++x) img[x] = static_cast<std::uint8_t>((a * x + b) % d);
  return Permutation(std::move(img));
}

}  // namespace

Construction1Result construction1(int d, const std::optional<std::vector<std::uint64_t>>& i_gens,
                                  unsigned precision_bits) {
  if (d < 2) throw precondition_error("construction1: d must be >= 2");
  if (d > kMaxDegree)
    throw budget_error("construction1: d exceeds the degree cap " + std::to_string(kMaxDegree));

  std::vector<std::uint64_t> subgroup =
      i_gens ? unit_subgroup(d, *i_gens) : unit_subgroup(d, {});

  std::vector<Permutation> q_elems, p_elems;
  for (int b = 0; b < d; ++b) q_elems.push_back(affine_perm(d, 1, b));
  for (auto a : subgroup)
    for (int b = 0; b < d; ++b) p_elems.push_back(affine_perm(d, a, b));

  std::vector<Permutation> q_gens{affine_perm(d, 1, 1)};
  std::vector<Permutation> p_gens = q_gens;
  for (auto a : subgroup)
    if (a != 1) p_gens.push_back(affine_perm(d, a, 0));

  PermSet q = PermSet::make_group_from_elements(std::move(q_elems), std::move(q_gens));
  PermSet p = PermSet::make_group_from_elements(std::move(p_elems), std::move(p_gens));

  Construction1Result out;
  out.degree = d;
  out.subgroup_i = subgroup;
  out.i_is_proper = subgroup.size() < totient(d);

  long long favourable = 0;
  for (auto a : subgroup)
    if (std::gcd((a + d - 1) % d, static_cast<std::uint64_t>(d)) == 1) ++favourable;
  out.closed_form = make_rat(int_of(favourable), int_of(static_cast<long long>(subgroup.size())));

  out.report = analyze_gqp(q, p, precision_bits);
  if (!out.report.fpp.exact || *out.report.fpp.exact != out.closed_form)
    throw std::logic_error("construction1: coset-sum FPP does not match the closed form");
  return out;
}

namespace {

// Points of the regular action are the elements of C_2^n x C_r,
// indexed z * 2^n + x (mixed radix: bits first, then the odd part).
Permutation holomorph_perm(int n, std::uint64_t r, std::uint32_t x0, std::uint64_t z0,
                           const BitMatrixF2& a, std::uint64_t alpha) {
  const int two_n = 1 << n;
  const int d = static_cast<int>(two_n * r);
  std::vector<std::uint8_t> img(d);
  for (std::uint64_t z = 0; z < r; ++z)
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(two_n); ++x) {
      std::uint32_t ax = 0;
      for (int i = 0; i < n; ++i)
        if (std::popcount(static_cast<std::uint32_t>(a.rows[i]) & x) & 1) ax |= 1u << i;
      std::uint32_t nx = x0 ^ ax;
      std::uint64_t nz = (z0 + alpha * z) % r;
      img[z * two_n + x] = static_cast<std::uint8_t>(nz * two_n + nx);
    }
  return Permutation(std::move(img));
}

std::vector<BitMatrixF2> all_invertible(int n) {
  std::vector<BitMatrixF2> out;
  const std::uint64_t space = 1ull << (n * n);
  for (std::uint64_t cand = 0; cand < space; ++cand) {
    BitMatrixF2 m;
    m.n = n;
    std::uint64_t bits = cand;
    for (int i = 0; i < n; ++i) {
      m.rows[i] = static_cast<std::uint16_t>(bits & ((1u << n) - 1));
      bits >>= n;
    }
    if (f2_invertible(m)) out.push_back(m);
  }
  return out;
}

}  // namespace

Construction2Result construction2(int n, std::uint64_t r, bool explicit_report,
                                  unsigned precision_bits) {
  if (n < 0) throw precondition_error("construction2: n must be >= 0");
  if (r < 1 || r % 2 == 0) throw precondition_error("construction2: r must be odd and >= 1");
  const std::uint64_t d = (1ull << n) * r;
  if (d < 2) throw precondition_error("construction2: d = 2^n r must be >= 2");
  if (n > 5) throw budget_error("construction2: n must be <= 5");

  Construction2Result out;
  out.n = n;
  out.r = r;
  out.degree = static_cast<int>(d);
  out.gl = (n == 0) ? Glnf2Count{1, 1} : glnf2_count(n);
  out.fpp = make_rat(Int(static_cast<unsigned long>(out.gl.good)),
                     Int(static_cast<unsigned long>(out.gl.total))) *
            unit_pair_ratio(r);

  if (explicit_report) {
    if (d > 12)
      throw budget_error("construction2: explicit report supports d = 2^n r <= 12");
    const int two_n = 1 << n;
    BitMatrixF2 ident;
    ident.n = n;
    for (int i = 0; i < n; ++i) ident.rows[i] = static_cast<std::uint16_t>(1u << i);

    std::vector<Permutation> q_elems;
    for (std::uint64_t z = 0; z < r; ++z)
      for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(two_n); ++x)
        q_elems.push_back(holomorph_perm(n, r, x, z, ident, 1));

    std::vector<Permutation> p_elems;
    for (const auto& a : (n == 0 ? std::vector<BitMatrixF2>{ident} : all_invertible(n)))
      for (auto alpha : unit_subgroup(r, {}))
        for (std::uint64_t z = 0; z < r; ++z)
          for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(two_n); ++x)
            p_elems.push_back(holomorph_perm(n, r, x, z, a, r == 1 ? 1 : alpha));

    PermSet q = PermSet::make_group_from_elements(q_elems, reduce_generators(q_elems));
    std::sort(p_elems.begin(), p_elems.end());
    p_elems.erase(std::unique(p_elems.begin(), p_elems.end()), p_elems.end());
    PermSet p = PermSet::make_group_from_elements(p_elems, reduce_generators(p_elems));

    out.report = analyze_gqp(q, p, precision_bits);
    if (!out.report->fpp.exact || *out.report->fpp.exact != out.fpp)
      throw std::logic_error("construction2: coset-sum FPP does not match the closed form");
  }
  return out;
}

GaloisUnicriticalResult galois_unicritical(int d, unsigned precision_bits) {
  if (d < 2) throw precondition_error("galois_unicritical: d must be >= 2");
  GaloisUnicriticalResult out;
  out.degree = d;
  out.fpp = make_rat(Int(static_cast<unsigned long>(psi(d))),
                     Int(static_cast<unsigned long>(totient(d))));
  out.hausdorff_log_num = Int(d);
  out.hausdorff_log_den = factorial(static_cast<unsigned>(d));
  out.hausdorff_decimal = hausdorff_decimal(out.hausdorff_log_num, out.hausdorff_log_den);

  if (d <= kMaxDegree) {
    Construction1Result c1 = construction1(d, std::nullopt, precision_bits);
    if (c1.closed_form != out.fpp)
      throw std::logic_error("galois_unicritical: closed form disagrees with construction1");
  }
  return out;
}

}  // namespace treefpp
