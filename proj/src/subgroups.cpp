#include "treefpp/subgroups.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "treefpp/errors.hpp"

namespace treefpp {

namespace {

// Index-based machinery over a fixed enumeration of Sym(d). Element 0 is the
// identity (lexicographically minimal image list), so sorted index lists are
// canonical element lists.
struct SymTable {
  int degree = 0;
  int n = 0;  // d!
  std::vector<Permutation> elems;
  std::vector<std::uint16_t> mult;  // mult[a*n + b] = index of elems[a]∘elems[b]
  std::vector<std::uint16_t> inv;

  explicit SymTable(int d) : degree(d) {
    std::vector<std::uint8_t> img(d);
    for (int i = 0; i < d; ++i) img[i] = static_cast<std::uint8_t>(i);
    do {
      elems.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    n = static_cast<int>(elems.size());

    std::unordered_map<Permutation, std::uint16_t, PermutationHash> index;
    index.reserve(n * 2);
    for (int i = 0; i < n; ++i) index.emplace(elems[i], static_cast<std::uint16_t>(i));

    mult.resize(static_cast<std::size_t>(n) * n);
    inv.resize(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        mult[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
      inv[a] = index.at(elems[a].inverse());
    }
  }

  std::uint16_t mul(int a, int b) const { return mult[static_cast<std::size_t>(a) * n + b]; }
  std::uint16_t conj(int g, int x) const { return mul(mul(g, x), inv[g]); }
};

using Members = std::vector<std::uint16_t>;          // sorted element indices
using Mask = std::array<std::uint64_t, 12>;          // bitset over <= 720 elements

inline bool test_bit(const Mask& m, unsigned i) { return m[i >> 6] >> (i & 63) & 1; }
inline void set_bit(Mask& m, unsigned i) { m[i >> 6] |= 1ull << (i & 63); }

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : m) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Subgroup {
  Members members;
  Mask mask{};
  std::vector<std::uint16_t> gens;  // extension chain from the BFS
};

// Closure of H ∪ {g} given that H is already closed: grow the union of
// H-cosets, testing candidates rep∘s for s in H ∪ {g}.
void extend(const SymTable& t, const Subgroup& h, std::uint16_t g, Mask& mask, Members& members,
            std::vector<std::uint16_t>& pending) {
  mask = h.mask;
  members = h.members;
  pending.clear();
  pending.push_back(g);
  std::size_t pos = 0;
  while (pos < pending.size()) {
    std::uint16_t x = pending[pos++];
    if (test_bit(mask, x)) continue;
    for (auto e : h.members) {
      std::uint16_t y = t.mul(e, x);
      set_bit(mask, y);
      members.push_back(y);
    }
    for (auto e : h.members) pending.push_back(t.mul(x, e));
    pending.push_back(t.mul(x, g));
  }
}

// All subgroups of Sym(d), reached from the trivial group by single-element
// extensions, deduplicated exactly by membership mask.
std::vector<Subgroup> enumerate_all_subgroups(const SymTable& t) {
  std::vector<Subgroup> out;
  std::unordered_map<Mask, std::size_t, MaskHash> seen;

  Subgroup trivial;
  trivial.members = Members{0};
  set_bit(trivial.mask, 0);
  seen.emplace(trivial.mask, 0);
  out.push_back(std::move(trivial));

  Mask mask_buf{};
  Members members_buf;
  std::vector<std::uint16_t> pending_buf;

  for (std::size_t i = 0; i < out.size(); ++i) {
    const Subgroup current = out[i];  // copy; out reallocates
    for (std::uint16_t g = 1; g < t.n; ++g) {
      if (test_bit(current.mask, g)) continue;
      extend(t, current, g, mask_buf, members_buf, pending_buf);
      if (seen.emplace(mask_buf, out.size()).second) {
        Members m = members_buf;
        std::sort(m.begin(), m.end());
        auto gens = current.gens;
        gens.push_back(g);
        out.push_back(Subgroup{std::move(m), mask_buf, std::move(gens)});
      }
    }
  }
  return out;
}

Mask conjugate_mask(const SymTable& t, const Members& h, int g) {
  Mask out{};
  for (auto x : h) set_bit(out, t.conj(g, x));
  return out;
}

PermSet to_permset(const SymTable& t, const Subgroup& s) {
  std::vector<Permutation> elems;
  elems.reserve(s.members.size());
  for (auto i : s.members) elems.push_back(t.elems[i]);
  std::vector<Permutation> gens;
  for (auto i : s.gens) gens.push_back(t.elems[i]);
  if (gens.empty()) gens.push_back(t.elems[0]);
  return PermSet::make_group_from_elements(std::move(elems), std::move(gens));
}

void check_degree(int degree) {
  if (degree < 2 || degree > 6)
    throw budget_error("subgroup enumeration supports 2 <= d <= 6, got " + std::to_string(degree));
}

}  // namespace

std::vector<SubgroupClass> subgroup_conjugacy_classes_with_sizes(int degree) {
  check_degree(degree);
  SymTable t(degree);
  std::vector<Subgroup> all = enumerate_all_subgroups(t);

  std::unordered_map<Mask, std::size_t, MaskHash> id_of;
  id_of.reserve(all.size() * 2);
  for (std::size_t i = 0; i < all.size(); ++i) id_of.emplace(all[i].mask, i);

  // Iterate in canonical order (order, element list); the first unvisited
  // subgroup of each class is its minimal — hence canonical — representative.
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (all[a].members.size() != all[b].members.size())
      return all[a].members.size() < all[b].members.size();
    return all[a].members < all[b].members;
  });

  std::vector<bool> visited(all.size(), false);
  std::vector<SubgroupClass> classes;
  for (std::size_t idx : order) {
    if (visited[idx]) continue;
    long long class_size = 0;
    for (int g = 0; g < t.n; ++g) {
      std::size_t cid = id_of.at(conjugate_mask(t, all[idx].members, g));
      if (!visited[cid]) {
        visited[cid] = true;
        ++class_size;
      }
    }
    classes.push_back(SubgroupClass{to_permset(t, all[idx]), class_size});
  }
  return classes;
}

std::vector<PermSet> subgroup_conjugacy_classes(int degree) {
  std::vector<PermSet> out;
  for (auto& c : subgroup_conjugacy_classes_with_sizes(degree))
    out.push_back(std::move(c.representative));
  return out;
}

long long count_all_subgroups(int degree) {
  check_degree(degree);
  SymTable t(degree);
  return static_cast<long long>(enumerate_all_subgroups(t).size());
}

}  // namespace treefpp
