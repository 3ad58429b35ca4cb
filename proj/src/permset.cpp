#include "treefpp/permset.hpp"

#include <algorithm>
#include <unordered_set>

#include "treefpp/errors.hpp"

namespace treefpp {

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::ArbitrarySet: return "set";
    case SetKind::Group: return "group";
    case SetKind::Coset: return "coset";
  }
  return "?";
}

namespace {

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_common_degree(const std::vector<Permutation>& v) {
  if (v.empty()) throw precondition_error("permutation set must be nonempty");
  for (const auto& p : v)
    if (p.degree() != v.front().degree())
      throw precondition_error("degree mismatch inside permutation set");
}

}  // namespace

PermSet PermSet::make_set(std::vector<Permutation> elements) {
  check_common_degree(elements);
  sort_unique(elements);
  PermSet s;
  s.degree_ = elements.front().degree();
  s.kind_ = SetKind::ArbitrarySet;
  s.elems_ = std::move(elements);
  return s;
}

PermSet PermSet::make_group_from_elements(std::vector<Permutation> elements,
                                          std::vector<Permutation> generators) {
  check_common_degree(elements);
  sort_unique(elements);
  PermSet s;
  s.degree_ = elements.front().degree();
  s.kind_ = SetKind::Group;
  s.elems_ = std::move(elements);
  s.gens_ = std::move(generators);
  if (s.gens_.empty()) s.gens_.push_back(Permutation::identity(s.degree_));
  return s;
}

PermSet PermSet::make_coset(const Permutation& any_element, std::shared_ptr<const PermSet> base) {
  if (!base || base->kind() != SetKind::Group)
    throw precondition_error("coset base must be a group");
  if (any_element.degree() != base->degree())
    throw precondition_error("coset representative degree mismatch");
  std::vector<Permutation> elems;
  elems.reserve(base->elements().size());
  for (const auto& q : base->elements()) elems.push_back(compose(any_element, q));
  std::sort(elems.begin(), elems.end());
  PermSet s;
  s.degree_ = base->degree();
  s.kind_ = SetKind::Coset;
  s.rep_ = elems.front();
  s.gens_ = base->generators();
  s.elems_ = std::move(elems);
  s.base_ = std::move(base);
  return s;
}

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

const Permutation& PermSet::representative() const {
  if (kind_ != SetKind::Coset) throw precondition_error("representative(): not a coset");
  return rep_;
}

const PermSet& PermSet::base_group() const {
  if (kind_ != SetKind::Coset || !base_) throw precondition_error("base_group(): not a coset");
  return *base_;
}

PermSet generate_group(const std::vector<Permutation>& generators) {
  check_common_degree(generators);
  const int d = generators.front().degree();

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(d)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Permutation q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  return PermSet::make_group_from_elements(std::move(elems), generators);
}

PermSet generate_group(const std::vector<std::string>& generator_text, int degree) {
  std::vector<Permutation> gens;
  gens.reserve(generator_text.size());
  for (const auto& t : generator_text) gens.push_back(parse_permutation(t, degree));
  return generate_group(gens);
}

PermSet symmetric_group(int degree) {
  if (degree < 2 || degree > 8)
    throw budget_error("symmetric_group: degree " + std::to_string(degree) + " exceeds scan bound 8");
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  std::vector<Permutation> gens;
  gens.push_back(parse_permutation("(1,2)", degree));
  if (degree > 2) {
    std::string cyc = "(1";
    for (int i = 2; i <= degree; ++i) cyc += "," + std::to_string(i);
    cyc += ")";
    gens.push_back(parse_permutation(cyc, degree));
  }
  return PermSet::make_group_from_elements(std::move(elems), std::move(gens));
}

bool is_transitive(const PermSet& g) {
  if (g.kind() != SetKind::Group) throw precondition_error("is_transitive: kind is not Group");
  std::vector<bool> hit(g.degree(), false);
  int count = 0;
  for (const auto& p : g.elements()) {
    int y = p.apply(0);
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count == g.degree();
}

int orbit_count(const PermSet& g) {
  if (g.kind() != SetKind::Group) throw precondition_error("orbit_count: kind is not Group");
  std::vector<int> pts(g.degree());
  for (int i = 0; i < g.degree(); ++i) pts[i] = i;
  return orbit_count_on(g, pts);
}

int orbit_count_on(const PermSet& g, const std::vector<int>& points) {
  std::vector<bool> in_set(g.degree(), false), visited(g.degree(), false);
  for (int x : points) in_set[x] = true;
  int orbits = 0;
  for (int x : points) {
    if (visited[x]) continue;
    ++orbits;
    std::vector<int> stack{x};
    visited[x] = true;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (const auto& p : g.elements()) {
        int z = p.apply(y);
        if (!in_set[z]) throw precondition_error("orbit_count_on: point set not invariant");
        if (!visited[z]) {
          visited[z] = true;
          stack.push_back(z);
        }
      }
    }
  }
  return orbits;
}

bool is_subgroup_of(const PermSet& q, const PermSet& p) {
  if (q.degree() != p.degree()) return false;
  return std::includes(p.elements().begin(), p.elements().end(), q.elements().begin(),
                       q.elements().end());
}

bool is_normal_in(const PermSet& q, const PermSet& p) {
  if (q.kind() != SetKind::Group || p.kind() != SetKind::Group)
    throw precondition_error("is_normal_in: both arguments must be groups");
  if (!is_subgroup_of(q, p)) throw precondition_error("is_normal_in: Q is not a subgroup of P");
  // gQg^-1 = Q iff all conjugated generators stay in Q.
  const auto& gens = q.generators().empty() ? q.elements() : q.generators();
  for (const auto& g : p.elements())
    for (const auto& x : gens)
      if (!q.contains(conjugate(g, x))) return false;
  return true;
}

std::vector<PermSet> cosets(const PermSet& p, const PermSet& q) {
  if (q.kind() != SetKind::Group || p.kind() != SetKind::Group)
    throw precondition_error("cosets: both arguments must be groups");
  if (!is_subgroup_of(q, p)) throw precondition_error("cosets: Q is not a subgroup of P");
  auto base = std::make_shared<const PermSet>(q);
  std::unordered_set<Permutation, PermutationHash> taken;
  std::vector<PermSet> out;
  for (const auto& rep : p.elements()) {  // canonical order: minimal fresh element leads
    if (taken.count(rep)) continue;
    PermSet coset = PermSet::make_coset(rep, base);
    for (const auto& e : coset.elements()) taken.insert(e);
    out.push_back(std::move(coset));
  }
  return out;
}

PermSet commutator_subgroup(const PermSet& g) {
  if (g.kind() != SetKind::Group) throw precondition_error("commutator_subgroup: kind is not Group");
  std::unordered_set<Permutation, PermutationHash> comms;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements())
      comms.insert(compose(compose(a.inverse(), b.inverse()), compose(a, b)));
  std::vector<Permutation> gens(comms.begin(), comms.end());
  std::sort(gens.begin(), gens.end());
  PermSet closed = generate_group(gens);
  return PermSet::make_group_from_elements(closed.elements(), reduce_generators(closed.elements()));
}

PermSet normalizer_in_sym(const PermSet& q) {
  if (q.kind() != SetKind::Group) throw precondition_error("normalizer_in_sym: kind is not Group");
  if (q.degree() > 8)
    throw budget_error("normalizer_in_sym: degree " + std::to_string(q.degree()) +
                       " exceeds scan bound 8");
  const auto& gens = q.generators().empty() ? q.elements() : q.generators();
  std::vector<Permutation> elems;
  std::vector<std::uint8_t> img(q.degree());
  for (int i = 0; i < q.degree(); ++i) img[i] = static_cast<std::uint8_t>(i);
  do {
    Permutation g{img};
    bool normalizes = true;
    for (const auto& x : gens)
      if (!q.contains(conjugate(g, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) elems.push_back(std::move(g));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermSet::make_group_from_elements(elems, reduce_generators(elems));
}

std::vector<Permutation> reduce_generators(const std::vector<Permutation>& group_elements) {
  const int d = group_elements.front().degree();
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> have;
  have.insert(Permutation::identity(d));
  for (const auto& x : group_elements) {
    if (have.count(x)) continue;
    gens.push_back(x);
    PermSet sub = generate_group(gens);
    have.clear();
    for (const auto& e : sub.elements()) have.insert(e);
    if (have.size() == group_elements.size()) break;
  }
  if (gens.empty()) gens.push_back(Permutation::identity(d));
  return gens;
}

}  // namespace treefpp
