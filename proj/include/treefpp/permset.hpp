#ifndef TREEFPP_PERMSET_HPP
#define TREEFPP_PERMSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treefpp/permutation.hpp"

namespace treefpp {

enum class SetKind { ArbitrarySet, Group, Coset };

std::string to_string(SetKind k);

/// An immutable finite set of permutations of common degree, canonically
/// sorted and duplicate-free. A Group is closed under composition and
/// inverse; a Coset is rep∘Q for a base group Q, with rep the minimal
/// element of the coset.
class PermSet {
public:
  static PermSet make_set(std::vector<Permutation> elements);
  static PermSet make_group_from_elements(std::vector<Permutation> elements,
                                          std::vector<Permutation> generators);
  static PermSet make_coset(const Permutation& any_element, std::shared_ptr<const PermSet> base);

  int degree() const { return degree_; }
  SetKind kind() const { return kind_; }
  long long size() const { return static_cast<long long>(elems_.size()); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  bool contains(const Permutation& p) const;
  bool is_trivial_group() const { return kind_ == SetKind::Group && elems_.size() == 1; }

  /// Coset accessors; precondition kind() == Coset.
  const Permutation& representative() const;
  const PermSet& base_group() const;
  std::shared_ptr<const PermSet> base_group_ptr() const { return base_; }

  bool operator==(const PermSet& o) const {
    return degree_ == o.degree_ && kind_ == o.kind_ && elems_ == o.elems_;
  }

private:
  PermSet() = default;

  int degree_ = 0;
  SetKind kind_ = SetKind::ArbitrarySet;
  std::vector<Permutation> elems_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const PermSet> base_;
  Permutation rep_;
};

/// Smallest group containing the generators, by closure under composition.
PermSet generate_group(const std::vector<Permutation>& generators);

/// Parse generator strings and close; convenience for CLI and bindings.
PermSet generate_group(const std::vector<std::string>& generator_text, int degree);

/// Whole symmetric group Sym(d) in canonical order. d <= 8.
PermSet symmetric_group(int degree);

/// True iff the orbit of point 1 is {1,...,d}. Requires kind == Group.
bool is_transitive(const PermSet& g);

/// Number of orbits of the natural action on {1,...,d}. Requires Group.
int orbit_count(const PermSet& g);

/// Orbits of the action restricted to the 0-indexed point set `points`;
/// the set must be invariant under the group.
int orbit_count_on(const PermSet& g, const std::vector<int>& points);

bool is_subgroup_of(const PermSet& q, const PermSet& p);

/// True iff pQp^-1 = Q for every p in P. Requires Q <= P.
bool is_normal_in(const PermSet& q, const PermSet& p);

/// Left cosets of Q partitioning P, in canonical order (Q itself first);
/// representatives are the minimal element of each coset.
std::vector<PermSet> cosets(const PermSet& p, const PermSet& q);

/// Closure of {[g,h] = g^-1 h^-1 g h}.
PermSet commutator_subgroup(const PermSet& g);

/// N_{Sym(d)}(Q) by full scan of Sym(d); degree <= 8.
PermSet normalizer_in_sym(const PermSet& q);

/// A small generating sequence for a closed element list (greedy chain).
std::vector<Permutation> reduce_generators(const std::vector<Permutation>& group_elements);

}  // namespace treefpp

#endif
