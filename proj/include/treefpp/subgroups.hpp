#ifndef TREEFPP_SUBGROUPS_HPP
#define TREEFPP_SUBGROUPS_HPP

#include <vector>

#include "treefpp/permset.hpp"

namespace treefpp {

/// One representative per conjugacy class of subgroups of Sym(d), 2 <= d <= 6.
/// Representatives carry the minimal sorted element list of their class and
/// come out ordered by (order, element list) — trivial group first, Sym(d) last.
std::vector<PermSet> subgroup_conjugacy_classes(int degree);

/// Class representatives together with the size of each conjugacy class
/// (= [Sym(d) : N(rep)]). Summing the sizes counts all subgroups of Sym(d).
struct SubgroupClass {
  PermSet representative;
  long long class_size;
};
std::vector<SubgroupClass> subgroup_conjugacy_classes_with_sizes(int degree);

/// Total number of subgroups of Sym(d) by breadth-first closure (no
/// conjugacy dedup); same bound d <= 6.
long long count_all_subgroups(int degree);

}  // namespace treefpp

#endif
