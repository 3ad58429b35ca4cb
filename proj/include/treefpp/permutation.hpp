#ifndef TREEFPP_PERMUTATION_HPP
#define TREEFPP_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace treefpp {

/// Largest supported degree for permutation I/O and group operations.
/// Construction sweeps need d = 20; element-list algebra stays cheap there.
inline constexpr int kMaxDegree = 20;

/// A bijection of {1,...,d}, stored 0-indexed as its image list.
/// Points are 1-indexed in all text I/O.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }  // 0-indexed
  const std::vector<std::uint8_t>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  int fixed_point_count() const;
  std::vector<int> fixed_points() const;  // 0-indexed

  /// Canonical order: lexicographic on image lists.
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::uint8_t> img_;
};

/// Left-action composition: compose(a, b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

/// g p g^-1.
Permutation conjugate(const Permutation& g, const Permutation& p);

/// Cycle notation ("(1,2)(3,4)", "()" = identity, whitespace allowed,
/// fixed points may be omitted) or one-line notation ("[2,1,4,3]").
/// Throws parse_error on malformed text, repeated or out-of-range points.
Permutation parse_permutation(const std::string& text, int degree);

/// Cycle notation with cycles ordered by least moved point; "()" for identity.
std::string to_cycle_string(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto b : p.images()) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};

}  // namespace treefpp

#endif
