#ifndef TREEFPP_CONSTRUCTIONS_HPP
#define TREEFPP_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "treefpp/branch.hpp"
#include "treefpp/rational.hpp"

namespace treefpp {

/// Prime factorization by trial division, (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient.
std::uint64_t totient(std::uint64_t d);

/// psi(d) = #{a unit mod d : a-1 also a unit} = d * prod_{p|d} (1 - 2/p).
std::uint64_t psi(std::uint64_t d);

/// prod over prime divisors of (p-2)/(p-1); equals psi(d)/totient(d).
Rat unit_pair_ratio(std::uint64_t d);

/// Multiplicative subgroup of (Z/dZ)^x generated by `generators`
/// (the full unit group when generators is empty). Sorted.
std::vector<std::uint64_t> unit_subgroup(std::uint64_t d,
                                         const std::vector<std::uint64_t>& generators);

/// Every subgroup of (Z/dZ)^x, each sorted, in deterministic order.
std::vector<std::vector<std::uint64_t>> all_unit_subgroups(std::uint64_t d);

/// Square bit matrix over GF(2); bit j of rows[i] is entry (i, j).
struct BitMatrixF2 {
  int n = 0;
  std::array<std::uint16_t, 16> rows{};

  bool operator==(const BitMatrixF2&) const = default;
};

bool f2_invertible(const BitMatrixF2& m);
BitMatrixF2 f2_add_identity(BitMatrixF2 m);

/// Counts over all 2^(n^2) candidate matrices: total = #GL_n(F_2),
/// good = #{A invertible : A+I invertible}. n <= 5 unless allow_heavy.
struct Glnf2Count {
  std::uint64_t good = 0;
  std::uint64_t total = 0;

  bool operator==(const Glnf2Count&) const = default;
};

Glnf2Count glnf2_count(int n, bool allow_heavy = false, unsigned workers = 0);

/// A witness A with A and A+I both invertible: block-diagonal in the 2x2
/// block [[1,1],[1,0]], with one 3x3 block [[1,1,1],[1,1,0],[1,0,0]] when n
/// is odd. No witness exists for n = 1.
BitMatrixF2 witness_matrix(int n);

/// Affine family: Q = translations mod d, P = {x -> ax+b : a in I}.
struct Construction1Result {
  int degree = 0;
  std::vector<std::uint64_t> subgroup_i;
  bool i_is_proper = false;  // |I| < totient(d); FPP divides by |I|, not totient
  Rat closed_form;           // #{a in I : gcd(a-1,d)=1} / |I|
  GqpReport report;

  bool operator==(const Construction1Result&) const = default;
};

Construction1Result construction1(int d, const std::optional<std::vector<std::uint64_t>>& i_gens,
                                  unsigned precision_bits = kDefaultPrecisionBits);

/// Holomorph family: Q = C_2^n x C_r acting regularly on d = 2^n r points,
/// P = Q x| Aut(Q). The closed form multiplies the GL_n(F_2) ratio by
/// prod_{p|r} (p-2)/(p-1); the explicit report (d <= 12) rebuilds the pair
/// as permutation groups and must reproduce it through the coset sum.
struct Construction2Result {
  int n = 0;
  std::uint64_t r = 0;
  int degree = 0;
  Glnf2Count gl;
  Rat fpp;
  std::optional<GqpReport> report;

  bool operator==(const Construction2Result&) const = default;
};

Construction2Result construction2(int n, std::uint64_t r, bool explicit_report = false,
                                  unsigned precision_bits = kDefaultPrecisionBits);

/// Closed forms for the unicritical family x^d + c over the rationals:
/// FPP = psi(d)/totient(d), Hausdorff dimension log d / log d!.
struct GaloisUnicriticalResult {
  int degree = 0;
  Rat fpp;
  Int hausdorff_log_num;  // d
  Int hausdorff_log_den;  // d!
  std::string hausdorff_decimal;

  bool operator==(const GaloisUnicriticalResult&) const = default;
};

GaloisUnicriticalResult galois_unicritical(int d,
                                           unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace treefpp

#endif
