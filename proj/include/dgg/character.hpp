#pragma once

// Exact character tables over a prime field (Dixon's method), restriction
// multiplicities between embedded groups, and Clifford-type checks of
// restrictions to normal subgroups.

#include "dgg/group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dgg {

inline constexpr std::size_t kMaxCharacterOrder = 200;

// Arithmetic modulo a prime below 2^32.
struct PrimeField {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0
  std::uint64_t from_int(std::int64_t v) const;
};

bool is_prime(std::uint64_t n);

// Smallest prime p with p = 1 (mod exponent) and p > 2 * order.
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);
std::uint64_t dixon_prime(const FiniteGroup& g);

struct ClassInfo {
  Elem representative;
  std::size_t size;
};

struct CharacterTable {
  FiniteGroup group;
  std::uint64_t prime = 0;
  ConjugacyClasses classes;
  std::vector<std::size_t> inverse_class;  // class of x^-1 for x in class c
  // values[chi][c] in F_p; row 0 is the trivial character. Rows ordered by
  // (degree, value vector).
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::uint64_t> degrees;

  std::size_t class_count() const { return classes.size(); }
  std::size_t irreducible_count() const { return values.size(); }
  std::vector<ClassInfo> class_info() const;
  PrimeField field() const { return {prime}; }

  // Value of chi at an arbitrary element.
  std::uint64_t value(std::size_t chi, Elem x) const { return values[chi][classes.class_of[x]]; }

  // (1/|G|) sum_C |C| a(C) b(C^-1), in F_p.
  std::uint64_t inner_product(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const;
  // Index of the irreducible with these class values, if any.
  std::optional<std::size_t> find(const std::vector<std::uint64_t>& class_values) const;
};

// Dixon's method with the given prime (0 = dixon_prime(g)). The prime must
// satisfy the conditions of dixon_prime for g. If the simultaneous
// eigenspace split fails, the next admissible prime is tried.
CharacterTable character_table(const FiniteGroup& g, std::uint64_t prime = 0);

// Entry (psi, chi) = <Res chi, psi>_H for chi in Irr(G) (table `big`) and psi in
// Irr(H) (table `small`), H embedded in G. Tables must share their prime.
std::vector<std::vector<std::uint64_t>> restriction_matrix(const Embedding& e, const CharacterTable& big,
                                                           const CharacterTable& small);
// Transpose of restriction_matrix (Frobenius reciprocity).
std::vector<std::vector<std::uint64_t>> induction_matrix(const Embedding& e, const CharacterTable& big,
                                                         const CharacterTable& small);

struct CliffordVerdict {
  std::vector<std::size_t> constituents;  // Irr(N) indices with nonzero multiplicity
  std::vector<std::uint64_t> multiplicities;
  std::vector<std::size_t> orbit;  // orbit of the first constituent under conjugation
  bool single_orbit = false;
  bool equal_degrees = false;
  bool equal_multiplicities = false;
  bool trivial_rule = false;  // trivial constituent => restriction is a multiple of it

  bool passed() const { return single_orbit && equal_degrees && equal_multiplicities && trivial_rule; }
};

// Decomposes Res^G_H chi and compares with the orbit of its first
// constituent under conjugation by the normalizer of H. Does not require H
// to be normal.
CliffordVerdict clifford_analysis(const CharacterTable& g_table, const Subgroup& h, const CharacterTable& h_table,
                                  std::size_t chi);
// As clifford_analysis, but throws unless `n` is normal in G.
CliffordVerdict clifford_check(const CharacterTable& g_table, const Subgroup& n, const CharacterTable& n_table,
                               std::size_t chi);

// (order, class sizes, degrees, element orders), each multiset sorted.
struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint64_t> element_orders;

  auto operator<=>(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const CharacterTable& t);
GroupFingerprint fingerprint(const FiniteGroup& g);

}  // namespace dgg
