#pragma once

// Finite groups stored as full Cayley tables, embeddings between them,
// subgroups and conjugacy classes, and the constructors used for towers
// and for the order-2r^2 catalog.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dgg {

using Elem = std::uint32_t;

inline constexpr std::size_t kMaxCheckedOrder = 200;
inline constexpr std::size_t kDefaultClosureBound = 10000;

class FiniteGroup {
 public:
  // table[a][b] = index of a*b. The table is checked for closure, identity,
  // inverses and (for order <= kMaxCheckedOrder) associativity.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table, std::string name = {});

  // Closure of permutations given as 0-based one-line images of a common
  // set. Elements are numbered in breadth-first order from the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       std::string name = {},
                                       std::size_t bound = kDefaultClosureBound);

  // Row-major flat table, same checks as from_cayley.
  static FiniteGroup from_flat_table(std::vector<Elem> table, std::size_t order, std::string name = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return (*table_)[a * order_ + b]; }
  Elem inverse(Elem a) const { return (*inverse_)[a]; }
  Elem conjugate(Elem x, Elem g) const { return mul(mul(inverse(g), x), g); }  // g^-1 x g
  Elem power(Elem a, std::uint64_t k) const;
  std::uint64_t element_order(Elem a) const;
  std::uint64_t exponent() const;
  bool is_abelian() const;

  const std::string& name() const { return name_; }
  FiniteGroup renamed(std::string name) const;
  const std::vector<Elem>& generators() const { return generators_; }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::shared_ptr<const std::vector<Elem>> table_;
  std::shared_ptr<const std::vector<Elem>> inverse_;
  std::vector<Elem> generators_;
  std::string name_;
};

// Injective homomorphism source -> target, stored as an element map.
class Embedding {
 public:
  // Throws unless `map` is an injective homomorphism (checked exhaustively).
  static Embedding make(const FiniteGroup& source, const FiniteGroup& target, std::vector<Elem> map);

  std::size_t source_order() const { return map_.size(); }
  std::size_t target_order() const { return target_order_; }
  Elem operator()(Elem a) const { return map_[a]; }
  const std::vector<Elem>& map() const { return map_; }

 private:
  std::vector<Elem> map_;
  std::size_t target_order_ = 0;
};

// Sorted element indices of a subgroup.
using Subgroup = std::vector<Elem>;

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens,
                            std::size_t bound = kDefaultClosureBound);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
Subgroup commutator_subgroup(const FiniteGroup& g);

// Every subgroup of order <= max_order, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order);
// Representatives (lexicographically least conjugate) of the conjugacy
// classes of subgroups of order k. Requires k | |G| and k <= 16.
std::vector<Subgroup> subgroups_of_order(const FiniteGroup& g, std::size_t k);

// The subgroup as a group in its own right, with the inclusion map.
struct SubgroupGroup {
  FiniteGroup group;
  Embedding inclusion;
};
SubgroupGroup as_group(const FiniteGroup& g, const Subgroup& s, std::string name = {});

struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;  // sorted members; identity class first
  std::vector<std::size_t> class_of;       // element -> class index

  std::size_t size() const { return classes.size(); }
  Elem representative(std::size_t c) const { return classes[c].front(); }
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// Constructors. Every constructed group has identity index 0.
FiniteGroup trivial_group();
FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);  // order 2n
FiniteGroup quaternion8();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup generalized_dihedral(const FiniteGroup& a);  // a abelian; a x| C2 by inversion
FiniteGroup wreath_symmetric(const FiniteGroup& a, int n);
FiniteGroup wreath_with_s2(const FiniteGroup& a);
FiniteGroup symmetric(int n);

// Inclusion A wr S_{n-1} -> A wr S_n fixing the last coordinate, for the
// element numbering used by wreath_symmetric.
Embedding wreath_inclusion(const FiniteGroup& a, int n);

// Parses catalog names: C<n>, D<n>, Q8, S<n>, GenDih(<name>), <name>wrS<n>,
// and direct products joined by 'x'.
FiniteGroup group_by_name(std::string_view name);

// Isomorphism classes of groups of order 2r^2 for r in {1, 2, 3, 5}.
std::vector<FiniteGroup> catalog_order_2r2(int r);

}  // namespace dgg
