#include "dgg/group.hpp"

#include "dgg/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace dgg {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::string size_name(const char* prefix, std::size_t n) { return prefix + std::to_string(n); }

// Closure of `seed` under right multiplication by `gens`; nullopt once the
// closure grows past `bound`.
std::optional<Subgroup> try_closure(const FiniteGroup& g, const std::vector<Elem>& seed,
                                    const std::vector<Elem>& gens, std::size_t bound) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> list;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  add(g.identity());
  for (Elem x : seed) add(x);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list.size() > bound) return std::nullopt;
    for (Elem s : gens) add(g.mul(list[i], s));
  }
  if (list.size() > bound) return std::nullopt;
  std::sort(list.begin(), list.end());
  return list;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, Elem x) {
  Subgroup out;
  out.reserve(s.size());
  for (Elem h : s) out.push_back(g.conjugate(h, x));
  std::sort(out.begin(), out.end());
  return out;
}

// A's elements with the identity first, then ascending index.
std::vector<Elem> identity_first(const FiniteGroup& a) {
  std::vector<Elem> order{a.identity()};
  for (Elem x = 0; x < a.order(); ++x) {
    if (x != a.identity()) order.push_back(x);
  }
  return order;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

// Lexicographic rank of a permutation of 0..n-1.
std::size_t permutation_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

std::string wrapped_name(const FiniteGroup& a) {
  const std::string& n = a.name();
  return n.find('x') != std::string::npos ? "(" + n + ")" : n;
}

// Element numbering shared by wreath_symmetric and wreath_inclusion:
// permutation rank (lexicographic) major, coordinate tuple minor, with
// coordinates written in identity-first position order.
struct WreathCoder {
  std::size_t base;
  int n;
  std::vector<std::size_t> pos_of;  // A element -> position

  explicit WreathCoder(const FiniteGroup& a, int n_) : base(a.order()), n(n_), pos_of(a.order()) {
    auto order = identity_first(a);
    for (std::size_t p = 0; p < order.size(); ++p) pos_of[order[p]] = p;
  }

  std::size_t tuple_count() const {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c *= base;
    return c;
  }

  std::size_t encode(const std::vector<Elem>& coords, const std::vector<int>& perm) const {
    std::size_t t = 0;
    for (Elem x : coords) t = t * base + pos_of[x];
    return permutation_rank(perm) * tuple_count() + t;
  }
};

}  // namespace

FiniteGroup FiniteGroup::from_flat_table(std::vector<Elem> table, std::size_t order, std::string name) {
  if (order == 0) fail(ErrorCode::InvalidArgument, "group must be non-empty");
  if (table.size() != order * order) fail(ErrorCode::InvalidArgument, "Cayley table is not square");
  for (Elem x : table) {
    if (x >= order) fail(ErrorCode::InvalidArgument, "Cayley table entry out of range");
  }
  auto at = [&](Elem a, Elem b) { return table[a * order + b]; };

  std::optional<Elem> identity;
  for (Elem e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < order && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) fail(ErrorCode::InvalidArgument, "Cayley table has no identity");

  std::vector<Elem> inverse(order);
  for (Elem a = 0; a < order; ++a) {
    bool found = false;
    for (Elem b = 0; b < order && !found; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) {
        inverse[a] = b;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::InvalidArgument, "element " + std::to_string(a) + " has no inverse");
  }

  if (order <= kMaxCheckedOrder) {
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b) {
        const Elem ab = at(a, b);
        for (Elem c = 0; c < order; ++c) {
          if (at(ab, c) != at(a, at(b, c))) fail(ErrorCode::InvalidArgument, "Cayley table is not associative");
        }
      }
    }
  }

  FiniteGroup g;
  g.order_ = order;
  g.identity_ = *identity;
  g.table_ = std::make_shared<const std::vector<Elem>>(std::move(table));
  g.inverse_ = std::make_shared<const std::vector<Elem>>(std::move(inverse));
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table, std::string name) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "Cayley table is not square");
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) fail(ErrorCode::InvalidArgument, "Cayley table entry out of range");
      flat.push_back(static_cast<Elem>(x));
    }
  }
  return from_flat_table(std::move(flat), n, std::move(name));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators,
                                           std::string name, std::size_t bound) {
  std::size_t degree = generators.empty() ? 0 : generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != degree) fail(ErrorCode::InvalidArgument, "generators act on sets of different sizes");
    std::vector<bool> seen(degree, false);
    for (int x : p) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[x]) {
        fail(ErrorCode::InvalidArgument, "generator is not a permutation of 0.." + std::to_string(degree - 1));
      }
      seen[x] = true;
    }
  }

  using Perm = std::vector<int>;
  auto compose = [](const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      Perm next = compose(elems[i], gen);
      if (index.emplace(next, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > bound) {
          fail(ErrorCode::InvalidArgument, "permutation closure exceeds bound " + std::to_string(bound));
        }
      }
    }
  }
  const std::size_t n = elems.size();
  if (n > kMaxCheckedOrder) {
    fail(ErrorCode::Unsupported, "group of order " + std::to_string(n) + " exceeds the supported order " +
                                     std::to_string(kMaxCheckedOrder));
  }
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  FiniteGroup g = from_flat_table(std::move(table), n, std::move(name));
  for (const auto& gen : generators) g.generators_.push_back(index.at(gen));
  return g;
}

Elem FiniteGroup::power(Elem a, std::uint64_t k) const {
  Elem result = identity_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Elem a) const {
  std::uint64_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (Elem a = 0; a < order_; ++a) {
    const std::uint64_t o = element_order(a);
    e = e / gcd_u64(e, o) * o;
  }
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

Embedding Embedding::make(const FiniteGroup& source, const FiniteGroup& target, std::vector<Elem> map) {
  if (map.size() != source.order()) fail(ErrorCode::InvalidArgument, "embedding map has wrong length");
  std::vector<bool> hit(target.order(), false);
  for (Elem x : map) {
    if (x >= target.order()) fail(ErrorCode::InvalidArgument, "embedding image out of range");
    if (hit[x]) fail(ErrorCode::InvalidArgument, "embedding is not injective");
    hit[x] = true;
  }
  for (Elem a = 0; a < source.order(); ++a) {
    for (Elem b = 0; b < source.order(); ++b) {
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) {
        fail(ErrorCode::InvalidArgument, "embedding is not a homomorphism");
      }
    }
  }
  Embedding e;
  e.map_ = std::move(map);
  e.target_order_ = target.order();
  return e;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens, std::size_t bound) {
  for (Elem x : gens) {
    if (x >= g.order()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  }
  auto s = try_closure(g, gens, gens, bound);
  if (!s) fail(ErrorCode::InvalidArgument, "subgroup closure exceeds bound " + std::to_string(bound));
  return *s;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
  std::vector<bool> in(g.order(), false);
  for (Elem x : s) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[g.identity()]) return false;
  for (Elem a : s) {
    for (Elem b : s) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : s) in[x] = true;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem h : s) {
      if (!in[g.conjugate(h, x)]) return false;
    }
  }
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  Subgroup out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (conjugate_subgroup(g, s, x) == s) out.push_back(x);
  }
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Elem> comms;
  std::vector<bool> seen(g.order(), false);
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      Elem c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return generated_subgroup(g, comms);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order) {
  std::set<Subgroup> found;
  std::deque<Subgroup> queue;
  auto offer = [&](std::optional<Subgroup> s) {
    if (s && found.insert(*s).second) queue.push_back(std::move(*s));
  };
  for (Elem x = 0; x < g.order(); ++x) offer(try_closure(g, {x}, {x}, max_order));
  while (!queue.empty()) {
    Subgroup h = std::move(queue.front());
    queue.pop_front();
    if (h.size() >= max_order) continue;
    std::vector<bool> in(g.order(), false);
    for (Elem x : h) in[x] = true;
    for (Elem x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<Elem> gens = h;
      gens.push_back(x);
      offer(try_closure(g, gens, gens, max_order));
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Subgroup> subgroups_of_order(const FiniteGroup& g, std::size_t k) {
  if (k == 0 || g.order() % k != 0) {
    fail(ErrorCode::InvalidArgument, std::to_string(k) + " does not divide the group order " + std::to_string(g.order()));
  }
  if (k > 16) fail(ErrorCode::Unsupported, "subgroup order " + std::to_string(k) + " too large for exhaustive search");
  std::set<Subgroup> reps;
  for (const auto& s : all_subgroups(g, k)) {
    if (s.size() != k) continue;
    Subgroup best = s;
    for (Elem x = 0; x < g.order(); ++x) best = std::min(best, conjugate_subgroup(g, s, x));
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

SubgroupGroup as_group(const FiniteGroup& g, const Subgroup& s, std::string name) {
  if (!is_subgroup(g, s)) fail(ErrorCode::InvalidArgument, "element set is not a sorted subgroup");
  const std::size_t n = s.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Elem prod = g.mul(s[a], s[b]);
      table[a * n + b] = static_cast<Elem>(std::lower_bound(s.begin(), s.end(), prod) - s.begin());
    }
  }
  FiniteGroup h = FiniteGroup::from_flat_table(std::move(table), n, std::move(name));
  Embedding inc = Embedding::make(h, g, s);
  return {std::move(h), std::move(inc)};
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  cc.class_of.assign(g.order(), kNone);
  for (Elem x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] != kNone) continue;
    std::vector<Elem> members;
    for (Elem y = 0; y < g.order(); ++y) {
      Elem c = g.conjugate(x, y);
      if (cc.class_of[c] == kNone) {
        cc.class_of[c] = cc.classes.size();
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    cc.classes.push_back(std::move(members));
  }
  const std::size_t id_class = cc.class_of[g.identity()];
  if (id_class != 0) {
    std::rotate(cc.classes.begin(), cc.classes.begin() + static_cast<std::ptrdiff_t>(id_class),
                cc.classes.begin() + static_cast<std::ptrdiff_t>(id_class) + 1);
    for (std::size_t c = 0; c < cc.classes.size(); ++c) {
      for (Elem x : cc.classes[c]) cc.class_of[x] = c;
    }
  }
  return cc;
}

FiniteGroup trivial_group() { return cyclic(1); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroup::from_flat_table(std::move(table), n, size_name("C", n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "dihedral parameter must be positive");
  // Element k + n*s stands for rot^k ref^s.
  const std::size_t order = 2 * n;
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t ka = a % n, sa = a / n, kb = b % n, sb = b / n;
      const std::size_t k = sa ? (ka + n - kb) % n : (ka + kb) % n;
      table[a * order + b] = static_cast<Elem>(k + n * (sa ^ sb));
    }
  }
  return FiniteGroup::from_flat_table(std::move(table), order, size_name("D", n));
}

FiniteGroup quaternion8() {
  // Unit quaternions +-1, +-i, +-j, +-k: index = unit + 4*negative.
  // unit_mul[u][v] = (sign flip, unit) for u*v with units 1, i, j, k.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Elem> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int neg = (a / 4) ^ (b / 4) ^ kNeg[ua][ub];
      table[a * 8 + b] = static_cast<Elem>(kUnit[ua][ub] + 4 * neg);
    }
  }
  return FiniteGroup::from_flat_table(std::move(table), 8, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto oa = identity_first(a), ob = identity_first(b);
  std::vector<std::size_t> pa(a.order()), pb(b.order());
  for (std::size_t i = 0; i < oa.size(); ++i) pa[oa[i]] = i;
  for (std::size_t i = 0; i < ob.size(); ++i) pb[ob[i]] = i;
  const std::size_t n = a.order() * b.order();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ga = a.mul(oa[x / b.order()], oa[y / b.order()]);
      const Elem gb = b.mul(ob[x % b.order()], ob[y % b.order()]);
      table[x * n + y] = static_cast<Elem>(pa[ga] * b.order() + pb[gb]);
    }
  }
  return FiniteGroup::from_flat_table(std::move(table), n, a.name() + "x" + b.name());
}

FiniteGroup generalized_dihedral(const FiniteGroup& a) {
  if (!a.is_abelian()) fail(ErrorCode::InvalidArgument, "generalized dihedral group needs an abelian base");
  const auto oa = identity_first(a);
  std::vector<std::size_t> pa(a.order());
  for (std::size_t i = 0; i < oa.size(); ++i) pa[oa[i]] = i;
  const std::size_t m = a.order(), n = 2 * m;
  // Element p + m*s stands for (oa[p], s); (x, s)(y, t) = (x * y^(+-1), s xor t).
  std::vector<Elem> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Elem x = oa[u % m], y = oa[v % m];
      const std::size_t s = u / m, t = v / m;
      const Elem z = a.mul(x, s ? a.inverse(y) : y);
      table[u * n + v] = static_cast<Elem>(pa[z] + m * (s ^ t));
    }
  }
  return FiniteGroup::from_flat_table(std::move(table), n, "GenDih(" + a.name() + ")");
}

FiniteGroup wreath_symmetric(const FiniteGroup& a, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "wreath rank must be non-negative");
  WreathCoder coder(a, n);
  const auto order_a = identity_first(a);
  const std::size_t tuples = coder.tuple_count();
  const std::size_t total = tuples * factorial(n);
  if (total > kMaxCheckedOrder) {
    fail(ErrorCode::Unsupported, "wreath product of order " + std::to_string(total) + " exceeds the supported order " +
                                     std::to_string(kMaxCheckedOrder));
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto decode_tuple = [&](std::size_t t) {
    std::vector<Elem> coords(n);
    for (int i = n - 1; i >= 0; --i) {
      coords[i] = order_a[t % coder.base];
      t /= coder.base;
    }
    return coords;
  };

  std::vector<Elem> table(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    const auto& sx = perms[x / tuples];
    const auto ax = decode_tuple(x % tuples);
    std::vector<int> sx_inv(n);
    for (int i = 0; i < n; ++i) sx_inv[sx[i]] = i;
    for (std::size_t y = 0; y < total; ++y) {
      const auto& sy = perms[y / tuples];
      const auto ay = decode_tuple(y % tuples);
      // (a, s)(b, t) = (a * s.b, s t) with (s.b)_i = b_{s^-1(i)}.
      std::vector<Elem> c(n);
      std::vector<int> st(n);
      for (int i = 0; i < n; ++i) {
        c[i] = a.mul(ax[i], ay[sx_inv[i]]);
        st[i] = sx[sy[i]];
      }
      table[x * total + y] = static_cast<Elem>(coder.encode(c, st));
    }
  }
  std::string name = n == 1 ? a.name() : wrapped_name(a) + "wrS" + std::to_string(n);
  return FiniteGroup::from_flat_table(std::move(table), total, std::move(name));
}

FiniteGroup wreath_with_s2(const FiniteGroup& a) { return wreath_symmetric(a, 2); }

FiniteGroup symmetric(int n) { return wreath_symmetric(trivial_group(), n).renamed("S" + std::to_string(n)); }

Embedding wreath_inclusion(const FiniteGroup& a, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "wreath inclusion needs n >= 1");
  WreathCoder small(a, n - 1), big(a, n);
  const auto order_a = identity_first(a);
  const std::size_t tuples = small.tuple_count();

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Elem> map(tuples * perms.size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    std::vector<int> p = perms[x / tuples];
    p.push_back(n - 1);
    std::vector<Elem> coords(n, a.identity());
    std::size_t t = x % tuples;
    for (int i = n - 2; i >= 0; --i) {
      coords[i] = order_a[t % small.base];
      t /= small.base;
    }
    map[x] = static_cast<Elem>(big.encode(coords, p));
  }
  return Embedding::make(wreath_symmetric(a, n - 1), wreath_symmetric(a, n), std::move(map));
}

namespace {

class NameParser {
 public:
  explicit NameParser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = product();
    if (pos_ != text_.size()) error();
    return g;
  }

 private:
  [[noreturn]] void error() const {
    fail(ErrorCode::Parse, "unknown group name '" + std::string(text_) + "'");
  }

  bool accept(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  std::size_t number() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || value == 0) error();
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  FiniteGroup product() {
    FiniteGroup g = wreath();
    while (accept("x")) g = direct_product(g, wreath());
    return g;
  }

  FiniteGroup wreath() {
    FiniteGroup g = atom();
    while (accept("wrS")) g = wreath_symmetric(g, static_cast<int>(number()));
    return g;
  }

  FiniteGroup atom() {
    if (accept("(")) {
      FiniteGroup g = product();
      if (!accept(")")) error();
      return g;
    }
    if (accept("GenDih(")) {
      FiniteGroup g = product();
      if (!accept(")")) error();
      return generalized_dihedral(g);
    }
    if (accept("Q8")) return quaternion8();
    if (accept("C")) {
      FiniteGroup g = cyclic(number());
      if (accept("^")) {
        const std::size_t k = number();
        FiniteGroup base = g;
        for (std::size_t i = 1; i < k; ++i) g = direct_product(g, base);
      }
      return g;
    }
    if (accept("D")) return dihedral(number());
    if (accept("S")) return symmetric(static_cast<int>(number()));
    error();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup group_by_name(std::string_view name) {
  if (name == "1" || name == "e" || name == "trivial") return trivial_group().renamed("1");
  return NameParser(name).parse();
}

std::vector<FiniteGroup> catalog_order_2r2(int r) {
  switch (r) {
    case 1:
      return {cyclic(2)};
    case 2:
      return {cyclic(8), direct_product(cyclic(4), cyclic(2)),
              direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)), dihedral(4), quaternion8()};
    case 3:
    case 5: {
      const std::size_t rr = static_cast<std::size_t>(r);
      return {cyclic(2 * rr * rr), direct_product(cyclic(rr), cyclic(2 * rr)), dihedral(rr * rr),
              wreath_with_s2(cyclic(rr)), generalized_dihedral(direct_product(cyclic(rr), cyclic(rr)))};
    }
    default:
      fail(ErrorCode::Unsupported, "order-2r^2 catalog covers r in {1, 2, 3, 5}, got " + std::to_string(r));
  }
}

}  // namespace dgg
