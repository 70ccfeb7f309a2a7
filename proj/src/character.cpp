#include "dgg/character.hpp"

#include "dgg/error.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <numeric>

namespace dgg {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p == 0) fail(ErrorCode::Engine, "division by zero in F_" + std::to_string(p));
  return pow(a, p - 2);
}

std::uint64_t PrimeField::from_int(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % sp) + sp) % sp);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  if (exponent == 0) fail(ErrorCode::InvalidArgument, "exponent must be positive");
  // Smallest p = 1 (mod exponent) strictly above 2 * order.
  std::uint64_t p = (2 * order / exponent) * exponent + 1;
  while (p <= 2 * order || !is_prime(p)) p += exponent;
  return p;
}

std::uint64_t dixon_prime(const FiniteGroup& g) { return dixon_prime(g.order(), g.exponent()); }

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major

// Basis of the kernel of m (rows x cols) over F_p.
std::vector<Vec> kernel(Mat m, std::size_t cols, const PrimeField& f) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t factor = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.sub(0, m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits the space spanned by `basis` (vectors in F_p^k) into eigenspaces
// of a. Returns nullopt if the eigenvalues do not account for the whole
// subspace.
std::optional<std::vector<std::vector<Vec>>> split(const Mat& a, const std::vector<Vec>& basis, const PrimeField& f) {
  const std::size_t k = a.size();
  const std::size_t d = basis.size();
  // a * B as a k x d matrix.
  Mat ab(k, Vec(d, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < k; ++l) s = f.add(s, f.mul(a[i][l], basis[j][l]));
      ab[i][j] = s;
    }
  }
  std::vector<std::vector<Vec>> parts;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < f.p && found < d; ++lambda) {
    Mat m = ab;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] = f.sub(m[i][j], f.mul(lambda, basis[j][i]));
    }
    auto coeffs = kernel(std::move(m), d, f);
    if (coeffs.empty()) continue;
    std::vector<Vec> space;
    for (const auto& c : coeffs) {
      Vec v(k, 0);
      for (std::size_t j = 0; j < d; ++j) {
        if (c[j] == 0) continue;
        for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(c[j], basis[j][l]));
      }
      space.push_back(std::move(v));
    }
    found += space.size();
    parts.push_back(std::move(space));
  }
  if (found != d) return std::nullopt;
  return parts;
}

std::optional<CharacterTable> dixon_attempt(const FiniteGroup& g, const ConjugacyClasses& cc,
                                            const std::vector<std::size_t>& inverse_class, std::uint64_t p) {
  const PrimeField f{p};
  const std::size_t k = cc.size();
  const std::uint64_t order = g.order();

  // a[j][kk][l] = #{x in C_j : x^-1 g_l in C_kk}; A_j omega = omega_j omega.
  std::vector<Mat> a(k, Mat(k, Vec(k, 0)));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      const Elem gl = cc.representative(l);
      for (Elem x : cc.classes[j]) ++a[j][cc.class_of[g.mul(g.inverse(x), gl)]][l];
    }
  }

  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < k; ++i) {
      Vec e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](auto& s) { return s.size() == 1; })) break;
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      auto parts = split(a[j], s, f);
      if (!parts) return std::nullopt;
      for (auto& part : *parts) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) return std::nullopt;

  CharacterTable t{g, p, cc, inverse_class, {}, {}};
  const std::uint64_t root_bound = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  for (const auto& s : spaces) {
    Vec omega = s[0];
    if (omega[0] == 0) return std::nullopt;
    const std::uint64_t scale = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, scale);

    std::uint64_t norm = 0;
    for (std::size_t l = 0; l < k; ++l) {
      norm = f.add(norm, f.mul(f.mul(omega[l], omega[inverse_class[l]]), f.inv(cc.classes[l].size())));
    }
    if (norm == 0) return std::nullopt;
    const std::uint64_t deg_sq = f.mul(order % p, f.inv(norm));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= root_bound && d * d <= order; ++d) {
      if (d * d % p == deg_sq) degree = d;
    }
    if (degree == 0) return std::nullopt;

    Vec chi(k);
    for (std::size_t l = 0; l < k; ++l) chi[l] = f.mul(f.mul(omega[l], degree), f.inv(cc.classes[l].size()));
    t.values.push_back(std::move(chi));
    t.degrees.push_back(degree);
  }

  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(t.degrees[x], t.values[x]) < std::tie(t.degrees[y], t.values[y]);
  });
  CharacterTable sorted{g, p, cc, inverse_class, {}, {}};
  for (auto i : idx) {
    sorted.values.push_back(std::move(t.values[i]));
    sorted.degrees.push_back(t.degrees[i]);
  }

  std::uint64_t sum_sq = 0;
  for (auto d : sorted.degrees) sum_sq += d * d;
  if (sum_sq != order) return std::nullopt;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (sorted.inner_product(sorted.values[x], sorted.values[y]) != (x == y ? 1u : 0u)) return std::nullopt;
    }
  }
  return sorted;
}

const std::uint64_t kMaxLift = kMaxCharacterOrder;

std::uint64_t lift(std::uint64_t v, std::uint64_t p, std::uint64_t bound) {
  if (v > bound || v > p / 2) fail(ErrorCode::Engine, "multiplicity " + std::to_string(v) + " does not lift to an integer");
  return v;
}

// Tables sharing one prime; recomputes both with a common prime if needed.
std::pair<CharacterTable, CharacterTable> common_prime(const CharacterTable& big, const CharacterTable& small) {
  if (big.prime == small.prime) return {big, small};
  const std::uint64_t ea = big.group.exponent(), eb = small.group.exponent();
  const std::uint64_t e = ea / std::gcd(ea, eb) * eb;
  const std::uint64_t p = dixon_prime(std::max(big.group.order(), small.group.order()), e);
  return {character_table(big.group, p), character_table(small.group, p)};
}

}  // namespace

std::vector<ClassInfo> CharacterTable::class_info() const {
  std::vector<ClassInfo> out;
  for (std::size_t c = 0; c < classes.size(); ++c) out.push_back({classes.representative(c), classes.classes[c].size()});
  return out;
}

std::uint64_t CharacterTable::inner_product(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
  const PrimeField f{prime};
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    s = f.add(s, f.mul(classes.classes[c].size() % prime, f.mul(a[c], b[inverse_class[c]])));
  }
  return f.mul(s, f.inv(group.order() % prime));
}

std::optional<std::size_t> CharacterTable::find(const std::vector<std::uint64_t>& class_values) const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == class_values) return i;
  }
  return std::nullopt;
}

CharacterTable character_table(const FiniteGroup& g, std::uint64_t prime) {
  if (g.order() > kMaxCharacterOrder) {
    fail(ErrorCode::Unsupported, "character tables are limited to order " + std::to_string(kMaxCharacterOrder));
  }
  const std::uint64_t e = g.exponent();
  if (prime == 0) {
    prime = dixon_prime(g.order(), e);
  } else if (!is_prime(prime) || (prime - 1) % e != 0 || prime <= 2 * g.order()) {
    fail(ErrorCode::InvalidArgument, "prime " + std::to_string(prime) + " is not admissible for a group of order " +
                                         std::to_string(g.order()) + " and exponent " + std::to_string(e));
  }
  auto cc = conjugacy_classes(g);
  std::vector<std::size_t> inverse_class(cc.size());
  for (std::size_t c = 0; c < cc.size(); ++c) inverse_class[c] = cc.class_of[g.inverse(cc.representative(c))];

  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (auto t = dixon_attempt(g, cc, inverse_class, prime)) return *std::move(t);
    do {
      prime += e;
    } while (!is_prime(prime));
  }
  fail(ErrorCode::Engine, "no suitable prime found for the character table of " + g.name());
}

std::vector<std::vector<std::uint64_t>> restriction_matrix(const Embedding& e, const CharacterTable& big_in,
                                                           const CharacterTable& small_in) {
  if (e.source_order() != small_in.group.order() || e.target_order() != big_in.group.order()) {
    fail(ErrorCode::InvalidArgument, "embedding does not match the character tables");
  }
  auto [big, small] = common_prime(big_in, small_in);
  const PrimeField f{big.prime};
  std::vector<std::vector<std::uint64_t>> out(small.irreducible_count(),
                                              std::vector<std::uint64_t>(big.irreducible_count()));
  for (std::size_t chi = 0; chi < big.irreducible_count(); ++chi) {
    std::vector<std::uint64_t> res(small.class_count());
    for (std::size_t c = 0; c < small.class_count(); ++c) res[c] = big.value(chi, e(small.classes.representative(c)));
    for (std::size_t psi = 0; psi < small.irreducible_count(); ++psi) {
      out[psi][chi] = lift(small.inner_product(res, small.values[psi]), f.p, kMaxLift);
    }
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> induction_matrix(const Embedding& e, const CharacterTable& big_in,
                                                         const CharacterTable& small_in) {
  auto [big, small] = common_prime(big_in, small_in);
  const PrimeField f{big.prime};
  // <Ind psi, chi>_G computed from the induced character itself.
  std::vector<std::vector<std::uint64_t>> out(big.irreducible_count(),
                                              std::vector<std::uint64_t>(small.irreducible_count()));
  const FiniteGroup& g = big.group;
  const FiniteGroup& h = small.group;
  std::vector<std::int64_t> preimage(g.order(), -1);
  for (Elem x = 0; x < h.order(); ++x) preimage[e(x)] = x;
  for (std::size_t psi = 0; psi < small.irreducible_count(); ++psi) {
    // Ind psi (g_c) = (1/|H|) sum_{y in G, y^-1 g_c y in H} psi(y^-1 g_c y)
    std::vector<std::uint64_t> ind(big.class_count(), 0);
    for (std::size_t c = 0; c < big.class_count(); ++c) {
      const Elem gc = big.classes.representative(c);
      std::uint64_t s = 0;
      for (Elem y = 0; y < g.order(); ++y) {
        const auto pre = preimage[g.conjugate(gc, y)];
        if (pre >= 0) s = f.add(s, small.value(psi, static_cast<Elem>(pre)));
      }
      ind[c] = f.mul(s, f.inv(h.order() % f.p));
    }
    for (std::size_t chi = 0; chi < big.irreducible_count(); ++chi) {
      out[chi][psi] = lift(big.inner_product(ind, big.values[chi]), f.p, kMaxLift);
    }
  }
  return out;
}

CliffordVerdict clifford_analysis(const CharacterTable& g_table_in, const Subgroup& h, const CharacterTable& h_table_in,
                                  std::size_t chi) {
  const FiniteGroup& g = g_table_in.group;
  if (!is_subgroup(g, h)) fail(ErrorCode::InvalidArgument, "element set is not a sorted subgroup");
  if (h_table_in.group.order() != h.size()) fail(ErrorCode::InvalidArgument, "subgroup table has the wrong order");
  if (chi >= g_table_in.irreducible_count()) fail(ErrorCode::OutOfRange, "character index out of range");
  auto [gt, ht] = common_prime(g_table_in, h_table_in);
  const Embedding inc = Embedding::make(ht.group, g, h);

  CliffordVerdict v;
  const auto res = restriction_matrix(inc, gt, ht);
  for (std::size_t psi = 0; psi < ht.irreducible_count(); ++psi) {
    if (res[psi][chi] > 0) {
      v.constituents.push_back(psi);
      v.multiplicities.push_back(res[psi][chi]);
    }
  }

  // psi^y(x) = psi(y x y^-1) for y in the normalizer.
  const Subgroup norm = normalizer(g, h);
  auto index_in_h = [&](Elem x) { return static_cast<Elem>(std::lower_bound(h.begin(), h.end(), x) - h.begin()); };
  auto conjugate_character = [&](std::size_t psi, Elem y) {
    std::vector<std::uint64_t> vals(ht.class_count());
    for (std::size_t c = 0; c < ht.class_count(); ++c) {
      const Elem x = h[ht.classes.representative(c)];
      vals[c] = ht.value(psi, index_in_h(g.conjugate(x, g.inverse(y))));
    }
    auto idx = ht.find(vals);
    if (!idx) fail(ErrorCode::Engine, "conjugate of an irreducible is not irreducible");
    return *idx;
  };
  std::vector<bool> in_orbit(ht.irreducible_count(), false);
  for (Elem y : norm) in_orbit[conjugate_character(v.constituents.front(), y)] = true;
  for (std::size_t psi = 0; psi < in_orbit.size(); ++psi) {
    if (in_orbit[psi]) v.orbit.push_back(psi);
  }

  v.single_orbit = v.orbit == v.constituents;
  v.equal_degrees = std::all_of(v.constituents.begin(), v.constituents.end(),
                                [&](std::size_t psi) { return ht.degrees[psi] == ht.degrees[v.constituents.front()]; });
  v.equal_multiplicities = std::all_of(v.multiplicities.begin(), v.multiplicities.end(),
                                       [&](std::uint64_t m) { return m == v.multiplicities.front(); });
  const bool has_trivial = v.constituents.front() == 0;
  v.trivial_rule = !has_trivial || v.constituents.size() == 1;
  return v;
}

CliffordVerdict clifford_check(const CharacterTable& g_table, const Subgroup& n, const CharacterTable& n_table,
                               std::size_t chi) {
  if (!is_subgroup(g_table.group, n) || !is_normal(g_table.group, n)) {
    fail(ErrorCode::InvalidArgument, "subgroup is not normal");
  }
  return clifford_analysis(g_table, n, n_table, chi);
}

GroupFingerprint fingerprint(const CharacterTable& t) {
  GroupFingerprint fp;
  fp.order = t.group.order();
  for (const auto& c : t.classes.classes) fp.class_sizes.push_back(c.size());
  fp.degrees = t.degrees;
  for (Elem x = 0; x < t.group.order(); ++x) fp.element_orders.push_back(t.group.element_order(x));
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  std::sort(fp.degrees.begin(), fp.degrees.end());
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  return fp;
}

GroupFingerprint fingerprint(const FiniteGroup& g) { return fingerprint(character_table(g)); }

}  // namespace dgg
