#include "dgg/growth.hpp"

#include "dgg/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace dgg {

namespace {

int parse_int(std::string_view tok, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::Parse, "malformed integer '" + std::string(tok) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// Row insertion of values[k], recording labels[k] (labels increasing).
TableauPair insert_sequence(const std::vector<std::pair<int, int>>& label_value) {
  TableauPair t;
  for (const auto& [label, value] : label_value) {
    int x = value;
    std::size_t row = 0;
    while (true) {
      if (row == t.p.size()) {
        t.p.push_back({x});
        t.q.push_back({label});
        break;
      }
      auto& r = t.p[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        t.q[row].push_back(label);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return t;
}

// Reverse of insert_sequence: returns (label, value) pairs in label order.
std::vector<std::pair<int, int>> uninsert(TableauPair t) {
  std::vector<std::pair<int, int>> out;
  while (!t.q.empty()) {
    std::size_t row = 0;
    for (std::size_t i = 1; i < t.q.size(); ++i) {
      if (t.q[i].back() > t.q[row].back()) row = i;
    }
    const int label = t.q[row].back();
    t.q[row].pop_back();
    int x = t.p[row].back();
    t.p[row].pop_back();
    if (t.q[row].empty()) {
      t.q.pop_back();
      t.p.pop_back();
    }
    for (std::size_t k = row; k-- > 0;) {
      auto& r = t.p[k];
      auto it = std::lower_bound(r.begin(), r.end(), x);
      --it;  // largest entry smaller than x
      std::swap(x, *it);
    }
    out.emplace_back(label, x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PartitionTuple single(const Partition& p) { return PartitionTuple({p}); }

// Component and row where `next` differs from `prev` by one box.
std::pair<int, int> added_box(const PartitionTuple& prev, const PartitionTuple& next) {
  if (prev.r() != next.r() || next.total_size() != prev.total_size() + 1) {
    fail(ErrorCode::InvalidArgument, "'" + prev.to_string() + "' -> '" + next.to_string() + "' is not a cover");
  }
  for (int c = 0; c < prev.r(); ++c) {
    if (prev[c] == next[c]) continue;
    for (int row : prev[c].addable_rows()) {
      if (prev.add_box(c, row) == next) return {c, row};
    }
    break;
  }
  fail(ErrorCode::InvalidArgument, "'" + prev.to_string() + "' -> '" + next.to_string() + "' is not a cover");
}

void validate_path(const std::vector<PartitionTuple>& path, int r, const char* name) {
  if (path.empty()) fail(ErrorCode::InvalidArgument, std::string(name) + " is empty");
  if (path[0] != PartitionTuple::empty(r)) {
    fail(ErrorCode::InvalidArgument, std::string(name) + " does not start at the bottom element");
  }
  for (std::size_t k = 1; k < path.size(); ++k) added_box(path[k - 1], path[k]);
}

}  // namespace

std::string ColoredPermutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sigma[i]) + '^' + std::to_string(colors[i]);
  }
  return s;
}

ColoredPermutation ColoredPermutation::parse(std::string_view text, int r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "number of colors must be positive");
  ColoredPermutation w;
  w.r = r;
  for (auto tok : split_ws(text)) {
    auto caret = tok.find('^');
    w.sigma.push_back(parse_int(tok.substr(0, caret), text));
    w.colors.push_back(caret == tok.npos ? 0 : parse_int(tok.substr(caret + 1), text));
  }
  validate_permutation(w.sigma);
  for (int c : w.colors) {
    if (c < 0 || c >= r) fail(ErrorCode::InvalidArgument, "color " + std::to_string(c) + " outside [0, r)");
  }
  return w;
}

void validate_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v]) {
      fail(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(sigma.size()));
    }
    seen[v] = true;
  }
}

Permutation parse_permutation(std::string_view text) {
  Permutation sigma;
  for (auto tok : split_ws(text)) sigma.push_back(parse_int(tok, text));
  validate_permutation(sigma);
  return sigma;
}

Partition tableau_shape(const Tableau& t) {
  std::vector<int> parts;
  for (const auto& row : t) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::vector<Partition> shape_chain(const Tableau& t) {
  int n = 0;
  for (const auto& row : t) n += static_cast<int>(row.size());
  std::vector<Partition> chain;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> parts;
    for (const auto& row : t) {
      int c = static_cast<int>(std::count_if(row.begin(), row.end(), [k](int v) { return v <= k; }));
      if (c > 0) parts.push_back(c);
    }
    chain.emplace_back(std::move(parts));
  }
  return chain;
}

TableauPair rsk_insert(const Permutation& sigma) {
  validate_permutation(sigma);
  std::vector<std::pair<int, int>> seq;
  for (std::size_t i = 0; i < sigma.size(); ++i) seq.emplace_back(static_cast<int>(i + 1), sigma[i]);
  return insert_sequence(seq);
}

PathPair rsk_growth(const Permutation& sigma) {
  validate_permutation(sigma);
  const int n = static_cast<int>(sigma.size());
  // shape[i][j]: RSK shape of the entries at positions <= i with values <= j.
  std::vector<std::vector<Partition>> shape(n + 1, std::vector<Partition>(n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Partition& rho = shape[i - 1][j - 1];
      const Partition& mu = shape[i - 1][j];
      const Partition& nu = shape[i][j - 1];
      Partition& lam = shape[i][j];
      if (mu != nu) {
        std::vector<int> parts(std::max(mu.length(), nu.length()));
        for (std::size_t k = 0; k < parts.size(); ++k) {
          parts[k] = std::max(mu.row(static_cast<int>(k)), nu.row(static_cast<int>(k)));
        }
        lam = Partition(std::move(parts));
      } else if (mu == rho) {
        lam = sigma[i - 1] == j ? rho.add_box(0) : rho;
      } else {
        int k = 0;
        while (mu.row(k) == rho.row(k)) ++k;
        lam = mu.add_box(k + 1);
      }
    }
  }
  PathPair out;
  for (int k = 0; k <= n; ++k) {
    out.q_path.push_back(single(shape[k][n]));
    out.p_path.push_back(single(shape[n][k]));
  }
  return out;
}

PathPair colored_rsk(const ColoredPermutation& w) {
  if (w.r < 1) fail(ErrorCode::InvalidArgument, "number of colors must be positive");
  validate_permutation(w.sigma);
  const int n = w.size();
  if (static_cast<int>(w.colors.size()) != n) fail(ErrorCode::InvalidArgument, "colors and permutation differ in length");
  for (int c : w.colors) {
    if (c < 0 || c >= w.r) fail(ErrorCode::InvalidArgument, "color " + std::to_string(c) + " outside [0, r)");
  }

  std::vector<TableauPair> tabs(w.r);
  std::vector<int> value_color(n + 1);
  for (int k = 0; k < w.r; ++k) {
    std::vector<std::pair<int, int>> seq;
    for (int i = 0; i < n; ++i) {
      if (w.colors[i] == k) {
        seq.emplace_back(i + 1, w.sigma[i]);
        value_color[w.sigma[i]] = k;
      }
    }
    tabs[k] = insert_sequence(seq);
  }

  auto row_of = [](const Tableau& t, int entry) {
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (std::find(t[r].begin(), t[r].end(), entry) != t[r].end()) return static_cast<int>(r);
    }
    fail(ErrorCode::Engine, "entry missing from tableau");
  };

  PathPair out;
  out.q_path.push_back(PartitionTuple::empty(w.r));
  out.p_path.push_back(PartitionTuple::empty(w.r));
  for (int i = 1; i <= n; ++i) {
    const int cq = w.colors[i - 1];
    out.q_path.push_back(out.q_path.back().add_box(cq, row_of(tabs[cq].q, i)));
    const int cp = value_color[i];
    out.p_path.push_back(out.p_path.back().add_box(cp, row_of(tabs[cp].p, i)));
  }
  return out;
}

ColoredPermutation colored_rsk_inverse(const PathPair& pp, int r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "number of colors must be positive");
  if (pp.p_path.size() != pp.q_path.size()) fail(ErrorCode::InvalidArgument, "paths have unequal length");
  validate_path(pp.p_path, r, "p_path");
  validate_path(pp.q_path, r, "q_path");
  if (pp.p_path.back() != pp.q_path.back()) fail(ErrorCode::InvalidArgument, "paths end at different shapes");

  const int n = static_cast<int>(pp.p_path.size()) - 1;
  std::vector<TableauPair> tabs(r);
  auto place = [](Tableau& t, int row, int entry) {
    if (row == static_cast<int>(t.size())) t.emplace_back();
    t[row].push_back(entry);
  };
  for (int k = 1; k <= n; ++k) {
    auto [cq, rq] = added_box(pp.q_path[k - 1], pp.q_path[k]);
    place(tabs[cq].q, rq, k);
    auto [cp, rp] = added_box(pp.p_path[k - 1], pp.p_path[k]);
    place(tabs[cp].p, rp, k);
  }

  ColoredPermutation w;
  w.r = r;
  w.sigma.assign(n, 0);
  w.colors.assign(n, 0);
  for (int c = 0; c < r; ++c) {
    for (const auto& [label, value] : uninsert(tabs[c])) {
      w.sigma[label - 1] = value;
      w.colors[label - 1] = c;
    }
  }
  validate_permutation(w.sigma);
  return w;
}

std::vector<ColoredPermutation> all_colored_permutations(int n, int r) {
  if (n < 0 || r < 1) fail(ErrorCode::InvalidArgument, "need n >= 0 and r >= 1");
  std::vector<ColoredPermutation> out;
  Permutation sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  do {
    std::vector<int> colors(n, 0);
    while (true) {
      out.push_back({sigma, colors, r});
      int k = n - 1;
      while (k >= 0 && colors[k] == r - 1) colors[k--] = 0;
      if (k < 0) break;
      ++colors[k];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace dgg
