#include "dgg/lattice.hpp"

#include "dgg/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace dgg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

std::vector<int> Partition::addable_rows() const {
  std::vector<int> rows;
  for (int i = 0; i <= length(); ++i) {
    if (i == 0 || row(i) < row(i - 1)) rows.push_back(i);
  }
  return rows;
}

std::vector<int> Partition::removable_rows() const {
  std::vector<int> rows;
  for (int i = 0; i < length(); ++i) {
    if (row(i) > row(i + 1)) rows.push_back(i);
  }
  return rows;
}

Partition Partition::add_box(int r) const {
  if (r < 0 || r > length() || (r > 0 && row(r) >= row(r - 1))) {
    fail(ErrorCode::InvalidArgument, "cannot add a box in row " + std::to_string(r) + " of " + to_string());
  }
  auto parts = parts_;
  if (r == length()) {
    parts.push_back(1);
  } else {
    ++parts[r];
  }
  return Partition(std::move(parts));
}

Partition Partition::remove_box(int r) const {
  if (r < 0 || r >= length() || row(r) <= row(r + 1)) {
    fail(ErrorCode::InvalidArgument, "cannot remove a box from row " + std::to_string(r) + " of " + to_string());
  }
  auto parts = parts_;
  if (--parts[r] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(ErrorCode::Parse, "malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, "malformed partition '" + std::string(text) + "': " + e.what());
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

PartitionTuple::PartitionTuple(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) fail(ErrorCode::InvalidArgument, "partition tuple needs at least one component");
  for (const auto& p : components_) total_size_ += p.size();
}

PartitionTuple PartitionTuple::add_box(int component, int row) const {
  auto comps = components_;
  comps.at(component) = comps.at(component).add_box(row);
  return PartitionTuple(std::move(comps));
}

std::string PartitionTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ';';
    s += components_[i].to_string();
  }
  return s;
}

PartitionTuple PartitionTuple::parse(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    std::string_view tok = text.substr(pos, semi == std::string_view::npos ? text.npos : semi - pos);
    if (tok.empty()) fail(ErrorCode::Parse, "empty component in partition tuple '" + std::string(text) + "'");
    comps.push_back(Partition::parse(tok));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return PartitionTuple(std::move(comps));
}

std::vector<PartitionTuple> partition_tuples_of(int n, int r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "tuple length must be positive");
  std::vector<PartitionTuple> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (k == r - 1) {
      for (const auto& p : partitions_of(remaining)) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int s = remaining; s >= 0; --s) {
      for (const auto& p : partitions_of(s)) {
        cur.push_back(p);
        rec(k + 1, remaining - s);
        cur.pop_back();
      }
    }
  };
  rec(0, n);
  return out;
}

GradedGraph young_lattice(int max_rank) {
  if (max_rank < 0) fail(ErrorCode::InvalidArgument, "max_rank must be non-negative");
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (int n = 0; n <= max_rank; ++n) {
    for (const auto& lam : partitions_of(n)) {
      vs.push_back({lam.to_string(), n});
      for (int row : lam.removable_rows()) es.push_back({lam.remove_box(row).to_string(), lam.to_string(), 1});
    }
  }
  return GradedGraph::build(vs, es);
}

GradedGraph product(const GradedGraph& p, const GradedGraph& q) {
  const int top = std::min(p.max_rank(), q.max_rank());
  auto pair_label = [&](VertexId x, VertexId y) { return p.label(x) + ";" + q.label(y); };
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (int n = 0; n <= top; ++n) {
    for (int a = n; a >= 0; --a) {
      const int b = n - a;
      for (VertexId x = p.rank_begin(a); x < p.rank_end(a); ++x) {
        for (VertexId y = q.rank_begin(b); y < q.rank_end(b); ++y) {
          vs.push_back({pair_label(x, y), n});
          for (const auto& nb : p.down(x)) es.push_back({pair_label(nb.vertex, y), pair_label(x, y), nb.m});
          for (const auto& nb : q.down(y)) es.push_back({pair_label(x, nb.vertex), pair_label(x, y), nb.m});
        }
      }
    }
  }
  return GradedGraph::build(vs, es);
}

GradedGraph scale(const GradedGraph& p, std::uint64_t d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "scale factor must be positive");
  auto es = p.edge_specs();
  for (auto& e : es) e.m *= d;
  return GradedGraph::build(p.vertex_specs(), es);
}

GradedGraph wreath_graph(const std::vector<std::uint64_t>& dims, int max_rank) {
  if (dims.empty()) fail(ErrorCode::InvalidArgument, "wreath_graph needs at least one dimension");
  GradedGraph y = young_lattice(max_rank);
  GradedGraph out = scale(y, dims[0]);
  for (std::size_t i = 1; i < dims.size(); ++i) out = product(out, scale(y, dims[i]));
  return out;
}

GradedGraph young_power(int r, int max_rank) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "power must be positive");
  return wreath_graph(std::vector<std::uint64_t>(r, 1), max_rank);
}

BigInt syt_count(const Partition& lambda) {
  GradedGraph y = young_lattice(lambda.size());
  return path_count(y, y.at(lambda.to_string()));
}

BigInt wreath_dim(const PartitionTuple& lambda) {
  BigInt result = 1;
  // Multinomial as a product of binomials, then SYT counts.
  int placed = 0;
  for (const auto& part : lambda.components()) {
    for (int k = 1; k <= part.size(); ++k) {
      result *= placed + k;
      result /= k;
    }
    placed += part.size();
  }
  for (const auto& part : lambda.components()) result *= syt_count(part);
  return result;
}

}  // namespace dgg
