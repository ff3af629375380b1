#include "agx/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "agx/canonical.hpp"
#include "agx/graph.hpp"
#include "agx/graph6.hpp"
#include "parallel.hpp"

namespace agx {

namespace {

using Rows = std::vector<std::uint64_t>;

constexpr int kMaxDegree = ChemicalGraph::kMaxDegree;

Rows rows_of(const std::string& key) {
  const ChemicalGraph g = decode_graph6(key);
  return Rows(g.rows().begin(), g.rows().end());
}

int degree(const Rows& rows, int v) { return std::popcount(rows[v]); }

int neighbor_degree_sum(const Rows& rows, int v) {
  int sum = 0;
  for (std::uint64_t bits = rows[v]; bits; bits &= bits - 1) sum += degree(rows, std::countr_zero(bits));
  return sum;
}

void toggle(Rows& rows, int u, int v) {
  rows[u] ^= std::uint64_t{1} << v;
  rows[v] ^= std::uint64_t{1} << u;
}

// Collects children of every parent and returns them sorted.
template <class Expand>
std::vector<std::string> expand_all(const std::vector<std::string>& parents, int threads, Expand expand) {
  std::vector<std::vector<std::string>> per_parent(parents.size());
  detail::parallel_for(parents.size(), threads, [&](std::size_t i) { per_parent[i] = expand(parents[i]); });
  std::size_t total = 0;
  for (const auto& c : per_parent) total += c.size();
  std::vector<std::string> out;
  out.reserve(total);
  for (auto& c : per_parent) {
    for (auto& k : c) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- edge augmentation ------------------------------------------------------

// Isomorphism-invariant rank of an edge; the canonical deletion edge has the
// largest rank.
std::uint32_t edge_rank(const Rows& rows, int u, int v) {
  auto end_rank = [&](int x) { return static_cast<std::uint32_t>(degree(rows, x) << 5 | neighbor_degree_sum(rows, x)); };
  const auto a = end_rank(u);
  const auto b = end_rank(v);
  return std::max(a, b) << 10 | std::min(a, b);
}

std::vector<std::string> edge_children(int order, const std::string& parent_key) {
  Rows rows = rows_of(parent_key);
  std::vector<std::string> kept;
  std::unordered_set<std::string> seen;
  for (int u = 0; u < order; ++u) {
    if (degree(rows, u) >= kMaxDegree) continue;
    for (int v = u + 1; v < order; ++v) {
      if (degree(rows, v) >= kMaxDegree || ((rows[u] >> v) & 1U)) continue;
      toggle(rows, u, v);
      const std::uint32_t mine = edge_rank(rows, u, v);
      bool dominated = false;
      int ties = 0;
      for (int a = 0; a < order && !dominated; ++a) {
        for (std::uint64_t bits = rows[a] >> (a + 1); bits && !dominated; bits &= bits - 1) {
          const int b = a + 1 + std::countr_zero(bits);
          const std::uint32_t r = edge_rank(rows, a, b);
          if (r > mine) dominated = true;
          if (r == mine) ++ties;
        }
      }
      if (!dominated) {
        const CanonicalLabeling lab = canonical_labeling(order, rows);
        bool accept = ties == 1;
        if (!accept) {
          // Among top-ranked edges, the one whose canonical labels are largest.
          std::pair<int, int> best{-1, -1};
          Edge deletion{-1, -1};
          for (int a = 0; a < order; ++a) {
            for (std::uint64_t bits = rows[a] >> (a + 1); bits; bits &= bits - 1) {
              const int b = a + 1 + std::countr_zero(bits);
              if (edge_rank(rows, a, b) != mine) continue;
              const std::pair<int, int> labels = std::minmax(lab.position[a], lab.position[b]);
              if (labels > best) {
                best = labels;
                deletion = {a, b};
              }
            }
          }
          if (deletion == Edge{u, v}) {
            accept = true;
          } else {
            Rows reduced = rows;
            toggle(reduced, deletion.first, deletion.second);
            accept = canonical_key(order, reduced).key == parent_key;
          }
        }
        if (accept) {
          std::string key = encode_graph6(order, lab.rows);
          if (seen.insert(key).second) kept.push_back(std::move(key));
        }
      }
      toggle(rows, u, v);
    }
  }
  return kept;
}

// --- vertex augmentation ----------------------------------------------------

bool can_reach(const Rows& rows, const CoreTarget& t) {
  const int k = static_cast<int>(rows.size());
  const int r = t.order - k;
  int edges = 0;
  int capacity = 0;
  int need_old = 0;
  for (int v = 0; v < k; ++v) {
    const int d = degree(rows, v);
    edges += d;
    capacity += kMaxDegree - d;
    if (d + r < t.min_degree) return false;
    need_old += std::max(0, t.min_degree - d);
  }
  edges /= 2;
  if (edges > t.size) return false;
  const int max_add = std::min({kMaxDegree * r, (capacity + kMaxDegree * r) / 2,
                                std::min(capacity, kMaxDegree * r) + r * (r - 1) / 2});
  if (edges + max_add < t.size) return false;
  const int min_add = std::max(need_old, (need_old + r * t.min_degree + 1) / 2);
  return edges + min_add <= t.size;
}

std::vector<std::string> vertex_children(const std::string& parent_key, const CoreTarget& target) {
  const Rows parent = rows_of(parent_key);
  const int k = static_cast<int>(parent.size());
  const int n = k + 1;
  std::vector<int> open;
  for (int v = 0; v < k; ++v) {
    if (degree(parent, v) < kMaxDegree) open.push_back(v);
  }

  std::vector<std::string> kept;
  std::unordered_set<std::string> seen;
  Rows rows = parent;
  rows.push_back(0);

  auto consider = [&](std::uint64_t attach) {
    const int s = std::popcount(attach);
    rows[k] = attach;
    for (int v = 0; v < k; ++v) {
      rows[v] = parent[v] | (((attach >> v) & 1U) ? std::uint64_t{1} << k : 0);
      if (degree(rows, v) < s) return;  // new vertex must have minimum degree
    }
    if (!can_reach(rows, target)) return;
    const int mine = neighbor_degree_sum(rows, k);
    int ties = 0;
    for (int v = 0; v < n; ++v) {
      if (degree(rows, v) != s) continue;
      const int r = neighbor_degree_sum(rows, v);
      if (r > mine) return;
      if (r == mine) ++ties;
    }
    const CanonicalLabeling lab = canonical_labeling(n, rows);
    bool accept = ties == 1;
    if (!accept) {
      int deletion = -1;
      for (int v = 0; v < n; ++v) {
        if (degree(rows, v) == s && neighbor_degree_sum(rows, v) == mine &&
            (deletion < 0 || lab.position[v] > lab.position[deletion])) {
          deletion = v;
        }
      }
      if (deletion == k) {
        accept = true;
      } else {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v) {
          if (v != deletion) keep.push_back(v);
        }
        const ChemicalGraph child = ChemicalGraph::from_rows(n, rows);
        accept = canonical_key(induced_subgraph(child, keep)).key == parent_key;
      }
    }
    if (accept) {
      std::string key = encode_graph6(n, lab.rows);
      if (seen.insert(key).second) kept.push_back(std::move(key));
    }
  };

  // Subsets of `open` with at most four elements.
  std::uint64_t attach = 0;
  auto choose = [&](auto&& self, std::size_t from, int left) -> void {
    consider(attach);
    if (left == 0) return;
    for (std::size_t i = from; i < open.size(); ++i) {
      attach |= std::uint64_t{1} << open[i];
      self(self, i + 1, left - 1);
      attach &= ~(std::uint64_t{1} << open[i]);
    }
  };
  choose(choose, 0, kMaxDegree);
  return kept;
}

}  // namespace

std::vector<std::string> augment_by_edge(int order, const std::vector<std::string>& parents, int threads) {
  return expand_all(parents, threads, [order](const std::string& p) { return edge_children(order, p); });
}

std::vector<std::string> augment_by_vertex(const std::vector<std::string>& parents, const CoreTarget& target,
                                           int threads) {
  return expand_all(parents, threads, [&target](const std::string& p) { return vertex_children(p, target); });
}

std::vector<std::string> generate_cores(const CoreTarget& target, int threads) {
  if (target.order < 1) return {};
  const Rows single{0};
  std::vector<std::string> level;
  if (can_reach(single, target)) level.push_back(encode_graph6(1, single));
  for (int k = 1; k < target.order && !level.empty(); ++k) level = augment_by_vertex(level, target, threads);
  return level;
}

}  // namespace agx
