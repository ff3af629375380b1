#include "agx/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "agx/graph6.hpp"

namespace agx {

namespace {

using Perm = std::array<std::uint8_t, 64>;

struct Coloring {
  std::array<std::uint8_t, 64> color{};
  int cells = 0;
};

class Labeler {
 public:
  Labeler(int n, std::span<const std::uint64_t> rows) : n_(n), adj_(rows) {}

  CanonicalLabeling run() {
    add_twin_generators();
    Coloring root;
    root.cells = 1;
    refine(root);
    search(root, 0);

    CanonicalLabeling out;
    out.position.resize(n_);
    out.rows.assign(best_cert_.begin(), best_cert_.begin() + n_);
    for (int p = 0; p < n_; ++p) out.position[best_lab_[p]] = p;
    out.automorphisms.reserve(gens_.size());
    for (const auto& g : gens_) out.automorphisms.emplace_back(g.begin(), g.begin() + n_);
    return out;
  }

 private:
  static constexpr std::size_t kMaxGenerators = 256;

  // Splits cells by the sorted multiset of neighbor colors until stable.
  void refine(Coloring& c) const {
    std::array<std::uint64_t, 64> sig{};
    std::array<std::uint8_t, 64> order{};
    while (c.cells < n_) {
      for (int v = 0; v < n_; ++v) {
        std::array<std::uint8_t, 4> nb{};
        int k = 0;
        for (std::uint64_t bits = adj_[v]; bits; bits &= bits - 1) {
          nb[k++] = static_cast<std::uint8_t>(c.color[std::countr_zero(bits)] + 1);
        }
        std::sort(nb.begin(), nb.begin() + k, std::greater<>());
        std::uint64_t packed = 0;
        for (int i = 0; i < 4; ++i) packed = (packed << 7) | nb[i];
        sig[v] = (std::uint64_t{c.color[v]} << 28) | packed;
      }
      std::iota(order.begin(), order.begin() + n_, std::uint8_t{0});
      std::sort(order.begin(), order.begin() + n_,
                [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
      int cells = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++cells;
        c.color[order[i]] = static_cast<std::uint8_t>(cells);
      }
      ++cells;
      if (cells == c.cells) break;
      c.cells = cells;
    }
  }

  static Coloring individualize(const Coloring& c, int v, int n) {
    Coloring out;
    out.cells = c.cells + 1;
    const int cv = c.color[v];
    for (int x = 0; x < n; ++x) {
      const int cx = c.color[x];
      out.color[x] = static_cast<std::uint8_t>(cx + ((cx > cv || (cx == cv && x != v)) ? 1 : 0));
    }
    return out;
  }

  void add_twin_generators() {
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        const std::uint64_t bu = std::uint64_t{1} << u;
        const std::uint64_t bv = std::uint64_t{1} << v;
        if ((adj_[u] & ~bv) == (adj_[v] & ~bu)) {
          Perm p{};
          std::iota(p.begin(), p.begin() + n_, std::uint8_t{0});
          p[u] = static_cast<std::uint8_t>(v);
          p[v] = static_cast<std::uint8_t>(u);
          gens_.push_back(p);
          break;
        }
      }
    }
  }

  // Returns the depth the search should resume at: a leaf equivalent to an
  // earlier one makes every sibling subtree below their common ancestor redundant.
  int search(const Coloring& c, int depth) {
    if (c.cells == n_) return leaf(c, depth);
    std::array<int, 64> cell_size{};
    for (int v = 0; v < n_; ++v) ++cell_size[c.color[v]];
    int target = -1;
    for (int k = 0; k < c.cells; ++k) {
      if (cell_size[k] > 1 && (target < 0 || cell_size[k] < cell_size[target])) target = k;
    }
    std::array<int, 64> explored{};
    int n_explored = 0;
    for (int w = 0; w < n_; ++w) {
      if (c.color[w] != target) continue;
      if (n_explored > 0 && equivalent_to_explored(w, depth, explored.data(), n_explored)) continue;
      prefix_[depth] = static_cast<std::uint8_t>(w);
      Coloring child = individualize(c, w, n_);
      refine(child);
      const int resume = search(child, depth + 1);
      if (resume < depth) return resume;
      explored[n_explored++] = w;
    }
    return depth;
  }

  // True if some stored automorphism fixing prefix_[0..depth) pointwise maps
  // w into the orbit of an explored vertex.
  bool equivalent_to_explored(int w, int depth, const int* explored, int n_explored) const {
    if (gens_.empty()) return false;
    std::array<std::uint8_t, 64> parent{};
    std::iota(parent.begin(), parent.begin() + n_, std::uint8_t{0});
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    bool any = false;
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = g[prefix_[d]] == prefix_[d];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(g[x]);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    if (!any) return false;
    const int rw = find(w);
    for (int i = 0; i < n_explored; ++i) {
      if (find(explored[i]) == rw) return true;
    }
    return false;
  }

  int common_prefix(const Perm& path, int len, int depth) const {
    int k = 0;
    while (k < len && k < depth && path[k] == prefix_[k]) ++k;
    return k;
  }

  int leaf(const Coloring& c, int depth) {
    Perm lab{};
    for (int v = 0; v < n_; ++v) lab[c.color[v]] = static_cast<std::uint8_t>(v);
    std::array<std::uint64_t, 64> cert{};
    for (int p = 0; p < n_; ++p) {
      std::uint64_t row = 0;
      for (std::uint64_t bits = adj_[lab[p]]; bits; bits &= bits - 1) {
        row |= std::uint64_t{1} << c.color[std::countr_zero(bits)];
      }
      cert[p] = row;
    }
    if (!have_best_) {
      have_best_ = true;
      best_cert_ = first_cert_ = cert;
      best_lab_ = first_lab_ = lab;
      best_path_ = first_path_ = prefix_;
      best_depth_ = first_depth_ = depth;
      return depth;
    }
    if (compare(cert, first_cert_) == 0) {
      record_automorphism(lab, first_lab_);
      return common_prefix(first_path_, first_depth_, depth);
    }
    const auto cmp = compare(cert, best_cert_);
    if (cmp == 0) {
      record_automorphism(lab, best_lab_);
      return common_prefix(best_path_, best_depth_, depth);
    }
    if (cmp < 0) {
      best_cert_ = cert;
      best_lab_ = lab;
      best_path_ = prefix_;
      best_depth_ = depth;
    }
    return depth;
  }

  int compare(const std::array<std::uint64_t, 64>& a, const std::array<std::uint64_t, 64>& b) const {
    for (int p = 0; p < n_; ++p) {
      if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    if (gens_.size() >= kMaxGenerators) return;
    Perm g{};
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      g[from[p]] = to[p];
      identity = identity && from[p] == to[p];
    }
    if (!identity) gens_.push_back(g);
  }

  int n_;
  std::span<const std::uint64_t> adj_;
  bool have_best_ = false;
  std::array<std::uint64_t, 64> best_cert_{};
  std::array<std::uint64_t, 64> first_cert_{};
  Perm best_lab_{};
  Perm first_lab_{};
  Perm prefix_{};
  Perm first_path_{};
  Perm best_path_{};
  int first_depth_ = 0;
  int best_depth_ = 0;
  std::vector<Perm> gens_;
};

}  // namespace

CanonicalLabeling canonical_labeling(int order, std::span<const std::uint64_t> rows) {
  return Labeler(order, rows).run();
}

CanonicalKey canonical_key(int order, std::span<const std::uint64_t> rows) {
  const auto lab = canonical_labeling(order, rows);
  return CanonicalKey{encode_graph6(order, lab.rows)};
}

CanonicalKey canonical_key(const ChemicalGraph& g) { return canonical_key(g.order(), g.rows()); }

ChemicalGraph canonical_form(const ChemicalGraph& g) {
  return ChemicalGraph::from_rows(g.order(), canonical_labeling(g).rows);
}

}  // namespace agx
