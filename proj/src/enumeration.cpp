#include "agx/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <thread>
#include <unordered_set>

#include "agx/ag_index.hpp"
#include "agx/bounds.hpp"
#include "agx/cache.hpp"
#include "agx/canonical.hpp"
#include "agx/error.hpp"
#include "agx/generators.hpp"
#include "agx/graph6.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace agx {

namespace {

constexpr std::string_view kChemicalMode = "chemical";
constexpr std::string_view kGnmMode = "gnm";

std::string pair_text(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

GraphCache cache_of(const EnumOptions& opts) {
  return opts.cache_dir ? GraphCache(*opts.cache_dir) : GraphCache();
}

long long max_size(int n) { return std::min<long long>(2LL * n, 1LL * n * (n - 1) / 2); }

std::vector<std::string> chemical_keys(int n, int m, const EnumOptions& opts) {
  if (n > opts.max_chemical_order) {
    throw Error(ErrorCode::BudgetExceeded, "all-chemical enumeration limited to n <= " +
                                               std::to_string(opts.max_chemical_order));
  }
  if (n < 1 || m < 0 || m > max_size(n)) return {};
  const GraphCache cache = cache_of(opts);
  if (auto hit = cache.load(kChemicalMode, n, m)) return *hit;

  // Walk down to the highest cached level, then augment upward.
  int level = m;
  std::vector<std::string> keys;
  for (; level > 0; --level) {
    if (auto hit = cache.load(kChemicalMode, n, level - 1)) {
      keys = std::move(*hit);
      break;
    }
  }
  if (level == 0) {
    keys = {encode_graph6(n, std::vector<std::uint64_t>(n, 0))};
    cache.store(kChemicalMode, n, 0, keys);
    level = 1;
  }
  const int threads = resolve_threads(opts.threads);
  for (; level <= m; ++level) {
    keys = augment_by_edge(n, keys, threads);
    cache.store(kChemicalMode, n, level, keys);
  }
  return keys;
}

// All members of G(n,m): a core on the degree-4 vertices, at most one vertex
// of degree 2 or 3 joined to distinct core vertices, and pendants filling the
// remaining core capacity.
std::vector<std::string> gnm_keys(int n, int m, const EnumOptions& opts) {
  const auto q = canonical_quadruplet(n, m);
  if (!q) throw Error(ErrorCode::InfeasiblePair, "no canonical quadruplet for " + pair_text(n, m));
  if (n > opts.max_gnm_order) {
    throw Error(ErrorCode::BudgetExceeded, "G(n,m) enumeration limited to n <= " + std::to_string(opts.max_gnm_order));
  }
  const GraphCache cache = cache_of(opts);
  if (auto hit = cache.load(kGnmMode, n, m)) return *hit;

  const int special = q->t2 + q->t3;
  const int links = q->t2 == 1 ? 2 : 3;
  const int core_size = m - q->t1 - 2 * q->t2 - 3 * q->t3;
  std::vector<std::string> out;
  if (q->t4 > 0 && core_size >= 0) {
    const CoreTarget target{q->t4, core_size, std::max(0, ChemicalGraph::kMaxDegree - q->t1 - special)};
    const int threads = resolve_threads(opts.threads);
    const std::vector<std::string> cores = generate_cores(target, threads);

    std::vector<std::vector<std::string>> per_core(cores.size());
    detail::parallel_for(cores.size(), threads, [&](std::size_t i) {
      const ChemicalGraph core = decode_graph6(cores[i]);
      const int t4 = q->t4;
      std::vector<int> open;
      for (int v = 0; v < t4; ++v) {
        if (core.degree(v) < ChemicalGraph::kMaxDegree) open.push_back(v);
      }
      std::unordered_set<std::string> seen;
      auto emit = [&](std::uint64_t attach) {
        std::vector<std::uint64_t> rows(n, 0);
        for (int v = 0; v < t4; ++v) rows[v] = core.row(v);
        auto link = [&rows](int a, int b) {
          rows[a] |= std::uint64_t{1} << b;
          rows[b] |= std::uint64_t{1} << a;
        };
        if (special) {
          for (std::uint64_t bits = attach; bits; bits &= bits - 1) link(t4, std::countr_zero(bits));
        }
        int next = t4 + special;
        for (int v = 0; v < t4; ++v) {
          for (int d = std::popcount(rows[v]); d < ChemicalGraph::kMaxDegree; ++d) {
            if (next >= n) return;
            link(v, next++);
          }
        }
        if (next != n) return;
        std::string key = canonical_key(n, rows).key;
        if (seen.insert(key).second) per_core[i].push_back(std::move(key));
      };
      if (!special) {
        emit(0);
        return;
      }
      std::uint64_t attach = 0;
      auto choose = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
          emit(attach);
          return;
        }
        for (std::size_t k = from; k < open.size(); ++k) {
          attach |= std::uint64_t{1} << open[k];
          self(self, k + 1, left - 1);
          attach &= ~(std::uint64_t{1} << open[k]);
        }
      };
      choose(choose, 0, links);
    });
    for (auto& keys : per_core) {
      for (auto& k : keys) out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
  }
  cache.store(kGnmMode, n, m, out);
  return out;
}

bool keep(Connectivity c, const ChemicalGraph& g) {
  switch (c) {
    case Connectivity::Connected: return is_connected(g);
    case Connectivity::Disconnected: return !is_connected(g);
    case Connectivity::All: break;
  }
  return true;
}

// x(i,j) for 1 <= i <= j <= 4, packed; AG depends on nothing else.
std::array<int, 10> edge_profile(const Census& c) {
  std::array<int, 10> p{};
  int k = 0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) p[k++] = c.x(i, j);
  }
  return p;
}

ExceptionCatalog build_catalog(const std::vector<ExceptionRecord>& records) {
  ExceptionCatalog out;
  for (const auto& r : records) out.emplace(std::make_pair(r.n, r.m), r);
  return out;
}

std::optional<ExceptionCatalog> load_catalog(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) return std::nullopt;
  std::vector<ExceptionRecord> records;
  try {
    for (const auto& e : exceptional_values()) {
      const auto it = std::find_if(doc.begin(), doc.end(), [&](const nlohmann::json& j) {
        return j.value("n", -1) == e.n && j.value("m", -1) == e.m;
      });
      if (it == doc.end()) return std::nullopt;
      ChemicalGraph g = decode_graph6((*it)["graph6"].get<std::string>());
      const Census c = census(g);
      // A cached graph is trusted only if it still matches the pair and value.
      if (g.order() != e.n || g.size() != e.m || ag_value(c) != e.ag) return std::nullopt;
      records.push_back({e.n, e.m, std::move(g), e.ag, e.closed_form});
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return build_catalog(records);
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("AGX_THREADS"); env && *env) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::string> enumerate_keys(const EnumSpec& spec, const EnumOptions& opts) {
  std::vector<std::string> keys =
      spec.target == Target::Gnm ? gnm_keys(spec.n, spec.m, opts) : chemical_keys(spec.n, spec.m, opts);
  if (spec.connectivity == Connectivity::All) return keys;
  std::erase_if(keys, [&](const std::string& k) { return !keep(spec.connectivity, decode_graph6(k)); });
  return keys;
}

std::vector<ChemicalGraph> enumerate_chemical(const EnumSpec& spec, const EnumOptions& opts) {
  std::vector<ChemicalGraph> out;
  for (const auto& k : chemical_keys(spec.n, spec.m, opts)) {
    ChemicalGraph g = decode_graph6(k);
    if (keep(spec.connectivity, g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<ChemicalGraph> enumerate_Gnm(int n, int m, Connectivity connectivity, const EnumOptions& opts) {
  std::vector<ChemicalGraph> out;
  for (const auto& k : gnm_keys(n, m, opts)) {
    ChemicalGraph g = decode_graph6(k);
    if (keep(connectivity, g)) out.push_back(std::move(g));
  }
  return out;
}

MaxResult brute_force_max(int n, int m, const EnumOptions& opts) {
  if (n < 1 || m < 0 || m > max_size(n)) {
    throw Error(ErrorCode::SizeOutOfRange, "no chemical graph of order and size " + pair_text(n, m));
  }
  std::map<std::array<int, 10>, ExactValue> value_of;
  std::vector<std::pair<std::array<int, 10>, ChemicalGraph>> graphs;
  for (auto& g : enumerate_chemical({n, m, Connectivity::All, Target::AllChemical}, opts)) {
    const Census c = census(g);
    auto profile = edge_profile(c);
    if (!value_of.contains(profile)) value_of.emplace(profile, ag_value(c));
    graphs.emplace_back(profile, std::move(g));
  }
  MaxResult result;
  const std::array<int, 10>* best = nullptr;
  for (const auto& [profile, value] : value_of) {
    if (!best || exact_compare(value, value_of.at(*best)) > 0) best = &profile;
  }
  if (!best) return result;
  result.max = value_of.at(*best);
  for (auto& [profile, g] : graphs) {
    if (value_of.at(profile) == result.max) result.witnesses.push_back(std::move(g));
  }
  return result;
}

ExceptionCatalog derive_exception_catalog(const EnumOptions& opts) {
  std::optional<std::filesystem::path> file;
  if (opts.cache_dir) file = *opts.cache_dir / "catalog.json";
  if (file) {
    if (auto cached = load_catalog(*file)) return *cached;
  }

  std::vector<ExceptionRecord> records;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : exceptional_values()) {
    MaxResult r = brute_force_max(e.n, e.m, opts);
    if (r.witnesses.size() != 1) {
      throw Error(ErrorCode::CatalogMismatch, pair_text(e.n, e.m) + " has " + std::to_string(r.witnesses.size()) +
                                                  " maximizers, expected exactly one");
    }
    if (r.max != e.ag) {
      throw Error(ErrorCode::CatalogMismatch, pair_text(e.n, e.m) + " maximum " + r.max.to_string() +
                                                  " differs from stored " + e.ag.to_string());
    }
    doc.push_back({{"n", e.n}, {"m", e.m}, {"graph6", encode_graph6(r.witnesses.front())}});
    records.push_back({e.n, e.m, std::move(r.witnesses.front()), e.ag, e.closed_form});
  }
  if (file) {
    std::error_code ec;
    std::filesystem::create_directories(file->parent_path(), ec);
    std::ofstream(*file) << doc.dump(1) << "\n";
  }
  return build_catalog(records);
}

ExtremalCounts extremal_counts(int n, int m, const EnumOptions& opts) {
  if (!in_connected_range(n, m)) {
    throw Error(ErrorCode::SizeOutOfRange, pair_text(n, m) + " outside n-1 <= m <= min(2n, n(n-1)/2)");
  }
  if (is_exceptional_pair(n, m)) return {1, 0};
  ExtremalCounts counts;
  for (const auto& g : enumerate_Gnm(n, m, Connectivity::All, opts)) {
    ++(is_connected(g) ? counts.connected : counts.nonconnected);
  }
  return counts;
}

}  // namespace agx
