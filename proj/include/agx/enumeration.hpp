#pragma once

// Exhaustive isomorph-free enumeration of chemical graphs and of G(n,m)
// members, the brute-force maximum oracle built on it, and the catalog of the
// 22 pairs whose extremal graph is unique and falls short of the bound.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agx/exact.hpp"
#include "agx/graph.hpp"

namespace agx {

enum class Connectivity { All, Connected, Disconnected };
enum class Target { AllChemical, Gnm };

struct EnumSpec {
  int n = 1;
  int m = 0;
  Connectivity connectivity = Connectivity::All;
  Target target = Target::AllChemical;
};

struct EnumOptions {
  int threads = 0;  // 0: AGX_THREADS, else the hardware concurrency
  std::optional<std::filesystem::path> cache_dir;  // nullopt: no disk cache
  int max_chemical_order = 12;
  int max_gnm_order = 14;
};

int resolve_threads(int requested);

/// Canonical graph6 keys, sorted. Throws BudgetExceeded, InfeasiblePair (Gnm target).
std::vector<std::string> enumerate_keys(const EnumSpec& spec, const EnumOptions& opts = {});

/// Canonical graphs in key order. Throws BudgetExceeded.
std::vector<ChemicalGraph> enumerate_chemical(const EnumSpec& spec, const EnumOptions& opts = {});
/// Throws InfeasiblePair when (n, m) has no canonical quadruplet, BudgetExceeded past the order limit.
std::vector<ChemicalGraph> enumerate_Gnm(int n, int m, Connectivity connectivity = Connectivity::All,
                                         const EnumOptions& opts = {});

struct MaxResult {
  ExactValue max;
  std::vector<ChemicalGraph> witnesses;  // every maximizer, canonical, in key order
};

/// Maximum AG over all chemical graphs of order n and size m, connected or not.
/// Throws SizeOutOfRange when no such graph exists, BudgetExceeded past the order limit.
MaxResult brute_force_max(int n, int m, const EnumOptions& opts = {});

struct ExceptionRecord {
  int n = 0;
  int m = 0;
  ChemicalGraph graph;  // canonical
  ExactValue ag;
  std::string closed_form;
};

using ExceptionCatalog = std::map<std::pair<int, int>, ExceptionRecord>;

/// Recomputes the unique extremal graph of each exceptional pair and checks it
/// against the stored closed form. Throws CatalogMismatch on disagreement.
ExceptionCatalog derive_exception_catalog(const EnumOptions& opts = {});

struct ExtremalCounts {
  long long connected = 0;
  long long nonconnected = 0;
};

/// Extremal graph counts split by connectivity, for m >= n - 1.
/// Throws SizeOutOfRange, BudgetExceeded.
ExtremalCounts extremal_counts(int n, int m, const EnumOptions& opts = {});

}  // namespace agx
