#pragma once

// On-disk store of canonical graph6 lists, one file per (mode, n, m):
//   {mode}_n{n}_m{m}.g6         one key per line
//   {mode}_n{n}_m{m}.meta.json  {"count": N, "checksum": "<fnv1a-64 hex>"}
// A list whose count or checksum does not match its meta file is ignored.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agx {

/// AGX_CACHE if set, else ./.agx-cache.
std::filesystem::path default_cache_dir();

/// FNV-1a over the keys, each followed by '\n'.
std::uint64_t list_checksum(std::span<const std::string> keys);

class GraphCache {
 public:
  GraphCache() = default;  // disabled: loads miss, stores are dropped
  explicit GraphCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<std::vector<std::string>> load(std::string_view mode, int n, int m) const;
  void store(std::string_view mode, int n, int m, std::span<const std::string> keys) const;

  std::filesystem::path list_path(std::string_view mode, int n, int m) const;
  std::filesystem::path meta_path(std::string_view mode, int n, int m) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace agx
