#include "agx/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace agx {

namespace fs = std::filesystem;

namespace {

std::string stem(std::string_view mode, int n, int m) {
  return std::string(mode) + "_n" + std::to_string(n) + "_m" + std::to_string(m);
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

// Write to a sibling temp file, then rename, so readers never see a partial file.
void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) return;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace

fs::path default_cache_dir() {
  if (const char* env = std::getenv("AGX_CACHE"); env && *env) return env;
  return fs::path(".agx-cache");
}

std::uint64_t list_checksum(std::span<const std::string> keys) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& k : keys) {
    for (unsigned char c : k) mix(c);
    mix('\n');
  }
  return h;
}

fs::path GraphCache::list_path(std::string_view mode, int n, int m) const {
  return dir_ / (stem(mode, n, m) + ".g6");
}

fs::path GraphCache::meta_path(std::string_view mode, int n, int m) const {
  return dir_ / (stem(mode, n, m) + ".meta.json");
}

std::optional<std::vector<std::string>> GraphCache::load(std::string_view mode, int n, int m) const {
  if (!enabled()) return std::nullopt;
  std::ifstream meta_in(meta_path(mode, n, m));
  std::ifstream list_in(list_path(mode, n, m));
  if (!meta_in || !list_in) return std::nullopt;

  const auto meta = nlohmann::json::parse(meta_in, nullptr, false);
  if (meta.is_discarded() || !meta.contains("count") || !meta.contains("checksum")) return std::nullopt;

  std::vector<std::string> keys;
  for (std::string line; std::getline(list_in, line);) {
    if (!line.empty()) keys.push_back(std::move(line));
  }
  if (meta["count"] != keys.size() || meta["checksum"] != hex(list_checksum(keys))) return std::nullopt;
  return keys;
}

void GraphCache::store(std::string_view mode, int n, int m, std::span<const std::string> keys) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  std::string text;
  for (const auto& k : keys) {
    text += k;
    text += '\n';
  }
  write_atomically(list_path(mode, n, m), text);
  const nlohmann::json meta = {{"count", keys.size()}, {"checksum", hex(list_checksum(keys))}};
  write_atomically(meta_path(mode, n, m), meta.dump() + "\n");
}

}  // namespace agx
