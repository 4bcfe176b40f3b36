#include "wreathlab/file_cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <utility>

#include "json.hpp"

namespace wreathlab {

FileGeodesicCache::FileGeodesicCache(std::string directory) : dir_(std::move(directory)) {
  file_ = (std::filesystem::path(dir_) / "geodesics.json").string();
}

void FileGeodesicCache::warn(const std::string& message, const std::string& detail) {
  nlohmann::json w{{"warning", message}, {"path", file_}};
  if (!detail.empty()) w["detail"] = detail;
  std::cerr << w.dump() << "\n";
}

void FileGeodesicCache::load_once() {
  if (loaded_) return;
  loaded_ = true;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    warn("cache directory unusable, caching disabled", ec.message());
    disabled_ = true;
    return;
  }
  std::ifstream in(file_);
  if (!in) return;  // no cache file yet
  const nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    warn("cache file unreadable, recomputing", "expected a JSON object");
    return;
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!it.value().is_number_integer()) continue;
    entries_[it.key()] = it.value().get<long long>();
  }
}

std::optional<long long> FileGeodesicCache::get(const std::string& key) {
  if (disabled_) return std::nullopt;
  load_once();
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FileGeodesicCache::put(const std::string& key, long long value) {
  if (disabled_) return;
  load_once();
  const auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted) {
    if (it->second == value) return;
    it->second = value;
  }

  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [k, v] : entries_) doc[k] = v;
  const std::string tmp = file_ + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << "\n";
    if (!out) {
      warn("cache write failed, entry dropped", "could not write temporary file");
      std::remove(tmp.c_str());
      return;
    }
  }
  if (std::rename(tmp.c_str(), file_.c_str()) != 0) {
    warn("cache write failed, entry dropped", "rename failed");
    std::remove(tmp.c_str());
  }
}

}  // namespace wreathlab
