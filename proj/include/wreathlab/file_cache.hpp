#pragma once

#include <string>
#include <unordered_map>

#include "wreathlab/geodesic.hpp"

namespace wreathlab {

/// File-backed geodesic cache: one JSON object {key: length} per directory,
/// replaced atomically by rename on every write so concurrent processes see
/// a consistent file. Read or write trouble degrades to cache misses with a
/// one-line JSON warning on stderr; answers never change, only timing.
class FileGeodesicCache : public GeodesicCache {
 public:
  explicit FileGeodesicCache(std::string directory);

  std::optional<long long> get(const std::string& key) override;
  void put(const std::string& key, long long value) override;

  const std::string& file() const { return file_; }

 private:
  void load_once();
  void warn(const std::string& message, const std::string& detail);

  std::string dir_;
  std::string file_;
  bool loaded_ = false;
  bool disabled_ = false;
  std::unordered_map<std::string, long long> entries_;
};

}  // namespace wreathlab
