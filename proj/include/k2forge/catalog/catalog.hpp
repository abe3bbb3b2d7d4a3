#pragma once

#include <set>
#include <string>
#include <vector>

#include "k2forge/catalog/dispatch.hpp"
#include "k2forge/catalog/serialize.hpp"

namespace k2forge {

inline constexpr const char* kToolVersion = "k2forge 1.0.0";

struct CatalogEntry {
  CurveRecord record;
  std::string created_at;
  std::string tool_version = kToolVersion;
  std::string input_hash;
};

Json to_json(const CatalogEntry& e);

/// UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string iso8601_now();

/// A JSON-lines file of catalog entries. Opening reads the hashes already
/// present; append skips entries whose hash is known.
class Catalog {
 public:
  explicit Catalog(std::string path);
  bool contains(const std::string& hash) const { return hashes_.count(hash) > 0; }
  /// Returns false for a duplicate. Throws UsageError if the file cannot
  /// be written.
  bool append(const CatalogEntry& e);
  size_t size() const { return hashes_.size(); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::set<std::string> hashes_;
};

struct CatalogError {
  std::string input_hash;
  std::string params;
  std::string kind;
  std::string message;
};

struct CatalogRun {
  size_t tuples = 0;
  size_t added = 0;
  size_t duplicates = 0;
  std::vector<CatalogError> errors;
};

/// Generates every tuple not already in the catalog (concurrently when
/// `parallel`), then appends the records in tuple order. The errors of the
/// run are written to `<db>.errors.jsonl`, replacing the previous report.
CatalogRun run_catalog(const std::string& family_id, const std::vector<ParamSet>& tuples, const std::string& db,
                       bool parallel = true);

}  // namespace k2forge
