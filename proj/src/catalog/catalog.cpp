#include "k2forge/catalog/catalog.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>

#include "k2forge/error.hpp"

namespace k2forge {

Json to_json(const CatalogEntry& e) {
  return Json{{"k2forge_schema", kSchemaVersion},
              {"input_hash", e.input_hash},
              {"created_at", e.created_at},
              {"tool_version", e.tool_version},
              {"record", to_json(e.record)}};
}

std::string iso8601_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Catalog::Catalog(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      hashes_.insert(j.at("input_hash").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(path_ + ":" + std::to_string(n) + ": malformed catalog line: " + e.what());
    }
  }
}

bool Catalog::append(const CatalogEntry& e) {
  if (contains(e.input_hash)) return false;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw UsageError("cannot write catalog " + path_);
  out << to_json(e).dump() << '\n';
  if (!out) throw UsageError("cannot write catalog " + path_);
  hashes_.insert(e.input_hash);
  return true;
}

namespace {

struct Outcome {
  std::optional<CurveRecord> record;
  CatalogError error;
};

Outcome attempt(const std::string& family_id, const ParamSet& p, const std::string& hash) {
  Outcome o;
  o.error.input_hash = hash;
  o.error.params = canonical_text(family_id, p);
  try {
    o.record = generate(family_id, p);
  } catch (const RationalSupportError& e) {
    o.error = {hash, o.error.params, "rational-support", e.what()};
  } catch (const PreconditionError& e) {
    o.error = {hash, o.error.params, "precondition", e.what()};
  } catch (const VerificationError& e) {
    o.error = {hash, o.error.params, "verification", e.what()};
  } catch (const Error& e) {
    o.error = {hash, o.error.params, "internal", e.what()};
  }
  return o;
}

}  // namespace

CatalogRun run_catalog(const std::string& family_id, const std::vector<ParamSet>& tuples, const std::string& db,
                       bool parallel) {
  Catalog cat(db);
  {
    std::ofstream probe(db, std::ios::app);
    if (!probe) throw UsageError("cannot write catalog " + db);
  }
  CatalogRun run;
  run.tuples = tuples.size();
  std::vector<std::string> hashes;
  for (const auto& p : tuples) hashes.push_back(input_hash(family_id, p));

  std::vector<size_t> todo;
  std::set<std::string> queued;
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (cat.contains(hashes[i]) || !queued.insert(hashes[i]).second)
      ++run.duplicates;
    else
      todo.push_back(i);
  }

  std::vector<Outcome> results(todo.size());
  const long n = static_cast<long>(todo.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long k = 0; k < n; ++k) results[k] = attempt(family_id, tuples[todo[k]], hashes[todo[k]]);

  std::string stamp = iso8601_now();
  for (size_t k = 0; k < todo.size(); ++k) {
    if (results[k].record) {
      if (cat.append({*results[k].record, stamp, kToolVersion, hashes[todo[k]]})) ++run.added;
    } else {
      run.errors.push_back(results[k].error);
    }
  }

  std::ofstream rep(db + ".errors.jsonl", std::ios::trunc);
  if (!rep) throw UsageError("cannot write error report " + db + ".errors.jsonl");
  for (const auto& e : run.errors)
    rep << Json{{"input_hash", e.input_hash}, {"params", e.params}, {"kind", e.kind}, {"message", e.message}}.dump()
        << '\n';
  return run;
}

}  // namespace k2forge
