#pragma once

#include <string>
#include <vector>

#include "k2forge/k2/symbols.hpp"

namespace k2forge {

struct VerifyJob {
  PlaneCurve curve;
  K2Element element;
};

/// Certificate of one job, or the message of the error it raised.
struct VerifyResult {
  Certificate certificate;
  std::string error;
  bool ok() const { return error.empty() && certificate.pass; }
};

std::vector<VerifyResult> batch_verify_serial(const std::vector<VerifyJob>& jobs);
/// Same results in the same order; jobs run concurrently.
std::vector<VerifyResult> batch_verify_omp(const std::vector<VerifyJob>& jobs);

}  // namespace k2forge
