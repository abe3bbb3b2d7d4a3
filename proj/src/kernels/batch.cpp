#include "k2forge/kernels/batch.hpp"

#include <exception>

namespace k2forge {

namespace {

VerifyResult run(const VerifyJob& job) {
  VerifyResult r;
  try {
    r.certificate = verify_k2t(job.curve, job.element);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<VerifyResult> batch_verify_serial(const std::vector<VerifyJob>& jobs) {
  std::vector<VerifyResult> out;
  out.reserve(jobs.size());
  for (const auto& j : jobs) out.push_back(run(j));
  return out;
}

std::vector<VerifyResult> batch_verify_omp(const std::vector<VerifyJob>& jobs) {
  std::vector<VerifyResult> out(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[i] = run(jobs[i]);
  return out;
}

}  // namespace k2forge
