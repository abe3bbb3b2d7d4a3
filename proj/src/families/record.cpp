#include "k2forge/families/record.hpp"

#include <algorithm>

#include "k2forge/error.hpp"

namespace k2forge {

const CurvePoint& CurveRecord::point(const std::string& name) const {
  for (const auto& p : points)
    if (p.name == name) return p.point;
  throw PreconditionError("record has no point named " + name);
}

const ElementRecord& CurveRecord::element(const std::string& name) const {
  for (const auto& e : elements)
    if (e.name == name) return e;
  throw PreconditionError("record has no element named " + name);
}

const std::vector<Rat>& CurveRecord::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  throw PreconditionError("record has no parameter " + name);
}

bool CurveRecord::pass() const {
  return std::all_of(elements.begin(), elements.end(), [](const ElementRecord& e) { return e.certificate.pass; });
}

ElementRecord certified(const PlaneCurve& c, std::string name, K2Element e) {
  Certificate cert = verify_k2t(c, e);
  if (!cert.pass) {
    auto p = cert.offending_point();
    throw VerificationError("element " + name + " fails verification" +
                            (p ? " at " + p->str() : " in the product formula"));
  }
  return {std::move(name), std::move(e), std::move(cert)};
}

}  // namespace k2forge
