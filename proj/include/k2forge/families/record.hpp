#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k2forge/k2/symbols.hpp"

namespace k2forge {

struct NamedPoint {
  std::string name;
  CurvePoint point;
};

struct ElementRecord {
  /// "{inf,O,P}" style name listing the points of the construction.
  std::string name;
  K2Element element;
  Certificate certificate;
};

struct IntegralityFlag {
  /// Element name with its multiplier, e.g. "2{inf,P,Q}".
  std::string element;
  std::string theorem;
  bool satisfied = false;
};

/// Auxiliary curve drawn by the plotter.
struct Overlay {
  std::string label;
  BiPoly poly;
};

struct CurveRecord {
  std::string family_id;
  std::vector<std::pair<std::string, std::vector<Rat>>> params;
  PlaneCurve curve;
  /// Shape of the affine model, e.g. "y^2 + f1(x) y + x^d".
  std::string model;
  std::vector<NamedPoint> points;
  std::vector<ElementRecord> elements;
  std::vector<IntegralityFlag> integrality_flags;
  std::vector<Overlay> overlays;
  std::map<std::string, std::string> facts;

  const CurvePoint& point(const std::string& name) const;
  const ElementRecord& element(const std::string& name) const;
  const std::vector<Rat>& param(const std::string& name) const;
  bool pass() const;
};

/// Runs verify_k2t and throws VerificationError unless the certificate
/// passes.
ElementRecord certified(const PlaneCurve& c, std::string name, K2Element e);

}  // namespace k2forge
