#include "k2forge/catalog/serialize.hpp"

#include "k2forge/error.hpp"

namespace k2forge {

namespace {

Json fn_to_json(const FnElt& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors()) factors.push_back(Json::array({p.str(), e}));
  return Json{{"constant", f.constant().str()}, {"factors", factors}};
}

FnElt fn_from_json(const CurveRef& ctx, const Json& j) {
  std::vector<FnElt::Factor> fs;
  for (const auto& f : j.at("factors")) fs.emplace_back(parse_bipoly(f.at(0).get<std::string>()), f.at(1).get<int>());
  return FnElt::factored(ctx, Rat::parse(j.at("constant").get<std::string>()), fs);
}

Json rats(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json terms = Json::array();
    for (const auto& t : e.terms)
      terms.push_back({{"ord_f", t.ord_f}, {"ord_h", t.ord_h}, {"tame_value", t.tame_value.str()}});
    entries.push_back({{"point", e.point.str()}, {"tame_value", e.tame_value.str()}, {"terms", terms}});
  }
  return Json{{"verdict", c.verdict()}, {"product", c.product.str()}, {"entries", entries}};
}

Json to_json(const CurveRecord& rec) {
  Json j;
  j["k2forge_schema"] = kSchemaVersion;
  j["family"] = rec.family_id;
  Json params = Json::object();
  for (const auto& [k, v] : rec.params) params[k] = rats(v);
  j["params"] = params;
  j["model"] = rec.model;
  j["equation"] = rec.curve.poly().str();
  Json pts = Json::array();
  for (const auto& p : rec.points) pts.push_back({{"name", p.name}, {"point", p.point.str()}});
  j["points"] = pts;
  Json els = Json::array();
  for (const auto& e : rec.elements) {
    Json terms = Json::array();
    for (const auto& t : e.element.terms)
      terms.push_back({{"coefficient", t.coefficient}, {"f", fn_to_json(t.f)}, {"h", fn_to_json(t.h)}});
    Json support = Json::array();
    for (const auto& p : e.element.declared_support) support.push_back(p.str());
    els.push_back({{"name", e.name}, {"terms", terms}, {"support", support}, {"certificate", to_json(e.certificate)}});
  }
  j["elements"] = els;
  j["verdict"] = rec.pass() ? "PASS" : "FAIL";
  Json flags = Json::array();
  for (const auto& f : rec.integrality_flags)
    flags.push_back({{"element", f.element}, {"theorem", f.theorem}, {"hypothesis_satisfied", f.satisfied}});
  j["integrality_flags"] = flags;
  Json ov = Json::array();
  for (const auto& o : rec.overlays) ov.push_back({{"label", o.label}, {"poly", o.poly.str()}});
  j["overlays"] = ov;
  Json facts = Json::object();
  for (const auto& [k, v] : rec.facts) facts[k] = v;
  j["facts"] = facts;
  return j;
}

CurveRecord record_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw UsageError("record is not a JSON object");
    if (!j.contains("k2forge_schema") || j.at("k2forge_schema") != kSchemaVersion)
      throw UsageError("missing or unsupported k2forge_schema");
    CurveRecord rec;
    rec.family_id = j.at("family").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
      std::vector<Rat> vals;
      for (const auto& s : v) vals.push_back(Rat::parse(s.get<std::string>()));
      rec.params.emplace_back(k, vals);
    }
    rec.model = j.value("model", "");
    rec.curve = PlaneCurve(parse_bipoly(j.at("equation").get<std::string>()));
    CurveRef ctx = make_curve(rec.curve);
    for (const auto& p : j.at("points"))
      rec.points.push_back({p.at("name").get<std::string>(), CurvePoint::parse(p.at("point").get<std::string>())});
    for (const auto& e : j.at("elements")) {
      ElementRecord er;
      er.name = e.at("name").get<std::string>();
      for (const auto& t : e.at("terms"))
        er.element.terms.push_back(
            {fn_from_json(ctx, t.at("f")), fn_from_json(ctx, t.at("h")), t.at("coefficient").get<long>()});
      for (const auto& p : e.at("support")) er.element.declared_support.push_back(CurvePoint::parse(p.get<std::string>()));
      rec.elements.push_back(std::move(er));
    }
    for (const auto& f : j.value("integrality_flags", Json::array()))
      rec.integrality_flags.push_back({f.at("element").get<std::string>(), f.at("theorem").get<std::string>(),
                                       f.at("hypothesis_satisfied").get<bool>()});
    for (const auto& o : j.value("overlays", Json::array()))
      rec.overlays.push_back({o.at("label").get<std::string>(), parse_bipoly(o.at("poly").get<std::string>())});
    const Json facts = j.value("facts", Json::object());
    for (const auto& [k, v] : facts.items()) rec.facts[k] = v.get<std::string>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed record: ") + e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("malformed record: ") + e.what());
  }
}

}  // namespace k2forge
