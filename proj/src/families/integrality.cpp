#include "k2forge/families/families.hpp"

namespace k2forge {

namespace {

bool reciprocal_integral(const Rat& a) { return !a.is_zero() && a.inverse().is_integer(); }

}  // namespace

std::vector<IntegralityFlag> integrality_flags(const CurveRecord& rec) {
  std::vector<IntegralityFlag> out;
  const std::string& f = rec.family_id;
  if (f == "hyp-odd" || f == "hyp-even" || f == "hyp-partial") {
    const auto& a = rec.param("a");
    for (size_t i = 0; i < a.size(); ++i) {
      std::string p = "P" + std::to_string(i + 1);
      out.push_back({"2{inf,O," + p + "}", "hyp-weierstrass-integrality", reciprocal_integral(a[i])});
    }
  } else if (f == "quartic-lines") {
    Rat a = rec.param("a")[0], b = rec.param("b")[0], c = rec.param("c")[0];
    bool first = reciprocal_integral(a) && b.is_integer() && c.is_integer();
    bool second = ((a == Rat(1, 2) && b == Rat(-1)) || (a == Rat(-1, 2) && b == Rat(1))) && c.is_integer();
    out.push_back({"{inf,O,P}", "quartic-lines-integrality", first});
    out.push_back({"{inf,O,Q}", "quartic-lines-integrality", first});
    out.push_back({"2{inf,P,Q}", "quartic-lines-pq-integrality", second});
    if (c.is_zero()) {
      bool sym = reciprocal_integral(a) && b.is_integer();
      out.push_back({"{inf,O,P'}", "quartic-lines-symmetric-integrality", sym});
      out.push_back({"{inf,O,Q'}", "quartic-lines-symmetric-integrality", sym});
    }
  } else if (f == "quartic-ct") {
    Rat t = rec.param("t")[0];
    bool ok = t.is_integer() && t != Rat(1) && t != Rat(-3);
    for (const char* e : {"{inf,O,P}", "{inf,O,Q}", "2{inf,P,Q}"}) out.push_back({e, "quartic-ct-integrality", ok});
  }
  return out;
}

}  // namespace k2forge
