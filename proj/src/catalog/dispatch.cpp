#include "k2forge/catalog/dispatch.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "k2forge/error.hpp"
#include "k2forge/families/families.hpp"

namespace k2forge {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

const std::vector<Rat>& get(const ParamSet& p, const std::string& name) {
  for (const auto& [k, v] : p)
    if (k == name) return v;
  throw UsageError("missing parameter --" + name);
}

const Rat& scalar(const ParamSet& p, const std::string& name) { return get(p, name).front(); }

int small_int(const ParamSet& p, const std::string& name) {
  const Rat& r = scalar(p, name);
  if (!r.is_integer() || r < Rat(0) || r > Rat(64)) throw UsageError("--" + name + " must be a small nonnegative integer");
  return static_cast<int>(r.numerator().get_si());
}

std::vector<int> signs(const std::vector<Rat>& v) {
  std::vector<int> out;
  for (const auto& r : v) {
    if (r != Rat(1) && r != Rat(-1)) throw PreconditionError("epsilon entries must be +1 or -1");
    out.push_back(r == Rat(1) ? 1 : -1);
  }
  return out;
}

std::string trim(std::string s) {
  auto ws = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

Rat parse_rat(const std::string& text) {
  try {
    return Rat::parse(trim(text));
  } catch (const Error&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

}  // namespace

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> f = {
      {"hyp-odd", {"genus", "a"}, {"a"}, {}},
      {"hyp-even", {"genus", "a", "eps"}, {"a", "eps"}, {}},
      {"hyp-partial", {"genus", "d", "a", "eps", "free"}, {"a", "eps", "free"}, {"a", "eps", "free"}},
      {"quartic-lines", {"a", "b", "c"}, {}, {}},
      {"quartic-ct", {"t"}, {}, {}},
      {"quartic-conic", {"d1", "d2", "d3", "d4"}, {}, {}},
      {"quartic-conic-1t", {"a", "d1", "d4"}, {}, {}},
      {"quartic-conic-2t", {"a1", "a2"}, {}, {}},
      {"quartic-conic-pq", {"a", "b"}, {}, {}},
      {"nekovar-2tor", {"r"}, {}, {}},
      {"nekovar-3tor", {"r"}, {}, {}},
      {"nekovar-g2", {"r"}, {}, {}},
  };
  return f;
}

const FamilySpec& family(const std::string& id) {
  for (const auto& f : families())
    if (f.id == id) return f;
  throw UsageError("unknown family '" + id + "'");
}

ParamSet canonical_params(const FamilySpec& f, const ParamSet& given) {
  for (const auto& [k, v] : given)
    if (!contains(f.params, k)) throw UsageError("family " + f.id + " takes no parameter --" + k);
  ParamSet out;
  for (const auto& name : f.params) {
    auto it = std::find_if(given.begin(), given.end(), [&](const auto& kv) { return kv.first == name; });
    if (it == given.end()) {
      if (contains(f.optional, name)) {
        out.emplace_back(name, std::vector<Rat>{});
        continue;
      }
      throw UsageError("family " + f.id + " needs --" + name);
    }
    if (!contains(f.lists, name) && it->second.size() != 1) throw UsageError("--" + name + " takes one value");
    out.emplace_back(name, it->second);
  }
  return out;
}

CurveRecord generate(const std::string& id, const ParamSet& given) {
  const FamilySpec& f = family(id);
  ParamSet p = canonical_params(f, given);
  if (id == "hyp-odd") return gen_hyp_odd(small_int(p, "genus"), get(p, "a"));
  if (id == "hyp-even") return gen_hyp_even(small_int(p, "genus"), get(p, "a"), EpsilonVector(signs(get(p, "eps"))));
  if (id == "hyp-partial") {
    const auto& a = get(p, "a");
    auto e = signs(get(p, "eps"));
    if (a.size() != e.size()) throw UsageError("--a and --eps need the same length");
    std::vector<std::pair<Rat, int>> cons;
    for (size_t i = 0; i < a.size(); ++i) cons.emplace_back(a[i], e[i]);
    return gen_hyp_partial(small_int(p, "genus"), small_int(p, "d"), cons, get(p, "free"));
  }
  if (id == "quartic-lines") return gen_quartic_lines(scalar(p, "a"), scalar(p, "b"), scalar(p, "c"));
  if (id == "quartic-ct") return gen_quartic_ct(scalar(p, "t"));
  if (id == "quartic-conic")
    return gen_quartic_conic(scalar(p, "d1"), scalar(p, "d2"), scalar(p, "d3"), scalar(p, "d4"));
  if (id == "quartic-conic-1t") return gen_quartic_conic_1tangent(scalar(p, "a"), scalar(p, "d1"), scalar(p, "d4"));
  if (id == "quartic-conic-2t") return gen_quartic_conic_2tangent(scalar(p, "a1"), scalar(p, "a2"));
  if (id == "quartic-conic-pq") return gen_quartic_conic_pq(scalar(p, "a"), scalar(p, "b"));
  if (id == "nekovar-2tor") return gen_nekovar_2tor(scalar(p, "r"));
  if (id == "nekovar-3tor") return gen_nekovar_3tor(scalar(p, "r"));
  return gen_nekovar_genus2(scalar(p, "r"));
}

std::string canonical_text(const std::string& id, const ParamSet& params) {
  ParamSet p = canonical_params(family(id), params);
  std::string s = id;
  for (const auto& [k, v] : p) {
    s += "|" + k + "=";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  }
  return s;
}

std::string input_hash(const std::string& id, const ParamSet& params) {
  std::string text = canonical_text(id, params);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

std::vector<Rat> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return parse_rat_list(text);
  std::string rest = text.substr(dots + 2);
  Rat step(1);
  if (auto colon = rest.find(':'); colon != std::string::npos) {
    step = parse_rat(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  Rat lo = parse_rat(text.substr(0, dots)), hi = parse_rat(rest);
  if (step <= Rat(0)) throw UsageError("range step must be positive");
  if (hi < lo) throw UsageError("empty range " + text);
  if ((hi - lo) / step > Rat(100000)) throw UsageError("range too long: " + text);
  std::vector<Rat> out;
  for (Rat v = lo; v <= hi; v = v + step) out.push_back(v);
  return out;
}

std::vector<std::vector<Rat>> parse_grid(const std::string& text) {
  std::vector<std::vector<Rat>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!trim(item).empty()) out.push_back(parse_rat_list(item));
  return out;
}

std::vector<ParamSet> expand(const std::vector<std::pair<std::string, std::vector<std::vector<Rat>>>>& choices) {
  std::vector<ParamSet> out{{}};
  for (const auto& [name, options] : choices) {
    std::vector<ParamSet> next;
    for (const auto& base : out)
      for (const auto& o : options) {
        ParamSet p = base;
        p.emplace_back(name, o);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace k2forge
