#include "pbw/corpus.hpp"

#include <fstream>
#include <map>
#include <memory>

namespace pbw {

using nlohmann::json;

CorpusError::CorpusError(std::string where, const std::string& what)
    : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

const RingEntry* Corpus::find_ring(const std::string& name) const {
  for (const auto& r : rings)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw CorpusError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw CorpusError(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string need_string(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) throw CorpusError(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

// Parsed text gives unsigned numbers; documents built in code give signed ones.
bool is_uint(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

unsigned need_uint(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!is_uint(v)) throw CorpusError(where + "/" + key, "expected a non-negative integer");
  return v.get<unsigned>();
}

const json& array_at(const json& doc, const char* key, const std::string& where = "") {
  static const json empty = json::array();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_array()) throw CorpusError(where + "/" + key, "expected an array");
  return *it;
}

RingSpec parse_ring_spec(const json& j, const std::string& where) {
  RingSpec s;
  s.name = j.contains("name") ? need_string(j, "name", where) : "";
  const std::string kind = need_string(j, "kind", where);
  if (kind == "zn") {
    s.kind = RingSpec::Kind::Zn;
    s.n = need_uint(j, "n", where);
  } else if (kind == "gf") {
    s.kind = RingSpec::Kind::GF;
    s.n = need_uint(j, j.contains("q") ? "q" : "n", where);
  } else if (kind == "ut2_equal_diag") {
    s.kind = RingSpec::Kind::Ut2EqualDiag;
    s.n = need_uint(j, "n", where);
  } else if (kind == "ut2") {
    s.kind = RingSpec::Kind::Ut2;
    s.n = need_uint(j, "n", where);
  } else if (kind == "trunc_st") {
    s.kind = RingSpec::Kind::TruncST;
    s.p = need_uint(j, "p", where);
    s.k = need_uint(j, "k", where);
  } else if (kind == "trunc_t2") {
    s.kind = RingSpec::Kind::TruncT2;
    s.p = need_uint(j, "p", where);
  } else if (kind == "product") {
    s.kind = RingSpec::Kind::Product;
    const json& f = need(j, "factors", where);
    if (!f.is_array() || f.size() != 2) throw CorpusError(where + "/factors", "expected two ring specs");
    for (std::size_t i = 0; i < f.size(); ++i) s.factors.push_back(parse_ring_spec(f[i], where + "/factors/" + std::to_string(i)));
  } else if (kind == "raw") {
    s.kind = RingSpec::Kind::Raw;
    s.order = need_uint(j, "order", where);
    s.add = need(j, "add", where).get<std::vector<Elem>>();
    s.mul = need(j, "mul", where).get<std::vector<Elem>>();
    s.zero = j.value("zero", 0u);
    s.one = j.value("one", 1u);
    if (j.contains("labels")) s.labels = j["labels"].get<std::vector<std::string>>();
  } else {
    throw CorpusError(where + "/kind", "unknown ring kind \"" + kind + "\"");
  }
  return s;
}

/// Maps defined inline by families, per ring, so extensions can refer to them by name.
using MapRegistry = std::map<std::string, std::map<std::string, RingMap>>;

RingMap parse_map(const json& j, const RingPtr& R, const RingMap* paired, MapRole default_role,
                  const std::string& ring_name, MapRegistry& reg, const std::string& where) {
  auto lookup = [&](const std::string& name) -> RingMap {
    if (name == "zero") return zero_derivation(R, paired);
    if (auto it = reg[ring_name].find(name); it != reg[ring_name].end()) return it->second;
    if (auto m = builtin_by_name(R, name)) return *m;
    throw CorpusError(where, "unknown map \"" + name + "\" for ring " + ring_name);
  };
  try {
    if (j.is_string()) return lookup(j.get<std::string>());
    if (!j.is_object()) throw CorpusError(where, "expected a map name or object");
    std::optional<RingMap> m;
    if (j.contains("builtin")) {
      const std::string b = need_string(j, "builtin", where);
      if (b == "inner_derivation") {
        const Elem c = parse_element(*R, need(j, "c", where), where + "/c");
        m = inner_derivation(R, c, paired ? *paired : identity_map(R));
      } else {
        m = lookup(b);
      }
    } else if (j.contains("images")) {
      const json& im = need(j, "images", where);
      if (!im.is_array() || im.size() != R->order())
        throw CorpusError(where + "/images", "expected " + std::to_string(R->order()) + " images");
      std::vector<Elem> images;
      for (std::size_t i = 0; i < im.size(); ++i) images.push_back(parse_element(*R, im[i], where + "/images/" + std::to_string(i)));
      MapRole role = default_role;
      if (j.contains("role")) {
        const std::string r = need_string(j, "role", where);
        if (r == "endomorphism") role = MapRole::Endomorphism;
        else if (r == "derivation") role = MapRole::Derivation;
        else throw CorpusError(where + "/role", "unknown role \"" + r + "\"");
      }
      m = build_map(R, j.value("name", std::string("map")), std::move(images), role,
                    role == MapRole::Derivation ? paired : nullptr);
    } else {
      throw CorpusError(where, "map needs \"builtin\" or \"images\"");
    }
    if (j.contains("name")) {
      m->name = need_string(j, "name", where);
      reg[ring_name][m->name] = *m;
    }
    return *m;
  } catch (const MapError& e) {
    throw CorpusError(where, e.what());
  } catch (const RingError& e) {
    throw CorpusError(where, e.what());
  }
}

PosetNode parse_node(const json& j, const std::string& where) {
  if (j.is_string()) return {j.get<std::string>(), false, false};
  PosetNode n;
  n.name = need_string(j, "name", where);
  n.sspec = j.value("sspec", false);
  n.jspec = j.value("jspec", false);
  return n;
}

}  // namespace

Elem parse_element(const FiniteRing& R, const json& j, const std::string& where) {
  if (is_uint(j)) {
    const auto v = j.get<std::uint64_t>();
    if (v >= R.order()) throw CorpusError(where, "element index out of range");
    return static_cast<Elem>(v);
  }
  if (j.is_string()) {
    if (auto e = R.find_label(j.get<std::string>())) return *e;
    throw CorpusError(where, "no element labelled \"" + j.get<std::string>() + "\" in " + R.name());
  }
  throw CorpusError(where, "expected an element index or label");
}

static Corpus load_corpus_impl(const json& doc) {
  if (!doc.is_object()) throw CorpusError("", "corpus must be a JSON object");
  for (const auto& [k, _] : doc.items())
    if (k != "rings" && k != "families" && k != "extensions" && k != "spaces" && k != "config")
      throw CorpusError("/" + k, "unknown top-level key");
  Corpus c;

  if (doc.contains("config")) {
    const json& cfg = doc["config"];
    if (!cfg.is_object()) throw CorpusError("/config", "expected an object");
    c.config.ring_cap = cfg.value("ring_cap", c.config.ring_cap);
    c.config.seed = cfg.value("seed", c.config.seed);
    c.config.probe_degree = cfg.value("probe_degree", c.config.probe_degree);
    c.config.probe_budget = cfg.value("probe_budget", c.config.probe_budget);
    c.config.jobs = cfg.value("jobs", c.config.jobs);
  }

  const json& rings = array_at(doc, "rings");
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const std::string where = "/rings/" + std::to_string(i);
    RingSpec spec = parse_ring_spec(rings[i], where);
    if (spec.name.empty()) throw CorpusError(where, "ring needs a name");
    if (c.find_ring(spec.name)) throw CorpusError(where + "/name", "duplicate ring \"" + spec.name + "\"");
    try {
      c.rings.push_back({spec.name, std::make_shared<const FiniteRing>(build_ring(spec))});
    } catch (const RingError& e) {
      throw CorpusError(where, e.what());
    }
  }
  auto ring_ref = [&](const json& obj, const std::string& where) -> const RingEntry& {
    const std::string name = need_string(obj, "ring", where);
    if (const RingEntry* r = c.find_ring(name)) return *r;
    throw CorpusError(where + "/ring", "unknown ring \"" + name + "\"");
  };

  MapRegistry reg;
  const json& fams = array_at(doc, "families");
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const std::string where = "/families/" + std::to_string(i);
    const json& f = fams[i];
    const RingEntry& re = ring_ref(f, where);
    FamilyEntry fe{need_string(f, "name", where), re.name, MapFamily{re.ring, {}, {}}};
    const json& sig = need(f, "sigma", where);
    if (!sig.is_array() || sig.empty()) throw CorpusError(where + "/sigma", "expected a non-empty array");
    for (std::size_t k = 0; k < sig.size(); ++k)
      fe.family.sigma.push_back(parse_map(sig[k], re.ring, nullptr, MapRole::Endomorphism, re.name, reg,
                                          where + "/sigma/" + std::to_string(k)));
    if (f.contains("delta")) {
      const json& del = f["delta"];
      if (!del.is_array() || del.size() != sig.size())
        throw CorpusError(where + "/delta", "expected one derivation per sigma");
      for (std::size_t k = 0; k < del.size(); ++k)
        fe.family.delta.push_back(parse_map(del[k], re.ring, &fe.family.sigma[k], MapRole::Derivation, re.name, reg,
                                            where + "/delta/" + std::to_string(k)));
    }
    try {
      fe.family.validate();
    } catch (const std::exception& e) {
      throw CorpusError(where, e.what());
    }
    c.families.push_back(std::move(fe));
  }

  const json& exts = array_at(doc, "extensions");
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const std::string where = "/extensions/" + std::to_string(i);
    const json& e = exts[i];
    const RingEntry& re = ring_ref(e, where);
    const json& sig = need(e, "sigma", where);
    if (!sig.is_array() || sig.empty()) throw CorpusError(where + "/sigma", "expected a non-empty array");
    std::vector<RingMap> sigma;
    for (std::size_t k = 0; k < sig.size(); ++k)
      sigma.push_back(parse_map(sig[k], re.ring, nullptr, MapRole::Endomorphism, re.name, reg,
                                where + "/sigma/" + std::to_string(k)));
    std::vector<RingMap> delta;
    if (e.contains("delta")) {
      const json& del = e["delta"];
      if (!del.is_array() || del.size() != sig.size()) throw CorpusError(where + "/delta", "expected one derivation per sigma");
      for (std::size_t k = 0; k < del.size(); ++k)
        delta.push_back(parse_map(del[k], re.ring, &sigma[k], MapRole::Derivation, re.name, reg,
                                  where + "/delta/" + std::to_string(k)));
    }
    ExtensionEntry ee{need_string(e, "name", where), re.name,
                      SkewPBWData::with_defaults(need_string(e, "name", where), re.ring, std::move(sigma), std::move(delta),
                                                 e.value("degree_cap", 6u))};
    const unsigned n = ee.data.n;
    auto gen = [&](const json& v, const std::string& w) {
      if (!is_uint(v) || v.get<unsigned>() < 1 || v.get<unsigned>() > n)
        throw CorpusError(w, "generator index must be in 1.." + std::to_string(n));
      return v.get<unsigned>() - 1;
    };
    // d entries: [i, j, value]; r entries: [i, j, l, value]; generators 1-based, l = 0 is the constant
    for (std::size_t k = 0; k < array_at(e, "d", where).size(); ++k) {
      const std::string w = where + "/d/" + std::to_string(k);
      const json& t = e["d"][k];
      if (!t.is_array() || t.size() != 3) throw CorpusError(w, "expected [i, j, value]");
      const unsigned a = gen(t[0], w + "/0"), b = gen(t[1], w + "/1");
      if (a >= b) throw CorpusError(w, "need i < j");
      ee.data.d[a][b] = parse_element(*re.ring, t[2], w + "/2");
    }
    for (std::size_t k = 0; k < array_at(e, "r", where).size(); ++k) {
      const std::string w = where + "/r/" + std::to_string(k);
      const json& t = e["r"][k];
      if (!t.is_array() || t.size() != 4) throw CorpusError(w, "expected [i, j, l, value]");
      const unsigned a = gen(t[0], w + "/0"), b = gen(t[1], w + "/1");
      if (a >= b) throw CorpusError(w, "need i < j");
      if (!is_uint(t[2]) || t[2].get<unsigned>() > n) throw CorpusError(w + "/2", "l must be in 0..n");
      ee.data.r[a][b][t[2].get<unsigned>()] = parse_element(*re.ring, t[3], w + "/3");
    }
    c.extensions.push_back(std::move(ee));
  }

  const json& spaces = array_at(doc, "spaces");
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const std::string where = "/spaces/" + std::to_string(i);
    const json& s = spaces[i];
    std::vector<PosetNode> nodes;
    const json& nj = need(s, "nodes", where);
    if (!nj.is_array()) throw CorpusError(where + "/nodes", "expected an array");
    for (std::size_t k = 0; k < nj.size(); ++k) nodes.push_back(parse_node(nj[k], where + "/nodes/" + std::to_string(k)));
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& cv : array_at(s, "covers", where)) {
      if (!cv.is_array() || cv.size() != 2) throw CorpusError(where + "/covers", "expected [lower, upper] pairs");
      covers.emplace_back(cv[0].get<std::string>(), cv[1].get<std::string>());
    }
    const auto max = need(s, "max", where).get<std::vector<std::string>>();
    try {
      c.spaces.push_back({need_string(s, "name", where), synthetic_space(need_string(s, "name", where), nodes, covers, max)});
    } catch (const TopologyError& e) {
      throw CorpusError(where, e.what());
    }
  }
  return c;
}

Corpus load_corpus(const json& doc) {
  try {
    return load_corpus_impl(doc);
  } catch (const json::exception& e) {
    // wrong value types deep inside an entry
    throw CorpusError("", std::string("schema error: ") + e.what());
  }
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("", "cannot open corpus file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CorpusError("", std::string("JSON parse error: ") + e.what());
  }
  return load_corpus(doc);
}

}  // namespace pbw
