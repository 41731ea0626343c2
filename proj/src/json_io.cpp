// Copyright 2026 The motivekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "motivekit/json_io.hpp"

#include "motivekit/errors.hpp"

namespace motivekit::json_io {

namespace {

// Wraps nlohmann type errors so every shape problem surfaces as MalformedInput.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("malformed JSON: ") + e.what());
  }
}

BrauerModel::Ptr modelFromJson(const Json& j, const Caps& caps) {
  return guarded("model", [&] {
    if (!j.is_object() || !j.contains("model")) throw MalformedInput("model: expected an object with a \"model\" key");
    const std::string kind = j.at("model").get<std::string>();
    if (kind == "formal") {
      std::optional<IndexTable> table;
      if (j.contains("indexTable")) {
        table.emplace();
        for (const auto& row : j.at("indexTable")) (*table)[row.at("class").get<std::vector<Int>>()] = row.at("index").get<Int>();
      }
      return BrauerModel::formal(j.at("factors").get<std::vector<Int>>(), table, caps);
    }
    if (kind == "hasse") {
      std::vector<std::string> places;
      if (j.contains("places")) places = j.at("places").get<std::vector<std::string>>();
      return BrauerModel::hasse(places, j.value("reciprocity", false));
    }
    throw MalformedInput("model: unknown kind '" + kind + "'");
  });
}

OJson modelToJson(const BrauerModel& m) {
  OJson j;
  if (m.kind() == ModelKind::Formal) {
    j["model"] = "formal";
    j["factors"] = m.invariantFactors();
    if (m.indexTable()) {
      OJson rows = OJson::array();
      for (const auto& [cls, ind] : *m.indexTable()) rows.push_back(OJson{{"class", cls}, {"index", ind}});
      j["indexTable"] = rows;
    }
  } else {
    j["model"] = "hasse";
    if (!m.places().empty()) j["places"] = m.places();
    j["reciprocity"] = m.reciprocity();
  }
  return j;
}

BrauerClass classFromJson(const Json& j, const BrauerModel::Ptr& fallback, const Caps& caps) {
  return guarded("class", [&] {
    if (j.is_number_integer()) {
      if (!fallback || !fallback->isCyclic())
        throw MalformedInput("class: bare integers need a cyclic --model");
      return fallback->element(j.get<Int>());
    }
    if (!j.is_object()) throw MalformedInput("class: expected an object or an integer");
    BrauerModel::Ptr model = fallback;
    if (j.contains("model")) {
      model = modelFromJson(j, caps);
      if (fallback && !sameModel(model, fallback)) throw ModelMismatch();
    }
    if (!model) throw MalformedInput("class: no model given");
    if (model->kind() == ModelKind::Formal) {
      if (!j.contains("exponents")) throw MalformedInput("class: formal classes need \"exponents\"");
      return model->element(j.at("exponents").get<std::vector<Int>>());
    }
    std::map<std::string, Rational> inv;
    if (j.contains("invariants"))
      for (const auto& [place, value] : j.at("invariants").items()) inv[place] = Rational::parse(value.get<std::string>());
    return model->element(inv);
  });
}

OJson classToJson(const BrauerClass& c) {
  OJson j = modelToJson(*c.model());
  if (c.model()->kind() == ModelKind::Formal) {
    j["exponents"] = c.exponents();
  } else {
    OJson inv = OJson::object();
    for (const auto& [place, value] : c.invariants()) inv[place] = value.str();
    j["invariants"] = inv;
  }
  return j;
}

std::vector<BrauerClass> classesFromJson(const Json& j, const BrauerModel::Ptr& fallback, const Caps& caps) {
  return guarded("classes", [&] {
    const Json& list = j.is_object() && j.contains("classes") ? j.at("classes") : j;
    if (!list.is_array()) throw MalformedInput("classes: expected a list or {\"classes\":[...]}");
    std::vector<BrauerClass> out;
    BrauerModel::Ptr model = fallback;
    for (const auto& item : list) {
      out.push_back(classFromJson(item, model, caps));
      model = out.back().model();  // later entries must share the first one's model
    }
    return out;
  });
}

CsaMotive motiveFromJson(const Json& j, const BrauerModel::Ptr& fallback, const Caps& caps) {
  auto classes = classesFromJson(j, fallback, caps);
  BrauerModel::Ptr model = classes.empty() ? fallback : classes.front().model();
  if (!model) throw MalformedInput("motive: empty motive needs a --model");
  return CsaMotive(model, std::move(classes));
}

OJson motiveToJson(const CsaMotive& m) {
  OJson list = OJson::array();
  for (const auto& c : m.classes()) list.push_back(classToJson(c));
  return OJson{{"classes", list}};
}

IntPolynomial polynomialFromJson(const Json& j) {
  return guarded("polynomial", [&] {
    const Json& list = j.is_object() ? j.at("coeffs") : j;
    return IntPolynomial(list.get<std::vector<Int>>());
  });
}

OJson polynomialToJson(const IntPolynomial& p) { return OJson{{"coeffs", p.coeffs()}}; }

IntMatrix matrixFromJson(const Json& j) {
  return guarded("matrix", [&] { return j.get<IntMatrix>(); });
}

std::vector<Int> intsFromJson(const Json& j) {
  return guarded("integer list", [&] { return j.get<std::vector<Int>>(); });
}

FiniteGroup::Ptr groupFromJson(const Json& j) {
  return guarded("group", [&] {
    if (j.is_string()) return FiniteGroup::named(j.get<std::string>());
    if (j.contains("name")) return FiniteGroup::named(j.at("name").get<std::string>());
    return FiniteGroup::fromCycles(j.at("generators").get<std::vector<std::string>>(), j.at("degree").get<std::size_t>());
  });
}

Element elementFromJson(const Json& j, const FiniteGroup::Ptr& group) {
  return guarded("element", [&] { return group->elementOf(parseCycles(j.get<std::string>(), group->degree())); });
}

Subgroup subgroupFromJson(const Json& j, const FiniteGroup::Ptr& group) {
  return guarded("subgroup", [&] {
    if (j.is_string()) {
      if (j == "whole") return Subgroup::whole(group);
      if (j == "trivial") return Subgroup::trivial(group);
      throw MalformedInput("subgroup: expected \"whole\", \"trivial\" or generators");
    }
    const Json& list = j.is_object() ? j.at("generators") : j;
    std::vector<Element> gens;
    for (const auto& g : list) gens.push_back(elementFromJson(g, group));
    return Subgroup::generatedBy(group, gens);
  });
}

OJson subgroupToJson(const Subgroup& h) {
  OJson els = OJson::array();
  for (Element e : h.elements()) els.push_back(formatCycles(h.group()->permutation(e)));
  return OJson{{"order", h.order()}, {"elements", els}};
}

OJson isoDecisionToJson(const IsoDecision& d) {
  OJson w = OJson::object();
  for (const auto& [p, perm] : d.witness) w[std::to_string(p)] = perm;
  return OJson{{"isomorphic", d.isomorphic}, {"witness", w}};
}

}  // namespace motivekit::json_io
