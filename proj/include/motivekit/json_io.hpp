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


#pragma once

// JSON encodings of models, classes, motives, polynomials and groups.
// Parsing throws MalformedInput on bad syntax or shape; output uses
// insertion-ordered objects so serialization is byte-stable.

#include <json.hpp>

#include "motivekit/brauer.hpp"
#include "motivekit/caps.hpp"
#include "motivekit/gsets.hpp"
#include "motivekit/motives.hpp"
#include "motivekit/polynomial.hpp"

namespace motivekit::json_io {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

/// Parses text as JSON, mapping syntax errors to MalformedInput.
Json parse(const std::string& text);

/// {"model":"formal","factors":[...],"indexTable":[{"class":[...],"index":k}]}
/// or {"model":"hasse","places":[...],"reciprocity":bool}. Extra keys such as
/// "exponents" or "invariants" are ignored, so a class object also names its model.
BrauerModel::Ptr modelFromJson(const Json& j, const Caps& caps = {});
OJson modelToJson(const BrauerModel& m);

/// Accepts a class object, or a bare integer when `fallback` is cyclic.
/// If both the object and `fallback` name a model they must agree.
BrauerClass classFromJson(const Json& j, const BrauerModel::Ptr& fallback, const Caps& caps = {});
OJson classToJson(const BrauerClass& c);

/// A list of classes, or {"classes":[...]}.
std::vector<BrauerClass> classesFromJson(const Json& j, const BrauerModel::Ptr& fallback, const Caps& caps = {});
CsaMotive motiveFromJson(const Json& j, const BrauerModel::Ptr& fallback, const Caps& caps = {});
OJson motiveToJson(const CsaMotive& m);

/// {"coeffs":[c0,c1,...]} or a bare coefficient list.
IntPolynomial polynomialFromJson(const Json& j);
OJson polynomialToJson(const IntPolynomial& p);

IntMatrix matrixFromJson(const Json& j);
std::vector<Int> intsFromJson(const Json& j);

/// {"name":"S4"} or {"generators":["(1 2)","(1 2 3)"],"degree":3}.
FiniteGroup::Ptr groupFromJson(const Json& j);
/// {"generators":[...]}, a bare list of cycle strings, "whole" or "trivial".
Subgroup subgroupFromJson(const Json& j, const FiniteGroup::Ptr& group);
OJson subgroupToJson(const Subgroup& h);
/// Element given in cycle notation.
Element elementFromJson(const Json& j, const FiniteGroup::Ptr& group);

OJson isoDecisionToJson(const IsoDecision& d);

}  // namespace motivekit::json_io
