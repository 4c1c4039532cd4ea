/*
 * Copyright 2026 The rankcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rankcode/serialize.hpp"

#include "rankcode/error.hpp"

namespace rankcode {

using nlohmann::json;

namespace {

void expect_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::InvalidArgument, std::string(what) + " must be a JSON array");
}

}  // namespace

json to_json(const FieldCtx& f, const FqmElem& x) { return json(f.to_vector(x)); }

FqmElem elem_from_json(const FieldCtx& f, const json& j) {
  expect_array(j, "element");
  std::vector<FqElem> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw Error(Errc::InvalidArgument, "element coordinates must be integers");
    const auto v = c.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(f.q())) throw Error(Errc::InvalidArgument, "element coordinate out of range");
    coords.push_back(static_cast<FqElem>(v));
  }
  return f.element(coords);
}

json to_json(const FieldCtx& f, std::span<const FqmElem> w) {
  json out = json::array();
  for (const auto& x : w) out.push_back(to_json(f, x));
  return out;
}

Word word_from_json(const FieldCtx& f, const json& j) {
  expect_array(j, "word");
  Word out;
  for (const auto& x : j) out.push_back(elem_from_json(f, x));
  return out;
}

json to_json(const FieldCtx& f, const InterleavedWord& w) {
  json out = json::array();
  for (const auto& row : w) out.push_back(to_json(f, std::span<const FqmElem>(row)));
  return out;
}

InterleavedWord iword_from_json(const FieldCtx& f, const json& j) {
  expect_array(j, "interleaved word");
  InterleavedWord out;
  for (const auto& row : j) out.push_back(word_from_json(f, row));
  return out;
}

json to_json(const FieldCtx& f, const QPoly& p) { return to_json(f, p.coeffs()); }

QPoly qpoly_from_json(const FieldCtx& f, const json& j) { return reduce(f, word_from_json(f, j)); }

json to_json(const FieldCtx& f) {
  return json{{"q", f.q()}, {"m", f.m()}, {"base_modulus", f.base().modulus()}, {"ext_modulus", f.ext_modulus()}};
}

FieldPtr field_from_json(const json& j) {
  try {
    std::optional<std::vector<FqElem>> base_mod, ext_mod;
    if (j.contains("base_modulus")) base_mod = j.at("base_modulus").get<std::vector<FqElem>>();
    if (j.contains("ext_modulus")) ext_mod = j.at("ext_modulus").get<std::vector<FqElem>>();
    return FieldCtx::create(j.at("q").get<std::uint32_t>(), j.at("m").get<std::size_t>(), base_mod, ext_mod);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed field description: ") + e.what());
  }
}

json to_json(const GabidulinCode& code) {
  const FieldCtx& f = code.field();
  return json{{"field", to_json(f)}, {"g", to_json(f, code.points())}, {"k", code.dimension()}};
}

GabidulinCode code_from_json(const json& j) {
  try {
    FieldPtr f = field_from_json(j.at("field"));
    Word g = word_from_json(*f, j.at("g"));
    return GabidulinCode(f, std::move(g), j.at("k").get<std::size_t>());
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed code description: ") + e.what());
  }
}

}  // namespace rankcode
