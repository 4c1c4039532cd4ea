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

#pragma once

#include <json.hpp>

#include "rankcode/gabidulin.hpp"
#include "rankcode/interleaved.hpp"

namespace rankcode {

// Elements are arrays of m integer coordinates; words and matrices nest them.

nlohmann::json to_json(const FieldCtx& f, const FqmElem& x);
FqmElem elem_from_json(const FieldCtx& f, const nlohmann::json& j);

nlohmann::json to_json(const FieldCtx& f, std::span<const FqmElem> w);
Word word_from_json(const FieldCtx& f, const nlohmann::json& j);

nlohmann::json to_json(const FieldCtx& f, const InterleavedWord& w);
InterleavedWord iword_from_json(const FieldCtx& f, const nlohmann::json& j);

nlohmann::json to_json(const FieldCtx& f, const QPoly& p);
QPoly qpoly_from_json(const FieldCtx& f, const nlohmann::json& j);

/// {q, m, base_modulus, ext_modulus}
nlohmann::json to_json(const FieldCtx& f);
FieldPtr field_from_json(const nlohmann::json& j);

/// {field, g, k}
nlohmann::json to_json(const GabidulinCode& code);
GabidulinCode code_from_json(const nlohmann::json& j);

}  // namespace rankcode
