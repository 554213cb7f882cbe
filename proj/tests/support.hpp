/*
 * Copyright 2026 The drinfeld-level Authors
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

#include <string>
#include <vector>

#include "drinfeld/deformation.hpp"

namespace drinfeld::testing {

inline AlgebraPtr algebra(unsigned p, unsigned m, unsigned k, unsigned s = 1,
                          std::uint64_t max_card = kDefaultMaxCard) {
  return ArtinLocalAlgebra::make(GroundField::make(p, s), m, k, max_card);
}

inline AlgebraElement el(const AlgebraPtr& B, const std::string& text) { return B->parse(text); }

inline APoly apoly(const AlgebraPtr& B, const std::string& text) { return APoly::parse(B->ground_ptr(), text); }

/// e_T = gamma + c_1 tau + ... from expression strings.
inline DrinfeldModule module(const AlgebraPtr& B, const std::string& gamma, const std::vector<std::string>& cs) {
  std::vector<AlgebraElement> v;
  for (const auto& c : cs) v.push_back(B->parse(c));
  return DrinfeldModule::make(B, B->parse(gamma), std::move(v));
}

/// c_0 + c_1 tau + ... from expression strings.
inline TwistedPoly tw(const AlgebraPtr& B, const std::vector<std::string>& cs) {
  std::vector<AlgebraElement> v;
  for (const auto& c : cs) v.push_back(B->parse(c));
  return TwistedPoly(B, std::move(v));
}

inline std::vector<AlgebraElement> elems(const AlgebraPtr& B, const std::vector<std::string>& texts) {
  std::vector<AlgebraElement> v;
  for (const auto& t : texts) v.push_back(B->parse(t));
  return v;
}

inline LevelStructureCandidate candidate(const AlgebraPtr& B, const std::vector<std::string>& images) {
  return {elems(B, images)};
}

}  // namespace drinfeld::testing
