// Copyright 2026 The ergodic-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergodic/state_set.h"

#include <algorithm>
#include <cassert>

namespace ergodic {

StateSet StateSet::Full(std::size_t universe) {
  StateSet s(universe);
  std::fill(s.member_.begin(), s.member_.end(), 1);
  return s;
}

StateSet StateSet::FromIndices(std::size_t universe,
                               const std::vector<std::size_t>& indices) {
  StateSet s(universe);
  for (std::size_t i : indices) {
    assert(i < universe);
    s.insert(i);
  }
  return s;
}

StateSet StateSet::FromMask(std::size_t universe, std::uint64_t mask) {
  assert(universe <= 64);
  StateSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

std::size_t StateSet::count() const {
  return static_cast<std::size_t>(
      std::count(member_.begin(), member_.end(), 1));
}

std::vector<std::size_t> StateSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> StateSet::labels() const {
  std::vector<std::size_t> out = indices();
  for (auto& i : out) ++i;
  return out;
}

StateSet StateSet::complement() const {
  StateSet s(universe());
  for (std::size_t i = 0; i < member_.size(); ++i) s.member_[i] = !member_[i];
  return s;
}

StateSet StateSet::united(const StateSet& other) const {
  assert(universe() == other.universe());
  StateSet s(*this);
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (other.member_[i]) s.member_[i] = 1;
  }
  return s;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i] && !other.member_[i]) return false;
  }
  return true;
}

bool StateSet::is_disjoint_from(const StateSet& other) const {
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i] && other.member_[i]) return false;
  }
  return true;
}

std::string StateSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t label : labels()) {
    if (!first) out += ",";
    out += std::to_string(label);
    first = false;
  }
  return out + "}";
}

}  // namespace ergodic
