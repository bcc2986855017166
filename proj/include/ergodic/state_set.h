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

#ifndef ERGODIC_STATE_SET_H_
#define ERGODIC_STATE_SET_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ergodic {

// A subset of the state space [n], stored as a membership vector. Indices are
// 0-based; ToString() and the JSON writers use 1-based labels.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : member_(universe, 0) {}

  static StateSet Full(std::size_t universe);
  static StateSet FromIndices(std::size_t universe,
                              const std::vector<std::size_t>& indices);
  // Bit j of `mask` selects state j. Requires universe <= 64.
  static StateSet FromMask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return member_.size(); }
  bool contains(std::size_t i) const { return member_[i] != 0; }
  void insert(std::size_t i) { member_[i] = 1; }
  void erase(std::size_t i) { member_[i] = 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  std::vector<std::size_t> indices() const;
  // 1-based labels, for reports.
  std::vector<std::size_t> labels() const;

  StateSet complement() const;
  StateSet united(const StateSet& other) const;
  bool is_subset_of(const StateSet& other) const;
  bool is_disjoint_from(const StateSet& other) const;

  std::string ToString() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::vector<char> member_;
};

}  // namespace ergodic

#endif  // ERGODIC_STATE_SET_H_
