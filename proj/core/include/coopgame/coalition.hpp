// Copyright 2026 The coopgame Authors
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

#ifndef COOPGAME_COALITION_HPP
#define COOPGAME_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coopgame {

/// A coalition of players, encoded as a bitmask: bit i is player i.
///
/// Players are 0-based inside the library; every file format and report
/// uses 1-based labels instead (see labels()).
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static constexpr Coalition empty() { return Coalition(0u); }
  static constexpr Coalition full(int n) {
    return Coalition(n >= 32 ? ~0u : (1u << n) - 1u);
  }
  static constexpr Coalition single(int player) {
    return Coalition(1u << player);
  }
  static Coalition of(std::initializer_list<int> players) {
    std::uint32_t b = 0;
    for (int p : players) b |= 1u << p;
    return Coalition(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool contains(int player) const { return (bits_ >> player) & 1u; }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint_from(Coalition other) const {
    return (bits_ & other.bits_) == 0;
  }

  constexpr Coalition with(int player) const {
    return Coalition(bits_ | (1u << player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(bits_ & ~(1u << player));
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Coalition a, Coalition b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(Coalition a, Coalition b) {
    return a.bits_ != b.bits_;
  }

  /// Member players in ascending order (0-based).
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  /// Member players as 1-based labels, the external convention.
  std::vector<int> labels() const {
    std::vector<int> out = members();
    for (int& p : out) ++p;
    return out;
  }

  /// "{1,3}" with 1-based labels; "{}" for the empty coalition.
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace coopgame

#endif  // COOPGAME_COALITION_HPP
