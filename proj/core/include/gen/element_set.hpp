#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace gen {

using Element = std::uint32_t;

/// Fixed-width subset of the elements 0..universe-1 of a group.
///
/// Positions of the game, generating sets and subgroup carriers are all
/// ElementSets. The universe size is part of the value, so sets drawn from
/// different groups never compare equal.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 256;
  static constexpr std::size_t kWords = kCapacity / 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> members);

  static ElementSet full(std::size_t universe);
  static ElementSet from_elements(std::size_t universe, const std::vector<Element>& members);
  /// Low 64 bits only; used by the game-tree oracle, which works on small groups.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void insert(Element x);
  void erase(Element x);

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool is_full() const noexcept { return size() == universe_; }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool is_proper_subset_of(const ElementSet& other) const noexcept {
    return is_subset_of(other) && *this != other;
  }

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator-=(const ElementSet& other) noexcept;
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) noexcept { return a -= b; }
  ElementSet complement() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Element>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }
  std::vector<Element> elements() const;

  std::uint64_t low_word() const noexcept { return words_[0]; }
  const std::array<std::uint64_t, kWords>& words() const noexcept { return words_; }

  /// Bitmask as a hexadecimal integer without leading zeros ("0" for empty).
  std::string to_hex() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Numeric comparison of the bitmasks (highest word first).
  friend bool mask_less(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t i = kWords; i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
  std::uint16_t universe_ = 0;
};

/// Canonical order used for every listing: cardinality first, then bitmask.
struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const noexcept {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa < sb;
    return mask_less(a, b);
  }
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.universe();
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace gen
