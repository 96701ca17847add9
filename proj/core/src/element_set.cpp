#include "gen/element_set.hpp"

#include "gen/errors.hpp"

namespace gen {

ElementSet::ElementSet(std::size_t universe) {
  if (universe > kCapacity) {
    throw ResourceLimit("element set universe " + std::to_string(universe) + " exceeds capacity " +
                        std::to_string(kCapacity));
  }
  universe_ = static_cast<std::uint16_t>(universe);
}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : ElementSet(universe) {
  for (auto x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  return s;
}

ElementSet ElementSet::from_elements(std::size_t universe, const std::vector<Element>& members) {
  ElementSet s(universe);
  for (auto x : members) s.insert(x);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  ElementSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  s.words_[0] = mask;
  return s;
}

void ElementSet::insert(Element x) {
  if (x >= universe_) {
    throw InvalidArgument("element " + std::to_string(x) + " outside universe of size " +
                          std::to_string(universe_));
  }
  words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void ElementSet::erase(Element x) {
  if (x >= universe_) return;
  words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < kWords; ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < kWords; ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  return full(universe_) - *this;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::string ElementSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = kWords; i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const auto d = static_cast<unsigned>((words_[i] >> (nib * 4)) & 0xF);
      if (out.empty() && d == 0) continue;
      out.push_back(kDigits[d]);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gen
