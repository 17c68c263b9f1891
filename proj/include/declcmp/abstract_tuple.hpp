#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "declcmp/lattice.hpp"

namespace declcmp {

/// An element of the product of truth lattices: one truth value per
/// attribute, in schema order.
struct AbstractTuple {
  std::vector<ElementId> coords;

  AbstractTuple() = default;
  explicit AbstractTuple(std::vector<ElementId> c) : coords(std::move(c)) {}
  AbstractTuple(std::initializer_list<ElementId> c) : coords(c) {}

  std::size_t size() const noexcept { return coords.size(); }
  ElementId operator[](std::size_t i) const { return coords[i]; }
  ElementId& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const AbstractTuple&, const AbstractTuple&) = default;
  friend auto operator<=>(const AbstractTuple&, const AbstractTuple&) = default;
};

/// A set of attributes, stored as a membership vector in schema order.
class AttributeSet {
public:
  AttributeSet() = default;
  explicit AttributeSet(std::size_t n) : bits_(n, false) {}
  static AttributeSet full(std::size_t n) {
    AttributeSet s(n);
    s.bits_.assign(n, true);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(std::size_t a) const { return bits_.at(a); }
  void insert(std::size_t a) { bits_.at(a) = true; }
  void erase(std::size_t a) { bits_.at(a) = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;

  bool subset_of(const AttributeSet& o) const;
  AttributeSet operator&(const AttributeSet& o) const;

  friend bool operator==(const AttributeSet&, const AttributeSet&) = default;
  friend bool operator<(const AttributeSet& a, const AttributeSet& b) { return a.bits_ < b.bits_; }

  const std::vector<bool>& bits() const noexcept { return bits_; }

private:
  std::vector<bool> bits_;
};

} // namespace declcmp

template <>
struct std::hash<declcmp::AbstractTuple> {
  std::size_t operator()(const declcmp::AbstractTuple& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : t.coords) h = (h ^ c) * 0x100000001b3ULL;
    return h;
  }
};

template <>
struct std::hash<declcmp::AttributeSet> {
  std::size_t operator()(const declcmp::AttributeSet& s) const noexcept {
    return std::hash<std::vector<bool>>{}(s.bits());
  }
};
