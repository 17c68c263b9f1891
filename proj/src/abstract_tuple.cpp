#include "declcmp/abstract_tuple.hpp"

#include <algorithm>

namespace declcmp {

std::size_t AttributeSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> AttributeSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool AttributeSet::subset_of(const AttributeSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !o.bits_.at(i)) return false;
  return true;
}

AttributeSet AttributeSet::operator&(const AttributeSet& o) const {
  AttributeSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && o.bits_.at(i);
  return out;
}

} // namespace declcmp
