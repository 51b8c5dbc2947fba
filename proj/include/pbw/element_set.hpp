#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pbw {

/// Index of a ring element in its operation tables.
using Elem = std::uint32_t;

/// Subset of a finite ring's elements (or of a finite point set), one bit per index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

template <class F>
void for_each_member(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    f(static_cast<Elem>(i));
  }
}

std::vector<Elem> members_of(const ElementSet& s);
ElementSet singleton_set(std::size_t universe, Elem e);
ElementSet set_from(std::size_t universe, const std::vector<Elem>& elems);

/// Strict total order used to sort and deduplicate families of sets.
struct ElementSetLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const;
};

}  // namespace pbw
