#include "pbw/element_set.hpp"

namespace pbw {

std::vector<Elem> members_of(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for_each_member(s, [&](Elem e) { out.push_back(e); });
  return out;
}

ElementSet singleton_set(std::size_t universe, Elem e) {
  ElementSet s(universe);
  s.set(e);
  return s;
}

ElementSet set_from(std::size_t universe, const std::vector<Elem>& elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.set(e);
  return s;
}

bool ElementSetLess::operator()(const ElementSet& a, const ElementSet& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  // Compare member lists in increasing index order.
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == ElementSet::npos && j != ElementSet::npos;
}

}  // namespace pbw
