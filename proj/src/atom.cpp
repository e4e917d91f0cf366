#include "dimint/atom.hpp"

#include <algorithm>
#include <cctype>

#include "dimint/errors.hpp"

namespace dimint {

OrbitalPair pair_kind(Orbital a, Orbital b) {
  if (a == Orbital::S1 && b == Orbital::S1) return OrbitalPair::S1S1;
  if (a == Orbital::S2 && b == Orbital::S2) return OrbitalPair::S2S2;
  return OrbitalPair::S1S2;
}

std::string_view to_string(OrbitalPair p) {
  switch (p) {
    case OrbitalPair::S1S1: return "1s-1s";
    case OrbitalPair::S1S2: return "1s-2s";
    case OrbitalPair::S2S2: return "2s-2s";
  }
  return "?";
}

std::string_view to_string(Element e) {
  switch (e) {
    case Element::He: return "He";
    case Element::Li: return "Li";
    case Element::Be: return "Be";
  }
  return "?";
}

AtomSpec AtomSpec::helium() { return {Element::He, 2, 1.0 / 2, {Orbital::S1, Orbital::S1}}; }

AtomSpec AtomSpec::lithium() {
  return {Element::Li, 3, 1.0 / 3, {Orbital::S1, Orbital::S1, Orbital::S2}};
}

AtomSpec AtomSpec::beryllium() {
  return {Element::Be, 4, 1.0 / 4, {Orbital::S1, Orbital::S1, Orbital::S2, Orbital::S2}};
}

AtomSpec AtomSpec::of(Element e) {
  switch (e) {
    case Element::He: return helium();
    case Element::Li: return lithium();
    case Element::Be: return beryllium();
  }
  throw DomainError("unknown element");
}

AtomSpec AtomSpec::from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "he") return helium();
  if (lower == "li") return lithium();
  if (lower == "be") return beryllium();
  throw DomainError("unknown element '" + std::string(name) + "' (expected he, li or be)");
}

std::array<int, 3> pair_multiplicities(const AtomSpec& atom) {
  std::array<int, 3> counts{0, 0, 0};
  for (auto [i, j] : electron_pairs(atom))
    ++counts[static_cast<int>(pair_kind(atom.occupancy[i], atom.occupancy[j]))];
  return counts;
}

std::vector<std::pair<int, int>> electron_pairs(const AtomSpec& atom) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < atom.electrons(); ++i)
    for (int j = i + 1; j < atom.electrons(); ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace dimint
