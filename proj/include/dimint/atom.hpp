#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimint {

enum class Element { He, Li, Be };
enum class Orbital { S1, S2 };

/// Kinds of electron pair that occur in 1s^2, 1s^2 2s and 1s^2 2s^2.
enum class OrbitalPair { S1S1, S1S2, S2S2 };

inline constexpr std::array<OrbitalPair, 3> kAllOrbitalPairs{OrbitalPair::S1S1, OrbitalPair::S1S2,
                                                            OrbitalPair::S2S2};

/// Principal quantum number of an s orbital (1s -> 1, 2s -> 2).
inline int principal(Orbital o) { return o == Orbital::S1 ? 1 : 2; }

OrbitalPair pair_kind(Orbital a, Orbital b);
std::string_view to_string(OrbitalPair p);
std::string_view to_string(Element e);

struct AtomSpec {
  Element element;
  int Z;
  double lambda;  // coupling 1/Z for the physical atom
  std::vector<Orbital> occupancy;

  static AtomSpec helium();
  static AtomSpec lithium();
  static AtomSpec beryllium();
  static AtomSpec of(Element e);
  /// Parses "he", "li" or "be" (case-insensitive); throws DomainError otherwise.
  static AtomSpec from_name(std::string_view name);

  int electrons() const { return static_cast<int>(occupancy.size()); }
  bool physical_coupling() const { return lambda == 1.0 / Z; }

  /// Same orbital structure at a different coupling strength.
  AtomSpec with_lambda(double l) const {
    AtomSpec a = *this;
    a.lambda = l;
    return a;
  }
};

/// Pair multiplicities {1s1s, 1s2s, 2s2s} of the occupancy: He (1,0,0),
/// Li (1,2,0), Be (1,4,1).
std::array<int, 3> pair_multiplicities(const AtomSpec& atom);

/// All electron index pairs i < j (0-based).
std::vector<std::pair<int, int>> electron_pairs(const AtomSpec& atom);

}  // namespace dimint
