#pragma once

// Connected components of strata: labels and the component table.

#include <stdexcept>
#include <string>
#include <vector>

#include "origami/surface.hpp"

namespace origami {

enum class ComponentLabel { Hyperelliptic, EvenSpin, OddSpin, Unique, NonHyperelliptic };

inline std::string to_string(ComponentLabel c) {
  switch (c) {
    case ComponentLabel::Hyperelliptic: return "hyp";
    case ComponentLabel::EvenSpin: return "even";
    case ComponentLabel::OddSpin: return "odd";
    case ComponentLabel::Unique: return "unique";
    case ComponentLabel::NonHyperelliptic: return "nonhyp";
  }
  return "?";
}

inline ComponentLabel parse_component(const std::string& s) {
  if (s == "hyp" || s == "hyperelliptic") return ComponentLabel::Hyperelliptic;
  if (s == "even") return ComponentLabel::EvenSpin;
  if (s == "odd") return ComponentLabel::OddSpin;
  if (s == "unique") return ComponentLabel::Unique;
  if (s == "nonhyp") return ComponentLabel::NonHyperelliptic;
  throw std::invalid_argument("unknown component name '" + s + "' (hyp|even|odd|unique|nonhyp)");
}

// Component table.  Minimal stratum: g=2 {hyp}, g=3 {hyp, odd}, g>=4
// {hyp, even, odd}.  (g-1,g-1): g=2 {hyp}, g=3 {hyp, odd}, even g>=4
// {hyp, nonhyp}, odd g>=5 {hyp, even, odd}.  Otherwise {even, odd} when all
// orders are even, else {unique}.
inline std::vector<ComponentLabel> components_of(const StratumSig& s) {
  using enum ComponentLabel;
  const auto& a = s.alpha;
  if (a.empty()) return {Unique};
  const int g = s.genus();
  if (a.size() == 1) {
    if (g == 2) return {Hyperelliptic};
    if (g == 3) return {Hyperelliptic, OddSpin};
    return {Hyperelliptic, EvenSpin, OddSpin};
  }
  if (a.size() == 2 && a[0] == a[1]) {
    if (g == 2) return {Hyperelliptic};
    if (g == 3) return {Hyperelliptic, OddSpin};
    if (g % 2 == 0) return {Hyperelliptic, NonHyperelliptic};
    return {Hyperelliptic, EvenSpin, OddSpin};
  }
  if (s.all_even()) return {EvenSpin, OddSpin};
  return {Unique};
}

inline bool has_component(const StratumSig& s, ComponentLabel c) {
  for (auto x : components_of(s))
    if (x == c) return true;
  return false;
}

}  // namespace origami
