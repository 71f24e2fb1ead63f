#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace tarski {

// Axiom identifiers. The primed variants carry a 'p' suffix in their stable
// names (A2p, A7p, ...). The continuity schemas A11/A11p are listed for
// completeness but are never checkable: they quantify over arbitrary point
// sets.
enum class AxiomId {
  A0,
  A1,
  A2,
  A2p,
  A3,
  A4,
  A5,
  A6,
  A7,
  A7p,
  A8,
  A9,
  A9p,
  A10,
  A10p,
  A11,
  A11p,
  A14,
  A15,
};

inline constexpr std::array<AxiomId, 19> kAllAxioms = {
    AxiomId::A0,  AxiomId::A1,  AxiomId::A2,   AxiomId::A2p, AxiomId::A3,
    AxiomId::A4,  AxiomId::A5,  AxiomId::A6,   AxiomId::A7,  AxiomId::A7p,
    AxiomId::A8,  AxiomId::A9,  AxiomId::A9p,  AxiomId::A10, AxiomId::A10p,
    AxiomId::A11, AxiomId::A11p, AxiomId::A14, AxiomId::A15,
};

inline constexpr std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::A0: return "A0";
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A2p: return "A2p";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::A6: return "A6";
    case AxiomId::A7: return "A7";
    case AxiomId::A7p: return "A7p";
    case AxiomId::A8: return "A8";
    case AxiomId::A9: return "A9";
    case AxiomId::A9p: return "A9p";
    case AxiomId::A10: return "A10";
    case AxiomId::A10p: return "A10p";
    case AxiomId::A11: return "A11";
    case AxiomId::A11p: return "A11p";
    case AxiomId::A14: return "A14";
    case AxiomId::A15: return "A15";
  }
  return "?";
}

inline std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (AxiomId id : kAllAxioms)
    if (axiom_name(id) == name) return id;
  return std::nullopt;
}

/// Number of universally quantified points in the statement.
inline constexpr int axiom_arity(AxiomId id) {
  switch (id) {
    case AxiomId::A0: return 2;
    case AxiomId::A1: return 2;
    case AxiomId::A2: return 6;
    case AxiomId::A2p: return 6;
    case AxiomId::A3: return 3;
    case AxiomId::A4: return 4;
    case AxiomId::A5: return 8;
    case AxiomId::A6: return 2;
    case AxiomId::A7: return 5;
    case AxiomId::A7p: return 5;
    case AxiomId::A8: return 0;
    case AxiomId::A9: return 5;
    case AxiomId::A9p: return 5;
    case AxiomId::A10: return 5;
    case AxiomId::A10p: return 6;
    case AxiomId::A11: return -1;
    case AxiomId::A11p: return -1;
    case AxiomId::A14: return 3;
    case AxiomId::A15: return 4;
  }
  return -1;
}

inline constexpr bool axiom_checkable(AxiomId id) {
  return id != AxiomId::A11 && id != AxiomId::A11p;
}

inline std::vector<AxiomId> all_axioms() {
  return std::vector<AxiomId>(kAllAxioms.begin(), kAllAxioms.end());
}

}  // namespace tarski
