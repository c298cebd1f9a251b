#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Embedded data for the Godeaux surface with singular set 2A1 + 2A3 and its
// Z/2 x Z/4 cover. Lattices come from godeaux_fixture() / godeaux_extended().
namespace nodehunt::godeaux {

inline constexpr std::string_view kFixtureName = "godeaux-2a1-2a3";

/// Relation templates for the strict transforms C' and D'.
inline constexpr std::string_view kCTemplate = "8K = 4C' + ?N1 + ?N3 + ?N4 + ?N5 + ?N6 + ?N7 + ?N8";
inline constexpr std::string_view kDTemplate = "4K = 2D' + ?N1 + ?N2 + ?N6 + ?N7 + ?N8";

/// The bare bound: a smooth curve meets each (-2)-curve at most once.
inline constexpr std::string_view kZeroOne = "pair N1-N8 : 0 1\n";

/// C passes through the node of N1 and both A3 points but not the node of N2;
/// a smooth germ through an A3 point meets its chain with total multiplicity 1.
/// The last line fixes the labelling of the chain ends (C' meets N5 and N6).
inline constexpr std::string_view kCConstraints =
    "pair N1-N8 : 0 1\n"
    "pair N2 : 0\n"
    "sum N3 N4 N5 : 1\n"
    "sum N6 N7 N8 : 1\n"
    "positive\n"
    "adjunction K\n"
    "pair N3 N8 : 0\n";

/// D passes through both nodes and the second A3 point only.
inline constexpr std::string_view kDConstraints =
    "pair N1-N8 : 0 1\n"
    "sum N3 N4 N5 : 0\n"
    "sum N6 N7 N8 : 1\n"
    "positive\n"
    "adjunction K\n";

inline constexpr std::string_view kCover =
    "group 2 4\n"
    "base 1 1 0 0\n"
    "slot (0,2) 1 : N4 + N7\n"
    "slot (1,0) 1 : N1\n"
    "slot (1,2) 1 : N2\n"
    "slot (0,1) 1 : N3\n"
    "slot (0,1) 3 : N5\n"
    "slot (1,1) 1 : N6\n"
    "slot (1,1) 3 : N8\n"
    "L (1,0) : 2K - D' - N7\n"
    "L (1,1) : 2K - C'\n"
    "label (1,0) L2\n"
    "label (1,1) L5\n"
    "label (0,2) L3\n"
    "label (1,2) L4\n"
    "label (0,1) L6\n"
    "label (1,3) L7\n"
    "label (0,3) L8\n"
    "step (0,1) = (1,0) * (1,1)\n"
    "step (0,2) = (1,1) * (1,1)\n"
    "step (1,3) = (0,2) * (1,1)\n"
    "step (0,3) = (0,2) * (0,1)\n"
    "step (1,2) = (1,3) * (0,3)\n"
    "h0 (1,0) : 0\n"
    "h0 (1,1) : 0\n"
    "h0 (0,2) : 0\n"
    "h0 (1,2) : 0\n"
    "h0 (0,1) : 0\n"
    "h0 (1,3) : 0\n"
    "h0 (0,3) : 0\n";

inline constexpr std::string_view kTableA = "[[0],[1],[1],[0,0],[1,1]]";
inline constexpr std::string_view kTableB = "[[2],[2],[0],[1,3],[3,1]]";

/// The seven L classes as printed, in label order.
inline std::vector<std::pair<std::string, std::string>> expected_L() {
  return {
      {"L2", "2K - D' - N7"},
      {"L3", "4K - 2C' - N1 - N4 - N5 - N6 - N7"},
      {"L4", "14K - 6C' - D' - 3N1 - N3 - 3N4 - 4N5 - 5N6 - 4N7 - 2N8"},
      {"L5", "2K - C'"},
      {"L6", "4K - C' - D' - N1 - N6 - N7"},
      {"L7", "6K - 3C' - N1 - N4 - 2N5 - 2N6 - N7"},
      {"L8", "8K - 3C' - D' - 2N1 - N4 - 2N5 - 2N6 - 2N7 - N8"},
  };
}

inline constexpr std::string_view kL4Short = "6K - 2C' - D' - N1 - N4 - N5 - 2N6 - 2N7 - N8";

/// The derivation steps as printed: target = left + right - correction.
inline std::vector<std::pair<std::string, std::string>> expected_steps() {
  return {
      {"L6 = L2 + L5", "N1 + N6"},
      {"L3 = L5 + L5", "N1 + N4 + N5 + N6 + N7"},
      {"L7 = L3 + L5", "N5 + N6"},
      {"L8 = L3 + L6", "N5 + N8"},
      {"L4 = L7 + L8", "N3 + N4 + N6 + N7 + N8"},
  };
}

}  // namespace nodehunt::godeaux
