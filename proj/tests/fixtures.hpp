#pragma once

// Worked examples used across the test suites. Tableaux are in the text
// format of nclr/io.hpp: bottom row first, "." for inner cells.

#include <string>
#include <vector>

#include "nclr/io.hpp"

namespace fixtures {

using nclr::CompositionTableau;
using nclr::SkewTableau;

inline SkewTableau yt(const std::string& text) { return nclr::skew_tableau_from_text(text); }
inline CompositionTableau ct(const std::string& text) {
  return nclr::composition_tableau_from_text(text);
}

// Shape (7,6,3,1)/(4,2) and its standardization.
inline const std::string kSemistandard = ". . . . 1 2 4\n. . 1 2 3 3\n1 2 2\n2\n";
inline const std::string kStandardized = ". . . . 3 8 11\n. . 2 7 9 10\n1 5 6\n4\n";

// A composition tableau of shape (3,6,1,7) // (2,4).
inline const std::string kCompositionTableau = ". . 1\n. . . . 1 2\n1\n2 2 2 2 3 3 4\n";

// LRT((7,6,4,3,2), (6,4,4), (4,3,1)) and the images of its members under
// s_1 s_2, in matching order.
inline const std::vector<std::string> kRunningLrt = {
    ". . . . . . 1\n. . . . 1 1\n. . . .\n1 2 2\n2 3\n",
    ". . . . . . 1\n. . . . 1 2\n. . . .\n1 1 2\n2 3\n",
    ". . . . . . 1\n. . . . 1 2\n. . . .\n1 1 3\n2 2\n",
};
inline const std::vector<std::string> kRunningLrtS1S2 = {
    ". . . . . . 2\n. . . . 1 2\n. . . .\n2 2 3\n3 3\n",
    ". . . . . . 2\n. . . . 1 3\n. . . .\n2 2 2\n3 3\n",
    ". . . . . . 1\n. . . . 2 2\n. . . .\n2 2 3\n3 3\n",
};

// LRT((5,3,2), (2,1), (4,2,1)), s_1 of each, and rho^{-1} of the images for
// beta = (1,2) and beta = (2,1).
inline const std::vector<std::string> kDemoLrt = {
    ". . 1 1 1\n. 1 2\n2 3\n",
    ". . 1 1 1\n. 2 2\n1 3\n",
};
inline const std::vector<std::string> kDemoS1 = {
    ". . 1 2 2\n. 1 2\n2 3\n",
    ". . 1 1 2\n. 2 2\n2 3\n",
};
inline const std::vector<std::string> kDemoRho12 = {
    ". 1 2\n. . 1 2 2\n2 3\n",
    ". 3\n. . 1 1 2\n2 2 2\n",
};
inline const std::vector<std::string> kDemoRho21 = {
    ". . 2\n. 1 1 2 2\n2 3\n",
    ". . 1 1 2\n. 3\n2 2 2\n",
};

// phi(621|76432) for (7,6,4,2,2)/(5,5,2,1), and s_1 of it.
inline const std::string kPhi = ". . . . . 1 1\n. . . . . 2\n. . 1 1\n. 1\n2 2\n";
inline const std::string kPhiS1 = ". . . . . 1 2\n. . . . . 2\n. . 1 2\n. 1\n2 2\n";

}  // namespace fixtures
