#pragma once

#include <vector>

// Public polynomial of the 2-adic toy instance (degree 20), constant term first.
inline const std::vector<long> kToyF = {
    -167,   3548,    -21942, 79034,  -200173, 370306, -502444, 504970, -378052, 202684, -57366,
    -26650, 54972,   -48500, 29670,  -13470,  4555,   -1120,   190,    -20,     1};
