#pragma once

#include <vector>

namespace gemfive {

// Proper vertex coloring: color[v] in [0, colors), every color < colors occurs.
struct Coloring {
    std::vector<int> color;
    int colors = 0;
};

} // namespace gemfive
