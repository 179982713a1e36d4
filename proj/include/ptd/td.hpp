#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace ptd {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted
    std::vector<std::pair<int, int>> edges;

    int width() const {
        int w = 0;
        for (const auto& b : bags) w = std::max(w, (int)b.size());
        return w - 1;
    }
    int max_bag() const { return width() + 1; }
};

}  // namespace ptd
