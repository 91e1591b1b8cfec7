#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace brute {

// Every set of distinct positive integers summing to n, each listed in
// descending order.
inline std::vector<std::vector<int>> distinct_sets(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int below) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, below - 1); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    rec(n, n + 1);
    return out;
}

} // namespace brute
