#include "ifsim/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace ifsim {

RankedOrder rank_descending(std::span<const double> scores) {
    RankedOrder out;
    out.order.resize(scores.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::size_t i = 0;
    while (i < out.order.size()) {
        const double leader = scores[out.order[i]];
        std::size_t j = i + 1;
        while (j < out.order.size() && leader - scores[out.order[j]] <= kRankEps) ++j;
        std::sort(out.order.begin() + static_cast<std::ptrdiff_t>(i),
                  out.order.begin() + static_cast<std::ptrdiff_t>(j));
        if (j - i >= 2) {
            out.tie_groups.emplace_back(out.order.begin() + static_cast<std::ptrdiff_t>(i),
                                        out.order.begin() + static_cast<std::ptrdiff_t>(j));
        }
        i = j;
    }
    return out;
}

}  // namespace ifsim
