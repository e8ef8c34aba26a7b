#include "planarity_oracle.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <cstdlib>

namespace oracle {

bool dt_realizable_by_planarity(const zsurg::DtCode& code)
{
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = static_cast<int>(code.crossing_count());
    const int passages = 2 * n;

    // vertices per crossing: hub, then rim slots 0..3 =
    // odd-in, even-in, odd-out, even-out
    std::vector<int> crossing_of(static_cast<std::size_t>(passages));
    std::vector<int> is_even(static_cast<std::size_t>(passages));
    for (int i = 0; i < n; ++i) {
        const int odd = 2 * i, even = std::abs(code.labels[static_cast<std::size_t>(i)]) - 1;
        crossing_of[static_cast<std::size_t>(odd)] = i;
        crossing_of[static_cast<std::size_t>(even)] = i;
        is_even[static_cast<std::size_t>(even)] = 1;
    }
    auto rim = [&](int passage, bool incoming) {
        const int slot = (incoming ? 0 : 2) + is_even[static_cast<std::size_t>(passage)];
        return 5 * crossing_of[static_cast<std::size_t>(passage)] + 1 + slot;
    };

    Graph g(static_cast<std::size_t>(5 * n + passages));
    for (int i = 0; i < n; ++i) {
        const int hub = 5 * i;
        for (int s = 0; s < 4; ++s) {
            boost::add_edge(hub, hub + 1 + s, g);
            boost::add_edge(hub + 1 + s, hub + 1 + (s + 1) % 4, g);
        }
    }
    // knot edges, subdivided so parallel edges never arise
    for (int k = 0; k < passages; ++k) {
        const int mid = 5 * n + k;
        boost::add_edge(rim(k, false), mid, g);
        boost::add_edge(mid, rim((k + 1) % passages, true), g);
    }
    return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace oracle
