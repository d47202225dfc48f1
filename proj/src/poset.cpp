#include "nmil/poset.hpp"

namespace nmil {

std::vector<int> GradedPoset::interval(int a, int b) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (leq(a, x) && leq(x, b)) out.push_back(x);
    return out;
}

bool GradedPoset::is_graded() const {
    // every cover relation raises rank by exactly one
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < size(); ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < size(); ++c) {
                if (c == a || c == b) continue;
                if (leq(a, c) && leq(c, b)) {
                    cover = false;
                    break;
                }
            }
            if (cover && rank[b] != rank[a] + 1) return false;
        }
    }
    return true;
}

bool GradedPoset::eulerian_interval(int a, int b) const {
    if (!leq(a, b)) return true;
    if (rank[b] == rank[a]) return true;
    long sum = 0;
    for (int x : interval(a, b)) sum += (rank[x] % 2 == 0) ? 1 : -1;
    return sum == 0;
}

}  // namespace nmil
