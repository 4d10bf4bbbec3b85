#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace rectsym {

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Calls visit(perm, sign) for every permutation of {0..n-1}, in
/// lexicographic order.
template <class F>
void for_each_permutation(int n, F&& visit) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        visit(static_cast<const std::vector<int>&>(perm), permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace rectsym
