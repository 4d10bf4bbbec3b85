#pragma once

#include <functional>
#include <vector>

#include "rectsym/integer.hpp"
#include "rectsym/partition.hpp"

namespace rectsym {

/// Semistandard tableau in English notation: rows[0] is the longest row,
/// entries are 1-based. Rows weakly increase, columns strictly increase.
using Tableau = std::vector<std::vector<int>>;

/// Visits every SSYT of `shape` with entries in {1..max_entry}.
void for_each_ssyt(const Partition& shape, int max_entry, const std::function<void(const Tableau&)>& visit);

/// Visits every SSYT of `shape` whose entry i+1 occurs exactly content[i]
/// times.
void for_each_ssyt_with_content(const Partition& shape, const std::vector<int>& content,
                                const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// w(T): entry i counts the occurrences of i+1, padded to length n.
std::vector<int> tableau_weight(const Tableau& t, int n);

/// Row reading word: rows from the shortest (bottom) to the longest, each
/// read left to right.
std::vector<int> reading_word(const Tableau& t);

/// Number of SSYT of the given shape and content (any composition).
Integer kostka_number(const Partition& shape, const std::vector<int>& content);

/// Brute-force SSYT count by explicit enumeration.
Integer count_ssyt_brute(const Partition& shape, int max_entry);

}  // namespace rectsym
