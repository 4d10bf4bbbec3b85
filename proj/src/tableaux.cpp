#include "rectsym/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace rectsym {

namespace {

class TableauFiller {
public:
    TableauFiller(const Partition& shape, int max_entry, std::vector<int>* remaining,
                  const std::function<void(const Tableau&)>& visit)
        : shape_(shape), column_lengths_(conjugate(shape)), max_entry_(max_entry), remaining_(remaining), visit_(visit) {
        tableau_.resize(static_cast<std::size_t>(shape.length()));
        for (int i = 0; i < shape.length(); ++i)
            tableau_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(i)]), 0);
    }

    void run() { fill(0, 0); }

private:
    void fill(int row, int col) {
        if (row == shape_.length()) {
            visit_(tableau_);
            return;
        }
        if (col == shape_[static_cast<std::size_t>(row)]) {
            fill(row + 1, 0);
            return;
        }
        auto& cells = tableau_;
        int lo = 1;
        if (col > 0) lo = std::max(lo, cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
        if (row > 0) lo = std::max(lo, cells[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
        const int below = column_lengths_[static_cast<std::size_t>(col)] - 1 - row;
        const int hi = max_entry_ - below;
        for (int value = lo; value <= hi; ++value) {
            if (remaining_) {
                int& left = (*remaining_)[static_cast<std::size_t>(value - 1)];
                if (left == 0) continue;
                --left;
                cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
                fill(row, col + 1);
                ++left;
            } else {
                cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
                fill(row, col + 1);
            }
        }
    }

    const Partition& shape_;
    Partition column_lengths_;
    int max_entry_;
    std::vector<int>* remaining_;
    const std::function<void(const Tableau&)>& visit_;
    Tableau tableau_;
};

}  // namespace

void for_each_ssyt(const Partition& shape, int max_entry, const std::function<void(const Tableau&)>& visit) {
    if (shape.length() > max_entry) return;
    TableauFiller(shape, max_entry, nullptr, visit).run();
}

void for_each_ssyt_with_content(const Partition& shape, const std::vector<int>& content,
                                const std::function<void(const Tableau&)>& visit) {
    if (std::accumulate(content.begin(), content.end(), 0) != shape.weight()) return;
    if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) return;
    const int max_entry = static_cast<int>(content.size());
    if (shape.length() > max_entry) return;
    std::vector<int> remaining = content;
    TableauFiller(shape, max_entry, &remaining, visit).run();
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
    std::vector<Tableau> result;
    for_each_ssyt(shape, max_entry, [&](const Tableau& t) { result.push_back(t); });
    return result;
}

std::vector<int> tableau_weight(const Tableau& t, int n) {
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    for (const auto& row : t)
        for (int entry : row) ++weight[static_cast<std::size_t>(entry - 1)];
    return weight;
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    for (auto row = t.rbegin(); row != t.rend(); ++row) word.insert(word.end(), row->begin(), row->end());
    return word;
}

Integer kostka_number(const Partition& shape, const std::vector<int>& content) {
    Integer count = 0;
    for_each_ssyt_with_content(shape, content, [&](const Tableau&) { ++count; });
    return count;
}

Integer count_ssyt_brute(const Partition& shape, int max_entry) {
    Integer count = 0;
    for_each_ssyt(shape, max_entry, [&](const Tableau&) { ++count; });
    return count;
}

}  // namespace rectsym
