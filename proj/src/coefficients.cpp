#include "rectsym/coefficients.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "rectsym/errors.hpp"
#include "rectsym/hall_littlewood.hpp"
#include "rectsym/permutations.hpp"
#include "rectsym/schur.hpp"
#include "rectsym/tableaux.hpp"

namespace rectsym {

std::string family_name(Family f) {
    switch (f) {
        case Family::LR: return "lr";
        case Family::Kronecker: return "kronecker";
        case Family::Plethysm: return "plethysm";
        case Family::KostkaFoulkes: return "kostka-foulkes";
    }
    return "";
}

Family parse_family(std::string_view text) {
    for (Family f : {Family::LR, Family::Kronecker, Family::Plethysm, Family::KostkaFoulkes})
        if (family_name(f) == text) return f;
    throw ParseError("unknown family '" + std::string(text) + "'");
}

int family_arity(Family f) { return f == Family::KostkaFoulkes ? 2 : 3; }

TPoly evaluate(const CoefficientQuery& q) {
    if (static_cast<int>(q.indices.size()) != family_arity(q.family))
        throw ArityMismatch(family_name(q.family) + " takes " + std::to_string(family_arity(q.family)) +
                            " partitions");
    const auto& i = q.indices;
    switch (q.family) {
        case Family::LR: return lr_coefficient(i[0], i[1], i[2], q.method);
        case Family::Kronecker:
            return q.method == Method::Main ? kronecker_coefficient(i[0], i[1], i[2])
                                            : kronecker_oracle(i[0], i[1], i[2]);
        case Family::Plethysm: return plethysm_coefficient(i[0], i[1], i[2], q.method);
        case Family::KostkaFoulkes: return kostka_foulkes_coefficient(i[0], i[1], q.method);
    }
    return TPoly();
}

Integer lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu, Method method) {
    if (lam.weight() + mu.weight() != nu.weight()) return 0;
    if (method == Method::Oracle) return lr_oracle(lam, mu, nu);
    const int n = std::max({lam.length(), mu.length(), nu.length()});
    const SchurExpansion e = expand_in_schur(schur_poly(lam, n) * schur_poly(mu, n), n);
    return e.coefficient(nu);
}

namespace {

// Fills nu/lam in reading order (rows top to bottom, each right to left),
// keeping the word a lattice word and the filling semistandard.
class LRFiller {
public:
    LRFiller(const Partition& lam, const Partition& mu, const Partition& nu) : lam_(lam), mu_(mu), nu_(nu) {
        rows_.resize(static_cast<std::size_t>(nu.length()));
        for (int r = 0; r < nu.length(); ++r)
            rows_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
        used_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
    }

    Integer count() {
        if (!contains(lam_, nu_)) return 0;
        total_ = 0;
        fill(0, nu_[0] - 1);
        return total_;
    }

private:
    void fill(int row, int col) {
        if (row >= nu_.length()) {
            ++total_;
            return;
        }
        const int start = lam_[static_cast<std::size_t>(row)];
        if (col < start) {
            const int next = row + 1;
            fill(next, next < nu_.length() ? nu_[static_cast<std::size_t>(next)] - 1 : 0);
            return;
        }
        auto& cells = rows_[static_cast<std::size_t>(row)];
        int hi = mu_.length();
        if (col + 1 < static_cast<int>(cells.size())) hi = std::min(hi, cells[static_cast<std::size_t>(col + 1)]);
        int lo = 1;
        if (row > 0 && col < lam_[static_cast<std::size_t>(row - 1)]) lo = 1;
        else if (row > 0) lo = rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1;
        for (int v = lo; v <= hi; ++v) {
            auto& count = used_[static_cast<std::size_t>(v)];
            if (count >= mu_[static_cast<std::size_t>(v - 1)]) continue;
            if (v > 1 && count + 1 > used_[static_cast<std::size_t>(v - 1)]) continue;
            ++count;
            cells[static_cast<std::size_t>(col)] = v;
            fill(row, col - 1);
            --count;
        }
        cells[static_cast<std::size_t>(col)] = 0;
    }

    const Partition& lam_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> used_;
    Integer total_;
};

}  // namespace

Integer lr_oracle(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.weight() + mu.weight() != nu.weight()) return 0;
    if (nu.empty()) return 1;
    return LRFiller(lam, mu, nu).count();
}

Integer kronecker_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    CharacterTable table;
    return kronecker_coefficient(lam, mu, nu, table);
}

Integer kronecker_coefficient(const Partition& lam, const Partition& mu, const Partition& nu, CharacterTable& table) {
    if (lam.weight() != mu.weight() || mu.weight() != nu.weight()) return 0;
    const PExpansion product = internal_product(schur_to_p(mu, table), schur_to_p(nu, table));
    if (product.empty()) return 0;
    return schur_coefficient(product, lam, table);
}

const KroneckerEngine::Classes& KroneckerEngine::classes(int weight) {
    auto it = classes_.find(weight);
    if (it != classes_.end()) return it->second;
    Classes c;
    c.order = 1;
    for (int i = 2; i <= weight; ++i) c.order *= i;
    c.types = partitions_of(weight);
    for (const auto& rho : c.types) c.sizes.push_back(c.order / z_value(rho));
    return classes_.emplace(weight, std::move(c)).first->second;
}

const std::vector<Integer>& KroneckerEngine::row(const Partition& lam) {
    auto it = rows_.find(lam);
    if (it != rows_.end()) return it->second;
    std::vector<Integer> values;
    for (const auto& rho : classes(lam.weight()).types) values.push_back(table_.value(lam, rho));
    return rows_.emplace(lam, std::move(values)).first->second;
}

Integer KroneckerEngine::coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.weight() != mu.weight() || mu.weight() != nu.weight()) return 0;
    const Classes& c = classes(lam.weight());
    const auto& a = row(lam);
    const auto& b = row(mu);
    const auto& d = row(nu);
    Integer sum = 0;
    for (std::size_t i = 0; i < c.types.size(); ++i) sum += c.sizes[i] * a[i] * b[i] * d[i];
    Integer g;
    if (!mpz_divisible_p(sum.get_mpz_t(), c.order.get_mpz_t()))
        throw NonIntegralResult("Kronecker character sum is not divisible by N!");
    mpz_divexact(g.get_mpz_t(), sum.get_mpz_t(), c.order.get_mpz_t());
    return g;
}

namespace {

// K_{nu,alpha} by peeling horizontal strips for the last content entry.
class KostkaCache {
public:
    Integer get(const std::vector<int>& shape, std::vector<int> content) {
        content.erase(std::remove(content.begin(), content.end(), 0), content.end());
        std::sort(content.begin(), content.end(), std::greater<int>());
        return recurse(shape, content);
    }

private:
    Integer recurse(const std::vector<int>& shape, const std::vector<int>& content) {
        int weight = 0;
        for (int x : shape) weight += x;
        int total = 0;
        for (int x : content) total += x;
        if (weight != total) return 0;
        if (content.empty()) return 1;
        if (shape.size() > content.size()) return 0;
        auto key = std::make_pair(shape, content);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<int> rest(content.begin(), content.end() - 1);
        const int strip = content.back();
        Integer result = 0;
        std::vector<int> inner = shape;
        // Remove a horizontal strip of size `strip`: row i may lose up to
        // shape[i] - shape[i+1] cells.
        auto rec = [&](auto&& self, std::size_t row, int left) -> void {
            if (row == shape.size()) {
                if (left == 0) {
                    std::vector<int> trimmed = inner;
                    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                    result += recurse(trimmed, rest);
                }
                return;
            }
            const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
            const int room = std::min(left, shape[row] - below);
            for (int take = 0; take <= room; ++take) {
                inner[row] = shape[row] - take;
                self(self, row + 1, left - take);
            }
            inner[row] = shape[row];
        };
        rec(rec, 0, strip);
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo_;
};

// Every l x m nonnegative matrix with the given row and column sums,
// visited as a flat list of entries.
template <class F>
void for_each_contingency_table(const std::vector<int>& rows, const std::vector<int>& cols, F&& visit) {
    const std::size_t l = rows.size(), m = cols.size();
    std::vector<int> entries(l * m, 0);
    std::vector<int> col_left = cols;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j, int row_left) -> void {
        if (i == l) {
            for (int c : col_left)
                if (c != 0) return;
            visit(static_cast<const std::vector<int>&>(entries));
            return;
        }
        if (j + 1 == m) {
            if (row_left > col_left[j]) return;
            entries[i * m + j] = row_left;
            col_left[j] -= row_left;
            self(self, i + 1, 0, i + 1 < l ? rows[i + 1] : 0);
            col_left[j] += row_left;
            return;
        }
        for (int v = 0; v <= std::min(row_left, col_left[j]); ++v) {
            entries[i * m + j] = v;
            col_left[j] -= v;
            self(self, i, j + 1, row_left - v);
            col_left[j] += v;
        }
    };
    if (l == 0 || m == 0) {
        bool all_zero = true;
        for (int r : rows) all_zero = all_zero && r == 0;
        for (int c : cols) all_zero = all_zero && c == 0;
        if (all_zero) visit(entries);
        return;
    }
    rec(rec, 0, 0, rows[0]);
}

}  // namespace

// g = [x^{lam+delta} y^{mu+delta}] a_delta(X) a_delta(Y) s_nu[XY]; each
// monomial coefficient of s_nu[XY] is a sum of Kostka numbers over
// contingency tables.
Integer kronecker_oracle(const Partition& lam, const Partition& mu, const Partition& nu, int l, int m) {
    if (l < lam.length()) throw ArityTooSmall("l = " + std::to_string(l) + " < length of " + lam.to_string());
    if (m < mu.length()) throw ArityTooSmall("m = " + std::to_string(m) + " < length of " + mu.to_string());
    if (lam.weight() != mu.weight() || mu.weight() != nu.weight()) return 0;
    if (nu.length() > l * m) return 0;

    KostkaCache kostka;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> monomial_memo;
    auto monomial_coefficient = [&](const std::vector<int>& a, const std::vector<int>& b) -> Integer {
        auto key = std::make_pair(a, b);
        if (auto it = monomial_memo.find(key); it != monomial_memo.end()) return it->second;
        Integer sum = 0;
        for_each_contingency_table(a, b, [&](const std::vector<int>& entries) {
            sum += kostka.get(nu.parts(), entries);
        });
        monomial_memo.emplace(std::move(key), sum);
        return sum;
    };

    std::vector<int> a(static_cast<std::size_t>(l)), b(static_cast<std::size_t>(m));
    Integer total = 0;
    for_each_permutation(l, [&](const std::vector<int>& w, int sw) {
        for (int i = 0; i < l; ++i) {
            const int delta_i = l - 1 - i;
            a[static_cast<std::size_t>(i)] =
                lam[static_cast<std::size_t>(i)] + delta_i - (l - 1 - w[static_cast<std::size_t>(i)]);
        }
        for (int x : a)
            if (x < 0) return;
        for_each_permutation(m, [&](const std::vector<int>& v, int sv) {
            for (int j = 0; j < m; ++j) {
                const int delta_j = m - 1 - j;
                b[static_cast<std::size_t>(j)] =
                    mu[static_cast<std::size_t>(j)] + delta_j - (m - 1 - v[static_cast<std::size_t>(j)]);
            }
            for (int y : b)
                if (y < 0) return;
            const Integer c = monomial_coefficient(a, b);
            if (sw * sv > 0) total += c;
            else total -= c;
        });
    });
    return total;
}

// g is symmetric in its arguments, so the longest partition goes in the
// s_nu slot and the two alphabets stay as short as possible.
Integer kronecker_oracle(const Partition& lam, const Partition& mu, const Partition& nu) {
    std::array<const Partition*, 3> order{&lam, &mu, &nu};
    std::stable_sort(order.begin(), order.end(),
                     [](const Partition* a, const Partition* b) { return a->length() < b->length(); });
    const Partition &a = *order[0], &b = *order[1], &c = *order[2];
    return kronecker_oracle(a, b, c, std::max(1, a.length()), std::max(1, b.length()));
}

Integer plethysm_coefficient(const Partition& lam, const Partition& mu, const Partition& nu, Method method) {
    if (nu.weight() != lam.weight() * mu.weight()) return 0;
    if (method == Method::Oracle) return plethysm_oracle(lam, mu, nu);
    CharacterTable table;
    const PExpansion f = plethysm_p(schur_to_p(lam, table), schur_to_p(mu, table));
    if (f.empty()) return 0;
    return schur_coefficient(f, nu, table);
}

IntPoly plethysm_polynomial(const Partition& lam, const Partition& mu, int n) {
    std::vector<Monomial> letters;
    for_each_ssyt(mu, n, [&](const Tableau& t) { letters.push_back(tableau_weight(t, n)); });
    const int r = static_cast<int>(letters.size());
    IntPoly result(n);
    Monomial m(static_cast<std::size_t>(n));
    for_each_ssyt(lam, r, [&](const Tableau& t) {
        std::fill(m.begin(), m.end(), 0);
        for (const auto& row : t)
            for (int entry : row) {
                const Monomial& x = letters[static_cast<std::size_t>(entry - 1)];
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += x[i];
            }
        result.add_term(m, Integer(1));
    });
    return result;
}

Integer plethysm_oracle(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lam.weight() * mu.weight()) return 0;
    const int n = nu.length();
    return expand_in_schur(plethysm_polynomial(lam, mu, n), n).coefficient(nu);
}

TPoly kostka_foulkes_coefficient(const Partition& lam, const Partition& mu, Method method) {
    return method == Method::Main ? kostka_foulkes(lam, mu) : kostka_foulkes_charge(lam, mu);
}

}  // namespace rectsym
