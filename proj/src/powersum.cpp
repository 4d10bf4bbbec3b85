#include "rectsym/powersum.hpp"

#include <algorithm>
#include <sstream>

#include "rectsym/errors.hpp"

namespace rectsym {

namespace {

Integer factorial(int m) {
    Integer f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
               std::greater<int>());
    return Partition(std::move(parts));
}

Partition scale(const Partition& p, int k) {
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= k;
    return Partition(std::move(parts));
}

}  // namespace

Integer z_value(const Partition& rho) {
    Integer z = 1;
    const auto& parts = rho.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int m = static_cast<int>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
        z *= power * factorial(m);
        i = j;
    }
    return z;
}

PExpansion PExpansion::power_sum(const Partition& rho, const Rational& c) {
    PExpansion e(rho.weight());
    e.add(rho, c);
    return e;
}

Rational PExpansion::coefficient(const Partition& rho) const {
    auto it = entries_.find(rho);
    return it == entries_.end() ? Rational(0) : it->second;
}

void PExpansion::add(const Partition& rho, const Rational& c) {
    if (rho.weight() != weight_)
        throw WeightMismatch("cycle type " + rho.to_string() + " in an expansion of weight " +
                             std::to_string(weight_));
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

PExpansion& PExpansion::operator+=(const PExpansion& rhs) {
    if (rhs.empty()) return *this;
    if (empty()) weight_ = rhs.weight_;
    for (const auto& [rho, c] : rhs.entries_) add(rho, c);
    return *this;
}

PExpansion& PExpansion::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& entry : entries_) entry.second *= scalar;
    return *this;
}

PExpansion operator*(const PExpansion& a, const PExpansion& b) {
    PExpansion product(a.weight_ + b.weight_);
    for (const auto& [ra, ca] : a.entries_)
        for (const auto& [rb, cb] : b.entries_) product.add(merge(ra, rb), ca * cb);
    return product;
}

std::string PExpansion::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second != 1) os << it->second.get_str() << '*';
        os << "p" << it->first.to_string();
    }
    return os.str();
}

std::size_t CharacterTable::KeyHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ULL;
    return h;
}

Integer CharacterTable::value(const Partition& lam, const Partition& rho) {
    if (lam.weight() != rho.weight())
        throw WeightMismatch("chi^" + lam.to_string() + " at cycle type " + rho.to_string());
    const int len = lam.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (len - 1 - i);
    return recurse(beta, rho.parts(), 0);
}

// Beta-numbers strictly decreasing. Removing a border strip of size r moves
// one bead from b to b - r; the sign counts beads jumped over.
Integer CharacterTable::recurse(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t from) {
    if (from == rho.size()) return 1;

    // Key on the shape rather than the bead positions so that equal shapes
    // reached with different bead counts share an entry.
    std::vector<int> key;
    const int len = static_cast<int>(beta.size());
    for (int i = 0; i < len; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) key.push_back(part);
    }
    key.push_back(-1);
    for (std::size_t i = from; i < rho.size(); ++i) key.push_back(rho[i]);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = rho[from];
    Integer total = 0;
    std::vector<int> next;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++jumped;
        next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        Integer sub = recurse(next, rho, from + 1);
        if (jumped % 2) total -= sub;
        else total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Integer mn_character(const Partition& lam, const CycleType& rho) { return mn_character(lam, rho.partition()); }

Integer mn_character(const Partition& lam, const Partition& rho) {
    CharacterTable table;
    return table.value(lam, rho);
}

PExpansion schur_to_p(const Partition& lam) {
    CharacterTable table;
    return schur_to_p(lam, table);
}

PExpansion schur_to_p(const Partition& lam, CharacterTable& table) {
    PExpansion e(lam.weight());
    for (const auto& rho : partitions_of(lam.weight())) {
        const Integer chi = table.value(lam, rho);
        if (chi == 0) continue;
        Rational c(chi, z_value(rho));
        c.canonicalize();
        e.add(rho, c);
    }
    return e;
}

Integer schur_coefficient(const PExpansion& e, const Partition& lam, CharacterTable& table) {
    if (e.empty()) return 0;
    if (lam.weight() != e.weight()) return 0;
    Rational sum = 0;
    for (const auto& [rho, c] : e.entries()) sum += c * Rational(table.value(lam, rho));
    sum.canonicalize();
    if (sum.get_den() != 1)
        throw NonIntegralResult("coefficient of s" + lam.to_string() + " is " + sum.get_str());
    return sum.get_num();
}

std::map<Partition, Integer> p_to_schur_map(const PExpansion& e) {
    std::map<Partition, Integer> result;
    if (e.empty()) return result;
    CharacterTable table;
    for (const auto& lam : partitions_of(e.weight())) {
        Integer c = schur_coefficient(e, lam, table);
        if (c != 0) result.emplace(lam, std::move(c));
    }
    return result;
}

SchurExpansion p_to_schur(const PExpansion& e) {
    const int arity = std::max(1, e.weight());
    SchurExpansion result(arity);
    for (const auto& [lam, c] : p_to_schur_map(e)) result.add(SignedSequence::padded(lam, arity), c);
    return result;
}

PExpansion internal_product(const PExpansion& a, const PExpansion& b) {
    if (a.weight() != b.weight() && !a.empty() && !b.empty())
        throw WeightMismatch("internal product of weights " + std::to_string(a.weight()) + " and " +
                             std::to_string(b.weight()));
    PExpansion result(a.weight());
    for (const auto& [rho, c] : a.entries()) {
        const Rational other = b.coefficient(rho);
        if (other != 0) result.add(rho, Rational(z_value(rho)) * c * other);
    }
    return result;
}

PExpansion plethysm_p(const PExpansion& outer, const PExpansion& inner) {
    PExpansion result(outer.weight() * inner.weight());
    if (outer.empty() || inner.empty()) return result;
    std::map<int, PExpansion> adams;  // p_k[g]
    auto adams_of = [&](int k) -> const PExpansion& {
        auto it = adams.find(k);
        if (it != adams.end()) return it->second;
        PExpansion image(k * inner.weight());
        for (const auto& [sigma, c] : inner.entries()) image.add(scale(sigma, k), c);
        return adams.emplace(k, std::move(image)).first->second;
    };
    for (const auto& [rho, c] : outer.entries()) {
        PExpansion term = PExpansion::power_sum(Partition{}, c);
        for (int part : rho.parts()) term = term * adams_of(part);
        result += term;
    }
    return result;
}

RatPoly evaluate(const PExpansion& e, int n) {
    RatPoly result(n);
    std::map<int, RatPoly> sums;
    auto power_sum = [&](int k) -> const RatPoly& {
        auto it = sums.find(k);
        if (it != sums.end()) return it->second;
        RatPoly p(n);
        for (int i = 0; i < n; ++i) {
            Monomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(i)] = k;
            p.add_term(m, Rational(1));
        }
        return sums.emplace(k, std::move(p)).first->second;
    };
    for (const auto& [rho, c] : e.entries()) {
        RatPoly term = RatPoly::constant(n, c);
        for (int part : rho.parts()) term = term * power_sum(part);
        result += term;
    }
    return result;
}

}  // namespace rectsym
