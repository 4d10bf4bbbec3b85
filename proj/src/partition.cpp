#include "rectsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "rectsym/errors.hpp"

namespace rectsym {

namespace {

std::string join(const std::vector<int>& values, const char* open, const char* close) {
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    os << close;
    return os.str();
}

bool weakly_decreasing(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing(parts_))
        throw InvalidPartition(join(parts_, "(", ")") + " is not weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0)
        throw InvalidPartition(join(parts_, "(", ")") + " has negative parts");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const { return join(parts_, "(", ")"); }

std::string Partition::to_text() const { return parts_.empty() ? "0" : join(parts_, "", ""); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

SignedSequence::SignedSequence(std::initializer_list<int> entries)
    : SignedSequence(std::vector<int>(entries)) {}

SignedSequence::SignedSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!weakly_decreasing(entries_))
        throw InvalidPartition(join(entries_, "(", ")") + " is not weakly decreasing");
}

SignedSequence SignedSequence::padded(const Partition& p, int n) {
    if (p.length() > n)
        throw LengthExceedsBox(p.to_string() + " has more than " + std::to_string(n) + " parts");
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    std::copy(p.parts().begin(), p.parts().end(), entries.begin());
    return SignedSequence(std::move(entries));
}

int SignedSequence::sum() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string SignedSequence::to_string() const { return join(entries_, "(", ")"); }

std::ostream& operator<<(std::ostream& os, const SignedSequence& s) { return os << s.to_string(); }

Partition conjugate(const Partition& p) {
    std::vector<int> result(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
    return Partition(std::move(result));
}

SignedSequence complement(const SignedSequence& s, int k) {
    std::vector<int> result(s.entries().rbegin(), s.entries().rend());
    for (int& entry : result) entry = k - entry;
    return SignedSequence(std::move(result));
}

SignedSequence complement(const Partition& p, BoxSpec box) {
    return complement(SignedSequence::padded(p, box.n), box.k);
}

std::optional<Partition> to_partition(const SignedSequence& s) {
    if (!s.entries().empty() && s.entries().back() < 0) return std::nullopt;
    return Partition(s.entries());
}

SignedSequence translate(const SignedSequence& s, int k) {
    std::vector<int> result = s.entries();
    for (int& entry : result) entry += k;
    return SignedSequence(std::move(result));
}

SignedSequence translate(const Partition& p, int k, int n) {
    return translate(SignedSequence::padded(p, n), k);
}

std::optional<Partition> add_rectangle(const Partition& p, int k, int n) {
    std::vector<int> parts(static_cast<std::size_t>(std::max(n, p.length())), 0);
    std::copy(p.parts().begin(), p.parts().end(), parts.begin());
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] += k;
    if (!weakly_decreasing(parts) || (!parts.empty() && parts.back() < 0)) return std::nullopt;
    return Partition(std::move(parts));
}

bool contains(const Partition& inner, BoxSpec box) noexcept {
    return inner.length() <= box.n && inner.largest() <= box.k;
}

bool contains(const Partition& inner, const Partition& outer) noexcept {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
    return true;
}

namespace {

void partitions_rec(int remaining, int max_length, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    if (max_length == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the rest must fit in max_length - 1 parts of size <= part
        if (static_cast<long>(part) * max_length < remaining) break;
        prefix.push_back(part);
        partitions_rec(remaining - part, max_length - 1, part, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(int max_weight, int max_length, int max_part,
                        const std::function<void(const Partition&)>& visit) {
    std::vector<int> prefix;
    for (int w = 0; w <= max_weight; ++w) partitions_rec(w, max_length, max_part, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int max_weight, int max_length, int max_part) {
    std::vector<Partition> result;
    for_each_partition(max_weight, max_length, max_part,
                       [&](const Partition& p) { result.push_back(p); });
    return result;
}

std::vector<Partition> partitions_of(int weight, int max_length, int max_part) {
    std::vector<Partition> result;
    if (weight < 0) return result;
    std::vector<int> prefix;
    partitions_rec(weight, max_length, max_part, prefix, [&](const Partition& p) { result.push_back(p); });
    return result;
}

std::vector<Partition> partitions_of(int weight) { return partitions_of(weight, weight, weight); }

Integer count_ssyt(const Partition& mu, int n) {
    const Partition mu_conj = conjugate(mu);
    Integer numerator = 1;
    Integer hooks = 1;
    for (int i = 0; i < mu.length(); ++i) {
        for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) {
            numerator *= n + j - i;
            hooks *= (mu[static_cast<std::size_t>(i)] - j - 1) + (mu_conj[static_cast<std::size_t>(j)] - i - 1) + 1;
        }
    }
    if (numerator == 0) return 0;
    if (!mpz_divisible_p(numerator.get_mpz_t(), hooks.get_mpz_t()))
        throw InexactDivision("hook-content product for " + mu.to_string());
    Integer result = numerator / hooks;
    return result;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return Partition();
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = trim(text.substr(0, comma));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
            throw ParseError("malformed partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    try {
        return Partition(std::move(parts));
    } catch (const InvalidPartition& e) {
        throw ParseError(e.what());
    }
}

}  // namespace rectsym
