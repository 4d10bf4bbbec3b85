#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rectsym/integer.hpp"

namespace rectsym {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros stripped on construction. Equality therefore ignores
/// padding.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero past the stored length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Multiplicity of the part value `value` (value >= 1).
    int multiplicity(int value) const noexcept;

    /// Display form, e.g. "(3,1,1)" and "()".
    std::string to_string() const;
    /// Command-line form, e.g. "3,1,1"; the empty partition is "0".
    std::string to_text() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Weakly decreasing integer sequence of a declared length n; entries may be
/// negative. Equality requires equal length.
class SignedSequence {
public:
    SignedSequence() = default;
    SignedSequence(std::initializer_list<int> entries);
    explicit SignedSequence(std::vector<int> entries);

    /// Zero-pads `p` to length n.
    static SignedSequence padded(const Partition& p, int n);

    const std::vector<int>& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    int sum() const noexcept;

    std::string to_string() const;

    friend bool operator==(const SignedSequence&, const SignedSequence&) noexcept = default;
    friend std::strong_ordering operator<=>(const SignedSequence& a, const SignedSequence& b) noexcept {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const SignedSequence& s);

/// The rectangle (k^n): n rows of width k.
struct BoxSpec {
    int k = 0;
    int n = 0;
};

Partition conjugate(const Partition& p);

/// (k - p_n, ..., k - p_1) after zero-padding p to length box.n.
SignedSequence complement(const Partition& p, BoxSpec box);
/// The same operation on an arbitrary signed sequence of length n.
SignedSequence complement(const SignedSequence& s, int k);

/// Partition view of s when every entry is nonnegative.
std::optional<Partition> to_partition(const SignedSequence& s);
inline bool is_partition(const SignedSequence& s) { return to_partition(s).has_value(); }

/// p zero-padded to length n with k added to every entry.
SignedSequence translate(const Partition& p, int k, int n);
SignedSequence translate(const SignedSequence& s, int k);

/// p + (k^n) where p may be longer than n: adds k to the first n parts and
/// returns the result when it is still a partition.
std::optional<Partition> add_rectangle(const Partition& p, int k, int n);

bool contains(const Partition& inner, BoxSpec box) noexcept;
bool contains(const Partition& inner, const Partition& outer) noexcept;

/// Every partition with weight <= max_weight, length <= max_length and
/// largest part <= max_part, graded by weight and reverse-lexicographic
/// within a weight.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length, int max_part);
void for_each_partition(int max_weight, int max_length, int max_part,
                        const std::function<void(const Partition&)>& visit);

/// Partitions of exactly `weight`, reverse-lexicographic.
std::vector<Partition> partitions_of(int weight);
std::vector<Partition> partitions_of(int weight, int max_length, int max_part);

/// Number of semistandard tableaux of shape mu with entries in {1..n}, by
/// the hook-content product.
Integer count_ssyt(const Partition& mu, int n);

/// Parses "3,1,1"; "0" and "" give the empty partition.
Partition parse_partition(std::string_view text);

}  // namespace rectsym

template <>
struct std::hash<rectsym::Partition> {
    std::size_t operator()(const rectsym::Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
        return h;
    }
};
