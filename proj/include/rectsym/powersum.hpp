#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "rectsym/laurent.hpp"
#include "rectsym/partition.hpp"
#include "rectsym/schur.hpp"

namespace rectsym {

/// z_rho = prod_i i^{m_i} m_i!
Integer z_value(const Partition& rho);

class CycleType {
public:
    CycleType() : z_(1) {}
    explicit CycleType(Partition rho) : rho_(std::move(rho)), z_(z_value(rho_)) {}

    const Partition& partition() const noexcept { return rho_; }
    int weight() const noexcept { return rho_.weight(); }
    const Integer& z() const noexcept { return z_; }

private:
    Partition rho_;
    Integer z_;
};

/// Expansion in the power-sum basis of a homogeneous symmetric function of
/// weight N. Keys are cycle types as partitions.
class PExpansion {
public:
    explicit PExpansion(int weight = 0) : weight_(weight) {}
    static PExpansion power_sum(const Partition& rho, const Rational& c = 1);

    int weight() const noexcept { return weight_; }
    const std::map<Partition, Rational>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    Rational coefficient(const Partition& rho) const;

    void add(const Partition& rho, const Rational& c);

    PExpansion& operator+=(const PExpansion& rhs);
    PExpansion& operator*=(const Rational& scalar);
    friend PExpansion operator+(PExpansion a, const PExpansion& b) { return a += b; }
    friend PExpansion operator*(PExpansion a, const Rational& c) { return a *= c; }
    /// Ordinary product: p_rho p_sigma = p_{rho union sigma}.
    friend PExpansion operator*(const PExpansion& a, const PExpansion& b);
    friend bool operator==(const PExpansion&, const PExpansion&) = default;

    std::string to_string() const;

private:
    int weight_;
    std::map<Partition, Rational> entries_;
};

/// Memoized Murnaghan-Nakayama values. Not thread-safe; meant to live for a
/// single computation.
class CharacterTable {
public:
    /// chi^lam(rho). Throws WeightMismatch.
    Integer value(const Partition& lam, const Partition& rho);

private:
    Integer recurse(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t from);

    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };
    std::unordered_map<std::vector<int>, Integer, KeyHash> memo_;
};

Integer mn_character(const Partition& lam, const CycleType& rho);
Integer mn_character(const Partition& lam, const Partition& rho);

PExpansion schur_to_p(const Partition& lam);
PExpansion schur_to_p(const Partition& lam, CharacterTable& table);

/// Coefficient of s_lam in e: sum over rho of chi^lam(rho) e[rho]. Throws
/// NonIntegralResult.
Integer schur_coefficient(const PExpansion& e, const Partition& lam, CharacterTable& table);

/// Schur expansion at arity max(1, weight), so that every partition of the
/// weight is a valid key. Throws NonIntegralResult.
SchurExpansion p_to_schur(const PExpansion& e);
/// Same, as a plain map from partitions to coefficients.
std::map<Partition, Integer> p_to_schur_map(const PExpansion& e);

/// Kronecker product: p_rho * p_sigma = delta z_rho p_rho. Throws
/// WeightMismatch.
PExpansion internal_product(const PExpansion& a, const PExpansion& b);

/// Plethysm f[g] with p_k[p_m] = p_{km}, extended multiplicatively.
PExpansion plethysm_p(const PExpansion& outer, const PExpansion& inner);

/// Specialization p_k -> x1^k + ... + xn^k.
RatPoly evaluate(const PExpansion& e, int n);

}  // namespace rectsym
