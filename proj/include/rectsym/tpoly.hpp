#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rectsym/integer.hpp"

namespace rectsym {

/// Univariate polynomial in t with exact integer coefficients, stored
/// ascending; the leading coefficient is nonzero unless the polynomial is 0.
class TPoly {
public:
    TPoly() = default;
    TPoly(int constant) : TPoly(Integer(constant)) {}  // NOLINT(google-explicit-constructor)
    TPoly(const Integer& constant);                     // NOLINT(google-explicit-constructor)
    explicit TPoly(std::vector<Integer> ascending);

    static TPoly t() { return TPoly(std::vector<Integer>{0, 1}); }
    static TPoly monomial(int degree, const Integer& coefficient = 1);
    /// 1 + t + ... + t^(r-1)
    static TPoly t_integer(int r);

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(int degree) const;
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Integer evaluate(const Integer& t) const;

    TPoly& operator+=(const TPoly& rhs);
    TPoly& operator-=(const TPoly& rhs);
    TPoly& operator*=(const TPoly& rhs);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator-(TPoly a);
    friend bool operator==(const TPoly&, const TPoly&) = default;

    /// Quotient when `divisor` divides exactly, otherwise nullopt.
    static std::optional<TPoly> exact_quotient(const TPoly& dividend, const TPoly& divisor);

    /// Ascending rendering, e.g. "t + t^2", "1 - t", "0".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

}  // namespace rectsym
