#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rectsym/errors.hpp"
#include "rectsym/integer.hpp"
#include "rectsym/tpoly.hpp"

namespace rectsym {

/// Exponent vector of a Laurent monomial; negative exponents allowed.
using Monomial = std::vector<int>;

/// Coefficient-ring operations needed by LaurentPoly. Every ring used here
/// is an integral domain.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static bool is_zero(const Integer& a) { return a == 0; }
    static std::optional<Integer> exact_quotient(const Integer& a, const Integer& b) {
        if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
        Integer q = a / b;
        return q;
    }
    static bool is_plain(const Integer&) { return true; }
    static std::string render(const Integer& a) { return a.get_str(); }
};

template <>
struct RingTraits<Rational> {
    static bool is_zero(const Rational& a) { return a == 0; }
    static std::optional<Rational> exact_quotient(const Rational& a, const Rational& b) {
        if (b == 0) return std::nullopt;
        Rational q = a / b;
        return q;
    }
    static bool is_plain(const Rational& a) { return a.get_den() == 1; }
    static std::string render(const Rational& a) { return a.get_str(); }
};

template <>
struct RingTraits<TPoly> {
    static bool is_zero(const TPoly& a) { return a.is_zero(); }
    static std::optional<TPoly> exact_quotient(const TPoly& a, const TPoly& b) { return TPoly::exact_quotient(a, b); }
    static bool is_plain(const TPoly& a) { return a.is_constant(); }
    static std::string render(const TPoly& a) { return a.to_string(); }
};

/// Sparse Laurent polynomial in a fixed number of variables x1..xn with
/// exact coefficients in R. No zero coefficient is ever stored; the term map
/// is ordered lexicographically by exponent vector.
template <class R>
class LaurentPoly {
public:
    using Traits = RingTraits<R>;
    using TermMap = std::map<Monomial, R>;

    explicit LaurentPoly(int arity = 0) : arity_(arity) {}

    static LaurentPoly constant(int arity, const R& c) {
        LaurentPoly p(arity);
        p.add_term(Monomial(static_cast<std::size_t>(arity), 0), c);
        return p;
    }
    static LaurentPoly monomial(Monomial exponents, const R& c = R(1)) {
        LaurentPoly p(static_cast<int>(exponents.size()));
        p.add_term(exponents, c);
        return p;
    }
    static LaurentPoly variable(int arity, int index) {
        Monomial m(static_cast<std::size_t>(arity), 0);
        m.at(static_cast<std::size_t>(index)) = 1;
        return monomial(std::move(m));
    }

    int arity() const noexcept { return arity_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    R coefficient_of(const Monomial& m) const {
        check_arity(m);
        auto it = terms_.find(m);
        return it == terms_.end() ? R(0) : it->second;
    }

    Monomial leading_monomial_lex() const {
        if (terms_.empty()) throw ZeroPolynomial("leading monomial of the zero polynomial");
        return terms_.rbegin()->first;
    }

    /// Adds c * x^m in place.
    void add_term(const Monomial& m, const R& c) {
        check_arity(m);
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }
    void sub_term(const Monomial& m, const R& c) {
        check_arity(m);
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        check_arity(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& rhs) {
        check_arity(rhs);
        for (const auto& [m, c] : rhs.terms_) sub_term(m, c);
        return *this;
    }
    /// *this -= scalar * rhs
    void sub_scaled(const LaurentPoly& rhs, const R& scalar) {
        check_arity(rhs);
        for (const auto& [m, c] : rhs.terms_) sub_term(m, c * scalar);
    }

    LaurentPoly& operator*=(const R& scalar) {
        if (Traits::is_zero(scalar)) {
            terms_.clear();
            return *this;
        }
        for (auto& entry : terms_) entry.second *= scalar;
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& entry : a.terms_) entry.second = -entry.second;
        return a;
    }
    friend LaurentPoly operator*(LaurentPoly a, const R& scalar) { return a *= scalar; }
    friend LaurentPoly operator*(const R& scalar, LaurentPoly a) { return a *= scalar; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_arity(b);
        LaurentPoly product(a.arity_);
        Monomial m(static_cast<std::size_t>(a.arity_));
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                product.add_term(m, ca * cb);
            }
        }
        return product;
    }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Multiplies by the monomial x^shift.
    LaurentPoly shifted(const Monomial& shift) const {
        check_arity(shift);
        LaurentPoly result(arity_);
        for (const auto& [m, c] : terms_) {
            Monomial moved = m;
            for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
            result.terms_.emplace_hint(result.terms_.end(), std::move(moved), c);
        }
        return result;
    }

    /// Image under x_i -> x_{perm[i]}.
    LaurentPoly permuted(const std::vector<int>& perm) const {
        LaurentPoly result(arity_);
        Monomial moved(static_cast<std::size_t>(arity_));
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) moved[static_cast<std::size_t>(perm[i])] = m[i];
            result.terms_.emplace(moved, c);
        }
        return result;
    }

    /// Symmetric under every permutation of the variables; the adjacent
    /// transpositions generate S_n, so they are the only ones checked.
    bool is_symmetric() const {
        std::vector<int> perm(static_cast<std::size_t>(arity_));
        for (int i = 0; i < arity_; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i + 1 < arity_; ++i) {
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
            if (permuted(perm) != *this) return false;
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        }
        return true;
    }

    template <class S, class F>
    LaurentPoly<S> map_coefficients(F&& f) const {
        LaurentPoly<S> result(arity_);
        for (const auto& [m, c] : terms_) result.add_term(m, f(c));
        return result;
    }

    /// Terms in lex-descending order, e.g. "x1^2 + x1*x2 + x2^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string monomial_text = render_monomial(m);
            std::string coeff;
            bool negative = false;
            if (Traits::is_plain(c)) {
                coeff = Traits::render(c);
                if (!coeff.empty() && coeff.front() == '-') {
                    negative = true;
                    coeff.erase(coeff.begin());
                }
                if (coeff == "1" && !monomial_text.empty()) coeff.clear();
            } else {
                coeff = "(" + Traits::render(c) + ")";
            }
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            os << coeff;
            if (!coeff.empty() && !monomial_text.empty()) os << '*';
            os << monomial_text;
        }
        return os.str();
    }

private:
    void check_arity(const Monomial& m) const {
        if (static_cast<int>(m.size()) != arity_)
            throw ArityMismatch("monomial of arity " + std::to_string(m.size()) + " in a polynomial of arity " +
                                std::to_string(arity_));
    }
    void check_arity(const LaurentPoly& other) const {
        if (other.arity_ != arity_)
            throw ArityMismatch("arities " + std::to_string(arity_) + " and " + std::to_string(other.arity_));
    }
    static std::string render_monomial(const Monomial& m) {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) os << '*';
            first = false;
            os << 'x' << (i + 1);
            if (m[i] != 1) os << '^' << m[i];
        }
        return os.str();
    }

    int arity_ = 0;
    TermMap terms_;
};

template <class R>
LaurentPoly<R> invert_variables(const LaurentPoly<R>& p) {
    LaurentPoly<R> result(p.arity());
    for (const auto& [m, c] : p.terms()) {
        Monomial negated = m;
        for (int& e : negated) e = -e;
        result.add_term(negated, c);
    }
    return result;
}

/// p(x1^n, ..., xk^n)
template <class R>
LaurentPoly<R> frobenius_substitute(const LaurentPoly<R>& p, int n) {
    LaurentPoly<R> result(p.arity());
    for (const auto& [m, c] : p.terms()) {
        Monomial scaled = m;
        for (int& e : scaled) e *= n;
        result.add_term(scaled, c);
    }
    return result;
}

/// Exact quotient num / den in the Laurent ring. Throws InexactDivision when
/// den does not divide num.
///
/// Long division on lex-leading terms. In the Laurent ring lex order is not
/// a well-order, so every quotient exponent is confined to the box allowed
/// by per-variable degree additivity; needing a term outside that box means
/// the division is not exact.
template <class R>
LaurentPoly<R> exact_divide(const LaurentPoly<R>& num, const LaurentPoly<R>& den) {
    using Traits = RingTraits<R>;
    if (num.arity() != den.arity()) throw ArityMismatch("exact_divide");
    if (den.is_zero()) throw InexactDivision("division by the zero polynomial");
    const int n = num.arity();
    LaurentPoly<R> quotient(n);
    if (num.is_zero()) return quotient;

    auto bounds = [n](const LaurentPoly<R>& p) {
        Monomial lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                lo[i] = first ? m[i] : std::min(lo[i], m[i]);
                hi[i] = first ? m[i] : std::max(hi[i], m[i]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    const auto [num_lo, num_hi] = bounds(num);
    const auto [den_lo, den_hi] = bounds(den);
    Monomial q_lo(static_cast<std::size_t>(n)), q_hi(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < q_lo.size(); ++i) {
        q_lo[i] = num_lo[i] - den_lo[i];
        q_hi[i] = num_hi[i] - den_hi[i];
        if (q_lo[i] > q_hi[i]) throw InexactDivision("degree ranges are incompatible");
    }

    const auto& [den_lead, den_coeff] = *den.terms().rbegin();
    LaurentPoly<R> remainder = num;
    Monomial q_monomial(static_cast<std::size_t>(n));
    Monomial product(static_cast<std::size_t>(n));
    while (!remainder.is_zero()) {
        const auto& [r_lead, r_coeff] = *remainder.terms().rbegin();
        for (std::size_t i = 0; i < q_monomial.size(); ++i) {
            q_monomial[i] = r_lead[i] - den_lead[i];
            if (q_monomial[i] < q_lo[i] || q_monomial[i] > q_hi[i])
                throw InexactDivision("nonzero remainder");
        }
        const std::optional<R> q_coeff = Traits::exact_quotient(r_coeff, den_coeff);
        if (!q_coeff) throw InexactDivision("leading coefficient does not divide");
        quotient.add_term(q_monomial, *q_coeff);
        for (const auto& [m, c] : den.terms()) {
            for (std::size_t i = 0; i < product.size(); ++i) product[i] = m[i] + q_monomial[i];
            remainder.sub_term(product, c * *q_coeff);
        }
    }
    return quotient;
}

using IntPoly = LaurentPoly<Integer>;
using TPolyPoly = LaurentPoly<TPoly>;
using RatPoly = LaurentPoly<Rational>;

}  // namespace rectsym
