#pragma once

#include <map>
#include <string>

#include "rectsym/laurent.hpp"
#include "rectsym/partition.hpp"

namespace rectsym {

/// Expansion of a symmetric Laurent polynomial in n variables in the
/// (Laurent) Schur basis. Keys are signed sequences of length n.
class SchurExpansion {
public:
    explicit SchurExpansion(int arity = 0) : arity_(arity) {}

    int arity() const noexcept { return arity_; }
    const std::map<SignedSequence, Integer>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    Integer coefficient(const SignedSequence& key) const;
    /// Coefficient of s_p; zero when p is longer than the arity.
    Integer coefficient(const Partition& p) const;

    /// Smallest last entry over the keys: multiplying by
    /// (x1...xn)^(-shift) makes every key a partition.
    int shift() const;

    void add(const SignedSequence& key, const Integer& c);
    std::string to_string() const;

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    int arity_;
    std::map<SignedSequence, Integer> entries_;
};

/// Numerator alternant sum over w in S_n of sgn(w) x^{w(exponents)}.
IntPoly alternant(const Monomial& exponents);

/// prod_{i<j} (x_i - x_j)
IntPoly vandermonde(int n);

/// Divides exactly by the Vandermonde product, one factor (x_i - x_j) at a
/// time.
template <class R>
LaurentPoly<R> divide_by_vandermonde(LaurentPoly<R> p) {
    const int n = p.arity();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            LaurentPoly<R> factor(n);
            Monomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(i)] = 1;
            factor.add_term(m, R(1));
            m[static_cast<std::size_t>(i)] = 0;
            m[static_cast<std::size_t>(j)] = 1;
            factor.add_term(m, R(-1));
            p = exact_divide(p, factor);
        }
    }
    return p;
}

/// Laurent Schur polynomial s_lam[X_n], n = lam.size(). Memoized. The
/// factor (x1...xn)^{lam_n} is split off first; the remaining partition goes
/// through the bialternant a_{lam+delta} / a_delta, delta = (n-1, ..., 1, 0),
/// at small arity and through the tableau sum otherwise.
const IntPoly& schur_poly(const SignedSequence& lam);
/// The bialternant itself, uncached, for any length.
IntPoly schur_poly_bialternant(const SignedSequence& lam);
/// Same, checking that lam has length n.
const IntPoly& schur_poly(const SignedSequence& lam, int n);
/// s_lam[X_n] for a partition; the zero polynomial when lam is longer than n.
IntPoly schur_poly(const Partition& lam, int n);

/// Sum of x^{w(T)} over semistandard tableaux T of shape lam, entries <= n.
IntPoly schur_poly_tableaux(const Partition& lam, int n);

/// Monomial symmetric Laurent polynomial: the sum of the distinct
/// rearrangements of x^mu.
IntPoly monomial_symmetric(const SignedSequence& mu);

/// Schur expansion of a symmetric Laurent polynomial by triangular
/// elimination on lex-leading monomials. Throws NotSymmetric.
SchurExpansion expand_in_schur(const IntPoly& p);
SchurExpansion expand_in_schur(const IntPoly& p, int n);

/// s_{lam+(k^n)}[X_n] == (x1...xn)^k s_lam[X_n]
bool verify_translation_lemma(const SignedSequence& lam, int k);
/// s_lam[1/X_n] == s_{complement_0(lam)}[X_n]
bool verify_inverse_lemma(const SignedSequence& lam);

}  // namespace rectsym
