#pragma once

#include <map>
#include <string>
#include <vector>

#include "rectsym/laurent.hpp"
#include "rectsym/partition.hpp"
#include "rectsym/tableaux.hpp"
#include "rectsym/tpoly.hpp"

namespace rectsym {

/// Expansion of a symmetric Laurent polynomial over Z[t] in the
/// Hall-Littlewood P basis at a fixed arity.
class HLExpansion {
public:
    explicit HLExpansion(int arity = 0) : arity_(arity) {}

    int arity() const noexcept { return arity_; }
    const std::map<SignedSequence, TPoly>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    TPoly coefficient(const SignedSequence& key) const;

    void add(const SignedSequence& key, const TPoly& c);
    std::string to_string() const;

    friend bool operator==(const HLExpansion&, const HLExpansion&) = default;

private:
    int arity_;
    std::map<SignedSequence, TPoly> entries_;
};

/// v_{mu,n}(t) = prod over distinct values of prod_{r=1}^{m} [r]_t.
TPoly hl_normalizer(const SignedSequence& mu);

/// P_mu as a combination of Laurent Schur polynomials with Z[t]
/// coefficients. Unitriangular: the top key is mu with coefficient 1.
const std::map<SignedSequence, TPoly>& hl_schur_expansion(const SignedSequence& mu);

/// P_mu(X_n; t), n = mu.size().
const TPolyPoly& hl_poly(const SignedSequence& mu);
/// Same, checking the length. Throws LengthMismatch.
const TPolyPoly& hl_poly(const SignedSequence& mu, int n);

/// Throws NotSymmetric.
HLExpansion expand_in_hl(const TPolyPoly& p);
HLExpansion expand_in_hl(const TPolyPoly& p, int n);

/// K_{lam,mu}(t) at arity max(l(lam), l(mu)).
TPoly kostka_foulkes(const Partition& lam, const Partition& mu);
/// Same at an explicit arity n >= max(l(lam), l(mu)).
TPoly kostka_foulkes(const Partition& lam, const Partition& mu, int n);

/// Charge of a word whose content is a partition, by standard subword
/// extraction: each subword starts at the rightmost unused 1 and searches
/// leftwards, cyclically, for the next letter; the index goes up by one
/// whenever the search wraps around.
int charge(const std::vector<int>& word);
int charge(const Tableau& t);

/// Sum of t^charge(T) over SSYT of shape lam and content mu.
TPoly kostka_foulkes_charge(const Partition& lam, const Partition& mu);

/// P_mu(1/X) == P_{complement_0(mu)}(X) and
/// P_{mu+(k^n)}(X) == (x1...xn)^k P_mu(X).
bool verify_hl_lemma(const SignedSequence& mu, int k);

TPolyPoly to_tpoly(const IntPoly& p);
IntPoly evaluate_t(const TPolyPoly& p, const Integer& t);

}  // namespace rectsym
