#include "rectsym/schur.hpp"

#include <sstream>

#include "rectsym/memo.hpp"
#include "rectsym/permutations.hpp"
#include "rectsym/tableaux.hpp"

namespace rectsym {

Integer SchurExpansion::coefficient(const SignedSequence& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Integer(0) : it->second;
}

Integer SchurExpansion::coefficient(const Partition& p) const {
    if (p.length() > arity_) return 0;
    return coefficient(SignedSequence::padded(p, arity_));
}

int SchurExpansion::shift() const {
    int shift = 0;
    bool first = true;
    for (const auto& [key, c] : entries_) {
        const int last = key.size() ? key[static_cast<std::size_t>(key.size() - 1)] : 0;
        shift = first ? last : std::min(shift, last);
        first = false;
    }
    return shift;
}

void SchurExpansion::add(const SignedSequence& key, const Integer& c) {
    if (key.size() != arity_) throw LengthMismatch("Schur key " + key.to_string());
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

std::string SchurExpansion::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second != 1) os << it->second << '*';
        os << "s" << it->first.to_string();
    }
    return os.str();
}

IntPoly alternant(const Monomial& exponents) {
    const int n = static_cast<int>(exponents.size());
    IntPoly result(n);
    Monomial image(exponents.size());
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        for (std::size_t i = 0; i < exponents.size(); ++i) image[static_cast<std::size_t>(perm[i])] = exponents[i];
        result.add_term(image, Integer(sign));
    });
    return result;
}

IntPoly vandermonde(int n) {
    Monomial delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;
    return alternant(delta);
}

namespace {

Memo<SignedSequence, IntPoly>& schur_memo() {
    static Memo<SignedSequence, IntPoly> memo;
    return memo;
}

IntPoly bialternant(const SignedSequence& lam) {
    const int n = lam.size();
    Monomial exponents(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) exponents[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + n - 1 - i;
    return divide_by_vandermonde(alternant(exponents));
}

}  // namespace

// Beyond this arity the n! alternant terms cost more than the tableau sum.
constexpr int kBialternantMaxArity = 5;

const IntPoly& schur_poly(const SignedSequence& lam) {
    return schur_memo().get_or_compute(lam, [&]() -> IntPoly {
        const int n = lam.size();
        if (n == 0) return IntPoly::constant(0, Integer(1));
        const int last = lam[static_cast<std::size_t>(n - 1)];
        if (last != 0)
            return schur_poly(translate(lam, -last)).shifted(Monomial(static_cast<std::size_t>(n), last));
        if (n <= kBialternantMaxArity) return bialternant(lam);
        return schur_poly_tableaux(*to_partition(lam), n);
    });
}

IntPoly schur_poly_bialternant(const SignedSequence& lam) { return bialternant(lam); }

const IntPoly& schur_poly(const SignedSequence& lam, int n) {
    if (lam.size() != n)
        throw LengthMismatch(lam.to_string() + " does not have length " + std::to_string(n));
    return schur_poly(lam);
}

IntPoly schur_poly(const Partition& lam, int n) {
    if (lam.length() > n) return IntPoly(n);
    return schur_poly(SignedSequence::padded(lam, n));
}

IntPoly schur_poly_tableaux(const Partition& lam, int n) {
    IntPoly result(n);
    for_each_ssyt(lam, n, [&](const Tableau& t) { result.add_term(tableau_weight(t, n), Integer(1)); });
    return result;
}

IntPoly monomial_symmetric(const SignedSequence& mu) {
    IntPoly result(mu.size());
    Monomial m = mu.entries();
    std::sort(m.begin(), m.end());
    do {
        result.add_term(m, Integer(1));
    } while (std::next_permutation(m.begin(), m.end()));
    return result;
}

SchurExpansion expand_in_schur(const IntPoly& p) {
    const int n = p.arity();
    SchurExpansion expansion(n);
    if (p.is_zero()) return expansion;
    if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric: " + p.to_string());

    // Factor out the smallest power of x1...xn so elimination runs on an
    // ordinary polynomial; keys are shifted back on the way out.
    int shift = p.terms().begin()->first.empty() ? 0 : p.terms().begin()->first.front();
    for (const auto& [m, c] : p.terms())
        for (int e : m) shift = std::min(shift, e);
    IntPoly remainder = p.shifted(Monomial(static_cast<std::size_t>(n), -shift));

    while (!remainder.is_zero()) {
        const Monomial lead = remainder.leading_monomial_lex();
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>{}))
            throw NotSymmetric("lex-leading monomial is not dominant");
        const Integer c = remainder.terms().rbegin()->second;
        const SignedSequence key(lead);
        remainder.sub_scaled(schur_poly(key), c);
        expansion.add(translate(key, shift), c);
    }
    return expansion;
}

SchurExpansion expand_in_schur(const IntPoly& p, int n) {
    if (p.arity() != n) throw ArityMismatch("expected arity " + std::to_string(n));
    return expand_in_schur(p);
}

bool verify_translation_lemma(const SignedSequence& lam, int k) {
    const int n = lam.size();
    // schur_poly itself relies on this identity, so check on bialternants.
    const IntPoly lhs = bialternant(translate(lam, k));
    const IntPoly rhs = bialternant(lam).shifted(Monomial(static_cast<std::size_t>(n), k));
    return lhs == rhs;
}

bool verify_inverse_lemma(const SignedSequence& lam) {
    return invert_variables(bialternant(lam)) == bialternant(complement(lam, 0));
}

}  // namespace rectsym
