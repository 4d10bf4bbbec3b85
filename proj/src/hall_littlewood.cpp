#include "rectsym/hall_littlewood.hpp"

#include <algorithm>
#include <sstream>

#include "rectsym/errors.hpp"
#include "rectsym/memo.hpp"
#include "rectsym/schur.hpp"

namespace rectsym {

TPoly HLExpansion::coefficient(const SignedSequence& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? TPoly() : it->second;
}

void HLExpansion::add(const SignedSequence& key, const TPoly& c) {
    if (key.size() != arity_) throw LengthMismatch("HL key " + key.to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

std::string HLExpansion::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second != TPoly(1)) os << '(' << it->second.to_string() << ")*";
        os << "P" << it->first.to_string();
    }
    return os.str();
}

TPoly hl_normalizer(const SignedSequence& mu) {
    TPoly v(1);
    const auto& e = mu.entries();
    for (std::size_t i = 0; i < e.size();) {
        std::size_t j = i;
        while (j < e.size() && e[j] == e[i]) ++j;
        for (int r = 1; r <= static_cast<int>(j - i); ++r) v *= TPoly::t_integer(r);
        i = j;
    }
    return v;
}

namespace {

// prod_{i<j} (x_i - t x_j)
const TPolyPoly& twisted_vandermonde(int n) {
    static Memo<int, TPolyPoly> memo;
    return memo.get_or_compute(n, [n] {
        TPolyPoly product = TPolyPoly::constant(n, TPoly(1));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                TPolyPoly factor(n);
                Monomial m(static_cast<std::size_t>(n), 0);
                m[static_cast<std::size_t>(i)] = 1;
                factor.add_term(m, TPoly(1));
                m[static_cast<std::size_t>(i)] = 0;
                m[static_cast<std::size_t>(j)] = 1;
                factor.add_term(m, -TPoly::t());
                product *= factor;
            }
        }
        return product;
    });
}

// Antisymmetrizing x^mu prod(x_i - t x_j) sends each monomial x^m to
// sgn(sort) a_alpha, alpha = m sorted decreasingly (zero when m has a
// repeated entry), and a_alpha / a_delta = s_{alpha - delta}.
std::map<SignedSequence, TPoly> compute_hl_schur(const SignedSequence& mu) {
    const int n = mu.size();
    std::map<SignedSequence, TPoly> numerator;
    std::vector<int> m(static_cast<std::size_t>(n));
    for (const auto& [g, c] : twisted_vandermonde(n).terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = mu[i] + g[i];
        int inversions = 0;
        bool repeated = false;
        for (std::size_t i = 0; i < m.size() && !repeated; ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                if (m[i] == m[j]) {
                    repeated = true;
                    break;
                }
                if (m[i] < m[j]) ++inversions;
            }
        if (repeated) continue;
        std::vector<int> alpha = m;
        std::sort(alpha.begin(), alpha.end(), std::greater<int>());
        for (int i = 0; i < n; ++i) alpha[static_cast<std::size_t>(i)] -= n - 1 - i;
        auto [it, inserted] = numerator.try_emplace(SignedSequence(std::move(alpha)), TPoly());
        if (inversions % 2) it->second -= c;
        else it->second += c;
    }

    const TPoly v = hl_normalizer(mu);
    std::map<SignedSequence, TPoly> result;
    for (auto& [key, c] : numerator) {
        if (c.is_zero()) continue;
        auto q = TPoly::exact_quotient(c, v);
        if (!q) throw InexactDivision("HL numerator coefficient " + c.to_string() + " by " + v.to_string());
        result.emplace(key, std::move(*q));
    }
    return result;
}

}  // namespace

const std::map<SignedSequence, TPoly>& hl_schur_expansion(const SignedSequence& mu) {
    static Memo<SignedSequence, std::map<SignedSequence, TPoly>> memo;
    return memo.get_or_compute(mu, [&] { return compute_hl_schur(mu); });
}

TPolyPoly to_tpoly(const IntPoly& p) {
    return p.map_coefficients<TPoly>([](const Integer& c) { return TPoly(c); });
}

IntPoly evaluate_t(const TPolyPoly& p, const Integer& t) {
    return p.map_coefficients<Integer>([&](const TPoly& c) { return c.evaluate(t); });
}

const TPolyPoly& hl_poly(const SignedSequence& mu) {
    static Memo<SignedSequence, TPolyPoly> memo;
    return memo.get_or_compute(mu, [&] {
        TPolyPoly p(mu.size());
        for (const auto& [key, c] : hl_schur_expansion(mu))
            for (const auto& [m, s] : schur_poly(key).terms()) p.add_term(m, c * TPoly(s));
        return p;
    });
}

const TPolyPoly& hl_poly(const SignedSequence& mu, int n) {
    if (mu.size() != n) throw LengthMismatch(mu.to_string() + " does not have length " + std::to_string(n));
    return hl_poly(mu);
}

HLExpansion expand_in_hl(const TPolyPoly& p) {
    HLExpansion expansion(p.arity());
    if (p.is_zero()) return expansion;
    if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric: " + p.to_string());
    TPolyPoly remainder = p;
    while (!remainder.is_zero()) {
        const Monomial lead = remainder.leading_monomial_lex();
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>{}))
            throw NotSymmetric("lex-leading monomial is not dominant");
        const TPoly c = remainder.terms().rbegin()->second;
        const SignedSequence key(lead);
        remainder.sub_scaled(hl_poly(key), c);
        expansion.add(key, c);
    }
    return expansion;
}

HLExpansion expand_in_hl(const TPolyPoly& p, int n) {
    if (p.arity() != n) throw ArityMismatch("expected arity " + std::to_string(n));
    return expand_in_hl(p);
}

TPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
    return kostka_foulkes(lam, mu, std::max(lam.length(), mu.length()));
}

// Inverts the unitriangular Schur expansions of the P_nu directly on Schur
// coefficients, without expanding any polynomial.
TPoly kostka_foulkes(const Partition& lam, const Partition& mu, int n) {
    if (lam.weight() != mu.weight()) return TPoly();
    if (lam.length() > n || mu.length() > n) return TPoly();
    const SignedSequence target = SignedSequence::padded(mu, n);
    std::map<SignedSequence, TPoly> remainder{{SignedSequence::padded(lam, n), TPoly(1)}};
    while (!remainder.empty()) {
        auto top = std::prev(remainder.end());
        const SignedSequence key = top->first;
        const TPoly c = top->second;
        if (key == target) return c;
        if (key < target) break;
        for (const auto& [nu, a] : hl_schur_expansion(key)) {
            auto [it, inserted] = remainder.try_emplace(nu, TPoly());
            it->second -= c * a;
            if (it->second.is_zero()) remainder.erase(it);
        }
    }
    return TPoly();
}

int charge(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    std::vector<bool> used(word.size(), false);
    int remaining = len;
    int total = 0;
    while (remaining > 0) {
        int pos = -1;
        for (int i = len - 1; i >= 0; --i)
            if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == 1) {
                pos = i;
                break;
            }
        if (pos < 0) throw PreconditionViolated("charge needs a word with partition content");
        used[static_cast<std::size_t>(pos)] = true;
        --remaining;
        int index = 0;
        for (int letter = 2;; ++letter) {
            int found = -1;
            bool wrapped = false;
            for (int step = 1; step <= len; ++step) {
                int i = pos - step;
                if (i < 0) {
                    i += len;
                    wrapped = true;
                }
                if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == letter) {
                    found = i;
                    break;
                }
            }
            if (found < 0) break;
            if (wrapped) ++index;
            total += index;
            used[static_cast<std::size_t>(found)] = true;
            --remaining;
            pos = found;
        }
    }
    return total;
}

int charge(const Tableau& t) { return charge(reading_word(t)); }

TPoly kostka_foulkes_charge(const Partition& lam, const Partition& mu) {
    TPoly result;
    if (lam.weight() != mu.weight()) return result;
    for_each_ssyt_with_content(lam, mu.parts(), [&](const Tableau& t) { result += TPoly::monomial(charge(t)); });
    return result;
}

bool verify_hl_lemma(const SignedSequence& mu, int k) {
    const int n = mu.size();
    if (invert_variables(hl_poly(mu)) != hl_poly(complement(mu, 0))) return false;
    return hl_poly(translate(mu, k)) == hl_poly(mu).shifted(Monomial(static_cast<std::size_t>(n), k));
}

}  // namespace rectsym
