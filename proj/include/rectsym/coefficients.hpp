#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rectsym/partition.hpp"
#include "rectsym/powersum.hpp"
#include "rectsym/tpoly.hpp"

namespace rectsym {

enum class Family { LR, Kronecker, Plethysm, KostkaFoulkes };
enum class Method { Main, Oracle };

std::string family_name(Family f);
/// Accepts "lr", "kronecker", "plethysm", "kostka-foulkes". Throws ParseError.
Family parse_family(std::string_view text);
/// Number of partitions indexing a coefficient of the family.
int family_arity(Family f);

struct CoefficientQuery {
    Family family = Family::LR;
    std::vector<Partition> indices;
    Method method = Method::Main;
};

/// Integer families come back as constant polynomials. Throws ArityMismatch
/// when the index count does not match the family.
TPoly evaluate(const CoefficientQuery& query);

/// c^nu_{lam,mu}. Main: expand s_lam s_mu at arity max of the lengths.
/// Oracle: Littlewood-Richardson tableaux of shape nu/lam, content mu.
Integer lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu, Method method = Method::Main);
Integer lr_oracle(const Partition& lam, const Partition& mu, const Partition& nu);

/// g(lam,mu,nu), read off s_mu * s_nu in the power-sum basis.
Integer kronecker_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);
Integer kronecker_coefficient(const Partition& lam, const Partition& mu, const Partition& nu, CharacterTable& table);

/// Kronecker coefficients through cached character rows: each row
/// chi^lam(.) is computed once, then g is a dot product weighted by class
/// sizes. Not thread-safe.
class KroneckerEngine {
public:
    Integer coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

private:
    struct Classes {
        std::vector<Partition> types;
        std::vector<Integer> sizes;  // N! / z_rho
        Integer order;               // N!
    };
    const Classes& classes(int weight);
    const std::vector<Integer>& row(const Partition& lam);

    CharacterTable table_;
    std::map<int, Classes> classes_;
    std::map<Partition, std::vector<Integer>> rows_;
};

/// g(lam,mu,nu) as the coefficient of s_lam[X_l] s_mu[Y_m] in s_nu[X_l Y_m].
/// Throws ArityTooSmall when l < l(lam) or m < l(mu).
Integer kronecker_oracle(const Partition& lam, const Partition& mu, const Partition& nu, int l, int m);
/// The oracle with the two shortest partitions on the alphabets X_l, Y_m,
/// at l, m equal to their lengths (at least 1).
Integer kronecker_oracle(const Partition& lam, const Partition& mu, const Partition& nu);

/// a^nu_{lam,mu}: coefficient of s_nu in s_lam[s_mu]. Main: power-sum
/// plethysm. Oracle: s_lam at the monomials of SSYT(mu, l(nu)).
Integer plethysm_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                             Method method = Method::Main);
Integer plethysm_oracle(const Partition& lam, const Partition& mu, const Partition& nu);
/// s_lam[s_mu] in n variables, via the monomial specialization.
IntPoly plethysm_polynomial(const Partition& lam, const Partition& mu, int n);

/// Main: Hall-Littlewood transition. Oracle: charge generating function.
TPoly kostka_foulkes_coefficient(const Partition& lam, const Partition& mu, Method method = Method::Main);

}  // namespace rectsym
