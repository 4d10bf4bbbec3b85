#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rectsym/coefficients.hpp"
#include "rectsym/partition.hpp"
#include "rectsym/tpoly.hpp"

namespace rectsym {

enum class RuleId {
    LRBox,
    LRTranslate,
    KronBox,
    KronTranslate,
    PlethBoxInner,
    PlethTranslateInner,
    PlethBoxOuter,
    PlethTranslateOuter,
    KFBox,
    KFTranslate,
};

const std::vector<RuleId>& all_rules();
/// "lr-box", "kron-translate", ...
std::string rule_name(RuleId id);
/// Throws ParseError.
RuleId parse_rule(std::string_view text);
Family rule_family(RuleId id);
/// Parameter names in order, e.g. {"l", "m", "n"} for the box rules with
/// three sides and {"k", "n"} for most translations.
std::vector<std::string> rule_parameter_names(RuleId id);

/// Parameter values follow rule_parameter_names.
struct SymmetryRule {
    RuleId id = RuleId::LRBox;
    std::vector<int> params;

    std::string to_string() const;
};

struct SymmetryOutcome {
    SymmetryRule rule;
    /// Empty when the rule asserts that the coefficient vanishes.
    std::optional<std::vector<Partition>> image;

    bool vanishes() const noexcept { return !image.has_value(); }
    std::string to_string() const;
};

/// Applies the rule to an index tuple. Hypotheses of the identity are
/// preconditions (PreconditionViolated); the containment conditions decide
/// between a transformed tuple and a vanishing verdict.
SymmetryOutcome apply_rule(const SymmetryRule& rule, const std::vector<Partition>& indices);

/// r = #SSYT(mu, entries <= n) and q = r |mu| / n. Throws NonIntegralResult
/// when q is not an integer.
struct OuterPlethysmData {
    int r = 0;
    int q = 0;
};
OuterPlethysmData outer_plethysm_data(const Partition& mu, int n);

struct SweepBounds {
    int max_weight = 6;
    int box_a = 3;
    int box_b = 3;
    int box_c = 3;
    int max_k = 2;
    int jobs = 1;
};

struct Counterexample {
    std::vector<Partition> original;
    SymmetryOutcome outcome;
    TPoly original_value;
    TPoly image_value;
};

struct VerifyReport {
    RuleId rule = RuleId::LRBox;
    long checked = 0;
    long transformed = 0;
    long vanishes = 0;
    long skipped = 0;
    std::vector<Counterexample> counterexamples;
    double seconds = 0;
};

/// Exhaustive check of one rule over every weight-consistent tuple with
/// weight <= max_weight and every parameter choice within the bounds.
/// Tuples violating the hypotheses are counted as skipped.
VerifyReport verify_rule(RuleId id, const SweepBounds& bounds);

/// Coefficient evaluation with per-instance caches, as used by the sweeps.
/// Plethysm goes through the monomial specialization, whose cost stays low
/// on the near-rectangular images the rules produce. Not thread-safe.
class CoefficientEngine {
public:
    TPoly value(Family family, const std::vector<Partition>& indices);

private:
    KroneckerEngine kronecker_;
    std::map<std::pair<int, std::vector<Partition>>, TPoly> cache_;
};

struct ReductionStep {
    std::string rule;
    std::string params;
    std::vector<Partition> result;
};

struct ReductionCandidate {
    std::string pattern;
    long weight = 0;
};

struct ReductionReport {
    Family family = Family::Kronecker;
    std::vector<Partition> original;
    std::vector<ReductionStep> chain;
    /// Empty when the last step shows the coefficient vanishes.
    std::optional<std::vector<Partition>> reduced;
    int weight_before = 0;
    int weight_after = 0;
    std::vector<ReductionCandidate> candidates;

    bool vanishes() const noexcept { return !reduced.has_value(); }
};

/// Throws WeightMismatch.
ReductionReport reduce_kronecker(const Partition& lam, const Partition& mu, const Partition& nu);
ReductionReport reduce_plethysm(const Partition& lam, const Partition& mu, const Partition& nu);

nlohmann::ordered_json to_json(const ReductionReport& report);
nlohmann::ordered_json to_json(const VerifyReport& report);
nlohmann::ordered_json partition_tuple_json(const std::vector<Partition>& tuple);

/// Runs f(i, worker) for i in [0, count) on `jobs` threads. Each index is
/// handled by worker i % jobs, so per-worker state sees a fixed sequence.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t, int)>& f);

}  // namespace rectsym
