#include "rectsym/symmetries.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "rectsym/errors.hpp"
#include "rectsym/hall_littlewood.hpp"

namespace rectsym {

namespace {

struct RuleInfo {
    RuleId id;
    const char* name;
    Family family;
    std::vector<std::string> params;
};

const std::vector<RuleInfo>& rule_table() {
    static const std::vector<RuleInfo> table = {
        {RuleId::LRBox, "lr-box", Family::LR, {"l", "m", "n"}},
        {RuleId::LRTranslate, "lr-translate", Family::LR, {"k", "n"}},
        {RuleId::KronBox, "kron-box", Family::Kronecker, {"l", "m", "n"}},
        {RuleId::KronTranslate, "kron-translate", Family::Kronecker, {"l", "m", "k"}},
        {RuleId::PlethBoxInner, "pleth-box-inner", Family::Plethysm, {"m", "n"}},
        {RuleId::PlethTranslateInner, "pleth-translate-inner", Family::Plethysm, {"k", "n"}},
        {RuleId::PlethBoxOuter, "pleth-box-outer", Family::Plethysm, {"l", "n"}},
        {RuleId::PlethTranslateOuter, "pleth-translate-outer", Family::Plethysm, {"k", "n"}},
        {RuleId::KFBox, "kf-box", Family::KostkaFoulkes, {"k", "n"}},
        {RuleId::KFTranslate, "kf-translate", Family::KostkaFoulkes, {"k", "n"}},
    };
    return table;
}

const RuleInfo& info(RuleId id) {
    for (const auto& r : rule_table())
        if (r.id == id) return r;
    throw ParseError("unknown rule");
}

std::string tuple_text(const std::vector<Partition>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ", ";
        s += tuple[i].to_string();
    }
    return s + ")";
}

void require(bool ok, const SymmetryRule& rule, const std::string& clause) {
    if (!ok) throw PreconditionViolated(rule.to_string() + ": " + clause);
}

// Complement inside a box the partition is known to fit in.
Partition box_complement(const Partition& p, int k, int n) { return *to_partition(complement(p, BoxSpec{k, n})); }

}  // namespace

const std::vector<RuleId>& all_rules() {
    static const std::vector<RuleId> ids = [] {
        std::vector<RuleId> v;
        for (const auto& r : rule_table()) v.push_back(r.id);
        return v;
    }();
    return ids;
}

std::string rule_name(RuleId id) { return info(id).name; }

RuleId parse_rule(std::string_view text) {
    for (const auto& r : rule_table())
        if (text == r.name) return r.id;
    throw ParseError("unknown rule '" + std::string(text) + "'");
}

Family rule_family(RuleId id) { return info(id).family; }

std::vector<std::string> rule_parameter_names(RuleId id) { return info(id).params; }

std::string SymmetryRule::to_string() const {
    const auto names = rule_parameter_names(id);
    std::string s = rule_name(id) + "(";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ",";
        s += names[i] + "=" + (i < params.size() ? std::to_string(params[i]) : "?");
    }
    return s + ")";
}

std::string SymmetryOutcome::to_string() const {
    return rule.to_string() + " -> " + (image ? tuple_text(*image) : std::string("vanishes"));
}

OuterPlethysmData outer_plethysm_data(const Partition& mu, int n) {
    if (n < 1) throw PreconditionViolated("outer plethysm rules need n >= 1");
    const Integer r = count_ssyt(mu, n);
    const Integer total = r * mu.weight();
    if (!mpz_divisible_p(total.get_mpz_t(), Integer(n).get_mpz_t()))
        throw NonIntegralResult("q = " + r.get_str() + "*" + std::to_string(mu.weight()) + "/" + std::to_string(n));
    const Integer q = total / n;
    return {static_cast<int>(r.get_si()), static_cast<int>(q.get_si())};
}

SymmetryOutcome apply_rule(const SymmetryRule& rule, const std::vector<Partition>& t) {
    const auto& names = rule_parameter_names(rule.id);
    if (rule.params.size() != names.size())
        throw ArityMismatch(rule_name(rule.id) + " takes " + std::to_string(names.size()) + " parameters");
    const int expected = family_arity(rule_family(rule.id));
    if (static_cast<int>(t.size()) != expected)
        throw ArityMismatch(rule_name(rule.id) + " acts on " + std::to_string(expected) + " partitions");

    SymmetryOutcome out{rule, std::nullopt};
    const auto& p = rule.params;
    switch (rule.id) {
        case RuleId::LRBox: {
            const int l = p[0], m = p[1], n = p[2];
            require(l >= 0 && m >= 0 && n >= 0, rule, "parameters must be nonnegative");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(nu.length() <= n, rule, "length(nu) <= n");
            require(lam.largest() <= l, rule, "lambda_1 <= l");
            require(mu.largest() <= m, rule, "mu_1 <= m");
            if (contains(lam, BoxSpec{l, n}) && contains(mu, BoxSpec{m, n}) && contains(nu, BoxSpec{l + m, n}))
                out.image = {box_complement(lam, l, n), box_complement(mu, m, n), box_complement(nu, l + m, n)};
            break;
        }
        case RuleId::LRTranslate: {
            const int k = p[0], n = p[1];
            require(n >= 0, rule, "n >= 0");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(nu.length() <= n, rule, "length(nu) <= n");
            const auto lam2 = add_rectangle(lam, k, n);
            require(lam2.has_value(), rule, "lambda + (k^n) is a partition");
            const auto nu2 = add_rectangle(nu, k, n);
            if (lam.length() <= n && nu2) out.image = {*lam2, mu, *nu2};
            break;
        }
        case RuleId::KronBox: {
            const int l = p[0], m = p[1], n = p[2];
            require(l >= 0 && m >= 0 && n >= 0, rule, "parameters must be nonnegative");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(lam.largest() <= l, rule, "lambda_1 <= l");
            require(mu.largest() <= m, rule, "mu_1 <= m");
            require(nu.largest() <= n, rule, "nu_1 <= n");
            if (contains(lam, BoxSpec{l, m * n}) && contains(mu, BoxSpec{m, l * n}) && contains(nu, BoxSpec{n, l * m}))
                out.image = {box_complement(lam, l, m * n), box_complement(mu, m, l * n),
                             box_complement(nu, n, l * m)};
            break;
        }
        case RuleId::KronTranslate: {
            const int l = p[0], m = p[1], k = p[2];
            require(l >= 0 && m >= 0, rule, "l, m >= 0");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(l >= lam.length(), rule, "l >= length(lambda)");
            require(m >= mu.length(), rule, "m >= length(mu)");
            const auto nu2 = add_rectangle(nu, k, l * m);
            require(nu2.has_value(), rule, "nu + (k^(lm)) is a partition");
            const auto lam2 = add_rectangle(lam, k * m, l);
            const auto mu2 = add_rectangle(mu, k * l, m);
            if (nu.length() <= l * m && lam2 && mu2) out.image = {*lam2, *mu2, *nu2};
            break;
        }
        case RuleId::PlethBoxInner: {
            const int m = p[0], n = p[1];
            require(m >= 0 && n >= 0, rule, "parameters must be nonnegative");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(contains(mu, BoxSpec{m, n}), rule, "mu inside (m^n)");
            require(nu.length() <= n, rule, "length(nu) <= n");
            const int width = m * lam.weight();
            if (contains(nu, BoxSpec{width, n}))
                out.image = {lam, box_complement(mu, m, n), box_complement(nu, width, n)};
            break;
        }
        case RuleId::PlethTranslateInner: {
            const int k = p[0], n = p[1];
            require(n >= 0, rule, "n >= 0");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(nu.length() <= n, rule, "length(nu) <= n");
            const auto mu2 = add_rectangle(mu, k, n);
            require(mu2.has_value(), rule, "mu + (k^n) is a partition");
            const auto nu2 = add_rectangle(nu, k * lam.weight(), n);
            if (nu2) out.image = {lam, *mu2, *nu2};
            break;
        }
        case RuleId::PlethBoxOuter: {
            const int l = p[0], n = p[1];
            require(l >= 0, rule, "l >= 0");
            require(n >= 1, rule, "n >= 1");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(lam.largest() <= l, rule, "lambda_1 <= l");
            require(nu.length() <= n, rule, "length(nu) <= n");
            const auto [r, q] = outer_plethysm_data(mu, n);
            if (contains(lam, BoxSpec{l, r}) && contains(nu, BoxSpec{q * l, n}))
                out.image = {box_complement(lam, l, r), mu, box_complement(nu, q * l, n)};
            break;
        }
        case RuleId::PlethTranslateOuter: {
            const int k = p[0], n = p[1];
            require(n >= 1, rule, "n >= 1");
            const auto &lam = t[0], &mu = t[1], &nu = t[2];
            require(nu.length() <= n, rule, "length(nu) <= n");
            const auto [r, q] = outer_plethysm_data(mu, n);
            const auto lam2 = add_rectangle(lam, k, r);
            require(lam2.has_value(), rule, "lambda + (k^r) is a partition");
            const auto nu2 = add_rectangle(nu, q * k, n);
            if (lam.length() <= r && nu2) out.image = {*lam2, mu, *nu2};
            break;
        }
        case RuleId::KFBox: {
            const int k = p[0], n = p[1];
            require(k >= 0 && n >= 0, rule, "parameters must be nonnegative");
            const auto &lam = t[0], &mu = t[1];
            require(lam.largest() <= k, rule, "lambda_1 <= k");
            require(mu.length() <= n, rule, "length(mu) <= n");
            if (contains(lam, BoxSpec{k, n}) && contains(mu, BoxSpec{k, n}))
                out.image = {box_complement(lam, k, n), box_complement(mu, k, n)};
            break;
        }
        case RuleId::KFTranslate: {
            const int k = p[0], n = p[1];
            require(n >= 0, rule, "n >= 0");
            const auto &lam = t[0], &mu = t[1];
            require(mu.length() <= n, rule, "length(mu) <= n");
            const auto lam2 = add_rectangle(lam, k, n);
            require(lam2.has_value(), rule, "lambda + (k^n) is a partition");
            const auto mu2 = add_rectangle(mu, k, n);
            if (lam.length() <= n && mu2) out.image = {*lam2, *mu2};
            break;
        }
    }
    return out;
}

TPoly CoefficientEngine::value(Family family, const std::vector<Partition>& i) {
    auto key = std::make_pair(static_cast<int>(family), i);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    TPoly v;
    switch (family) {
        case Family::LR: v = lr_coefficient(i[0], i[1], i[2]); break;
        case Family::Kronecker: v = kronecker_.coefficient(i[0], i[1], i[2]); break;
        case Family::Plethysm: v = plethysm_oracle(i[0], i[1], i[2]); break;
        case Family::KostkaFoulkes: v = kostka_foulkes(i[0], i[1]); break;
    }
    cache_.emplace(std::move(key), v);
    return v;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t, int)>& f) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i, 0);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(jobs)) f(i, w);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

std::vector<std::vector<Partition>> sweep_tuples(Family family, int max_weight) {
    std::vector<std::vector<Partition>> tuples;
    switch (family) {
        case Family::LR:
            for (int w = 0; w <= max_weight; ++w)
                for (const auto& nu : partitions_of(w))
                    for (int a = 0; a <= w; ++a)
                        for (const auto& lam : partitions_of(a))
                            for (const auto& mu : partitions_of(w - a)) tuples.push_back({lam, mu, nu});
            break;
        case Family::Kronecker:
            for (int w = 0; w <= max_weight; ++w)
                for (const auto& lam : partitions_of(w))
                    for (const auto& mu : partitions_of(w))
                        for (const auto& nu : partitions_of(w)) tuples.push_back({lam, mu, nu});
            break;
        case Family::Plethysm:
            for (int a = 0; a <= max_weight; ++a)
                for (int b = 0; b <= max_weight; ++b) {
                    if (a * b > max_weight) continue;
                    for (const auto& lam : partitions_of(a))
                        for (const auto& mu : partitions_of(b))
                            for (const auto& nu : partitions_of(a * b)) tuples.push_back({lam, mu, nu});
                }
            break;
        case Family::KostkaFoulkes:
            for (int w = 0; w <= max_weight; ++w)
                for (const auto& lam : partitions_of(w))
                    for (const auto& mu : partitions_of(w)) tuples.push_back({lam, mu});
            break;
    }
    return tuples;
}

std::vector<std::vector<int>> sweep_parameters(RuleId id, const SweepBounds& b) {
    std::vector<std::vector<int>> out;
    const auto names = rule_parameter_names(id);
    const bool outer = id == RuleId::PlethBoxOuter || id == RuleId::PlethTranslateOuter;
    auto range_of = [&](std::size_t slot) -> std::pair<int, int> {
        const std::string& name = names[slot];
        if (name == "k" && (id == RuleId::KFBox)) return {0, b.box_a};
        if (name == "k") return {-b.max_k, b.max_k};
        if (name == "n") return {outer ? 1 : 0, b.box_c};
        return {0, slot == 0 ? b.box_a : b.box_b};
    };
    std::vector<int> current(names.size());
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == names.size()) {
            out.push_back(current);
            return;
        }
        const auto [lo, hi] = range_of(slot);
        for (int v = lo; v <= hi; ++v) {
            current[slot] = v;
            self(self, slot + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

VerifyReport verify_rule(RuleId id, const SweepBounds& bounds) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.rule = id;
    const Family family = rule_family(id);

    struct Instance {
        std::vector<Partition> tuple;
        SymmetryOutcome outcome;
    };
    std::vector<Instance> instances;
    const auto params = sweep_parameters(id, bounds);
    for (const auto& tuple : sweep_tuples(family, bounds.max_weight)) {
        for (const auto& p : params) {
            try {
                instances.push_back({tuple, apply_rule(SymmetryRule{id, p}, tuple)});
            } catch (const PreconditionViolated&) {
                ++report.skipped;
            }
        }
    }

    const int jobs = std::max(1, bounds.jobs);
    std::vector<CoefficientEngine> engines(static_cast<std::size_t>(jobs));
    std::vector<std::optional<Counterexample>> failures(instances.size());
    parallel_for(instances.size(), jobs, [&](std::size_t i, int worker) {
        auto& engine = engines[static_cast<std::size_t>(worker)];
        const Instance& inst = instances[i];
        const TPoly lhs = engine.value(family, inst.tuple);
        const TPoly rhs = inst.outcome.image ? engine.value(family, *inst.outcome.image) : TPoly();
        if (lhs != rhs) failures[i] = Counterexample{inst.tuple, inst.outcome, lhs, rhs};
    });

    for (std::size_t i = 0; i < instances.size(); ++i) {
        ++report.checked;
        if (instances[i].outcome.vanishes()) ++report.vanishes;
        else ++report.transformed;
        if (failures[i]) report.counterexamples.push_back(std::move(*failures[i]));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

std::string conjugation_label(const std::vector<int>& which, const std::vector<std::string>& names) {
    std::string s = "conjugate(";
    for (std::size_t i = 0; i < which.size(); ++i) {
        if (i) s += ",";
        s += names[static_cast<std::size_t>(which[i])];
    }
    return s + ")";
}

std::vector<Partition> conjugated(std::vector<Partition> tuple, const std::vector<int>& which) {
    for (int i : which) tuple[static_cast<std::size_t>(i)] = conjugate(tuple[static_cast<std::size_t>(i)]);
    return tuple;
}

struct Plan {
    std::string pattern;
    std::vector<int> conjugate;
    std::vector<Partition> tuple;
    SymmetryRule rule;
    long weight = 0;
};

ReductionReport finish(Family family, const std::vector<Partition>& original, int weight, std::vector<Plan> plans,
                       const std::vector<std::string>& names) {
    ReductionReport report;
    report.family = family;
    report.original = original;
    report.weight_before = weight;
    report.weight_after = weight;
    report.reduced = original;
    const Plan* best = nullptr;
    for (const auto& plan : plans) {
        report.candidates.push_back({plan.pattern, plan.weight});
        if (!best || plan.weight < best->weight) best = &plan;
    }
    if (!best || best->weight >= weight) return report;

    if (!best->conjugate.empty())
        report.chain.push_back({conjugation_label(best->conjugate, names), "", best->tuple});
    const SymmetryOutcome outcome = apply_rule(best->rule, best->tuple);
    std::string params;
    const auto pnames = rule_parameter_names(best->rule.id);
    for (std::size_t i = 0; i < pnames.size(); ++i)
        params += (i ? "," : "") + pnames[i] + "=" + std::to_string(best->rule.params[i]);
    report.chain.push_back({rule_name(best->rule.id), params, outcome.image.value_or(std::vector<Partition>{})});
    report.reduced = outcome.image;
    report.weight_after = outcome.image ? outcome.image->back().weight() : 0;
    return report;
}

}  // namespace

ReductionReport reduce_kronecker(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.weight() != mu.weight() || mu.weight() != nu.weight())
        throw WeightMismatch("Kronecker indices " + tuple_text({lam, mu, nu}));
    const std::vector<Partition> original{lam, mu, nu};
    const int weight = nu.weight();
    const std::vector<std::pair<std::string, std::vector<int>>> patterns = {
        {"identity", {}}, {"conjugate(mu,nu)", {1, 2}}, {"conjugate(lambda,nu)", {0, 2}},
        {"conjugate(lambda,mu)", {0, 1}}};
    std::vector<Plan> plans;
    for (const auto& [label, which] : patterns) {
        Plan plan{label, which, conjugated(original, which), {}, 0};
        const int l = plan.tuple[0].largest(), m = plan.tuple[1].largest(), n = plan.tuple[2].largest();
        plan.rule = SymmetryRule{RuleId::KronBox, {l, m, n}};
        plan.weight = static_cast<long>(l) * m * n - weight;
        plans.push_back(std::move(plan));
    }
    return finish(Family::Kronecker, original, weight, std::move(plans), {"lambda", "mu", "nu"});
}

ReductionReport reduce_plethysm(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lam.weight() * mu.weight())
        throw WeightMismatch("plethysm indices " + tuple_text({lam, mu, nu}));
    const std::vector<Partition> original{lam, mu, nu};
    const int weight = nu.weight();
    std::vector<std::pair<std::string, std::vector<int>>> patterns = {{"identity", {}}};
    if (mu.weight() % 2 == 0) patterns.push_back({"conjugate(mu,nu)", {1, 2}});
    else patterns.push_back({"conjugate(lambda,mu,nu)", {0, 1, 2}});
    std::vector<Plan> plans;
    for (const auto& [label, which] : patterns) {
        Plan plan{label, which, conjugated(original, which), {}, 0};
        const int m = plan.tuple[1].largest();
        const int n = std::max(plan.tuple[1].length(), plan.tuple[2].length());
        plan.rule = SymmetryRule{RuleId::PlethBoxInner, {m, n}};
        plan.weight = static_cast<long>(m) * n * lam.weight() - weight;
        plans.push_back(std::move(plan));
    }
    return finish(Family::Plethysm, original, weight, std::move(plans), {"lambda", "mu", "nu"});
}

nlohmann::ordered_json partition_tuple_json(const std::vector<Partition>& tuple) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : tuple) arr.push_back(p.parts());
    return arr;
}

nlohmann::ordered_json to_json(const ReductionReport& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["original"] = partition_tuple_json(r.original);
    auto chain = nlohmann::ordered_json::array();
    for (const auto& step : r.chain) {
        nlohmann::ordered_json s;
        s["rule"] = step.rule;
        s["params"] = step.params;
        s["result"] = step.result.empty() ? nlohmann::ordered_json(nullptr) : partition_tuple_json(step.result);
        chain.push_back(s);
    }
    j["chain"] = chain;
    j["reduced"] = r.reduced ? partition_tuple_json(*r.reduced) : nlohmann::ordered_json(nullptr);
    j["vanishes"] = r.vanishes();
    j["weight_before"] = r.weight_before;
    j["weight_after"] = r.weight_after;
    auto candidates = nlohmann::ordered_json::array();
    for (const auto& c : r.candidates) candidates.push_back({{"pattern", c.pattern}, {"weight", c.weight}});
    j["candidates"] = candidates;
    return j;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["rule"] = rule_name(r.rule);
    j["family"] = family_name(rule_family(r.rule));
    j["checked"] = r.checked;
    j["transformed"] = r.transformed;
    j["vanishes"] = r.vanishes;
    j["skipped"] = r.skipped;
    auto list = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
        nlohmann::ordered_json e;
        e["original"] = partition_tuple_json(c.original);
        e["rule"] = c.outcome.rule.to_string();
        e["image"] = c.outcome.image ? partition_tuple_json(*c.outcome.image) : nlohmann::ordered_json(nullptr);
        e["original_value"] = c.original_value.to_string();
        e["image_value"] = c.image_value.to_string();
        list.push_back(e);
    }
    j["counterexamples"] = list;
    j["timing"] = {{"seconds", r.seconds}};
    return j;
}

}  // namespace rectsym
