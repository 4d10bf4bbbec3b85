#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectsym/coefficients.hpp"
#include "rectsym/errors.hpp"
#include "rectsym/symmetries.hpp"

using namespace rectsym;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitMismatch = 3;

struct Options {
    std::string family;
    std::string rule;
    std::string lambda, mu, nu;
    std::string box;
    std::string boxes = "3,3,3";
    std::optional<int> k;
    std::optional<int> n;
    std::string method = "main";
    bool check = false;
    bool execute = false;
    bool as_json = false;
    int max_weight = 6;
    int jobs = 1;
    int repeat = 5;
};

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw ParseError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    return values;
}

Partition required_partition(const std::string& text, const char* flag) {
    if (text.empty()) throw ParseError(std::string("missing ") + flag);
    return parse_partition(text);
}

std::vector<Partition> indices_for(Family family, const Options& o) {
    std::vector<Partition> idx{required_partition(o.lambda, "--lambda"), required_partition(o.mu, "--mu")};
    if (family_arity(family) == 3) idx.push_back(required_partition(o.nu, "--nu"));
    return idx;
}

json tuple_json(const std::vector<Partition>& t) { return partition_tuple_json(t); }

Method parse_method(const std::string& text) {
    if (text == "main") return Method::Main;
    if (text == "oracle") return Method::Oracle;
    throw ParseError("unknown method '" + text + "'");
}

int cmd_compute(const Options& o) {
    const Family family = parse_family(o.family);
    const auto idx = indices_for(family, o);
    if (o.check) {
        const TPoly main = evaluate(CoefficientQuery{family, idx, Method::Main});
        const TPoly oracle = evaluate(CoefficientQuery{family, idx, Method::Oracle});
        const bool agree = main == oracle;
        if (o.as_json) {
            json j;
            j["family"] = family_name(family);
            j["indices"] = tuple_json(idx);
            j["main"] = main.to_string();
            j["oracle"] = oracle.to_string();
            j["agree"] = agree;
            std::cout << j.dump(2) << "\n";
        } else if (agree) {
            std::cout << main << "\n";
        } else {
            std::cout << "main: " << main << "\noracle: " << oracle << "\n";
        }
        if (!agree) {
            std::cerr << "error: main and oracle paths disagree\n";
            return kExitMismatch;
        }
        return 0;
    }
    const Method method = parse_method(o.method);
    const TPoly value = evaluate(CoefficientQuery{family, idx, method});
    if (o.as_json) {
        json j;
        j["family"] = family_name(family);
        j["indices"] = tuple_json(idx);
        j["method"] = o.method;
        j["value"] = value.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

SweepBounds bounds_from(const Options& o) {
    SweepBounds b;
    const auto boxes = parse_ints(o.boxes);
    if (boxes.size() != 3) throw ParseError("--boxes takes three values a,b,c");
    for (int v : boxes)
        if (v < 0) throw ParseError("--boxes values must be nonnegative");
    if (o.max_weight < 0) throw ParseError("--max-weight must be nonnegative");
    if (o.jobs < 1) throw ParseError("--jobs must be positive");
    b.box_a = boxes[0], b.box_b = boxes[1], b.box_c = boxes[2];
    b.max_k = o.k ? std::abs(*o.k) : 2;
    b.max_weight = o.max_weight;
    b.jobs = o.jobs;
    return b;
}

void print_counterexample(const Counterexample& c) {
    std::cout << "  counterexample: ";
    for (const auto& p : c.original) std::cout << p << " ";
    std::cout << c.outcome.to_string() << ": " << c.original_value << " != " << c.image_value << "\n";
}

// One instance: parameters come from --box in order, except that k comes
// from --k and n from --n when given.
int verify_single(RuleId id, const Options& o) {
    const auto idx = indices_for(rule_family(id), o);
    const auto names = rule_parameter_names(id);
    const auto box = o.box.empty() ? std::vector<int>{} : parse_ints(o.box);
    std::size_t next = 0;
    std::vector<int> params;
    for (const auto& name : names) {
        if (name == "k" && o.k && id != RuleId::KFBox) params.push_back(*o.k);
        else if (name == "n" && o.n) params.push_back(*o.n);
        else if (next < box.size()) params.push_back(box[next++]);
        else throw ParseError("missing value for parameter " + name + " of " + rule_name(id));
    }
    const SymmetryRule rule{id, params};
    const SymmetryOutcome out = apply_rule(rule, idx);
    CoefficientEngine engine;
    const TPoly lhs = engine.value(rule_family(id), idx);
    const TPoly rhs = out.image ? engine.value(rule_family(id), *out.image) : TPoly();
    const bool ok = lhs == rhs;
    if (o.as_json) {
        json j;
        j["rule"] = rule.to_string();
        j["original"] = tuple_json(idx);
        j["image"] = out.image ? tuple_json(*out.image) : json(nullptr);
        j["vanishes"] = out.vanishes();
        j["original_value"] = lhs.to_string();
        j["image_value"] = rhs.to_string();
        j["holds"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.to_string() << "\n" << "coefficient: " << lhs << (ok ? " == " : " != ") << rhs << "\n";
    }
    return ok ? 0 : kExitCounterexample;
}

int cmd_verify(const Options& o) {
    std::vector<RuleId> rules;
    if (o.rule == "all") rules = all_rules();
    else rules.push_back(parse_rule(o.rule));
    if (!o.lambda.empty()) {
        if (rules.size() != 1) throw ParseError("a single instance needs a specific rule");
        return verify_single(rules.front(), o);
    }
    const SweepBounds bounds = bounds_from(o);
    const auto start = std::chrono::steady_clock::now();
    std::size_t failures = 0;
    json rule_reports = json::array();
    for (RuleId id : rules) {
        const VerifyReport r = verify_rule(id, bounds);
        failures += r.counterexamples.size();
        if (o.as_json) {
            rule_reports.push_back(to_json(r));
        } else {
            std::cout << rule_name(id) << ": checked " << r.checked << " (transformed " << r.transformed
                      << ", vanishes " << r.vanishes << ", skipped " << r.skipped << "), counterexamples "
                      << r.counterexamples.size() << "\n";
            for (const auto& c : r.counterexamples) print_counterexample(c);
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.as_json) {
        json j;
        j["bounds"] = {{"max_weight", bounds.max_weight},
                       {"boxes", {bounds.box_a, bounds.box_b, bounds.box_c}},
                       {"max_k", bounds.max_k}};
        j["rules"] = rule_reports;
        j["counterexamples"] = failures;
        j["timing"] = {{"seconds", seconds}, {"jobs", bounds.jobs}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "total counterexamples: " << failures << "\n";
    }
    return failures == 0 ? 0 : kExitCounterexample;
}

TPoly coefficient_of(Family family, const std::vector<Partition>& t) {
    return evaluate(CoefficientQuery{family, t, Method::Main});
}

int cmd_reduce(const Options& o) {
    const Family family = parse_family(o.family);
    if (family != Family::Kronecker && family != Family::Plethysm)
        throw ParseError("reduce supports kronecker and plethysm");
    const auto idx = indices_for(family, o);
    const ReductionReport r =
        family == Family::Kronecker ? reduce_kronecker(idx[0], idx[1], idx[2]) : reduce_plethysm(idx[0], idx[1], idx[2]);

    std::optional<TPoly> before, after;
    if (o.execute) {
        before = coefficient_of(family, idx);
        after = r.reduced ? coefficient_of(family, *r.reduced) : TPoly();
    }
    const bool mismatch = o.execute && *before != *after;

    if (o.as_json) {
        json j = to_json(r);
        if (o.execute) {
            j["execute"] = {{"original_value", before->to_string()},
                            {"reduced_value", after->to_string()},
                            {"agree", !mismatch}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : r.candidates) std::cout << "candidate " << c.pattern << ": weight " << c.weight << "\n";
        if (r.chain.empty()) {
            std::cout << "no profitable reduction; weight stays " << r.weight_before << "\n";
        } else {
            for (const auto& step : r.chain) {
                std::cout << "step " << step.rule;
                if (!step.params.empty()) std::cout << " [" << step.params << "]";
                std::cout << " -> ";
                if (step.result.empty()) std::cout << "vanishes";
                else
                    for (std::size_t i = 0; i < step.result.size(); ++i) std::cout << (i ? " " : "") << step.result[i];
                std::cout << "\n";
            }
            std::cout << "weight " << r.weight_before << " -> " << r.weight_after << (r.vanishes() ? " (vanishes)" : "")
                      << "\n";
        }
        if (o.execute) std::cout << "values: " << *before << (mismatch ? " != " : " == ") << *after << "\n";
    }
    if (mismatch) {
        std::cerr << "error: reduction changed the coefficient\n";
        return kExitMismatch;
    }
    return 0;
}

struct BenchCase {
    Family family;
    std::vector<Partition> indices;
};

Partition rect(int d, int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), d)); }

std::vector<BenchCase> default_bench_cases(const std::string& family) {
    std::vector<BenchCase> cases;
    if (family.empty() || family == "kronecker") {
        cases.push_back({Family::Kronecker, {rect(2, 3), rect(2, 3), rect(2, 3)}});
        for (int k : {6, 7, 8}) cases.push_back({Family::Kronecker, {rect(3, k), rect(3, k), rect(3, k)}});
    }
    if (family.empty() || family == "plethysm")
        for (int k : {2, 3, 4}) cases.push_back({Family::Plethysm, {Partition{1}, rect(k, 2), rect(k, 2)}});
    return cases;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

// Each timed run starts from cold caches: the engines are rebuilt per run
// and the coefficient functions keep only per-call state.
template <class F>
double time_once(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const Options& o) {
    std::vector<BenchCase> cases;
    if (!o.lambda.empty()) {
        const Family family = parse_family(o.family.empty() ? "kronecker" : o.family);
        cases.push_back({family, indices_for(family, o)});
    } else {
        cases = default_bench_cases(o.family);
    }
    if (o.repeat < 1) throw ParseError("--repeat must be positive");

    json rows = json::array();
    bool mismatch = false;
    for (const auto& c : cases) {
        const ReductionReport r = c.family == Family::Kronecker
                                      ? reduce_kronecker(c.indices[0], c.indices[1], c.indices[2])
                                      : reduce_plethysm(c.indices[0], c.indices[1], c.indices[2]);
        TPoly naive_value, reduced_value;
        std::vector<double> naive_times, reduced_times;
        for (int i = 0; i < o.repeat; ++i) {
            naive_times.push_back(time_once([&] { naive_value = coefficient_of(c.family, c.indices); }));
            reduced_times.push_back(time_once([&] {
                const ReductionReport plan = c.family == Family::Kronecker
                                                 ? reduce_kronecker(c.indices[0], c.indices[1], c.indices[2])
                                                 : reduce_plethysm(c.indices[0], c.indices[1], c.indices[2]);
                reduced_value = plan.reduced ? coefficient_of(c.family, *plan.reduced) : TPoly();
            }));
        }
        const bool agree = naive_value == reduced_value;
        mismatch = mismatch || !agree;
        json row;
        row["family"] = family_name(c.family);
        row["indices"] = tuple_json(c.indices);
        row["weight_before"] = r.weight_before;
        row["weight_after"] = r.weight_after;
        row["value"] = naive_value.to_string();
        row["reduced_value"] = reduced_value.to_string();
        row["agree"] = agree;
        row["timing"] = {{"naive_median_seconds", median(naive_times)},
                         {"reduced_median_seconds", median(reduced_times)},
                         {"repeat", o.repeat}};
        rows.push_back(row);
    }
    if (o.as_json) {
        json j;
        j["cases"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family      weight  reduced  value  naive_s     reduced_s   indices\n";
        for (const auto& row : rows) {
            std::ostringstream idx;
            for (const auto& p : row["indices"]) idx << p.dump() << " ";
            std::printf("%-10s  %6d  %7d  %5s  %-10.3g  %-10.3g  %s\n", row["family"].get<std::string>().c_str(),
                        row["weight_before"].get<int>(), row["weight_after"].get<int>(),
                        row["value"].get<std::string>().c_str(), row["timing"]["naive_median_seconds"].get<double>(),
                        row["timing"]["reduced_median_seconds"].get<double>(), idx.str().c_str());
        }
    }
    if (mismatch) {
        std::cerr << "error: reduced path changed a value\n";
        return kExitMismatch;
    }
    return 0;
}

void add_indices(CLI::App* cmd, Options& o) {
    cmd->add_option("--lambda", o.lambda, "first partition, e.g. 3,1,1 (0 for empty)");
    cmd->add_option("--mu", o.mu, "second partition");
    cmd->add_option("--nu", o.nu, "third partition");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficients of symmetric functions and their rectangle symmetries"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "compute one coefficient");
    compute->add_option("family", o.family, "lr | kronecker | plethysm | kostka-foulkes")->required();
    add_indices(compute, o);
    compute->add_option("--method", o.method, "main | oracle");
    compute->add_flag("--check", o.check, "run both paths and require agreement");
    compute->add_flag("--json", o.as_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "check symmetry rules exhaustively or on one instance");
    verify->add_option("rule", o.rule, "rule id or 'all'")->required();
    add_indices(verify, o);
    verify->add_option("--box", o.box, "rule parameters for a single instance, e.g. 2,2,2");
    verify->add_option("--k", o.k, "translation k for a single instance; bound on |k| for sweeps");
    verify->add_option("--n", o.n, "height n for a single instance");
    verify->add_option("--max-weight", o.max_weight, "largest tuple weight in sweeps");
    verify->add_option("--boxes", o.boxes, "sweep bounds a,b,c on the rule parameters");
    verify->add_option("--jobs", o.jobs, "worker threads");
    verify->add_flag("--json", o.as_json, "JSON output");

    auto* reduce = app.add_subcommand("reduce", "plan a weight-reducing chain of symmetries");
    reduce->add_option("family", o.family, "kronecker | plethysm")->required();
    add_indices(reduce, o);
    reduce->add_flag("--execute", o.execute, "compute both coefficients and require equality");
    reduce->add_flag("--json", o.as_json, "JSON output");

    auto* bench = app.add_subcommand("bench", "time naive against reduce-then-compute");
    bench->add_option("family", o.family, "kronecker | plethysm (default: both)");
    add_indices(bench, o);
    bench->add_option("--repeat", o.repeat, "runs per path; medians are reported");
    bench->add_flag("--json", o.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitMalformed;
    }

    try {
        if (*compute) return cmd_compute(o);
        if (*verify) return cmd_verify(o);
        if (*reduce) return cmd_reduce(o);
        if (*bench) return cmd_bench(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const InvalidPartition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const WeightMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const ArityTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return 0;
}
