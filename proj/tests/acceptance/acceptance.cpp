// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Usage: acceptance <path-to-rectsym-cli>
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rectsym/coefficients.hpp"
#include "rectsym/hall_littlewood.hpp"
#include "rectsym/schur.hpp"
#include "rectsym/symmetries.hpp"
#include "rectsym/tableaux.hpp"

using namespace rectsym;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Partition rect(int d, int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), d)); }

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run(const std::string& command) {
    CommandResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buffer{};
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void strip_timing(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("timing");
        for (auto& [key, value] : j.items()) strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_timing(value);
    }
}

std::vector<SignedSequence> signed_sequences(int n, int lo, int hi) {
    std::vector<SignedSequence> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int upper) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lo; v <= upper; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, hi);
    return out;
}

Outcome ac1_lemmas() {
    long instances = 0, failures = 0;
    for (int n = 0; n <= 3; ++n)
        for (const auto& lam : signed_sequences(n, -3, 3)) {
            ++instances;
            if (!verify_inverse_lemma(lam)) ++failures;
            for (int k = -3; k <= 3; ++k)
                if (!verify_translation_lemma(lam, k)) ++failures;
        }
    return {failures == 0 && instances >= 100,
            std::to_string(instances) + " sequences, " + std::to_string(failures) + " failures"};
}

Outcome ac2_oracles() {
    long disagreements = 0, lr = 0, kron = 0, pleth = 0, kf = 0;
    for (int w = 0; w <= 8; ++w)
        for (const auto& nu : partitions_of(w))
            for (int a = 0; a <= w; ++a)
                for (const auto& lam : partitions_of(a))
                    for (const auto& mu : partitions_of(w - a)) {
                        ++lr;
                        if (lr_coefficient(lam, mu, nu) != lr_oracle(lam, mu, nu)) ++disagreements;
                    }
    for (int w = 0; w <= 7; ++w) {
        const auto parts = partitions_of(w);
        for (const auto& lam : parts)
            for (const auto& mu : parts)
                for (const auto& nu : parts) {
                    ++kron;
                    if (kronecker_coefficient(lam, mu, nu) != kronecker_oracle(lam, mu, nu)) ++disagreements;
                }
    }
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            if (a * b > 8) continue;
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    for (const auto& nu : partitions_of(a * b)) {
                        ++pleth;
                        if (plethysm_coefficient(lam, mu, nu) != plethysm_oracle(lam, mu, nu)) ++disagreements;
                    }
        }
    for (int w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_of(w))
            for (const auto& mu : partitions_of(w)) {
                ++kf;
                if (kostka_foulkes(lam, mu) != kostka_foulkes_charge(lam, mu)) ++disagreements;
            }
    std::ostringstream os;
    os << "lr " << lr << ", kronecker " << kron << ", plethysm " << pleth << ", kostka-foulkes " << kf
       << " instances; " << disagreements << " disagreements";
    return {disagreements == 0, os.str()};
}

struct CliRuns {
    CommandResult first, second;
};

Outcome ac3_verify_all(const CliRuns& runs) {
    if (runs.first.exit_code != 0) return {false, "exit code " + std::to_string(runs.first.exit_code)};
    try {
        const auto j = nlohmann::json::parse(runs.first.output);
        const long total = j.at("counterexamples").get<long>();
        long checked = 0, vanishes = 0;
        for (const auto& r : j.at("rules")) {
            checked += r.at("checked").get<long>();
            vanishes += r.at("vanishes").get<long>();
        }
        const bool all_rules = j.at("rules").size() == 10;
        return {total == 0 && all_rules,
                std::to_string(j.at("rules").size()) + " rules, " + std::to_string(checked) + " instances (" +
                    std::to_string(vanishes) + " vanishing), " + std::to_string(total) + " counterexamples"};
    } catch (const std::exception& e) {
        return {false, std::string("unreadable report: ") + e.what()};
    }
}

Outcome ac4_corollary() {
    std::ostringstream os;
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
        const Integer a = kronecker_coefficient(rect(2, k), rect(2, k), rect(2, k));
        const Integer b = kronecker_coefficient(rect(2, 4 - k), rect(2, 4 - k), rect(2, 4 - k));
        ok = ok && a == b;
        os << "k=" << k << ":" << a << (a == b ? "=" : "!=") << b << " ";
    }
    for (int k = 5; k <= 6; ++k) {
        const Integer a = kronecker_coefficient(rect(2, k), rect(2, k), rect(2, k));
        ok = ok && a == 0;
        os << "k=" << k << ":" << a << " ";
    }
    return {ok, os.str()};
}

Outcome ac5_integrality() {
    long checked = 0, failures = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(6, 6, 6)) {
            ++checked;
            const Integer r = count_ssyt_brute(mu, n);
            if (r != count_ssyt(mu, n)) ++failures;
            const Integer total = r * mu.weight();
            if (!mpz_divisible_p(total.get_mpz_t(), Integer(n).get_mpz_t())) ++failures;
        }
    return {failures == 0, std::to_string(checked) + " (mu, n) pairs, " + std::to_string(failures) + " failures"};
}

Outcome ac6_hall_littlewood() {
    long checked = 0, failures = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(6, n, 6)) {
            const SignedSequence s = SignedSequence::padded(mu, n);
            ++checked;
            if (evaluate_t(hl_poly(s), 0) != schur_poly_tableaux(mu, n)) ++failures;
            if (evaluate_t(hl_poly(s), 1) != monomial_symmetric(s)) ++failures;
        }
    long kostka = 0;
    for (int w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_of(w))
            for (const auto& mu : partitions_of(w)) {
                ++kostka;
                Integer count = 0;
                for_each_ssyt_with_content(lam, mu.parts(), [&](const Tableau&) { ++count; });
                if (kostka_foulkes(lam, mu).evaluate(1) != count) ++failures;
            }
    return {failures == 0, std::to_string(checked) + " polynomials, " + std::to_string(kostka) +
                               " Kostka pairs, " + std::to_string(failures) + " failures"};
}

Outcome ac7_reduction() {
    long checked = 0, failures = 0;
    for (int w = 0; w <= 7; ++w) {
        const auto parts = partitions_of(w);
        for (const auto& lam : parts)
            for (const auto& mu : parts)
                for (const auto& nu : parts) {
                    ++checked;
                    const auto r = reduce_kronecker(lam, mu, nu);
                    const Integer naive = kronecker_coefficient(lam, mu, nu);
                    const Integer reduced =
                        r.reduced ? kronecker_coefficient((*r.reduced)[0], (*r.reduced)[1], (*r.reduced)[2]) : 0;
                    if (naive != reduced || r.weight_after > w) ++failures;
                }
    }
    std::ostringstream os;
    os << checked << " tuples, " << failures << " mismatches; ";
    for (int d = 2; d <= 3; ++d)
        for (int k = d * d / 2 + 1; k <= d * d; ++k) {
            const auto r = reduce_kronecker(rect(d, k), rect(d, k), rect(d, k));
            if (r.weight_after != d * (d * d - k) || r.weight_after >= d * k) ++failures;
        }

    constexpr int kRepeat = 7;
    const Partition p = rect(3, 8);
    std::vector<double> naive_times, reduced_times;
    Integer naive_value, reduced_value;
    for (int i = 0; i < kRepeat; ++i) {
        auto start = Clock::now();
        naive_value = kronecker_coefficient(p, p, p);
        naive_times.push_back(seconds_since(start));
        start = Clock::now();
        const auto r = reduce_kronecker(p, p, p);
        reduced_value = kronecker_coefficient((*r.reduced)[0], (*r.reduced)[1], (*r.reduced)[2]);
        reduced_times.push_back(seconds_since(start));
    }
    std::sort(naive_times.begin(), naive_times.end());
    std::sort(reduced_times.begin(), reduced_times.end());
    const double naive = naive_times[kRepeat / 2], reduced = reduced_times[kRepeat / 2];
    if (naive_value != reduced_value || !(reduced < naive)) ++failures;
    os << "(3^8): weight 24 -> 3, median " << naive << "s naive vs " << reduced << "s reduced";
    return {failures == 0, os.str()};
}

Outcome ac8_determinism(const CliRuns& runs) {
    if (runs.first.exit_code != 0 || runs.second.exit_code != 0) return {false, "a verify run failed"};
    try {
        auto a = nlohmann::json::parse(runs.first.output);
        auto b = nlohmann::json::parse(runs.second.output);
        strip_timing(a);
        strip_timing(b);
        return {a == b, a == b ? "reports identical without timing fields" : "reports differ"};
    } catch (const std::exception& e) {
        return {false, std::string("unreadable report: ") + e.what()};
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <rectsym-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string verify_all = "\"" + cli + "\" verify all --max-weight 6 --boxes 3,3,3 --k 2 --json";

    CliRuns runs;
    double verify_seconds = 0;
    bool failed = false;

    auto report = [&](int id, const std::string& title, double budget, const std::function<Outcome()>& check,
                      double extra_seconds = 0) {
        const auto start = Clock::now();
        Outcome o = check();
        const double elapsed = seconds_since(start) + extra_seconds;
        const bool in_time = elapsed < budget;
        const bool ok = o.ok && in_time;
        failed = failed || !ok;
        std::printf("AC%d %s %s: %s [%.2fs, budget %.0fs%s]\n", id, ok ? "PASS" : "FAIL", title.c_str(),
                    o.detail.c_str(), elapsed, budget, in_time ? "" : ", over budget");
        std::fflush(stdout);
    };

    report(1, "translation and inverse lemmas", 30, ac1_lemmas);
    report(2, "main path equals oracle", 600, ac2_oracles);
    {
        const auto start = Clock::now();
        runs.first = run(verify_all);
        verify_seconds = seconds_since(start);
    }
    report(3, "verify all, max-weight 6, boxes 3,3,3, |k| <= 2", 900, [&] { return ac3_verify_all(runs); },
           verify_seconds);
    report(4, "rectangular Kronecker corollary, d = 2", 60, ac4_corollary);
    report(5, "outer plethysm q is integral", 60, ac5_integrality);
    report(6, "Hall-Littlewood specializations and K(1)", 120, ac6_hall_littlewood);
    report(7, "reduction soundness and profit", 600, ac7_reduction);
    runs.second = run(verify_all);
    report(8, "verify all --json is deterministic", 900, [&] { return ac8_determinism(runs); });
    return failed ? 1 : 0;
}
