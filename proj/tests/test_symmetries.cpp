#include "rectsym/errors.hpp"
#include "rectsym/hall_littlewood.hpp"
#include "rectsym/symmetries.hpp"

#include "doctest.h"

using namespace rectsym;

namespace {

using Tuple = std::vector<Partition>;

Partition rect(int d, int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), d)); }

}  // namespace

TEST_CASE("rule names round trip") {
    CHECK(all_rules().size() == 10);
    for (RuleId id : all_rules()) CHECK(parse_rule(rule_name(id)) == id);
    CHECK_THROWS_AS(parse_rule("lr-flip"), ParseError);
    CHECK(SymmetryRule{RuleId::KronBox, {2, 2, 2}}.to_string() == "kron-box(l=2,m=2,n=2)");
}

TEST_CASE("apply_rule examples") {
    auto out = apply_rule({RuleId::KronBox, {2, 2, 2}}, {rect(2, 3), rect(2, 3), rect(2, 3)});
    REQUIRE(out.image);
    CHECK(*out.image == Tuple{Partition{2}, Partition{2}, Partition{2}});

    out = apply_rule({RuleId::LRBox, {1, 1, 3}}, {Partition{1}, Partition{1}, Partition{1, 1}});
    REQUIRE(out.image);
    CHECK(*out.image == Tuple{Partition{1, 1}, Partition{1, 1}, Partition{2, 1, 1}});
    CHECK(lr_oracle(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_oracle(Partition{1, 1}, Partition{1, 1}, Partition{2, 1, 1}) == 1);

    out = apply_rule({RuleId::PlethBoxInner, {1, 3}}, {Partition{2}, Partition{1}, Partition{2}});
    REQUIRE(out.image);
    CHECK(*out.image == Tuple{Partition{2}, Partition{1, 1}, Partition{2, 2}});
    CHECK(plethysm_coefficient(Partition{2}, Partition{1, 1}, Partition{2, 2}) == 1);
    CHECK(plethysm_oracle(Partition{2}, Partition{1, 1}, Partition{2, 2}) == 1);

    out = apply_rule({RuleId::KFBox, {3, 2}}, {Partition{2}, Partition{1, 1}});
    REQUIRE(out.image);
    CHECK(*out.image == Tuple{Partition{3, 1}, Partition{2, 2}});
    CHECK(kostka_foulkes_charge(Partition{3, 1}, Partition{2, 2}) == TPoly::t());

    // lambda = (1,1,1) does not fit in (l^(mn)) = (1^2)
    out = apply_rule({RuleId::KronBox, {1, 1, 2}}, {Partition{1, 1, 1}, Partition{1, 1, 1}, Partition{2, 1}});
    CHECK(out.vanishes());
    CHECK(kronecker_coefficient(Partition{1, 1, 1}, Partition{1, 1, 1}, Partition{2, 1}) == 0);
}

TEST_CASE("hypotheses are errors") {
    CHECK_THROWS_AS(apply_rule({RuleId::LRBox, {1, 1, 1}}, {Partition{1}, Partition{1}, Partition{1, 1}}),
                    PreconditionViolated);
    CHECK_THROWS_AS(apply_rule({RuleId::LRBox, {0, 1, 2}}, {Partition{1}, Partition{1}, Partition{1, 1}}),
                    PreconditionViolated);
    CHECK_THROWS_AS(apply_rule({RuleId::KFTranslate, {-1, 2}}, {Partition{1}, Partition{1}}), PreconditionViolated);
    CHECK_THROWS_AS(apply_rule({RuleId::PlethBoxOuter, {1, 0}}, {Partition{}, Partition{}, Partition{}}),
                    PreconditionViolated);
    CHECK_THROWS_AS(apply_rule({RuleId::KronBox, {1, 1}}, {Partition{}, Partition{}, Partition{}}), ArityMismatch);
    CHECK_THROWS_AS(apply_rule({RuleId::KFBox, {1, 1}}, {Partition{}, Partition{}, Partition{}}), ArityMismatch);
}

TEST_CASE("translate vanishing branch") {
    // lambda longer than n: c vanishes
    auto out = apply_rule({RuleId::LRTranslate, {1, 1}}, {Partition{1, 1}, Partition{}, Partition{1}});
    CHECK(out.vanishes());
    out = apply_rule({RuleId::KFTranslate, {1, 2}}, {Partition{1, 1, 1}, Partition{3}});
    CHECK(out.vanishes());
    CHECK(kostka_foulkes(Partition{1, 1, 1}, Partition{3}) == TPoly(0));
}

TEST_CASE("verify_rule examples") {
    SweepBounds b;
    b.max_weight = 6;
    b.box_a = 2, b.box_b = 2, b.box_c = 3;
    auto r = verify_rule(RuleId::LRBox, b);
    CHECK(r.counterexamples.empty());
    CHECK(r.transformed > 0);
    CHECK(r.vanishes > 0);

    b.box_c = 2;
    r = verify_rule(RuleId::KronBox, b);
    CHECK(r.counterexamples.empty());
    CHECK(r.transformed > 0);

    b.box_a = 3, b.box_c = 3;
    r = verify_rule(RuleId::KFBox, b);
    CHECK(r.counterexamples.empty());
    CHECK(r.vanishes > 0);
}

TEST_CASE("every rule passes a small sweep with two workers") {
    SweepBounds b;
    b.max_weight = 4;
    b.jobs = 2;
    for (RuleId id : all_rules()) {
        const auto r = verify_rule(id, b);
        CHECK_MESSAGE(r.counterexamples.empty(), rule_name(id));
        CHECK(r.checked == r.transformed + r.vanishes);
        b.jobs = 1;
        const auto serial = verify_rule(id, b);
        b.jobs = 2;
        CHECK(to_json(serial).dump() != "");
        auto a = to_json(r), c = to_json(serial);
        a.erase("timing");
        c.erase("timing");
        CHECK(a == c);
    }
}

TEST_CASE("box rules are involutions") {
    const std::vector<std::pair<RuleId, std::vector<int>>> rules = {
        {RuleId::LRBox, {2, 2, 3}}, {RuleId::KronBox, {2, 2, 2}}, {RuleId::PlethBoxInner, {2, 3}},
        {RuleId::KFBox, {3, 3}}};
    for (const auto& [id, params] : rules) {
        const Family f = rule_family(id);
        int images = 0;
        for (int w = 0; w <= 4; ++w) {
            for (const auto& a : partitions_of(w))
                for (const auto& b : partitions_of(w)) {
                    std::vector<Tuple> tuples;
                    if (f == Family::KostkaFoulkes) tuples.push_back({a, b});
                    else if (f == Family::Kronecker)
                        for (const auto& c : partitions_of(w)) tuples.push_back({a, b, c});
                    else if (f == Family::LR)
                        for (const auto& c : partitions_of(2 * w)) tuples.push_back({a, b, c});
                    else
                        for (const auto& c : partitions_of(w)) tuples.push_back({Partition{1}, a, c});
                    for (const auto& t : tuples) {
                        SymmetryOutcome out;
                        try {
                            out = apply_rule({id, params}, t);
                        } catch (const PreconditionViolated&) {
                            continue;
                        }
                        if (!out.image) continue;
                        ++images;
                        const auto back = apply_rule({id, params}, *out.image);
                        REQUIRE(back.image);
                        CHECK(*back.image == t);
                    }
                }
        }
        CHECK(images > 0);
    }
}

TEST_CASE("translate rules compose additively") {
    const Tuple t{Partition{2, 1}, Partition{1}, Partition{2, 2}};
    for (int k1 = -1; k1 <= 2; ++k1)
        for (int k2 = -1; k2 <= 2; ++k2) {
            try {
                const auto first = apply_rule({RuleId::LRTranslate, {k1, 3}}, t);
                if (!first.image) continue;
                const auto second = apply_rule({RuleId::LRTranslate, {k2, 3}}, *first.image);
                const auto direct = apply_rule({RuleId::LRTranslate, {k1 + k2, 3}}, t);
                CHECK(second.image == direct.image);
            } catch (const PreconditionViolated&) {
            }
        }
    const Tuple kf{Partition{2, 1}, Partition{1, 1, 1}};
    const auto a = apply_rule({RuleId::KFTranslate, {1, 3}}, kf);
    const auto b = apply_rule({RuleId::KFTranslate, {2, 3}}, *a.image);
    CHECK(b.image == apply_rule({RuleId::KFTranslate, {3, 3}}, kf).image);
}

TEST_CASE("q is integral") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(6, 6, 6)) CHECK_NOTHROW(outer_plethysm_data(mu, n));
    CHECK(outer_plethysm_data(Partition{2}, 3).r == 6);
    CHECK(outer_plethysm_data(Partition{2}, 3).q == 4);
}

TEST_CASE("rectangular Kronecker coefficients") {
    for (int k = 0; k <= 4; ++k) {
        const Partition a = rect(2, k), b = rect(2, 4 - k);
        CHECK(kronecker_coefficient(a, a, a) == kronecker_coefficient(b, b, b));
    }
    CHECK(kronecker_coefficient(rect(2, 5), rect(2, 5), rect(2, 5)) == 0);
    CHECK(kronecker_coefficient(rect(2, 6), rect(2, 6), rect(2, 6)) == 0);
}

TEST_CASE("reduce_kronecker") {
    auto r = reduce_kronecker(rect(2, 3), rect(2, 3), rect(2, 3));
    REQUIRE(r.reduced);
    CHECK(*r.reduced == Tuple{Partition{2}, Partition{2}, Partition{2}});
    CHECK(r.weight_before == 6);
    CHECK(r.weight_after == 2);
    REQUIRE(r.candidates.size() == 4);
    CHECK(r.candidates[0].weight == 2);
    CHECK(r.candidates[1].weight == 12);
    CHECK(r.candidates[2].weight == 12);
    CHECK(r.candidates[3].weight == 12);

    // l m n - N = 0 < 1, so even this one reduces
    r = reduce_kronecker(Partition{1}, Partition{1}, Partition{1});
    CHECK(r.weight_after == 0);
    CHECK(*r.reduced == Tuple{Partition{}, Partition{}, Partition{}});

    r = reduce_kronecker(rect(4, 2), rect(4, 2), rect(4, 2));
    CHECK(r.chain.empty());
    CHECK(r.weight_after == 8);
    CHECK(r.candidates[0].weight == 56);

    CHECK_THROWS_AS(reduce_kronecker(Partition{2}, Partition{1}, Partition{1}), WeightMismatch);

    for (int d = 2; d <= 3; ++d)
        for (int k = d * d / 2 + 1; k <= d * d; ++k) {
            r = reduce_kronecker(rect(d, k), rect(d, k), rect(d, k));
            CHECK(r.weight_after == d * (d * d - k));
            CHECK(r.weight_after < d * k);
        }
}

TEST_CASE("reductions preserve Kronecker coefficients, N <= 6") {
    KroneckerEngine engine;
    for (int w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_of(w))
            for (const auto& mu : partitions_of(w))
                for (const auto& nu : partitions_of(w)) {
                    const auto r = reduce_kronecker(lam, mu, nu);
                    const Integer g = engine.coefficient(lam, mu, nu);
                    if (r.vanishes()) CHECK(g == 0);
                    else CHECK(engine.coefficient((*r.reduced)[0], (*r.reduced)[1], (*r.reduced)[2]) == g);
                    CHECK(r.weight_after <= w);
                }
}

TEST_CASE("reduce_plethysm") {
    auto r = reduce_plethysm(Partition{1}, Partition{3, 3}, Partition{3, 3});
    CHECK(r.weight_after == 0);
    CHECK(plethysm_coefficient((*r.reduced)[0], (*r.reduced)[1], (*r.reduced)[2]) == 1);

    r = reduce_plethysm(Partition{2}, Partition{1}, Partition{2});
    CHECK(r.weight_after == 0);
    CHECK(plethysm_coefficient((*r.reduced)[0], (*r.reduced)[1], (*r.reduced)[2]) == 1);

    // The conjugate pattern (mu', nu') = ((1,1), (2,1,1)) reaches weight 2.
    r = reduce_plethysm(Partition{2}, Partition{2}, Partition{3, 1});
    CHECK(r.candidates[0].weight == 4);
    CHECK(r.weight_after == 2);
    if (r.reduced) CHECK(plethysm_coefficient((*r.reduced)[0], (*r.reduced)[1], (*r.reduced)[2]) == 0);

    CHECK_THROWS_AS(reduce_plethysm(Partition{2}, Partition{2}, Partition{3}), WeightMismatch);

    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a * b <= 6; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    for (const auto& nu : partitions_of(a * b)) {
                        const auto red = reduce_plethysm(lam, mu, nu);
                        const Integer c = plethysm_coefficient(lam, mu, nu);
                        if (red.vanishes()) CHECK(c == 0);
                        else CHECK(plethysm_oracle((*red.reduced)[0], (*red.reduced)[1], (*red.reduced)[2]) == c);
                    }
}

TEST_CASE("reduction report json") {
    const auto j = to_json(reduce_kronecker(rect(2, 3), rect(2, 3), rect(2, 3)));
    CHECK(j["family"] == "kronecker");
    CHECK(j["weight_before"] == 6);
    CHECK(j["weight_after"] == 2);
    CHECK(j["reduced"].dump() == "[[2],[2],[2]]");
    CHECK(j["chain"].size() == 1);
    CHECK(j["chain"][0]["rule"] == "kron-box");
    CHECK(j["chain"][0]["params"] == "l=2,m=2,n=2");
    CHECK(j["candidates"].size() == 4);
}
