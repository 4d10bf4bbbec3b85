#include "rectsym/errors.hpp"
#include "rectsym/schur.hpp"

#include "doctest.h"

using namespace rectsym;

namespace {

std::vector<SignedSequence> signed_sequences(int n, int lo, int hi) {
    std::vector<SignedSequence> result;
    std::vector<int> current;
    auto rec = [&](auto&& self, int upper) -> void {
        if (static_cast<int>(current.size()) == n) {
            result.emplace_back(current);
            return;
        }
        for (int v = lo; v <= upper; ++v) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    rec(rec, hi);
    return result;
}

}  // namespace

TEST_CASE("schur_poly small cases") {
    CHECK(schur_poly(SignedSequence{1, 0}).to_string() == "x1 + x2");
    CHECK(schur_poly(SignedSequence{2, 0}).to_string() == "x1^2 + x1*x2 + x2^2");
    CHECK(schur_poly(SignedSequence{1, 1}).to_string() == "x1*x2");
    CHECK(schur_poly(SignedSequence{0, -1}).to_string() == "x2^-1 + x1^-1");
    CHECK_THROWS_AS(schur_poly(SignedSequence{1, 0}, 3), LengthMismatch);
    CHECK(schur_poly(Partition{1, 1, 1}, 2).is_zero());
    CHECK(schur_poly(Partition{}, 0) == IntPoly::constant(0, 1));
}

TEST_CASE("bialternant agrees with the tableau sum") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : enumerate_partitions(6, n, 6)) {
            const SignedSequence s = SignedSequence::padded(lam, n);
            CHECK_MESSAGE(schur_poly_bialternant(s) == schur_poly_tableaux(lam, n), lam.to_string() << " n=" << n);
            CHECK(schur_poly(lam, n) == schur_poly_tableaux(lam, n));
        }
    CHECK(schur_poly_bialternant(SignedSequence{1, 0, -2}) == schur_poly(SignedSequence{1, 0, -2}));
    CHECK(schur_poly(Partition{2, 1}, 6) == schur_poly_tableaux(Partition{2, 1}, 6));
}

TEST_CASE("expand_in_schur examples") {
    const IntPoly x1 = IntPoly::variable(2, 0), x2 = IntPoly::variable(2, 1);
    SchurExpansion e1 = expand_in_schur(x1 + x2, 2);
    CHECK(e1.entries().size() == 1);
    CHECK(e1.coefficient(SignedSequence{1, 0}) == 1);

    SchurExpansion e2 = expand_in_schur((x1 + x2) * (x1 + x2), 2);
    CHECK(e2.entries().size() == 2);
    CHECK(e2.coefficient(Partition{2}) == 1);
    CHECK(e2.coefficient(Partition{1, 1}) == 1);

    SchurExpansion e3 = expand_in_schur(invert_variables(x1 + x2), 2);
    CHECK(e3.entries().size() == 1);
    CHECK(e3.coefficient(SignedSequence{0, -1}) == 1);
    CHECK(e3.shift() == -1);

    CHECK(expand_in_schur(IntPoly(3)).empty());
    CHECK_THROWS_AS(expand_in_schur(x1 * x1 + x2), NotSymmetric);
    CHECK_THROWS_AS(expand_in_schur(x1, 3), ArityMismatch);
}

TEST_CASE("expand_in_schur round trip") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lam : enumerate_partitions(6, n, 6)) {
            const SchurExpansion e = expand_in_schur(schur_poly(lam, n));
            CHECK(e.entries().size() == 1);
            CHECK(e.coefficient(lam) == 1);
        }
    }
}

TEST_CASE("expansion reassembles the polynomial") {
    const IntPoly p = schur_poly(Partition{2, 1}, 3) * schur_poly(Partition{1, 1}, 3) +
                      schur_poly(SignedSequence{1, 0, -2}) * Integer(3);
    const SchurExpansion e = expand_in_schur(p);
    IntPoly sum(3);
    for (const auto& [key, c] : e.entries()) sum += schur_poly(key) * c;
    CHECK(sum == p);
}

TEST_CASE("translation lemma") {
    CHECK(verify_translation_lemma(SignedSequence{1, 0}, 1));
    CHECK(schur_poly(SignedSequence{2, 1}).to_string() == "x1^2*x2 + x1*x2^2");
    CHECK(verify_translation_lemma(SignedSequence{0, 0}, -1));
    CHECK(verify_translation_lemma(SignedSequence{2, 1}, 2));
}

TEST_CASE("inverse lemma") {
    CHECK(verify_inverse_lemma(SignedSequence{0, 0}));
    CHECK(verify_inverse_lemma(SignedSequence{1, 0}));
    CHECK(invert_variables(schur_poly(SignedSequence{1, 0})) == schur_poly(SignedSequence{0, -1}));
    CHECK(verify_inverse_lemma(SignedSequence{2, 1}));
}

TEST_CASE("both lemmas on all signed sequences with entries in [-3,3], n <= 3") {
    int instances = 0;
    for (int n = 0; n <= 3; ++n) {
        for (const auto& lam : signed_sequences(n, -3, 3)) {
            CHECK(verify_inverse_lemma(lam));
            for (int k = -2; k <= 2; ++k) CHECK(verify_translation_lemma(lam, k));
            ++instances;
        }
    }
    CHECK(instances == 1 + 7 + 28 + 84);
}

TEST_CASE("monomial symmetric polynomials") {
    CHECK(monomial_symmetric(SignedSequence{2, 0}).to_string() == "x1^2 + x2^2");
    CHECK(monomial_symmetric(SignedSequence{1, 1}).to_string() == "x1*x2");
    CHECK(monomial_symmetric(SignedSequence{1, 0, -1}).size() == 6);
}
