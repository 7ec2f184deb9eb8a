#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "lgv/extalg.hpp"

using namespace lgv;
using namespace lgv::extalg;

namespace {

std::vector<int> identity_perm(int d) {
    std::vector<int> s(d);
    for (int i = 0; i < d; ++i) s[i] = i + 1;
    return s;
}

std::vector<int> transposition(int d, int a, int b) {
    std::vector<int> s = identity_perm(d);
    std::swap(s[a - 1], s[b - 1]);
    return s;
}

AlternatingTensor random_two_form(const FormSpace& s, std::mt19937& rng) {
    AlternatingTensor t = zero_tensor(s, 2);
    int n = s.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            long long num = static_cast<long long>(rng() % 7) - 3;
            if (num == 0) continue;
            long long den = 1 + static_cast<long long>(rng() % 3);
            t.coeff[{a, b}] = Rational(num, den);
        }
    return t;
}

}  // namespace

TEST_CASE("form space shape") {
    FormSpace s(3, 2);
    CHECK(s.dim() == 4);
    CHECK(s.index(1, 1) == 0);
    CHECK(s.index(2, 1) == 1);
    CHECK(s.index(1, 2) == 2);
    CHECK(s.index(2, 2) == 3);
    CHECK(s.basis_name(1) == "w^2_1");
    CHECK_THROWS_AS(s.index(3, 1), std::out_of_range);
    CHECK_THROWS_AS(FormSpace(1, 2), std::invalid_argument);
}

TEST_CASE("sum form for d=2 collapses to twice a pure wedge") {
    FormSpace s(2, 2);
    AlternatingTensor t = build_sum_form(s, {1, 2});
    REQUIRE(t.coeff.size() == 1);
    CHECK(t.coeff.at({0, 1}) == Rational(2));
}

TEST_CASE("degree-1 sum form vanishes by the defining relation") {
    for (int d = 2; d <= 5; ++d) {
        FormSpace s(d, 2);
        CHECK(build_sum_form(s, {1}).is_zero());
    }
}

TEST_CASE("sum form rejects repeated indices") {
    FormSpace s(3, 3);
    CHECK_THROWS_AS(build_sum_form(s, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_sum_form(s, {1, 4}), std::out_of_range);
}

TEST_CASE("the d=3 sum form has the expected coefficients") {
    FormSpace s(3, 2);
    AlternatingTensor t = build_sum_form(s, {1, 2});
    // Basis order: w^1_1, w^2_1, w^1_2, w^2_2.
    CHECK(t.coeff.at({0, 2}) == Rational(2));
    CHECK(t.coeff.at({0, 3}) == Rational(1));
    CHECK(t.coeff.at({1, 2}) == Rational(1));
    CHECK(t.coeff.at({1, 3}) == Rational(2));
    CHECK(t.coeff.size() == 4);
}

TEST_CASE("two-term expansion identity") {
    CHECK(verify_omega_identity());
    CHECK_FALSE(verify_omega_identity_perturbed());

    SUBCASE("swapping the lower indices on one side flips the sign") {
        FormSpace s(3, 2);
        AlternatingTensor lhs = build_sum_form(s, {1, 2});
        AlternatingTensor swapped = build_sum_form(s, {2, 1});
        CHECK_FALSE(lhs == swapped);
        CHECK(add(lhs, swapped).is_zero());
    }
}

TEST_CASE("permutation action") {
    FormSpace s(3, 2);

    SUBCASE("identity fixes everything") {
        AlternatingTensor t = build_sum_form(s, {1, 2});
        CHECK(apply_permutation(t, identity_perm(3)) == t);
    }
    SUBCASE("a transposition relabels a pure basis form") {
        AlternatingTensor t = wedge(s, {pullback_form(s, 1, 1)});
        AlternatingTensor expected = wedge(s, {pullback_form(s, 2, 1)});
        CHECK(apply_permutation(t, transposition(3, 1, 2)) == expected);
    }
    SUBCASE("a 3-cycle fixes the sum form") {
        AlternatingTensor t = build_sum_form(s, {1, 2});
        CHECK(apply_permutation(t, {2, 3, 1}) == t);
    }
    SUBCASE("invalid permutations are rejected") {
        AlternatingTensor t = build_sum_form(s, {1, 2});
        CHECK_THROWS_AS(apply_permutation(t, {1, 1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(apply_permutation(t, {1, 2}), std::invalid_argument);
    }
}

TEST_CASE("sum form is invariant under all generating transpositions, d <= 7") {
    for (int d = 2; d <= 7; ++d) {
        FormSpace s(d, 2);
        AlternatingTensor t = build_sum_form(s, {1, 2});
        for (int k = 1; k < d; ++k)
            CHECK(apply_permutation(t, transposition(d, k, k + 1)) == t);
    }
}

TEST_CASE("rank of the sum form is 2(d-1)") {
    for (int d = 2; d <= 7; ++d) {
        FormSpace s(d, 2);
        CHECK(two_form_rank(build_sum_form(s, {1, 2})) == 2 * (d - 1));
    }
}

TEST_CASE("d=5 sum form matches the block-matrix description") {
    // Coefficient of w^a_1 ^ w^b_2 must be 2 on the diagonal and 1 off it,
    // giving a block [[0,B],[-B^t,0]] with B = I + ones, which is invertible.
    FormSpace s(5, 2);
    AlternatingTensor t = build_sum_form(s, {1, 2});
    int m = 4;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Rational expected(a == b ? 2 : 1);
            CHECK(t.coeff.at({s.index(a + 1, 1), s.index(b + 1, 2)}) == expected);
        }
    CHECK(t.coeff.size() == 16);
    CHECK(two_form_rank(t) == 8);
}

TEST_CASE("rank edge cases and decomposability") {
    FormSpace s(3, 2);
    CHECK(two_form_rank(zero_tensor(s, 2)) == 0);
    CHECK(is_decomposable(zero_tensor(s, 2)));

    AlternatingTensor pure = wedge(s, {pullback_form(s, 1, 1), pullback_form(s, 1, 2)});
    CHECK(two_form_rank(pure) == 2);
    CHECK(is_decomposable(pure));

    CHECK_FALSE(is_decomposable(build_sum_form(s, {1, 2})));
    CHECK_THROWS_AS(two_form_rank(zero_tensor(s, 3)), std::invalid_argument);
}

TEST_CASE("permutation action is linear") {
    std::mt19937 rng(777);
    for (int d = 3; d <= 5; ++d) {
        FormSpace s(d, 2);
        for (int trial = 0; trial < 10; ++trial) {
            AlternatingTensor a = random_two_form(s, rng);
            AlternatingTensor b = random_two_form(s, rng);
            Rational c(static_cast<long long>(rng() % 5) - 2, 1 + rng() % 3);
            std::vector<int> sigma = identity_perm(d);
            std::shuffle(sigma.begin(), sigma.end(), rng);

            AlternatingTensor lhs = apply_permutation(add(scale(a, c), b), sigma);
            AlternatingTensor rhs =
                add(scale(apply_permutation(a, sigma), c), apply_permutation(b, sigma));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rank is invariant under the permutation action") {
    std::mt19937 rng(31337);
    for (int d = 3; d <= 5; ++d) {
        FormSpace s(d, 2);
        for (int trial = 0; trial < 10; ++trial) {
            AlternatingTensor t = random_two_form(s, rng);
            std::vector<int> sigma = identity_perm(d);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            CHECK(two_form_rank(apply_permutation(t, sigma)) == two_form_rank(t));
        }
    }
}

TEST_CASE("degree-3 sum forms are built and invariant") {
    FormSpace s(4, 3);
    AlternatingTensor t = build_sum_form(s, {1, 2, 3});
    CHECK(t.degree == 3);
    CHECK_FALSE(t.is_zero());
    for (int k = 1; k < 4; ++k)
        CHECK(apply_permutation(t, transposition(4, k, k + 1)) == t);

    // Permuting the lower indices by an odd permutation flips the sign.
    AlternatingTensor swapped = build_sum_form(s, {2, 1, 3});
    CHECK(add(t, swapped).is_zero());
}

TEST_CASE("wedge antisymmetry") {
    FormSpace s(4, 3);
    OneForm a = pullback_form(s, 2, 1);
    OneForm b = pullback_form(s, 4, 3);  // expanded through the relation
    AlternatingTensor ab = wedge(s, {a, b});
    AlternatingTensor ba = wedge(s, {b, a});
    CHECK(add(ab, ba).is_zero());
    CHECK(wedge(s, {a, a}).is_zero());
}
