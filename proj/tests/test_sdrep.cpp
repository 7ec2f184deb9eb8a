#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "lgv/partition.hpp"
#include "lgv/sdrep.hpp"

using namespace lgv;
using namespace lgv::sdrep;

namespace {

// Brute-force oracle: enumerate all of S_d and bucket by cycle type.
std::map<Partition, long long> enumerate_class_sizes(int d) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, long long> sizes;
    do {
        std::vector<bool> seen(d, false);
        std::vector<int> cycles;
        for (int i = 0; i < d; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            cycles.push_back(len);
        }
        std::sort(cycles.rbegin(), cycles.rend());
        sizes[Partition(cycles)]++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sizes;
}

// Brute-force oracle for dim A_k: depth-first enumeration of multisets of
// integers from {2..d} with the given sum.
long long enumerate_dim_A(int d, int k) {
    long long count = 0;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (int p = min_part; p <= d && p <= remaining; ++p)
            self(self, remaining - p, p);
    };
    rec(rec, k, 2);
    return count;
}

std::vector<long long> integer_values(const ClassFunction& chi) {
    std::vector<long long> v;
    for (const auto& r : chi.values) v.push_back(r.as_integer());
    return v;
}

}  // namespace

TEST_CASE("conjugacy classes match brute-force enumeration for d <= 5") {
    for (int d = 1; d <= 5; ++d) {
        auto oracle = enumerate_class_sizes(d);
        auto classes = conjugacy_classes(d);
        REQUIRE(classes.size() == oracle.size());
        long long total = 0;
        for (const auto& [p, size] : classes) {
            CHECK(oracle.at(p) == size);
            total += size;
        }
        CHECK(total == factorial(d));
    }
}

TEST_CASE("conjugacy class fixed points and ordering") {
    auto c1 = conjugacy_classes(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].first == Partition{1});
    CHECK(c1[0].second == 1);

    auto c3 = conjugacy_classes(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].first == Partition{1, 1, 1});
    CHECK(c3[0].second == 1);
    CHECK(c3[1].first == Partition{2, 1});
    CHECK(c3[1].second == 3);
    CHECK(c3[2].first == Partition{3});
    CHECK(c3[2].second == 2);

    std::map<Partition, long long> c4;
    for (const auto& [p, s] : conjugacy_classes(4)) c4[p] = s;
    CHECK(c4.at(Partition{1, 1, 1, 1}) == 1);
    CHECK(c4.at(Partition{2, 1, 1}) == 6);
    CHECK(c4.at(Partition{2, 2}) == 3);
    CHECK(c4.at(Partition{3, 1}) == 8);
    CHECK(c4.at(Partition{4}) == 6);
}

TEST_CASE("degree range is enforced") {
    CHECK_THROWS_AS(conjugacy_classes(0), std::invalid_argument);
    CHECK_THROWS_AS(conjugacy_classes(11), std::invalid_argument);
    CHECK_THROWS_AS(irreducible_character(3, Partition{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(standard_character(1), std::invalid_argument);
}

TEST_CASE("irreducible characters: dimensions match the hook length formula") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& label : class_labels(d)) {
            ClassFunction chi = irreducible_character(d, label);
            CHECK(chi.dimension() == Rational(hook_length_dimension(label)));
        }
}

TEST_CASE("character table of S_4 is exact") {
    // Classes in order (1^4), (2,1,1), (2,2), (3,1), (4).
    std::map<Partition, std::vector<long long>> expected = {
        {Partition{4}, {1, 1, 1, 1, 1}},
        {Partition{3, 1}, {3, 1, -1, 0, -1}},
        {Partition{2, 2}, {2, 0, 2, -1, 0}},
        {Partition{2, 1, 1}, {3, -1, -1, 0, 1}},
        {Partition{1, 1, 1, 1}, {1, -1, 1, 1, -1}},
    };
    for (const auto& [label, values] : expected)
        CHECK(integer_values(irreducible_character(4, label)) == values);
}

TEST_CASE("standard character") {
    CHECK(integer_values(standard_character(2)) == std::vector<long long>{1, -1});
    CHECK(integer_values(standard_character(3)) == std::vector<long long>{2, 0, -1});
    CHECK(standard_character(5).at(Partition{5}) == Rational(-1));
    for (int d = 2; d <= 7; ++d) {
        ClassFunction viamn = irreducible_character(d, Partition{d - 1, 1});
        CHECK(standard_character(d).values == viamn.values);
    }
}

TEST_CASE("character orthogonality is exact for d <= 7") {
    for (int d = 2; d <= 7; ++d) {
        std::vector<ClassFunction> chars;
        for (const auto& l : class_labels(d)) chars.push_back(irreducible_character(d, l));
        for (size_t i = 0; i < chars.size(); ++i)
            for (size_t j = 0; j < chars.size(); ++j)
                CHECK(inner_product(chars[i], chars[j]) == Rational(i == j ? 1 : 0));
    }
}

TEST_CASE("exterior power characters") {
    ClassFunction std3 = standard_character(3);

    SUBCASE("p = 0 gives the trivial character") {
        ClassFunction e0 = ext_power_character(std3, 0);
        CHECK(e0.values == trivial_character(3).values);
    }
    SUBCASE("wedge^2 of the standard S_3 character is the sign character") {
        ClassFunction e2 = ext_power_character(std3, 2);
        CHECK(integer_values(e2) == std::vector<long long>{1, -1, 1});
        CHECK(e2.values == sign_character(3).values);
    }
    SUBCASE("wedge^2 of Gamma+Gamma has dimension C(4,2) = 6") {
        ClassFunction e2 = ext_power_character(scale(std3, Rational(2)), 2);
        CHECK(e2.dimension() == Rational(6));
    }
    SUBCASE("dimension at the identity is C(n,p)") {
        for (int d = 2; d <= 5; ++d)
            for (int q = 1; q <= 3; ++q)
                for (int p = 0; p <= 4; ++p) {
                    ClassFunction chi = scale(standard_character(d), Rational(q));
                    long long n = static_cast<long long>(q) * (d - 1);
                    CHECK(ext_power_character(chi, p).dimension() ==
                          Rational(binomial(static_cast<int>(n), p)));
                }
    }
}

TEST_CASE("symmetric power characters") {
    ClassFunction std3 = standard_character(3);
    CHECK(sym_power_character(std3, 1).values == std3.values);
    CHECK(integer_values(sym_power_character(std3, 2)) == std::vector<long long>{3, 1, 0});
    CHECK(sym_power_character(std3, 3).dimension() == Rational(4));
}

TEST_CASE("decompose") {
    SUBCASE("an irreducible decomposes as itself") {
        RepDecomposition dec = decompose(standard_character(3));
        REQUIRE(dec.terms.size() == 1);
        CHECK(dec.terms.at(Partition{2, 1}) == 1);
    }
    SUBCASE("Gamma tensor Gamma for S_3") {
        ClassFunction g = standard_character(3);
        RepDecomposition dec = decompose(tensor(g, g));
        CHECK(dec.terms.at(Partition{3}) == 1);
        CHECK(dec.terms.at(Partition{1, 1, 1}) == 1);
        CHECK(dec.terms.at(Partition{2, 1}) == 1);
    }
    SUBCASE("wedge^2(Gamma+Gamma) for S_3") {
        ClassFunction two_g = scale(standard_character(3), Rational(2));
        RepDecomposition dec = decompose(ext_power_character(two_g, 2));
        CHECK(dec.terms.at(Partition{3}) == 1);
        CHECK(dec.terms.at(Partition{1, 1, 1}) == 3);
        CHECK(dec.terms.at(Partition{2, 1}) == 1);
        CHECK(dec.dimension() == 6);
    }
    SUBCASE("non-characters are rejected with the offending label") {
        ClassFunction bogus{3, {Rational(1), Rational(0), Rational(0)}};
        CHECK_THROWS_AS(decompose(bogus), std::domain_error);
        ClassFunction negative = scale(trivial_character(3), Rational(-1));
        CHECK_THROWS_AS(decompose(negative), std::domain_error);
    }
}

TEST_CASE("decompose is a left inverse of character synthesis") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);  // 2..6
        RepDecomposition dec;
        dec.d = d;
        for (const auto& label : class_labels(d)) {
            long long mult = rng() % 4;  // 0..3
            if (mult > 0) dec.terms[label] = mult;
        }
        if (dec.terms.empty()) dec.terms[class_labels(d).front()] = 1;
        RepDecomposition roundtrip = decompose(character_of(dec));
        CHECK(roundtrip.terms == dec.terms);
    }
}

TEST_CASE("dim_A") {
    CHECK(dim_A(3, 2) == 1);
    CHECK(dim_A(3, 6) == 2);
    CHECK(dim_A(2, 5) == 0);
    for (int d = 2; d <= 7; ++d) CHECK(dim_A(d, 1) == 0);
    for (int d = 2; d <= 6; ++d)
        for (int k = 0; k <= 10; ++k) CHECK(dim_A(d, k) == enumerate_dim_A(d, k));
}

TEST_CASE("invariant-ring dimension equals the trivial multiplicity of Sym^k") {
    for (int d = 2; d <= 7; ++d)
        for (int k = 0; k <= 10; ++k)
            CHECK(trivial_multiplicity_sym_gamma(d, k) == dim_A(d, k));
    CHECK(trivial_multiplicity_sym_gamma(3, 2) == 1);
    CHECK(trivial_multiplicity_sym_gamma(4, 3) == 1);
    CHECK(trivial_multiplicity_sym_gamma(2, 5) == 0);
}

TEST_CASE("kernel lower bound") {
    KernelBound kb = kernel_lower_bound(3, 2, 2);
    CHECK(kb.bound == 1);
    CHECK(kb.trivial_copies == 1);

    kb = kernel_lower_bound(3, 4, 2);
    CHECK(kb.bound == 6);
    CHECK(kb.trivial_copies == 6);

    kb = kernel_lower_bound(5, 3, 3);
    CHECK(kb.bound == 1);
    CHECK(kb.trivial_copies == 1);

    CHECK_THROWS_AS(kernel_lower_bound(3, 2, 3), std::invalid_argument);
}

TEST_CASE("trivial multiplicity of wedge^p(Gamma^q) dominates C(q,p) dim A_p") {
    for (int d = 2; d <= 5; ++d)
        for (int q = 2; q <= 3; ++q)
            for (int p = 2; p <= q; ++p) {
                ClassFunction chi = scale(standard_character(d), Rational(q));
                long long mult =
                    inner_product(ext_power_character(chi, p), trivial_character(d))
                        .as_integer();
                CHECK(mult >= binomial(q, p) * dim_A(d, p));
            }
}

TEST_CASE("minimal irregularity") {
    CHECK(min_irregularity(3, 2) == 4);
    CHECK(min_irregularity(2, 0) == 0);
    CHECK(min_irregularity(6, 3) == 15);
}

TEST_CASE("bookkeeping for the d=3, q=2 covering") {
    LgReport rep = lg_bookkeeping();
    CHECK(rep.h10_dim == 4);
    CHECK(rep.mult_trivial == 4);
    CHECK(rep.mult_sign == 4);
    CHECK(rep.mult_standard == 4);
    CHECK(rep.tensor_dim == 16);
    CHECK(rep.ker_rho2_dim == 7);
}
