#include "segre/newcomb.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <future>
#include <vector>

using namespace segre;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

void check_all_algorithms(const Spec& spec, const std::vector<BigInt>& expected) {
    CHECK(newcomb_brute(spec).values() == expected);
    CHECK(newcomb_dillon_roselle(spec).values() == expected);
    CHECK(newcomb_recurrence(spec).values() == expected);
    CHECK(newcomb_positive(spec).values() == expected);
    CHECK(newcomb_convolution(spec).values() == expected);
}

}  // namespace

TEST_CASE("golden h-vectors across all five algorithms") {
    check_all_algorithms(Spec({1, 1, 1}), big({1, 4, 1}));
    check_all_algorithms(Spec({1, 1, 2}), big({1, 7, 4}));
    check_all_algorithms(Spec({2, 2}), big({1, 4, 1}));
    check_all_algorithms(Spec({1}), big({1}));
    check_all_algorithms(Spec({1, 2}), big({1, 2}));
}

TEST_CASE("dillon-roselle closed family [1,1,b]") {
    for (long long b = 1; b <= 20; ++b) {
        Spec spec({1, 1, static_cast<int>(b)});
        CHECK(newcomb_dillon_roselle(spec).values() == big({1, 3 * b + 1, b * b}));
    }
}

TEST_CASE("recurrence base and hand-checked step") {
    CHECK(newcomb_recurrence(Spec({1})).values() == big({1}));
    CHECK(newcomb_recurrence(Spec({7})).values() == big({1}));
    // From (1,1) for [1,1] with d = 4, b_i = 1: h_1 = 2*1 + 2*1, h_2 = 1*1.
    CHECK(newcomb_recurrence(Spec({1, 1, 1})).values() == big({1, 4, 1}));
    CHECK(newcomb_recurrence(Spec({1, 1, 2})).values() == big({1, 7, 4}));
}

TEST_CASE("positive formula hand-checked instances") {
    // [1,1,2], k=1: i_2 = 0 gives C(2,1)C(2,1) = 4, i_2 = 1 gives C(1,0)C(3,1) = 3.
    CHECK(newcomb_positive(Spec({1, 1, 2})).values()[1] == 7);
    CHECK(newcomb_positive(Spec({1, 1})).values() == big({1, 1}));
    for (const auto& parts : testsupport::compositions_up_to(8, 3)) {
        CHECK(newcomb_positive(Spec(parts)).values().front() == 1);
    }
}

TEST_CASE("hadamard fold instances") {
    CHECK(hadamard_h_fold({BigInt(1)}, 1, {BigInt(1)}, 1) == big({1, 1}));
    CHECK(hadamard_h_fold(big({1, 1}), 2, {BigInt(1)}, 1) == big({1, 4, 1}));
    CHECK(newcomb_convolution(Spec({4})).values() == big({1}));
}

TEST_CASE("five-way agreement on every spec with four or fewer parts") {
    for (const auto& parts : testsupport::compositions_up_to(8, 4)) {
        Spec spec(parts);
        const auto expected = newcomb_brute(spec).values();
        CHECK(newcomb_dillon_roselle(spec).values() == expected);
        CHECK(newcomb_recurrence(spec).values() == expected);
        CHECK(newcomb_positive(spec).values() == expected);
        CHECK(newcomb_convolution(spec).values() == expected);
    }
}

TEST_CASE("eulerian specialization for all-ones specs") {
    for (int n = 1; n <= 7; ++n) {
        Spec spec(std::vector<int>(static_cast<std::size_t>(n), 1));
        CHECK(newcomb_recurrence(spec).to_polynomial() == euler_polynomial(n));
    }
}

TEST_CASE("gorenstein specs have palindromic vectors") {
    for (const Spec& spec : {Spec({2, 2}), Spec({2, 2, 2}), Spec({3, 3}), Spec({1, 1, 1, 1})}) {
        const auto v = newcomb_dillon_roselle(spec).values();
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(v[i] == v[v.size() - 1 - i]);
        }
    }
}

TEST_CASE("structural invariants hold for a grid of specs") {
    // NewcombVector construction re-derives and checks normalization, degree,
    // top coefficient, sum, and h_1; a throw here is a failure.
    for (const auto& parts : testsupport::all_specs(4, 6)) {
        CHECK_NOTHROW(newcomb_dillon_roselle(Spec(parts)));
    }
    for (const Spec& spec : {Spec({6, 6, 6, 6, 6}), Spec({1, 2, 3, 5, 6}), Spec({6, 1, 6, 1, 6})}) {
        CHECK_NOTHROW(newcomb_dillon_roselle(spec));
        CHECK(newcomb_dillon_roselle(spec).values() == newcomb_recurrence(spec).values());
    }
}

TEST_CASE("regularity, top coefficient, gorenstein flag") {
    CHECK(regularity(Spec({1, 1, 1})) == 2);
    CHECK(regularity(Spec({1, 1, 2})) == 2);
    CHECK(regularity(Spec({5})) == 0);
    CHECK(regularity(Spec({2, 2, 2})) == 4);

    CHECK(top_coefficient(Spec({1, 1, 2})) == 4);
    CHECK_FALSE(is_gorenstein(Spec({1, 1, 2})));
    CHECK(top_coefficient(Spec({2, 2, 2})) == 1);
    CHECK(is_gorenstein(Spec({2, 2, 2})));
    CHECK(is_gorenstein(Spec({3})));
}

TEST_CASE("closed-form families") {
    CHECK(family_h_vector(Family::r2, 2).values() == big({1, 7, 4}));
    CHECK(family_h_vector(Family::r3a, 2).values() == big({1, 12, 15, 2}));
    CHECK(family_h_vector(Family::r3b, 1).values() == big({1, 11, 11, 1}));

    CHECK_THROWS_AS(family_h_vector(Family::r2, 0), std::domain_error);
    CHECK_THROWS_AS(family_h_vector(Family::r3a, 1), std::domain_error);
    CHECK_THROWS_AS(family_h_vector(Family::r3b, 0), std::domain_error);

    for (long long b = 1; b <= 8; ++b) {
        CHECK(family_h_vector(Family::r2, b).values() ==
              newcomb_recurrence(Spec({1, 1, static_cast<int>(b)})).values());
        if (b >= 2) {
            CHECK(family_h_vector(Family::r3a, b).values() ==
                  newcomb_positive(Spec({1, 2, static_cast<int>(b)})).values());
        }
        CHECK(family_h_vector(Family::r3b, b).values() ==
              newcomb_convolution(Spec({1, 1, 1, static_cast<int>(b)})).values());
    }
}

TEST_CASE("uncorrected textbook recursion is wrong, ours is not") {
    const Spec spec({1, 1, 2});
    const auto brute = newcomb_brute(spec).values();
    CHECK(newcomb_recurrence(spec).values() == brute);
    CHECK(testsupport::uncorrected_flw_recursion(spec) != brute);
    // The uncorrected weights only survive while every decremented part is 1.
    CHECK(testsupport::uncorrected_flw_recursion(Spec({1, 1, 1})) ==
          newcomb_brute(Spec({1, 1, 1})).values());
}

TEST_CASE("segre hilbert function and series") {
    CHECK(segre_hilbert_function(Spec({1, 1, 1}), 3) == 64);
    CHECK(segre_hilbert_function(Spec({1, 1, 2}), 2) == 9 * 6);
    CHECK(segre_hilbert_function(Spec({2, 3}), 0) == 1);

    RationalSeries series = segre_series(Spec({1, 1, 2}));
    CHECK(series.pole_order() == 5);
    CHECK(series.numerator() == LaurentPolynomial::from_integers(big({1, 7, 4})));
    for (long long l = 0; l <= 8; ++l) {
        CHECK(expansion_coefficient(series, l) == Rational(segre_hilbert_function(Spec({1, 1, 2}), l)));
    }
    // The h-vector is literally recoverable from the Hilbert function.
    SequenceSpec hf{[](long long l) { return Rational(segre_hilbert_function(Spec({1, 1, 1}), l)); }, 0};
    CHECK(h_from_sequence(hf, 4, 3) == LaurentPolynomial::from_integers(big({1, 4, 1})));
}

TEST_CASE("concurrent recurrence calls agree with sequential results") {
    const Spec spec({3, 2, 4});
    const auto expected = newcomb_recurrence(spec).values();
    std::vector<std::future<std::vector<BigInt>>> futures;
    for (int i = 0; i < 8; ++i) {
        futures.push_back(std::async(std::launch::async, [&spec] {
            return newcomb_recurrence(spec).values();
        }));
    }
    for (auto& f : futures) {
        CHECK(f.get() == expected);
    }
}

TEST_CASE("compute_newcomb dispatch") {
    const Spec spec({1, 1, 2});
    for (Algorithm a : {Algorithm::BruteForce, Algorithm::DillonRoselle, Algorithm::Recurrence,
                        Algorithm::Positive, Algorithm::Convolution}) {
        CHECK(compute_newcomb(spec, a).values() == big({1, 7, 4}));
        CHECK(compute_newcomb(spec, a).algorithm() == a);
    }
    CHECK_THROWS_AS(compute_newcomb(spec, Algorithm::ClosedFamily), std::invalid_argument);
}
