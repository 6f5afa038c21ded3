#include "segre/betti.hpp"

#include "segre/newcomb.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace segre;

TEST_CASE("beta_02 golden values") {
    CHECK(beta_02(Spec({1, 1, 1})) == 9);
    CHECK(beta_02(Spec({1, 1, 2})) == 24);
    CHECK(beta_02(Spec({1, 1, 1, 1})) == 55);
    // Also defined below three factors (count of quadrics); both internal
    // routes must still agree there.
    CHECK(beta_02(Spec({1, 1})) == 1);
    CHECK(beta_02(Spec({2})) == 0);
}

TEST_CASE("beta_02 equals the strand instance on a grid") {
    for (const auto& parts : testsupport::all_specs(4, 4)) {
        const Spec spec(parts);
        // beta_02 raises internally if its two routes split.
        const BigInt value = beta_02(spec);
        if (spec.n() >= 3) {
            CHECK(value == beta_strand(spec, 0));
        }
    }
}

TEST_CASE("strand golden rows") {
    const Spec s111({1, 1, 1});
    CHECK(beta_strand(s111, 0) == 9);
    CHECK(beta_strand(s111, 1) == 16);
    CHECK(beta_strand(s111, 2) == 9);
    CHECK(beta_strand(s111, 3) == 0);

    const Spec s112({1, 1, 2});
    CHECK(beta_strand(s112, 0) == 24);
    CHECK(beta_strand(s112, 1) == 84);
    CHECK(beta_strand(s112, 2) == 126);
    CHECK(beta_strand(s112, 3) == 84);

    const Spec s1111({1, 1, 1, 1});
    CHECK(beta_strand(s1111, 0) == 55);
    CHECK(beta_strand(s1111, 1) == 320);
    CHECK(beta_strand(s1111, 2) == 891);
    CHECK(beta_strand(s1111, 3) == 1408);
}

TEST_CASE("strand hypothesis errors") {
    CHECK_THROWS_AS(beta_strand(Spec({1, 1, 1}), 4), std::domain_error);
    CHECK_THROWS_AS(beta_strand(Spec({1, 1, 1}), -1), std::domain_error);
    try {
        beta_strand(Spec({1, 2}), 0);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("n >= 3") != std::string::npos);
    }
}

TEST_CASE("corner betti positions and values") {
    CornerBetti c111 = corner_betti(Spec({1, 1, 1}));
    CHECK(c111.column == 3);
    CHECK(c111.row == 3);
    CHECK(c111.value == 1);

    CornerBetti c112 = corner_betti(Spec({1, 1, 2}));
    CHECK(c112.column == 6);
    CHECK(c112.row == 3);
    CHECK(c112.value == 4);

    CornerBetti c1111 = corner_betti(Spec({1, 1, 1, 1}));
    CHECK(c1111.column == 10);
    CHECK(c1111.row == 4);
    CHECK(c1111.value == 1);

    CornerBetti c222 = corner_betti(Spec({2, 2, 2}));
    CHECK(c222.column == 19);  // c = 27 - 7 = 20
    CHECK(c222.row == 5);      // regularity 4
    CHECK(c222.value == 1);

    CHECK_THROWS_AS(corner_betti(Spec({5})), std::domain_error);
}

TEST_CASE("corner value is the top h-coefficient and detects gorenstein") {
    for (const auto& parts : testsupport::all_specs(4, 3)) {
        const Spec spec(parts);
        if (spec.n() < 2) continue;
        const CornerBetti corner = corner_betti(spec);
        CHECK(corner.value > 0);
        CHECK(corner.value == newcomb_recurrence(spec).values().back());
        CHECK((corner.value == 1) == is_gorenstein(spec));
    }
}

TEST_CASE("diagram skeleton [1,1,1] is fully known") {
    const BettiStrand diagram = diagram_skeleton(Spec({1, 1, 1}));
    CHECK(diagram.columns == 4);
    CHECK(diagram.first_row == 2);
    CHECK(diagram.last_row == 3);

    const BigInt row2[] = {9, 16, 9, 0};
    const BigInt row3[] = {0, 0, 0, 1};
    for (long long col = 0; col < 4; ++col) {
        CHECK(diagram.at(col, 2).kind == EntryKind::Known);
        CHECK(diagram.at(col, 2).value == row2[col]);
        CHECK(diagram.at(col, 3).kind == EntryKind::Known);
        CHECK(diagram.at(col, 3).value == row3[col]);
    }
    // The first cubic syzygy of the smallest case is the recorded witness
    // that grounds the nonzero marker used for every larger spec.
    CHECK(diagram.at(3, 3).value == 1);
}

TEST_CASE("diagram skeleton [1,1,2]") {
    const BettiStrand diagram = diagram_skeleton(Spec({1, 1, 2}));
    CHECK(diagram.columns == 7);
    CHECK(diagram.last_row == 3);

    CHECK(diagram.at(0, 2).value == 24);
    CHECK(diagram.at(1, 2).value == 84);
    CHECK(diagram.at(2, 2).value == 126);
    CHECK(diagram.at(3, 2).value == 84);
    for (long long col = 4; col < 6; ++col) {
        CHECK(diagram.at(col, 2).kind == EntryKind::Unknown);
    }
    for (long long col = 0; col < 3; ++col) {
        CHECK(diagram.at(col, 3).kind == EntryKind::Known);
        CHECK(diagram.at(col, 3).value == 0);
    }
    CHECK(diagram.at(3, 3).kind == EntryKind::NonzeroUnknown);
    CHECK(diagram.at(4, 3).kind == EntryKind::Unknown);
    CHECK(diagram.at(5, 3).kind == EntryKind::Unknown);
    CHECK(diagram.at(6, 3).kind == EntryKind::Known);
    CHECK(diagram.at(6, 3).value == 4);

    CHECK(diagram.to_json()["rows"]["3"][3] == "nonzero");
    CHECK(diagram.to_json()["rows"]["2"][5] == "unknown");
    CHECK(diagram.to_json()["rows"]["3"][6] == "4");
}

TEST_CASE("diagram skeleton [2,2,2]") {
    const BettiStrand diagram = diagram_skeleton(Spec({2, 2, 2}));
    CHECK(diagram.columns == 20);
    CHECK(diagram.last_row == 5);
    CHECK(diagram.at(19, 5).kind == EntryKind::Known);
    CHECK(diagram.at(19, 5).value == 1);
    CHECK(diagram.at(3, 3).kind == EntryKind::NonzeroUnknown);
    for (int i = 0; i <= 3; ++i) {
        CHECK(diagram.at(i, 2).value == beta_strand(Spec({2, 2, 2}), i));
    }
    for (long long row = 3; row <= 5; ++row) {
        for (long long col = 0; col < 3; ++col) {
            CHECK(diagram.at(col, row).value == 0);
        }
    }
}

TEST_CASE("diagram table rendering") {
    const std::string table = diagram_skeleton(Spec({1, 1, 1})).to_table();
    CHECK(table.find("9  16  9  0") != std::string::npos);
    CHECK(table.find("0   0  0  1") != std::string::npos);
}

TEST_CASE("purity") {
    CHECK(is_pure_resolution(Spec({1, 1, 1})));
    CHECK_FALSE(is_pure_resolution(Spec({1, 1, 2})));
    CHECK_FALSE(is_pure_resolution(Spec({2, 2, 2})));
    CHECK_FALSE(is_pure_resolution(Spec({1, 1, 1, 1})));
    CHECK_THROWS_AS(is_pure_resolution(Spec({1, 2})), std::domain_error);
}

TEST_CASE("strand monotonicity in the spec") {
    // Growing any part (or appending one) can only grow each strand entry.
    const std::vector<std::vector<int>> bases = {
        {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 3}, {1, 1, 1, 1}};
    for (const auto& base : bases) {
        const Spec small(base);
        std::vector<std::vector<int>> enlarged;
        for (std::size_t i = 0; i < base.size(); ++i) {
            auto bigger = base;
            bigger[i]++;
            enlarged.push_back(bigger);
        }
        auto appended = base;
        appended.push_back(1);
        enlarged.push_back(appended);
        appended.back() = 2;
        enlarged.push_back(appended);

        for (const auto& big_parts : enlarged) {
            const Spec big(big_parts);
            for (int i = 0; i <= 3; ++i) {
                CHECK(beta_strand(big, i) >= beta_strand(small, i));
            }
        }
    }
}

TEST_CASE("nonnegativity of computed strands") {
    for (const auto& parts : testsupport::all_specs(4, 4)) {
        const Spec spec(parts);
        if (spec.n() < 3) continue;
        for (int i = 0; i <= 3; ++i) {
            CHECK(beta_strand(spec, i) >= 0);
        }
    }
}

TEST_CASE("ring indexing helper") {
    CHECK(ring_position(3, 3) == std::pair<long long, long long>(4, 2));
    CHECK(ring_position(0, 2) == std::pair<long long, long long>(1, 1));
}
