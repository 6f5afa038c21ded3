#ifndef SEGRE_BETTI_HPP
#define SEGRE_BETTI_HPP

#include "segre/numbers.hpp"
#include "segre/spec.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <string>
#include <vector>

namespace segre {

/// beta_{0,2} of the toric ideal: C(prod(b_i+1)+1, 2) - prod C(b_i+2, 2).
/// The same number is recomputed through the strand formula and the two
/// routes are asserted equal; a disagreement is an internal error, never a
/// silent preference.
BigInt beta_02(const Spec& spec);

/// beta_{i,i+2} of the ideal for i = 0..3:
/// sum_{j=0}^{i+2} (-1)^{j+1} C(c([b]), i+2-j) A([b],j).
/// Requires n >= 3 (the syzygy-linearity range is only proven there) and
/// i <= 3; both limits are hard errors rather than extrapolations.
BigInt beta_strand(const Spec& spec, int i);

struct CornerBetti {
    long long column = 0;  // c([b]) - 1, ideal indexing
    long long row = 0;     // regularity + 1
    BigInt value;          // A([b], reg) = prod C(b*, b_i), always positive
};

CornerBetti corner_betti(const Spec& spec);  // n >= 2

enum class EntryKind {
    Known,           // exact value
    NonzeroUnknown,  // provably nonzero, value not computed (the paper's star)
    Unknown,         // genuinely uncomputed (the paper's bullet)
};

struct DiagramEntry {
    EntryKind kind = EntryKind::Unknown;
    BigInt value;  // meaningful only when kind == Known

    std::string to_display() const;  // "9", "*", "."
};

/// Betti diagram skeleton in ideal indexing: columns 0..c-1, rows 2..reg+1.
struct BettiStrand {
    Spec spec;
    std::array<BigInt, 4> strand;  // beta_{0,2}..beta_{3,5}
    CornerBetti corner;
    long long columns = 0;
    long long first_row = 2;
    long long last_row = 0;
    std::vector<std::vector<DiagramEntry>> grid;  // grid[row - first_row][column]

    const DiagramEntry& at(long long column, long long row) const;
    std::string to_table() const;
    nlohmann::json to_json() const;
};

BettiStrand diagram_skeleton(const Spec& spec);  // n >= 3

/// Minimal free resolution purity: exactly the [1,1,1] case. n >= 3 required.
bool is_pure_resolution(const Spec& spec);

/// Ideal-indexed diagram position -> quotient-ring (S/I) position:
/// beta_{i,a}(I) = beta_{i+1,a}(S/I) shifts the column up and the
/// degree-minus-column row down.
std::pair<long long, long long> ring_position(long long column, long long row);

}  // namespace segre

#endif
