#include "segre/betti.hpp"

#include "segre/combinatorics.hpp"
#include "segre/newcomb.hpp"

#include <sstream>
#include <stdexcept>

namespace segre {

namespace {

// The alternating strand sum, without the public API's n >= 3 gate so that
// beta_02 can cross-check the closed form on every spec.
BigInt strand_value(const Spec& spec, int i) {
    const BigInt c = spec.codim();
    if (c > 1'000'000'000) {
        throw std::domain_error("codimension too large for strand computation");
    }
    const long long c_ll = c.convert_to<long long>();
    const NewcombVector h = newcomb_recurrence(spec);
    BigInt sum = 0;
    for (int j = 0; j <= i + 2; ++j) {
        BigInt a_j = j <= h.degree() ? h.values()[static_cast<std::size_t>(j)] : BigInt(0);
        BigInt term = binomial(c_ll, i + 2 - j) * a_j;
        sum += (j % 2 == 0) ? -term : term;
    }
    return sum;
}

void require_three_factors(const Spec& spec, const char* what) {
    if (spec.n() < 3) {
        throw std::domain_error(std::string(what) +
                                " requires n >= 3 factors (syzygy linearity is only established "
                                "there); got " + spec.to_string());
    }
}

}  // namespace

BigInt beta_02(const Spec& spec) {
    const BigInt box = spec.box_size();
    if (box > 2'000'000'000) {
        throw std::domain_error("box too large for beta_02()");
    }
    const long long m = box.convert_to<long long>();
    BigInt closed = binomial(m + 1, 2);
    BigInt products = 1;
    for (int b : spec.parts()) {
        products *= binomial(b + 2, 2);
    }
    closed -= products;

    const BigInt via_strand = strand_value(spec, 0);
    if (closed != via_strand) {
        throw std::logic_error("beta_02 routes disagree for " + spec.to_string() + ": " +
                               closed.str() + " vs " + via_strand.str());
    }
    return closed;
}

BigInt beta_strand(const Spec& spec, int i) {
    require_three_factors(spec, "beta_strand");
    if (i < 0 || i > 3) {
        throw std::domain_error("beta_strand: only i = 0..3 lie in the proven linear strand range");
    }
    BigInt value = strand_value(spec, i);
    if (value < 0) {
        throw std::logic_error("beta_strand produced a negative value for " + spec.to_string());
    }
    return value;
}

CornerBetti corner_betti(const Spec& spec) {
    if (spec.n() < 2) {
        throw std::domain_error("corner_betti requires n >= 2; got " + spec.to_string());
    }
    CornerBetti corner;
    corner.column = (spec.codim() - 1).convert_to<long long>();
    corner.row = regularity(spec) + 1;
    corner.value = top_coefficient(spec);
    return corner;
}

std::string DiagramEntry::to_display() const {
    switch (kind) {
        case EntryKind::Known: return value.str();
        case EntryKind::NonzeroUnknown: return "*";
        case EntryKind::Unknown: return ".";
    }
    return "?";
}

const DiagramEntry& BettiStrand::at(long long column, long long row) const {
    if (column < 0 || column >= columns || row < first_row || row > last_row) {
        throw std::out_of_range("diagram position out of range");
    }
    return grid[static_cast<std::size_t>(row - first_row)][static_cast<std::size_t>(column)];
}

std::string BettiStrand::to_table() const {
    std::vector<std::size_t> widths(static_cast<std::size_t>(columns));
    for (long long col = 0; col < columns; ++col) {
        widths[static_cast<std::size_t>(col)] = std::to_string(col).size();
        for (long long row = first_row; row <= last_row; ++row) {
            widths[static_cast<std::size_t>(col)] =
                std::max(widths[static_cast<std::size_t>(col)], at(col, row).to_display().size());
        }
    }
    std::size_t label_width = std::to_string(last_row).size();
    std::ostringstream out;
    auto cell = [&](const std::string& text, std::size_t width) {
        out << std::string(width >= text.size() ? width - text.size() : 0, ' ') << text;
    };
    cell("", label_width);
    for (long long col = 0; col < columns; ++col) {
        out << "  ";
        cell(std::to_string(col), widths[static_cast<std::size_t>(col)]);
    }
    out << "\n";
    for (long long row = first_row; row <= last_row; ++row) {
        cell(std::to_string(row), label_width);
        for (long long col = 0; col < columns; ++col) {
            out << "  ";
            cell(at(col, row).to_display(), widths[static_cast<std::size_t>(col)]);
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json BettiStrand::to_json() const {
    nlohmann::json rows = nlohmann::json::object();
    for (long long row = first_row; row <= last_row; ++row) {
        nlohmann::json entries = nlohmann::json::array();
        for (long long col = 0; col < columns; ++col) {
            const DiagramEntry& entry = at(col, row);
            switch (entry.kind) {
                case EntryKind::Known: entries.push_back(entry.value.str()); break;
                case EntryKind::NonzeroUnknown: entries.push_back("nonzero"); break;
                case EntryKind::Unknown: entries.push_back("unknown"); break;
            }
        }
        rows[std::to_string(row)] = std::move(entries);
    }
    nlohmann::json j;
    j["columns"] = columns;
    j["rows"] = std::move(rows);
    j["strand"] = {strand[0].str(), strand[1].str(), strand[2].str(), strand[3].str()};
    j["corner"] = {{"column", corner.column}, {"row", corner.row}, {"value", corner.value.str()}};
    return j;
}

BettiStrand diagram_skeleton(const Spec& spec) {
    require_three_factors(spec, "diagram_skeleton");
    BettiStrand out{spec, {}, corner_betti(spec), 0, 2, 0, {}};
    out.columns = spec.codim().convert_to<long long>();
    out.last_row = regularity(spec) + 1;
    for (int i = 0; i <= 3; ++i) {
        out.strand[static_cast<std::size_t>(i)] = beta_strand(spec, i);
    }

    out.grid.assign(static_cast<std::size_t>(out.last_row - out.first_row + 1),
                    std::vector<DiagramEntry>(static_cast<std::size_t>(out.columns)));
    auto set = [&](long long col, long long row, DiagramEntry entry) {
        out.grid[static_cast<std::size_t>(row - out.first_row)][static_cast<std::size_t>(col)] =
            std::move(entry);
    };
    // Row 2 is closed-form only through column 3; rows below it start with
    // three forced zero columns.
    for (long long col = 0; col < out.columns; ++col) {
        if (col <= 3) {
            set(col, 2, {EntryKind::Known, out.strand[static_cast<std::size_t>(col)]});
        }
        for (long long row = 3; row <= out.last_row; ++row) {
            if (col <= 2) set(col, row, {EntryKind::Known, 0});
        }
    }
    // The first possibly-cubic syzygy is provably nonzero.
    if (out.corner.column != 3 || out.corner.row != 3) {
        set(3, 3, {EntryKind::NonzeroUnknown, 0});
    }
    set(out.corner.column, out.corner.row, {EntryKind::Known, out.corner.value});
    return out;
}

bool is_pure_resolution(const Spec& spec) {
    require_three_factors(spec, "is_pure_resolution");
    return spec.parts() == std::vector<int>{1, 1, 1};
}

std::pair<long long, long long> ring_position(long long column, long long row) {
    return {column + 1, row - 1};
}

}  // namespace segre
