#include "segre/toric.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace segre {

std::string LatticePoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

bool componentwise_leq(const LatticePoint& a, const LatticePoint& b) {
    if (a.coords.size() != b.coords.size()) {
        throw std::domain_error("lattice points live in different dimensions");
    }
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] > b.coords[i]) return false;
    }
    return true;
}

bool points_comparable(const LatticePoint& a, const LatticePoint& b) {
    return componentwise_leq(a, b) || componentwise_leq(b, a);
}

LatticePoint meet(const LatticePoint& a, const LatticePoint& b) {
    return meet_join(a, b).first;
}

LatticePoint join(const LatticePoint& a, const LatticePoint& b) {
    return meet_join(a, b).second;
}

std::pair<LatticePoint, LatticePoint> meet_join(const LatticePoint& a, const LatticePoint& b) {
    if (a.coords.size() != b.coords.size()) {
        throw std::domain_error("meet_join: dimension mismatch");
    }
    LatticePoint lo, hi;
    lo.coords.reserve(a.coords.size());
    hi.coords.reserve(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        lo.coords.push_back(std::min(a.coords[i], b.coords[i]));
        hi.coords.push_back(std::max(a.coords[i], b.coords[i]));
    }
    return {std::move(lo), std::move(hi)};
}

void validate_in_box(const Spec& spec, const LatticePoint& p) {
    if (static_cast<int>(p.coords.size()) != spec.n()) {
        throw std::domain_error("point dimension does not match spec");
    }
    for (int i = 0; i < spec.n(); ++i) {
        const int v = p.coords[static_cast<std::size_t>(i)];
        if (v < 0 || v > spec.parts()[static_cast<std::size_t>(i)]) {
            throw std::domain_error("point " + p.to_string() + " outside box of " + spec.to_string());
        }
    }
}

std::vector<LatticePoint> box_points(const Spec& spec) {
    std::vector<LatticePoint> out;
    LatticePoint current;
    current.coords.assign(static_cast<std::size_t>(spec.n()), 0);
    while (true) {
        out.push_back(current);
        int axis = spec.n() - 1;
        while (axis >= 0 && current.coords[static_cast<std::size_t>(axis)] ==
                                spec.parts()[static_cast<std::size_t>(axis)]) {
            current.coords[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
        ++current.coords[static_cast<std::size_t>(axis)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

TMonomial::TMonomial(std::vector<LatticePoint> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
        if (p.coords.size() != points_.front().coords.size()) {
            throw std::domain_error("monomial mixes points of different dimensions");
        }
    }
    std::sort(points_.begin(), points_.end());
}

std::string TMonomial::to_string() const {
    if (points_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i > 0) out += "*";
        out += "T" + points_[i].to_string();
    }
    return out;
}

bool is_sorted_monomial(const TMonomial& m) {
    const auto& pts = m.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!componentwise_leq(pts[i], pts[i + 1])) return false;
    }
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> incomparable_pairs(const TMonomial& m) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto& pts = m.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!points_comparable(pts[i], pts[j])) out.emplace_back(i, j);
        }
    }
    return out;
}

TMonomial straighten_pair(const TMonomial& m, std::size_t i, std::size_t j) {
    auto pts = m.points();
    auto [lo, hi] = meet_join(pts[i], pts[j]);
    pts[i] = std::move(lo);
    pts[j] = std::move(hi);
    return TMonomial(std::move(pts));
}

namespace {

// Strictly increases under every straightening step while the coordinatewise
// value multisets stay fixed, so the replacement loop terminates.
long long spread_measure(const TMonomial& m) {
    long long total = 0;
    for (const auto& p : m.points()) {
        long long s = 0;
        for (int c : p.coords) s += c;
        total += s * s;
    }
    return total;
}

SortOutcome straighten_loop(TMonomial m, const PairChooser& choose) {
    long long steps = 0;
    while (true) {
        const auto pairs = incomparable_pairs(m);
        if (pairs.empty()) break;
        const std::size_t pick = choose(pairs);
        if (pick >= pairs.size()) {
            throw std::logic_error("pair chooser returned an out-of-range index");
        }
        [[maybe_unused]] const long long before = spread_measure(m);
        m = straighten_pair(m, pairs[pick].first, pairs[pick].second);
        assert(spread_measure(m) > before);
        ++steps;
    }
    return {std::move(m), steps};
}

}  // namespace

SortOutcome sort_monomial(const TMonomial& m) {
    return straighten_loop(m, [](const auto&) { return std::size_t{0}; });
}

SortOutcome sort_monomial_with_order(const TMonomial& m, const PairChooser& choose) {
    return straighten_loop(m, choose);
}

MonomialImage::MonomialImage(const Spec& spec, const TMonomial& m) {
    counts_.resize(static_cast<std::size_t>(spec.n()));
    for (int i = 0; i < spec.n(); ++i) {
        counts_[static_cast<std::size_t>(i)].assign(
            static_cast<std::size_t>(spec.parts()[static_cast<std::size_t>(i)]) + 1, 0);
    }
    for (const auto& p : m.points()) {
        validate_in_box(spec, p);
        for (int i = 0; i < spec.n(); ++i) {
            counts_[static_cast<std::size_t>(i)][static_cast<std::size_t>(p.coords[static_cast<std::size_t>(i)])]++;
        }
    }
}

MonomialImage monomial_map_image(const Spec& spec, const TMonomial& m) {
    return MonomialImage(spec, m);
}

bool binomial_in_ideal(const Spec& spec, const TMonomial& m1, const TMonomial& m2) {
    if (m1 == m2) return false;
    return monomial_map_image(spec, m1) == monomial_map_image(spec, m2);
}

std::string GroebnerBinomial::to_string() const {
    return lead().to_string() + " - " + trail().to_string();
}

std::vector<GroebnerBinomial> groebner_generators(const Spec& spec) {
    const auto points = box_points(spec);
    std::vector<GroebnerBinomial> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points_comparable(points[i], points[j])) continue;
            auto [lo, hi] = meet_join(points[i], points[j]);
            out.push_back({points[i], points[j], std::move(lo), std::move(hi)});
        }
    }
    return out;
}

Face Face::chain(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!componentwise_leq(points[i], points[i + 1])) {
            throw std::domain_error("face points are not a chain: " + points[i].to_string() +
                                    " vs " + points[i + 1].to_string());
        }
    }
    Face f;
    f.points_ = std::move(points);
    return f;
}

Face Face::trusted_chain(std::vector<LatticePoint> sorted_points) {
    Face f;
    f.points_ = std::move(sorted_points);
    return f;
}

bool Face::contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

std::string Face::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i > 0) out += ";";
        out += points_[i].to_string();
    }
    return out;
}

Face face_from_sequence(const MultisetPermutation& perm) {
    const Spec& spec = perm.spec();
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(spec.total()) + 1);
    LatticePoint current;
    current.coords.assign(static_cast<std::size_t>(spec.n()), 0);
    pts.push_back(current);
    for (int symbol : perm.symbols()) {
        ++current.coords[static_cast<std::size_t>(symbol - 1)];
        pts.push_back(current);
    }
    return Face::trusted_chain(std::move(pts));
}

Face descent_set(const MultisetPermutation& perm) {
    const Spec& spec = perm.spec();
    const auto& u = perm.symbols();
    std::vector<LatticePoint> pts;
    LatticePoint current;
    current.coords.assign(static_cast<std::size_t>(spec.n()), 0);
    for (std::size_t m = 0; m + 1 < u.size(); ++m) {
        ++current.coords[static_cast<std::size_t>(u[m] - 1)];
        if (u[m] > u[m + 1]) pts.push_back(current);
    }
    return Face::trusted_chain(std::move(pts));
}

MultisetPermutation canonical_sequence(const Spec& spec, const Face& face) {
    for (const auto& p : face.points()) {
        validate_in_box(spec, p);
    }
    LatticePoint origin, corner;
    origin.coords.assign(static_cast<std::size_t>(spec.n()), 0);
    corner.coords = spec.parts();

    std::vector<LatticePoint> stops = face.points();
    if (stops.empty() || stops.front() != origin) stops.insert(stops.begin(), origin);
    if (stops.back() != corner) stops.push_back(corner);

    std::vector<int> symbols;
    symbols.reserve(static_cast<std::size_t>(spec.total()));
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
        for (int axis = 0; axis < spec.n(); ++axis) {
            const int delta = stops[s + 1].coords[static_cast<std::size_t>(axis)] -
                              stops[s].coords[static_cast<std::size_t>(axis)];
            symbols.insert(symbols.end(), static_cast<std::size_t>(delta), axis + 1);
        }
    }
    return MultisetPermutation(spec, std::move(symbols));
}

FaceInterval partition_locate(const Spec& spec, const Face& face) {
    MultisetPermutation u = canonical_sequence(spec, face);
    Face lower = descent_set(u);
    Face upper = face_from_sequence(u);
    return {std::move(u), std::move(lower), std::move(upper)};
}

FacetStream::FacetStream(Spec spec) : perms_(std::move(spec)) {}

std::optional<Face> FacetStream::next() {
    auto perm = perms_.next();
    if (!perm) return std::nullopt;
    return face_from_sequence(*perm);
}

MinimalPrimeStream::MinimalPrimeStream(Spec spec)
    : spec_(spec), box_(box_points(spec)), facets_(std::move(spec)) {}

std::optional<std::vector<LatticePoint>> MinimalPrimeStream::next() {
    auto facet = facets_.next();
    if (!facet) return std::nullopt;
    std::vector<LatticePoint> complement;
    std::set_difference(box_.begin(), box_.end(), facet->points().begin(), facet->points().end(),
                        std::back_inserter(complement));
    return complement;
}

BigInt predicted_face_count(const Spec& spec) {
    BigInt total = 0;
    PermutationStream perms(spec);
    while (auto perm = perms.next()) {
        const auto descents = descent_set(*perm).size();
        BigInt interval = 1;
        interval <<= static_cast<unsigned>(spec.total() + 1 - static_cast<long long>(descents));
        total += interval;
    }
    return total;
}

namespace {

void extend_chains(const std::vector<LatticePoint>& points, std::vector<LatticePoint>& chain,
                   std::size_t next_index, std::vector<Face>& out) {
    out.push_back(Face::chain(chain));
    for (std::size_t i = next_index; i < points.size(); ++i) {
        if (chain.empty() || (points[i] != chain.back() && componentwise_leq(chain.back(), points[i]))) {
            chain.push_back(points[i]);
            extend_chains(points, chain, i + 1, out);
            chain.pop_back();
        }
    }
}

}  // namespace

std::vector<Face> enumerate_faces(const Spec& spec, std::uint64_t budget) {
    const BigInt predicted = predicted_face_count(spec);
    if (predicted > budget) {
        throw BudgetError("face enumeration refused: " + spec.to_string() + " has " +
                              predicted.str() + " faces, budget is " + std::to_string(budget),
                          predicted, budget);
    }
    const auto points = box_points(spec);
    std::vector<Face> out;
    std::vector<LatticePoint> chain;
    extend_chains(points, chain, 0, out);
    return out;
}

PartitionCheckResult partition_check(const Spec& spec, std::uint64_t budget) {
    PartitionCheckResult result;
    result.predicted = predicted_face_count(spec);
    std::vector<Face> faces = enumerate_faces(spec, budget);
    result.face_count = static_cast<long long>(faces.size());
    for (const auto& face : faces) {
        FaceInterval interval = partition_locate(spec, face);
        if (!interval.lower.subset_of(face) || !face.subset_of(interval.upper)) {
            result.ok = false;
            result.counterexample = face;
            return result;
        }
    }
    result.ok = result.face_count == result.predicted;
    return result;
}

}  // namespace segre
