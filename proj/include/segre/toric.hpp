#ifndef SEGRE_TORIC_HPP
#define SEGRE_TORIC_HPP

#include "segre/combinatorics.hpp"
#include "segre/numbers.hpp"
#include "segre/spec.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace segre {

/// A point of the box M = {0..b_1} x ... x {0..b_n}. The defaulted ordering
/// is lexicographic (for containers); the domain order is the componentwise
/// partial order exposed through the named functions below.
struct LatticePoint {
    std::vector<int> coords;

    auto operator<=>(const LatticePoint&) const = default;
    std::string to_string() const;  // "(0,1,2)"
};

bool componentwise_leq(const LatticePoint& a, const LatticePoint& b);
bool points_comparable(const LatticePoint& a, const LatticePoint& b);
LatticePoint meet(const LatticePoint& a, const LatticePoint& b);
LatticePoint join(const LatticePoint& a, const LatticePoint& b);
/// (U, V) = (componentwise min, componentwise max); dimension mismatch is a
/// domain error.
std::pair<LatticePoint, LatticePoint> meet_join(const LatticePoint& a, const LatticePoint& b);

void validate_in_box(const Spec& spec, const LatticePoint& p);
/// All points of the box, sorted lexicographically.
std::vector<LatticePoint> box_points(const Spec& spec);

/// A monomial in the T-variables, recorded as the multiset of its exponent
/// points (kept lexicographically sorted).
class TMonomial {
  public:
    TMonomial() = default;
    explicit TMonomial(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t degree() const { return points_.size(); }
    std::string to_string() const;  // "T(0,1)*T(1,0)"

    auto operator<=>(const TMonomial&) const = default;

  private:
    std::vector<LatticePoint> points_;
};

/// True when the points form a weakly increasing chain.
bool is_sorted_monomial(const TMonomial& m);

/// Index pairs (i, j) into m.points() with incomparable points.
std::vector<std::pair<std::size_t, std::size_t>> incomparable_pairs(const TMonomial& m);

/// One straightening step: replace points i and j by their meet and join.
TMonomial straighten_pair(const TMonomial& m, std::size_t i, std::size_t j);

struct SortOutcome {
    TMonomial monomial;
    long long steps = 0;
};

/// Repeated straightening to the unique sorted normal form, with the number
/// of replacement steps performed.
SortOutcome sort_monomial(const TMonomial& m);

/// Straightening with a caller-chosen replacement order (for confluence
/// checks); the chooser receives the current incomparable pairs and picks one.
using PairChooser = std::function<std::size_t(const std::vector<std::pair<std::size_t, std::size_t>>&)>;
SortOutcome sort_monomial_with_order(const TMonomial& m, const PairChooser& choose);

/// Exponent record of the monomial image under T_v -> x_{1,v_1}...x_{n,v_n}:
/// counts[i][j] = number of points with coordinate i equal to j.
class MonomialImage {
  public:
    MonomialImage(const Spec& spec, const TMonomial& m);
    const std::vector<std::vector<int>>& counts() const { return counts_; }
    bool operator==(const MonomialImage&) const = default;

  private:
    std::vector<std::vector<int>> counts_;
};

MonomialImage monomial_map_image(const Spec& spec, const TMonomial& m);

/// Membership of m1 - m2 in the toric ideal: equal images and m1 != m2.
bool binomial_in_ideal(const Spec& spec, const TMonomial& m1, const TMonomial& m2);

/// T_v T_w - T_U T_V for an incomparable pair {v, w}.
struct GroebnerBinomial {
    LatticePoint lead_a, lead_b;        // incomparable; lead_a < lead_b lexicographically
    LatticePoint trail_low, trail_high; // their meet and join

    TMonomial lead() const { return TMonomial({lead_a, lead_b}); }
    TMonomial trail() const { return TMonomial({trail_low, trail_high}); }
    std::string to_string() const;
};

/// One generator per incomparable pair of box points; this is the reduced
/// quadratic basis whose lead terms are exactly the unsorted quadratics.
std::vector<GroebnerBinomial> groebner_generators(const Spec& spec);

/// A face of the initial complex: the support of a sorted monomial, i.e. a
/// strictly increasing chain in the box (possibly empty).
class Face {
  public:
    Face() = default;
    /// Sorts, collapses duplicates, and verifies chain-ness.
    static Face chain(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const LatticePoint& p) const;
    bool subset_of(const Face& other) const;

    std::string to_string() const;  // "(0,0);(0,1);(1,1)"

    auto operator<=>(const Face&) const = default;

  private:
    // Walk construction yields strictly increasing points already in order;
    // re-sorting and re-validating per facet would dominate enumeration time.
    static Face trusted_chain(std::vector<LatticePoint> sorted_points);
    friend Face face_from_sequence(const MultisetPermutation&);
    friend Face descent_set(const MultisetPermutation&);

    std::vector<LatticePoint> points_;
};

/// F_(u): origin plus all partial-sum points of the unit-step walk.
Face face_from_sequence(const MultisetPermutation& perm);

/// G_(u): the partial-sum points at descent positions. Always a subset of
/// F_(u) minus the endpoints.
Face descent_set(const MultisetPermutation& perm);

/// The canonical arrangement through a face: concatenated increasing climbs
/// between consecutive chain points (origin and corner included). Its descent
/// set is contained in the face and its walk passes through the face.
MultisetPermutation canonical_sequence(const Spec& spec, const Face& face);

struct FaceInterval {
    MultisetPermutation sequence;
    Face lower;  // descent set
    Face upper;  // full walk
};

/// The unique interval [G_u, F_u] containing the face (uniqueness is a tested
/// property of the partition, not an assumption of this routine).
FaceInterval partition_locate(const Spec& spec, const Face& face);

/// Lazy stream of the facets (maximal chains from the origin to the corner),
/// in bijection with the multiset arrangements; each facet has N+1 points.
class FacetStream {
  public:
    explicit FacetStream(Spec spec);
    std::optional<Face> next();

  private:
    PermutationStream perms_;
};

/// Lazy stream of the minimal primes of the initial ideal: the complement of
/// each facet, a variable set of cardinality c([b]).
class MinimalPrimeStream {
  public:
    explicit MinimalPrimeStream(Spec spec);
    std::optional<std::vector<LatticePoint>> next();

  private:
    Spec spec_;
    std::vector<LatticePoint> box_;
    FacetStream facets_;
};

/// Number of faces predicted by the interval partition:
/// sum over facets of 2^(N+1-|G_u|).
BigInt predicted_face_count(const Spec& spec);

/// All faces of the initial complex (all chains in the box, empty included).
/// Refuses when the predicted face count exceeds the budget.
std::vector<Face> enumerate_faces(const Spec& spec, std::uint64_t budget = kDefaultBudget);

struct PartitionCheckResult {
    bool ok = false;
    BigInt face_count;
    BigInt predicted;
    std::optional<Face> counterexample;
};

/// Exhaustive partition verification: every face must land inside its located
/// interval and the interval sizes must add up to the face count (covering
/// plus matching totals forces disjointness).
PartitionCheckResult partition_check(const Spec& spec, std::uint64_t budget = kDefaultBudget);

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << p.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const TMonomial& m) {
    return os << m.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const Face& f) {
    return os << (f.points().empty() ? "{}" : f.to_string());
}

}  // namespace segre

#endif
