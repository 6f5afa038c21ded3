#ifndef SEGRE_SPEC_HPP
#define SEGRE_SPEC_HPP

#include "segre/numbers.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace segre {

/// The multiplicity list [b_1,...,b_n]: the card deck with b_i cards of face
/// value i, and equally the factor dimensions of the product of projective
/// spaces. Zero parts are dropped on construction (they contribute a trivial
/// factor); an empty list is rejected.
class Spec {
  public:
    explicit Spec(std::vector<int> parts);

    /// Parses "b1,b2,...". Zero parts are rejected here: module-level
    /// normalization exists for internal recursion, a user-facing 0 is
    /// almost certainly a typo.
    static Spec parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return static_cast<int>(parts_.size()); }

    /// N = b_1 + ... + b_n.
    long long total() const { return total_; }
    /// d = N + 1, the Krull dimension of the Segre ring.
    long long dim() const { return total_ + 1; }
    /// b* = max part.
    int max_part() const { return max_part_; }
    /// Number of lattice points of the box {0..b_1} x ... x {0..b_n}.
    BigInt box_size() const;
    /// c([b]) = prod(b_i + 1) - (N + 1).
    BigInt codim() const { return box_size() - (total_ + 1); }

    /// Parts sorted descending (the canonical representative of the multiset).
    std::vector<int> sorted_parts_desc() const;

    std::string to_string() const;  // "[1,1,2]"

    bool operator==(const Spec& other) const { return parts_ == other.parts_; }

  private:
    std::vector<int> parts_;
    long long total_ = 0;
    int max_part_ = 0;
};

/// One arrangement (u_1,...,u_N) of the multiset 1^{b_1} 2^{b_2} ... n^{b_n}.
class MultisetPermutation {
  public:
    MultisetPermutation(Spec spec, std::vector<int> symbols);

    const Spec& spec() const { return spec_; }
    const std::vector<int>& symbols() const { return symbols_; }
    long long length() const { return static_cast<long long>(symbols_.size()); }

    std::string to_string() const;  // "2121"; comma-separated once symbols exceed one digit

    bool operator==(const MultisetPermutation& other) const {
        return spec_ == other.spec_ && symbols_ == other.symbols_;
    }

  private:
    struct Trusted {};
    // Multiplicity validation skipped: the stream permutes a valid arrangement
    // in place, which cannot change the multiset.
    MultisetPermutation(Trusted, Spec spec, std::vector<int> symbols)
        : spec_(std::move(spec)), symbols_(std::move(symbols)) {}
    friend class PermutationStream;

    Spec spec_;
    std::vector<int> symbols_;
};

inline std::ostream& operator<<(std::ostream& os, const Spec& spec) {
    return os << spec.to_string();
}

inline std::ostream& operator<<(std::ostream& os, const MultisetPermutation& perm) {
    return os << perm.to_string();
}

}  // namespace segre

#endif
