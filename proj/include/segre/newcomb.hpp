#ifndef SEGRE_NEWCOMB_HPP
#define SEGRE_NEWCOMB_HPP

#include "segre/combinatorics.hpp"
#include "segre/laurent.hpp"
#include "segre/series.hpp"
#include "segre/spec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace segre {

enum class Algorithm {
    BruteForce,
    DillonRoselle,
    Recurrence,
    Positive,
    Convolution,
    ClosedFamily,
};

const char* algorithm_name(Algorithm a);

/// The descent-count vector (A([b],0), ..., A([b],r)), which is also the
/// h-vector of the Segre ring of [b]. Construction checks every structural
/// invariant the vector must satisfy (normalization, degree, top coefficient,
/// coefficient sum, codimension entry), so a vector of this type is already
/// cross-checked against the closed-form corollaries.
class NewcombVector {
  public:
    NewcombVector(Spec spec, std::vector<BigInt> values, Algorithm algorithm);

    const Spec& spec() const { return spec_; }
    const std::vector<BigInt>& values() const { return values_; }
    Algorithm algorithm() const { return algorithm_; }

    /// r = N - b*, the degree of the h-polynomial.
    long long degree() const { return static_cast<long long>(values_.size()) - 1; }

    LaurentPolynomial to_polynomial() const;
    std::string to_string() const;  // "(1, 7, 4)"

    bool same_values(const NewcombVector& other) const { return values_ == other.values_; }

  private:
    Spec spec_;
    std::vector<BigInt> values_;
    Algorithm algorithm_;
};

/// Exhaustive descent counting (the oracle all other algorithms answer to).
NewcombVector newcomb_brute(const Spec& spec, std::uint64_t budget = kDefaultBudget);

/// Alternating-sign closed form:
/// A([b],k) = sum_{j=0}^k (-1)^j C(d,j) prod_i C(b_i+k-j, b_i), d = N+1.
NewcombVector newcomb_dillon_roselle(const Spec& spec);

/// Exact-rational recurrence on the smallest part, memoized per sorted spec:
/// h_k([b]) = ((d-1-b_i-(k-1)) h_{k-1}([b-e_i]) + (b_i+k) h_k([b-e_i])) / b_i.
NewcombVector newcomb_recurrence(const Spec& spec);

/// Positive summation formula (no cancellation; every summand is a
/// nonnegative integer product of binomials).
NewcombVector newcomb_positive(const Spec& spec);

/// Fold of the factor series 1/(1-t)^{b_i+1} under the Hadamard-product
/// h-vector convolution.
NewcombVector newcomb_convolution(const Spec& spec);

NewcombVector compute_newcomb(const Spec& spec, Algorithm algorithm,
                              std::uint64_t budget = kDefaultBudget);

/// Hadamard-product numerator convolution for two series with numerator
/// h-vectors over exponents 0.., pole orders dim_a+1 and dim_b+1:
/// h_n = sum_{i,j} h_i(a) h_j(b) C(dim_a+j-i, n-i) C(dim_b+i-j, n-j).
/// Exposed for direct testing against precomputed factors.
std::vector<BigInt> hadamard_h_fold(const std::vector<BigInt>& h_a, long long dim_a,
                                    const std::vector<BigInt>& h_b, long long dim_b);

/// Castelnuovo-Mumford regularity N - b*, the h-polynomial degree.
long long regularity(const Spec& spec);

/// Top h-coefficient prod_i C(b*, b_i).
BigInt top_coefficient(const Spec& spec);

/// Arithmetically Gorenstein iff the top coefficient is 1 iff all parts equal.
bool is_gorenstein(const Spec& spec);

/// The three closed-form families with regularity 2 or 3.
enum class Family {
    r2,   // [1,1,b], b >= 1: (1, 3b+1, b^2)
    r3a,  // [1,2,b], b >= 2: (1, 5b+2, (7b^2+b)/2, b^2(b-1)/2)
    r3b,  // [1,1,1,b], b >= 1: (1, 7b+4, 6b^2+4b+1, b^3)
};

NewcombVector family_h_vector(Family family, long long b);

/// Hilbert function of the Segre ring: H(l) = prod_i C(b_i + l, b_i).
BigInt segre_hilbert_function(const Spec& spec, long long l);

/// The Hilbert-Poincare series A_[b](t) / (1-t)^{N+1}.
RationalSeries segre_series(const Spec& spec);

}  // namespace segre

#endif
