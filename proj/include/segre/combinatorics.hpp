#ifndef SEGRE_COMBINATORICS_HPP
#define SEGRE_COMBINATORICS_HPP

#include "segre/numbers.hpp"
#include "segre/spec.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace segre {

/// Enumeration cap for brute-force style computations. Overridable per call
/// and via the CLI --budget flag / SEGRE_BUDGET environment variable.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Raised when an enumeration would exceed its budget; carries both sides so
/// callers can report the refusal precisely.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& what, BigInt required, std::uint64_t budget)
        : std::runtime_error(what), required_(std::move(required)), budget_(budget) {}
    const BigInt& required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

  private:
    BigInt required_;
    std::uint64_t budget_;
};

/// C(a,k). Total in k (0 for k < 0 or k > a); negative a is rejected since no
/// formula here needs it and a silent convention would mask bugs.
BigInt binomial(long long a, long long k);

/// N! / (b_1! ... b_n!), computed as a product of binomials.
BigInt multinomial(const Spec& spec);

/// Number of positions k < N with u_k > u_{k+1}.
int descent_count(const MultisetPermutation& perm);

/// Lazy lexicographic stream over all arrangements of the multiset.
class PermutationStream {
  public:
    explicit PermutationStream(Spec spec);
    std::optional<MultisetPermutation> next();

  private:
    Spec spec_;
    std::vector<int> current_;
    bool exhausted_ = false;
    bool started_ = false;
};

/// Convenience for tests and small specs; the stream itself is unbounded.
std::vector<MultisetPermutation> all_permutations(const Spec& spec);

/// Descent histogram by exhaustive enumeration: entry k counts arrangements
/// with exactly k descents. Trailing zeros are trimmed. Refuses (BudgetError)
/// when multinomial(spec) exceeds the budget.
std::vector<BigInt> newcomb_bruteforce(const Spec& spec, std::uint64_t budget = kDefaultBudget);

}  // namespace segre

#endif
