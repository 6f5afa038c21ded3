#include "segre/combinatorics.hpp"

#include <algorithm>

namespace segre {

BigInt binomial(long long a, long long k) {
    if (a < 0) {
        throw std::domain_error("binomial: negative upper index " + std::to_string(a));
    }
    if (k < 0 || k > a) {
        return 0;
    }
    k = std::min(k, a - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (a - k + i);
        result /= i;  // exact: result is C(a-k+i, i) after this step
    }
    return result;
}

BigInt multinomial(const Spec& spec) {
    BigInt result = 1;
    long long suffix = spec.total();
    for (int b : spec.parts()) {
        result *= binomial(suffix, b);
        suffix -= b;
    }
    return result;
}

int descent_count(const MultisetPermutation& perm) {
    const auto& u = perm.symbols();
    int descents = 0;
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        if (u[k] > u[k + 1]) ++descents;
    }
    return descents;
}

PermutationStream::PermutationStream(Spec spec) : spec_(std::move(spec)) {
    for (int i = 0; i < spec_.n(); ++i) {
        current_.insert(current_.end(), static_cast<std::size_t>(spec_.parts()[static_cast<std::size_t>(i)]), i + 1);
    }
}

std::optional<MultisetPermutation> PermutationStream::next() {
    if (exhausted_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return MultisetPermutation(MultisetPermutation::Trusted{}, spec_, current_);
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        exhausted_ = true;
        return std::nullopt;
    }
    return MultisetPermutation(MultisetPermutation::Trusted{}, spec_, current_);
}

std::vector<MultisetPermutation> all_permutations(const Spec& spec) {
    std::vector<MultisetPermutation> out;
    PermutationStream stream(spec);
    while (auto perm = stream.next()) {
        out.push_back(std::move(*perm));
    }
    return out;
}

std::vector<BigInt> newcomb_bruteforce(const Spec& spec, std::uint64_t budget) {
    const BigInt count = multinomial(spec);
    if (count > budget) {
        throw BudgetError("brute force refused: " + spec.to_string() + " has " + count.str() +
                              " arrangements, budget is " + std::to_string(budget),
                          count, budget);
    }
    std::vector<BigInt> histogram(static_cast<std::size_t>(spec.total()), 0);
    // Enumerate in place; MultisetPermutation construction per item would
    // revalidate multiplicities millions of times.
    std::vector<int> u;
    for (int i = 0; i < spec.n(); ++i) {
        u.insert(u.end(), static_cast<std::size_t>(spec.parts()[static_cast<std::size_t>(i)]), i + 1);
    }
    do {
        std::size_t descents = 0;
        for (std::size_t k = 0; k + 1 < u.size(); ++k) {
            if (u[k] > u[k + 1]) ++descents;
        }
        histogram[descents] += 1;
    } while (std::next_permutation(u.begin(), u.end()));
    while (histogram.size() > 1 && histogram.back() == 0) {
        histogram.pop_back();
    }
    return histogram;
}

}  // namespace segre
