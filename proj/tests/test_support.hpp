#ifndef SEGRE_TEST_SUPPORT_HPP
#define SEGRE_TEST_SUPPORT_HPP

#include "segre/numbers.hpp"
#include "segre/spec.hpp"

#include <vector>

namespace segre::testsupport {

/// Every composition (ordered positive parts) with total <= max_total and at
/// most max_parts parts.
inline std::vector<std::vector<int>> compositions_up_to(int max_total, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int depth) -> void {
        if (!current.empty()) out.push_back(current);
        if (depth == max_parts) return;
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            self(self, remaining - part, depth + 1);
            current.pop_back();
        }
    };
    recurse(recurse, max_total, 0);
    return out;
}

/// Every part list with 1..max_parts entries, each in 1..max_part.
inline std::vector<std::vector<int>> all_specs(int max_parts, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int depth) -> void {
        if (!current.empty()) out.push_back(current);
        if (depth == max_parts) return;
        for (int part = 1; part <= max_part; ++part) {
            current.push_back(part);
            self(self, depth + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

/// The recursion exactly as printed in the reference this library corrects:
/// weights (N - b_n - k + 1) and (k + b_n) with no division by b_n. Kept only
/// as a regression reference; it goes wrong as soon as a decremented part
/// exceeds 1.
inline std::vector<BigInt> uncorrected_flw_recursion(const Spec& spec) {
    std::vector<int> parts = spec.parts();
    if (parts.size() == 1) return {BigInt(1)};

    const int last = parts.back();
    std::vector<int> child_parts = parts;
    if (--child_parts.back() == 0) child_parts.pop_back();
    const std::vector<BigInt> child = uncorrected_flw_recursion(Spec(child_parts));

    const long long total = spec.total();
    const long long child_degree = static_cast<long long>(child.size()) - 1;
    auto child_at = [&](long long k) -> BigInt {
        return (k < 0 || k > child_degree) ? BigInt(0) : child[static_cast<std::size_t>(k)];
    };
    std::vector<BigInt> values;
    for (long long k = 0; k <= child_degree + 1; ++k) {
        values.push_back(BigInt(total - last - k + 1) * child_at(k - 1) +
                         BigInt(k + last) * child_at(k));
    }
    while (values.size() > 1 && values.back() == 0) values.pop_back();
    return values;
}

}  // namespace segre::testsupport

#endif
