#include "segre/spec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace segre {

Spec::Spec(std::vector<int> parts) {
    for (int b : parts) {
        if (b < 0) {
            throw std::invalid_argument("spec part must be nonnegative, got " + std::to_string(b));
        }
        if (b > 0) {
            parts_.push_back(b);
        }
    }
    if (parts_.empty()) {
        throw std::invalid_argument("spec must contain at least one positive part");
    }
    for (int b : parts_) {
        total_ += b;
        max_part_ = std::max(max_part_, b);
    }
}

Spec Spec::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("spec: cannot parse part '" + item + "'");
        }
        if (pos != item.size()) {
            throw std::invalid_argument("spec: cannot parse part '" + item + "'");
        }
        if (value <= 0) {
            throw std::invalid_argument("spec: parts must be positive integers, got '" + item + "'");
        }
        parts.push_back(value);
    }
    if (parts.empty()) {
        throw std::invalid_argument("spec: expected comma-separated positive integers");
    }
    return Spec(parts);
}

BigInt Spec::box_size() const {
    BigInt prod = 1;
    for (int b : parts_) {
        prod *= (b + 1);
    }
    return prod;
}

std::vector<int> Spec::sorted_parts_desc() const {
    std::vector<int> sorted = parts_;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted;
}

std::string Spec::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

MultisetPermutation::MultisetPermutation(Spec spec, std::vector<int> symbols)
    : spec_(std::move(spec)), symbols_(std::move(symbols)) {
    if (static_cast<long long>(symbols_.size()) != spec_.total()) {
        throw std::invalid_argument("permutation length does not match spec total");
    }
    std::map<int, long long> counts;
    for (int s : symbols_) counts[s]++;
    for (int i = 0; i < spec_.n(); ++i) {
        if (counts[i + 1] != spec_.parts()[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("symbol " + std::to_string(i + 1) +
                                        " has wrong multiplicity for spec " + spec_.to_string());
        }
        counts.erase(i + 1);
    }
    if (!counts.empty()) {
        throw std::invalid_argument("permutation contains symbols outside 1.." +
                                    std::to_string(spec_.n()));
    }
}

std::string MultisetPermutation::to_string() const {
    const bool compact = spec_.n() <= 9;
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!compact && i > 0) out += ",";
        out += std::to_string(symbols_[i]);
    }
    return out;
}

}  // namespace segre
