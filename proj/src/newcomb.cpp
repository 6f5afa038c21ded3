#include "segre/newcomb.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace segre {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::BruteForce: return "brute";
        case Algorithm::DillonRoselle: return "dillon-roselle";
        case Algorithm::Recurrence: return "recurrence";
        case Algorithm::Positive: return "positive";
        case Algorithm::Convolution: return "convolution";
        case Algorithm::ClosedFamily: return "closed-family";
    }
    return "unknown";
}

NewcombVector::NewcombVector(Spec spec, std::vector<BigInt> values, Algorithm algorithm)
    : spec_(std::move(spec)), values_(std::move(values)), algorithm_(algorithm) {
    const std::string where = std::string(algorithm_name(algorithm_)) + " vector for " + spec_.to_string();
    if (values_.empty() || values_.front() != 1) {
        throw std::logic_error(where + ": h_0 must equal 1");
    }
    if (values_.back() == 0) {
        throw std::logic_error(where + ": trailing coefficient is zero");
    }
    if (degree() != regularity(spec_)) {
        throw std::logic_error(where + ": degree != N - b*");
    }
    if (values_.back() != segre::top_coefficient(spec_)) {
        throw std::logic_error(where + ": top coefficient mismatch");
    }
    BigInt sum = 0;
    for (const BigInt& v : values_) {
        if (v < 0) throw std::logic_error(where + ": negative coefficient");
        sum += v;
    }
    if (sum != multinomial(spec_)) {
        throw std::logic_error(where + ": coefficient sum != multinomial");
    }
    if (values_.size() >= 2 && values_[1] != spec_.codim()) {
        throw std::logic_error(where + ": h_1 != codimension");
    }
}

LaurentPolynomial NewcombVector::to_polynomial() const {
    return LaurentPolynomial::from_integers(values_);
}

std::string NewcombVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out += ", ";
        out += values_[i].str();
    }
    return out + ")";
}

NewcombVector newcomb_brute(const Spec& spec, std::uint64_t budget) {
    return NewcombVector(spec, newcomb_bruteforce(spec, budget), Algorithm::BruteForce);
}

NewcombVector newcomb_dillon_roselle(const Spec& spec) {
    const long long d = spec.dim();
    const long long r = regularity(spec);
    std::vector<BigInt> values;
    for (long long k = 0; k <= r; ++k) {
        BigInt a_k = 0;
        for (long long j = 0; j <= k; ++j) {
            BigInt term = binomial(d, j);
            for (int b : spec.parts()) {
                term *= binomial(b + k - j, b);
            }
            a_k += (j % 2 == 0) ? term : -term;
        }
        if (a_k < 0) {
            throw std::logic_error("dillon-roselle produced a negative entry for " + spec.to_string());
        }
        values.push_back(a_k);
    }
    return NewcombVector(spec, std::move(values), Algorithm::DillonRoselle);
}

namespace {

// Memoized on the descending-sorted part list; the recursion decrements the
// last (smallest) part so the recursion chain is linear in N.
std::vector<BigInt> recurrence_values(const std::vector<int>& sorted_desc) {
    static std::map<std::vector<int>, std::vector<BigInt>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(sorted_desc);
        if (it != cache.end()) return it->second;
    }

    std::vector<BigInt> result;
    if (sorted_desc.size() == 1) {
        result = {BigInt(1)};
    } else {
        const int decremented = sorted_desc.back();
        std::vector<int> child_parts = sorted_desc;
        if (--child_parts.back() == 0) child_parts.pop_back();
        const std::vector<BigInt> child = recurrence_values(child_parts);

        long long d = 1;
        for (int b : sorted_desc) d += b;
        const long long child_degree = static_cast<long long>(child.size()) - 1;
        auto child_at = [&](long long k) -> Rational {
            return (k < 0 || k > child_degree) ? Rational(0) : Rational(child[static_cast<std::size_t>(k)]);
        };

        for (long long k = 0; k <= child_degree + 1; ++k) {
            Rational h_k = (Rational(d - 1 - decremented - (k - 1)) * child_at(k - 1) +
                            Rational(decremented + k) * child_at(k)) /
                           Rational(decremented);
            result.push_back(to_integer(h_k));
        }
        while (result.size() > 1 && result.back() == 0) {
            result.pop_back();
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(sorted_desc, std::move(result)).first->second;
}

}  // namespace

NewcombVector newcomb_recurrence(const Spec& spec) {
    return NewcombVector(spec, recurrence_values(spec.sorted_parts_desc()), Algorithm::Recurrence);
}

NewcombVector newcomb_positive(const Spec& spec) {
    const auto& b = spec.parts();
    const int n = spec.n();
    const long long r = regularity(spec);
    std::vector<BigInt> values;

    if (n == 1) {
        values = {BigInt(1)};
    } else {
        // caps[s] bounds the running index at position s: prefix sum minus the
        // prefix maximum (the regularity of the prefix spec).
        long long prefix_sum = b[0];
        int prefix_max = b[0];
        // W holds the partial sums over (i_2,...,i_s); start at s = 2.
        prefix_sum += b[1];
        prefix_max = std::max(prefix_max, b[1]);
        long long cap = prefix_sum - prefix_max;
        std::vector<BigInt> weights(static_cast<std::size_t>(cap) + 1);
        for (long long i = 0; i <= cap; ++i) {
            weights[static_cast<std::size_t>(i)] = binomial(b[0], i) * binomial(b[1], i);
        }
        for (int s = 2; s < n; ++s) {
            const long long prev_cap = cap;
            const long long prev_sum = prefix_sum;
            prefix_sum += b[static_cast<std::size_t>(s)];
            prefix_max = std::max(prefix_max, b[static_cast<std::size_t>(s)]);
            cap = prefix_sum - prefix_max;
            std::vector<BigInt> next(static_cast<std::size_t>(cap) + 1, BigInt(0));
            for (long long j = 0; j <= cap; ++j) {
                for (long long i = 0; i <= std::min(prev_cap, j); ++i) {
                    next[static_cast<std::size_t>(j)] +=
                        weights[static_cast<std::size_t>(i)] *
                        binomial(prev_sum - i, j - i) *
                        binomial(b[static_cast<std::size_t>(s)] + i, j);
                }
            }
            weights = std::move(next);
        }
        values = std::move(weights);
    }

    if (static_cast<long long>(values.size()) != r + 1) {
        throw std::logic_error("positive formula produced wrong length for " + spec.to_string());
    }
    return NewcombVector(spec, std::move(values), Algorithm::Positive);
}

std::vector<BigInt> hadamard_h_fold(const std::vector<BigInt>& h_a, long long dim_a,
                                    const std::vector<BigInt>& h_b, long long dim_b) {
    std::vector<BigInt> out;
    const long long top = dim_a + dim_b;
    for (long long m = 0; m <= top; ++m) {
        BigInt h_m = 0;
        for (long long i = 0; i < static_cast<long long>(h_a.size()); ++i) {
            for (long long j = 0; j < static_cast<long long>(h_b.size()); ++j) {
                const long long upper_a = dim_a + j - i;
                const long long upper_b = dim_b + i - j;
                if (upper_a < 0 || upper_b < 0) {
                    throw std::logic_error("hadamard_h_fold: negative binomial upper index; "
                                           "inputs are not Segre-type h-vectors");
                }
                h_m += h_a[static_cast<std::size_t>(i)] * h_b[static_cast<std::size_t>(j)] *
                       binomial(upper_a, m - i) * binomial(upper_b, m - j);
            }
        }
        out.push_back(h_m);
    }
    while (out.size() > 1 && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

NewcombVector newcomb_convolution(const Spec& spec) {
    std::vector<BigInt> h = {BigInt(1)};
    long long dim = spec.parts().front();
    for (std::size_t i = 1; i < spec.parts().size(); ++i) {
        const int part = spec.parts()[i];
        h = hadamard_h_fold(h, dim, {BigInt(1)}, part);
        dim += part;
    }
    return NewcombVector(spec, std::move(h), Algorithm::Convolution);
}

NewcombVector compute_newcomb(const Spec& spec, Algorithm algorithm, std::uint64_t budget) {
    switch (algorithm) {
        case Algorithm::BruteForce: return newcomb_brute(spec, budget);
        case Algorithm::DillonRoselle: return newcomb_dillon_roselle(spec);
        case Algorithm::Recurrence: return newcomb_recurrence(spec);
        case Algorithm::Positive: return newcomb_positive(spec);
        case Algorithm::Convolution: return newcomb_convolution(spec);
        case Algorithm::ClosedFamily: break;
    }
    throw std::invalid_argument("compute_newcomb: no general algorithm with that tag");
}

long long regularity(const Spec& spec) {
    return spec.total() - spec.max_part();
}

BigInt top_coefficient(const Spec& spec) {
    BigInt top = 1;
    for (int b : spec.parts()) {
        top *= binomial(spec.max_part(), b);
    }
    return top;
}

bool is_gorenstein(const Spec& spec) {
    return top_coefficient(spec) == 1;
}

NewcombVector family_h_vector(Family family, long long b) {
    switch (family) {
        case Family::r2: {
            if (b < 1) throw std::domain_error("family r2 requires b >= 1");
            Spec spec({1, 1, static_cast<int>(b)});
            std::vector<BigInt> values = {1, 3 * BigInt(b) + 1, BigInt(b) * b};
            return NewcombVector(std::move(spec), std::move(values), Algorithm::ClosedFamily);
        }
        case Family::r3a: {
            if (b < 2) throw std::domain_error("family r3a requires b >= 2");
            Spec spec({1, 2, static_cast<int>(b)});
            BigInt bb = b;
            std::vector<BigInt> values = {1, 5 * bb + 2, (7 * bb * bb + bb) / 2,
                                          bb * bb * (bb - 1) / 2};
            return NewcombVector(std::move(spec), std::move(values), Algorithm::ClosedFamily);
        }
        case Family::r3b: {
            if (b < 1) throw std::domain_error("family r3b requires b >= 1");
            Spec spec({1, 1, 1, static_cast<int>(b)});
            BigInt bb = b;
            std::vector<BigInt> values = {1, 7 * bb + 4, 6 * bb * bb + 4 * bb + 1, bb * bb * bb};
            return NewcombVector(std::move(spec), std::move(values), Algorithm::ClosedFamily);
        }
    }
    throw std::invalid_argument("unknown family");
}

BigInt segre_hilbert_function(const Spec& spec, long long l) {
    if (l < 0) return 0;
    BigInt value = 1;
    for (int b : spec.parts()) {
        value *= binomial(b + l, b);
    }
    return value;
}

RationalSeries segre_series(const Spec& spec) {
    return RationalSeries::canonical(newcomb_recurrence(spec).to_polynomial(), spec.dim());
}

}  // namespace segre
