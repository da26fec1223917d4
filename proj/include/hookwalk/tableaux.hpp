#pragma once

// Standard Young tableaux counts. The skew counter is a plain memoized
// corner-removal recursion and doubles as the oracle for the hook formula.

#include "hookwalk/exact.hpp"
#include "hookwalk/partition.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hookwalk {

/// Counts standard Young tableaux of skew shapes outer/inner, memoizing per
/// inner shape. Instances are not thread-safe; use one per worker.
class SkewTableauCounter {
public:
    BigInt count(const Partition& outer, const Partition& inner)
    {
        if (!outer.contains(inner))
            throw std::invalid_argument("skew shape " + to_string(outer) + "/" + to_string(inner) +
                                        ": inner shape is not contained in outer shape");
        return count_rec(outer, inner, memo_[inner]);
    }

private:
    using Memo = std::unordered_map<Partition, BigInt>;

    static BigInt count_rec(const Partition& outer, const Partition& inner, Memo& memo)
    {
        if (outer.size() == inner.size()) return 1;
        if (auto it = memo.find(outer); it != memo.end()) return it->second;
        BigInt total = 0;
        std::vector<int> rows = outer.vec();
        for (int r = 0; r < outer.length(); ++r) {
            // the last cell of row r is a removable corner outside the inner shape
            if (outer.row(r) > outer.row(r + 1) && outer.row(r) > inner.row(r)) {
                --rows[static_cast<std::size_t>(r)];
                total += count_rec(Partition(rows), inner, memo);
                ++rows[static_cast<std::size_t>(r)];
            }
        }
        memo.emplace(outer, total);
        return total;
    }

    std::unordered_map<Partition, Memo> memo_;
};

/// Number of standard Young tableaux of shape outer/inner by exhaustive
/// corner removal; f of the empty shape is 1.
inline BigInt syt_count_oracle(const Partition& outer, const Partition& inner = {})
{
    SkewTableauCounter counter;
    return counter.count(outer, inner);
}

/// |lambda|! / H_lambda.
inline BigInt f_lambda(const Partition& lambda)
{
    const BigInt n_fact = factorial(lambda.size());
    const BigInt h = hook_product(lambda);
    if (n_fact % h != 0) throw std::logic_error("hook length formula division is not exact");
    return n_fact / h;
}

} // namespace hookwalk
