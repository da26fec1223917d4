#pragma once

// The 01-sequence of a partition boundary. Walking the boundary from the
// bottom to the right, vertical edges read 0 and horizontal edges read 1.
// Index 0 sits on the main diagonal: the number of 1's at negative indices
// equals the number of 0's at non-negative ones. With that convention the
// 0 closing row r (1-based) sits at index lambda_r - r.

#include "hookwalk/partition.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hookwalk {

class BoundarySequence {
public:
    /// The sequence of the empty partition: 0 below index 0, 1 from index 0 on.
    BoundarySequence() = default;

    /// Bits cover indices lo, lo+1, ...; indices below are 0 and indices
    /// past the end are 1. Leading 0's and trailing 1's are trimmed.
    static BoundarySequence from_window(int lo, std::vector<std::uint8_t> bits)
    {
        std::size_t first = 0;
        while (first < bits.size() && bits[first] == 0) ++first;
        std::size_t last = bits.size();
        while (last > first && bits[last - 1] == 1) --last;
        BoundarySequence s;
        s.lo_ = lo + static_cast<int>(first);
        s.bits_.assign(bits.begin() + static_cast<std::ptrdiff_t>(first),
                       bits.begin() + static_cast<std::ptrdiff_t>(last));
        for (auto b : s.bits_)
            if (b > 1) throw std::invalid_argument("boundary sequence entries must be 0 or 1");
        return s;
    }

    /// First stored index. For an all-implicit sequence this is where the 1's start.
    int lo() const { return lo_; }
    /// Last stored index (lo() - 1 when nothing is stored).
    int hi() const { return lo_ + static_cast<int>(bits_.size()) - 1; }
    std::span<const std::uint8_t> bits() const { return bits_; }

    int at(int i) const
    {
        if (i < lo_) return 0;
        if (i > hi()) return 1;
        return bits_[static_cast<std::size_t>(i - lo_)];
    }

    /// Dense copy of indices from..to (inclusive).
    std::vector<std::uint8_t> slice(int from, int to) const
    {
        std::vector<std::uint8_t> out;
        for (int i = from; i <= to; ++i) out.push_back(static_cast<std::uint8_t>(at(i)));
        return out;
    }

    /// #{i >= 0 : z_i = 0} == #{i < 0 : z_i = 1}.
    bool balanced() const { return charge() == 0; }

    /// #{i >= 0 : z_i = 0} - #{i < 0 : z_i = 1}; zero exactly for balanced sequences.
    int charge() const
    {
        int zeros_right = 0;
        int ones_left = 0;
        const int from = std::min(lo_, 0);
        const int to = std::max(hi(), -1);
        for (int i = from; i <= to; ++i) {
            const int z = at(i);
            if (i >= 0 && z == 0) ++zeros_right;
            if (i < 0 && z == 1) ++ones_left;
        }
        return zeros_right - ones_left;
    }

    /// "⋯001001|1011011⋯" with "|" between indices -1 and 0 and two implicit
    /// symbols of context on either side.
    std::string render() const
    {
        std::string out = "⋯";
        const int from = std::min(lo_, 0) - 2;
        const int to = std::max(hi(), -1) + 2;
        for (int i = from; i <= to; ++i) {
            if (i == 0) out += '|';
            out += static_cast<char>('0' + at(i));
        }
        out += "⋯";
        return out;
    }

    bool operator==(const BoundarySequence&) const = default;

private:
    int lo_ = 0;
    std::vector<std::uint8_t> bits_;
};

inline BoundarySequence encode(const Partition& lambda)
{
    if (lambda.empty()) return {};
    const int lo = -lambda.length();
    const int hi = lambda.first_row() - 1;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(hi - lo + 1), 1);
    for (int r = 1; r <= lambda.length(); ++r) bits[static_cast<std::size_t>(lambda.row(r - 1) - r - lo)] = 0;
    return BoundarySequence::from_window(lo, std::move(bits));
}

/// Each 0 closes a row whose length is the number of 1's to its left.
inline Partition decode(const BoundarySequence& seq)
{
    if (!seq.balanced())
        throw std::invalid_argument("boundary sequence is unbalanced (charge " + std::to_string(seq.charge()) + ")");
    std::vector<int> ones_before;
    int ones = 0;
    for (auto z : seq.bits()) {
        if (z == 1)
            ++ones;
        else
            ones_before.push_back(ones);
    }
    return Partition(std::vector<int>(ones_before.rbegin(), ones_before.rend()));
}

/// All (i, j) with i < j, z_i = 1, z_j = 0, ordered by i then j. Each pair is
/// one cell, with hook length j - i.
inline std::vector<std::pair<int, int>> inversion_pairs(const BoundarySequence& seq)
{
    std::vector<std::pair<int, int>> out;
    for (int i = seq.lo(); i <= seq.hi(); ++i) {
        if (seq.at(i) != 1) continue;
        for (int j = i + 1; j <= seq.hi(); ++j)
            if (seq.at(j) == 0) out.emplace_back(i, j);
    }
    return out;
}

struct CornerContents {
    std::vector<int> inner;  // addable cells: (z_{k-1}, z_k) = (0, 1)
    std::vector<int> outer;  // removable cells: (z_{k-1}, z_k) = (1, 0)
    bool operator==(const CornerContents&) const = default;
};

inline CornerContents corner_contents(const BoundarySequence& seq)
{
    CornerContents c;
    for (int k = seq.lo(); k <= seq.hi() + 1; ++k) {
        const int prev = seq.at(k - 1);
        const int cur = seq.at(k);
        if (prev == 0 && cur == 1) c.inner.push_back(k);
        if (prev == 1 && cur == 0) c.outer.push_back(k);
    }
    return c;
}

} // namespace hookwalk
