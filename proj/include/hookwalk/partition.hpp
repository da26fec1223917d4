#pragma once

// Integer partitions as immutable values: cell geometry, hook lengths,
// contents, and a deterministic enumerator.

#include "hookwalk/exact.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookwalk {

class Partition {
public:
    Partition() = default;

    /// Trailing zeros are stripped; anything else that is not a weakly
    /// decreasing sequence of positive integers is rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw std::invalid_argument("partition has a non-positive part");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("partition is not weakly decreasing");
            size_ += parts_[k];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-based row access; rows past the end have length 0.
    int row(int r) const { return r < length() ? parts_[static_cast<std::size_t>(r)] : 0; }
    int first_row() const { return row(0); }

    /// Column lengths; conjugate()[j] is the number of rows reaching column j (0-based).
    std::vector<int> conjugate() const
    {
        std::vector<int> cols(static_cast<std::size_t>(first_row()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
        return cols;
    }

    /// Cellwise containment of the Young diagrams.
    bool contains(const Partition& inner) const
    {
        if (inner.length() > length()) return false;
        for (int r = 0; r < inner.length(); ++r)
            if (inner.row(r) > row(r)) return false;
        return true;
    }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    /// Size first, then lexicographic on the parts.
    std::strong_ordering operator<=>(const Partition& other) const
    {
        if (auto c = size_ <=> other.size_; c != 0) return c;
        return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                      other.parts_.begin(), other.parts_.end());
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

/// "18,7,6"; the empty partition is "-".
inline std::string to_string(const Partition& p)
{
    if (p.empty()) return "-";
    std::string out;
    for (int k = 0; k < p.length(); ++k) {
        if (k) out += ',';
        out += std::to_string(p.row(k));
    }
    return out;
}

inline Partition parse_partition(std::string_view text)
{
    if (text == "-" || text.empty()) return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string field(text.substr(pos, comma - pos));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (field.empty() || used != field.size())
            throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

struct CellStat {
    int row;     // 1-based
    int col;     // 1-based
    int hook;
    int content;
    bool operator==(const CellStat&) const = default;
};

/// One entry per cell in row-major order.
inline std::vector<CellStat> cell_stats(const Partition& lambda)
{
    std::vector<CellStat> cells;
    cells.reserve(static_cast<std::size_t>(lambda.size()));
    const auto cols = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.row(i); ++j) {
            const int arm = lambda.row(i) - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
            cells.push_back({i + 1, j + 1, arm + leg + 1, j - i});
        }
    }
    return cells;
}

/// Hook lengths in row-major order.
inline std::vector<int> hooks(const Partition& lambda)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (const auto& c : cell_stats(lambda)) out.push_back(c.hook);
    return out;
}

inline std::vector<int> contents(const Partition& lambda)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j) out.push_back(j - i);
    return out;
}

/// Product of all hook lengths.
inline BigInt hook_product(const Partition& lambda)
{
    BigInt h = 1;
    for (int x : hooks(lambda)) h *= x;
    return h;
}

/// Sorted multiset {h in H(lambda) : h mod t in residues}. Repeated residues
/// in the request select the class once.
inline std::vector<int> hook_multiset_mod(const Partition& lambda, int t, std::span<const int> residues)
{
    if (t < 1) throw std::invalid_argument("modulus must be positive");
    std::vector<bool> wanted(static_cast<std::size_t>(t), false);
    for (int r : residues) {
        if (r < 0 || r >= t) throw std::invalid_argument("residue out of range");
        wanted[static_cast<std::size_t>(r)] = true;
    }
    std::vector<int> out;
    for (int h : hooks(lambda))
        if (wanted[static_cast<std::size_t>(h % t)]) out.push_back(h);
    std::sort(out.begin(), out.end());
    return out;
}

/// Hook lengths divisible by t, sorted.
inline std::vector<int> divisible_hooks(const Partition& lambda, int t)
{
    const int zero = 0;
    return hook_multiset_mod(lambda, t, std::span<const int>(&zero, 1));
}

/// First cell (row-major) whose hook is divisible by t, if any.
inline std::optional<CellStat> find_divisible_hook(const Partition& lambda, int t)
{
    for (const auto& c : cell_stats(lambda))
        if (c.hook % t == 0) return c;
    return std::nullopt;
}

inline bool is_t_core(const Partition& lambda, int t) { return !find_divisible_hook(lambda, t); }

/// All partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
class PartitionRange {
public:
    explicit PartitionRange(int n) : n_(n)
    {
        if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        explicit iterator(int n) : done_(false)
        {
            if (n > 0) parts_.push_back(n);
            current_ = Partition(parts_);
        }

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++()
        {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        bool operator==(const iterator& other) const
        {
            return done_ == other.done_ && (done_ || parts_ == other.parts_);
        }

    private:
        void advance()
        {
            int ones = 0;
            while (!parts_.empty() && parts_.back() == 1) {
                parts_.pop_back();
                ++ones;
            }
            if (parts_.empty()) {
                done_ = true;
                return;
            }
            const int v = --parts_.back();
            int rest = ones + 1;
            while (rest > v) {
                parts_.push_back(v);
                rest -= v;
            }
            if (rest > 0) parts_.push_back(rest);
            current_ = Partition(parts_);
        }

        std::vector<int> parts_;
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

inline PartitionRange enumerate_partitions(int n) { return PartitionRange(n); }

inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p);
    return out;
}

} // namespace hookwalk

template <>
struct std::hash<hookwalk::Partition> {
    std::size_t operator()(const hookwalk::Partition& p) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};
