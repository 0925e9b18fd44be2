#pragma once

#include <compare>
#include <string>
#include <vector>

#include "plactic/errors.hpp"

namespace plactic {

// Content vector of a word or tableau: entry i counts the letter i+1.
// Length is rank+1 in most contexts.
using Weight = std::vector<int>;

// Weakly decreasing sequence of positive integers. Trailing zeros are
// accepted on input and trimmed; increasing or negative input throws.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    // 0-based; parts beyond the length read as 0.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const; // "3,2,1"; "-" for the empty partition

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// All partitions of m with at most max_len parts, reverse-lex order,
// starting from the single row (m).
std::vector<Partition> partitions_of(int m, int max_len);

int weight_sum(const Weight& mu);
bool is_dominant(const Weight& mu); // weakly decreasing
Partition to_partition(const Weight& mu); // requires dominant

// ||mu|| = sum_i (i-1) mu_i, the top cocharge over weight mu.
long long weight_norm(const Weight& mu);

std::string weight_to_string(const Weight& mu);

} // namespace plactic
