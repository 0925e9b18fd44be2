#include "plactic/partition.hpp"

#include <algorithm>
#include <numeric>

namespace plactic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.part(0), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int c = 0; c < lambda.part(i); ++c)
            ++cols[c];
    return Partition(std::move(cols));
}

std::vector<Partition> partitions_of(int m, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len)
            return;
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (m >= 0)
        rec(rec, m, m == 0 ? 1 : m);
    return out;
}

int weight_sum(const Weight& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

bool is_dominant(const Weight& mu) {
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i] > mu[i - 1])
            return false;
    return true;
}

Partition to_partition(const Weight& mu) {
    if (!is_dominant(mu))
        throw domain_error("weight is not a partition");
    return Partition(mu);
}

long long weight_norm(const Weight& mu) {
    long long n = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        n += static_cast<long long>(i) * mu[i];
    return n;
}

std::string weight_to_string(const Weight& mu) {
    if (mu.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(mu[i]);
    }
    return s;
}

} // namespace plactic
