#include "nilcommute/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nilcommute {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw BadPartition("partition needs at least one part");
    for (std::size_t p : parts_)
        if (p == 0) throw BadPartition("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t max) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t p = std::min(rest, max); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n, n);
    return out;
}

GroupedJordan GroupedJordan::from_partition(const Partition& lam) {
    GroupedJordan g;
    for (std::size_t p : lam.parts()) {
        if (!g.sizes.empty() && g.sizes.back() == p) {
            ++g.mults.back();
        } else {
            g.sizes.push_back(p);
            g.mults.push_back(1);
        }
    }
    return g;
}

Partition GroupedJordan::to_partition() const {
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        parts.insert(parts.end(), mults[i], sizes[i]);
    return Partition(parts);
}

std::size_t GroupedJordan::n() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) total += sizes[i] * mults[i];
    return total;
}

std::size_t GroupedJordan::group_offset(std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < i; ++k) off += sizes[k] * mults[k];
    return off;
}

}  // namespace nilcommute
