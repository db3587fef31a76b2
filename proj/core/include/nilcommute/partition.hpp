#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilcommute/errors.hpp"

namespace nilcommute {

// Partition of n, stored weakly decreasing. Constructors sort, so any
// permutation of the parts denotes the same Jordan type.
class Partition {
public:
    explicit Partition(std::vector<std::size_t> parts);

    std::size_t n() const { return n_; }
    std::size_t count() const { return parts_.size(); }  // number of parts
    std::size_t part(std::size_t i) const { return parts_[i]; }
    const std::vector<std::size_t>& parts() const { return parts_; }

    bool operator==(const Partition& o) const = default;
    std::string to_string() const;  // "(3,2,1)"

private:
    std::vector<std::size_t> parts_;
    std::size_t n_;
};

// All partitions of n, descending-lex order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(std::size_t n);

// Jordan structure with equal block sizes grouped together:
// sizes m_1 > m_2 > ... > m_l, each m_i occurring mults[i] times.
struct GroupedJordan {
    std::vector<std::size_t> sizes;  // strictly decreasing
    std::vector<std::size_t> mults;  // s_i >= 1

    static GroupedJordan from_partition(const Partition& lam);
    Partition to_partition() const;
    std::size_t groups() const { return sizes.size(); }
    std::size_t n() const;
    // offset of group i in the grouped ordering (row/col index)
    std::size_t group_offset(std::size_t i) const;
};

}  // namespace nilcommute
