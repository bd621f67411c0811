#pragma once

#include "lring/rational.hpp"

#include <string>
#include <vector>

namespace lring {

struct Cell {
    int row = 0;  // 1-indexed, top-down
    int col = 0;  // 1-indexed
    bool operator==(const Cell&) const = default;
};

// Weakly decreasing sequence of positive integers; the empty sequence is the
// empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    // Accepts "3,1,1"; "-" and "" denote the empty partition.
    static Partition parse(const std::string& text);

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    // 1-indexed; 0 beyond the length.
    int part(int i) const;
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // Number of parts equal to `value`.
    int multiplicity(int value) const;
    Partition conjugate() const;
    std::vector<Cell> cells() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    // "3,1,1"; the empty partition renders as "-".
    std::string str() const;

private:
    std::vector<int> parts_;
};

// z_mu = prod_i i^{m_i} * m_i!
Integer z_mu(const Partition& p);

// All partitions of n, each once, in reverse lexicographic order:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

}  // namespace lring
