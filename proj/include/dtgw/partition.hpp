#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace dtgw {

/// Cell of a Young diagram, 0-based row/column.
struct Cell {
    int row;
    int col;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is allowed and prints as "".
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,1"; "" yields the empty partition.
    static Partition parse(const std::string& text);
    std::string str() const;

    int rows() const { return static_cast<int>(parts_.size()); }
    /// Part at 0-based row index; 0 beyond the last row.
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    /// Number of boxes |lambda|.
    long size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    bool contains(int i, int j) const { return i >= 0 && j >= 0 && j < part(i); }
    /// Cells in row-major order.
    std::vector<Cell> cells() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

/// Hook length of a cell: arm + leg + 1. Throws std::invalid_argument
/// when (i, j) lies outside the diagram.
long hook_length(const Partition& lambda, int i, int j);

/// b2(lambda) = sum over parts of C(part, 2).
long b2(const Partition& lambda);

/// |lambda| + b2(lambda) + b2(transpose).
long leg_weight(const Partition& lambda);

/// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
/// n = 0 yields just the empty partition; negative n yields nothing.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace dtgw
