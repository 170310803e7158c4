#pragma once

#include <compare>
#include <string>
#include <vector>

namespace repdecomp {

/// A partition: weakly decreasing sequence of nonnegative integers.
/// Trailing zeros are allowed on input but are not significant; two
/// partitions are equal iff their normalized (zero-stripped) forms agree.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }

    /// Part i (0-based); zero beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Number partitioned, |lambda|.
    int sum() const;

    /// Number of nonzero parts.
    int length() const;

    bool empty() const { return length() == 0; }

    /// Copy with trailing zeros removed.
    Partition normalized() const;

    /// Copy padded or truncated to exactly m entries. Truncation requires
    /// the dropped entries to be zero.
    Partition padded(int m) const;

    /// Diagram containment: this_i <= other_i for all i.
    bool contained_in(const Partition& other) const;

    bool operator==(const Partition& other) const;
    bool operator!=(const Partition& other) const { return !(*this == other); }

    /// Lexicographic order on normalized parts; total order usable as a map key.
    std::strong_ordering operator<=>(const Partition& other) const;

    /// Render as "(3,1)"; the empty partition renders as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// The partition labelling the dual of the Schur representation inside
/// SL_m: the reversed complement of lambda in a lambda_1 x m box,
/// (l1 - l_m, l1 - l_{m-1}, ..., l1 - l1). Rejects lambda with more than
/// m nonzero parts.
Partition sl_dual(const Partition& lambda, int m);

/// Parse "(3,1)", "3,1", "[3,1]" or "()"/"-" for the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace repdecomp
