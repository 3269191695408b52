#ifndef HARTOGS_PARTITION_HPP
#define HARTOGS_PARTITION_HPP

#include <vector>

#include "hartogs/rational.hpp"

namespace hartogs {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition (weight 0) is valid.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;          // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }  // l(lambda)

    /// Symmetry factor z_lambda = prod_i i^{m_i} * m_i! over part multiplicities.
    Integer symmetry_factor() const;

    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }

  private:
    std::vector<int> parts_;
};

/// All partitions of `weight` with at most `max_len` parts, in
/// deterministic lexicographically decreasing order.
std::vector<Partition> partitions(int weight, int max_len);

}  // namespace hartogs

#endif
