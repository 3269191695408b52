#include "hartogs/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace hartogs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Integer Partition::symmetry_factor() const {
    std::map<int, unsigned long> mult;
    for (int p : parts_) ++mult[p];
    Integer z(1);
    for (auto [part, m] : mult) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), m);
        z *= pw * factorial(m);
    }
    return z;
}

namespace {

void enumerate(int remaining, int max_part, int max_len, std::vector<int>& stack,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_len == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        enumerate(remaining - part, part, max_len - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int weight, int max_len) {
    if (weight < 0) throw std::invalid_argument("partitions: negative weight");
    if (max_len < 1) throw std::invalid_argument("partitions: max_len must be positive");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate(weight, weight, max_len, stack, out);
    return out;
}

}  // namespace hartogs
