#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ifsim/ifn.hpp"

namespace ifsim {

/// An intuitionistic fuzzy set: an ordered, nonempty sequence of labeled
/// IFNs over a finite universe of discourse. Element order is significant —
/// it is the alignment key between two IFSs.
class Ifs {
public:
    struct Element {
        std::string label;
        Ifn value;

        friend bool operator==(const Element&, const Element&) = default;
    };

    explicit Ifs(std::vector<Element> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    const Element& operator[](std::size_t i) const noexcept { return elements_[i]; }
    const std::vector<Element>& elements() const noexcept { return elements_; }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    /// True when the other set has the same labels in the same order.
    bool aligned_with(const Ifs& other) const noexcept;

    friend bool operator==(const Ifs&, const Ifs&) = default;

private:
    std::vector<Element> elements_;
};

/// Throws AlignmentError unless a and b share the universe (labels + order).
void require_aligned(const Ifs& a, const Ifs& b);

/// Nonnegative weights over a universe, each in [0,1], summing to 1
/// (within 1e-9).
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    static WeightVector uniform(std::size_t n);

    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const double> values() const noexcept { return weights_; }
    double operator[](std::size_t i) const noexcept { return weights_[i]; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<double> weights_;
};

/// Throws AlignmentError unless the weight count matches the universe size.
void require_weight_match(const WeightVector& w, std::size_t universe_size);

}  // namespace ifsim
