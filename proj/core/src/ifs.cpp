#include "ifsim/ifs.hpp"

#include <cmath>
#include <unordered_set>

namespace ifsim {

Ifs::Ifs(std::vector<Element> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw DomainError("an IFS must have at least one element");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& e : elements_) {
        if (!seen.insert(e.label).second) {
            throw DomainError("duplicate universe label '" + e.label + "'");
        }
    }
}

bool Ifs::aligned_with(const Ifs& other) const noexcept {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (elements_[i].label != other.elements_[i].label) return false;
    }
    return true;
}

void require_aligned(const Ifs& a, const Ifs& b) {
    if (a.size() != b.size()) {
        throw AlignmentError("universe size mismatch: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].label != b[i].label) {
            throw AlignmentError("universe label mismatch at position " +
                                 std::to_string(i) + ": '" + a[i].label + "' vs '" +
                                 b[i].label + "'");
        }
    }
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw DomainError("weight vector must be nonempty");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw DomainError("weight " + std::to_string(w) + " outside [0,1]");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw DomainError("weights sum to " + std::to_string(sum) + ", expected 1");
    }
}

WeightVector WeightVector::uniform(std::size_t n) {
    if (n == 0) throw DomainError("weight vector must be nonempty");
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

void require_weight_match(const WeightVector& w, std::size_t universe_size) {
    if (w.size() != universe_size) {
        throw AlignmentError("weight count " + std::to_string(w.size()) +
                             " does not match universe size " +
                             std::to_string(universe_size));
    }
}

}  // namespace ifsim
