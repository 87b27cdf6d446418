#pragma once

#include <span>
#include <string>
#include <vector>

#include "ifsim/ifs.hpp"
#include "ifsim/measures.hpp"

namespace ifsim {

/// Whether larger (Benefit) or smaller (Cost) indicator values are preferred.
enum class IndicatorKind { Benefit, Cost };

struct Indicator {
    std::string label;
    IndicatorKind kind;
};

/// Alternatives x indicators grid of IFNs with per-indicator kind and an
/// indicator weight vector. The indicator axis plays the role of the
/// universe of discourse.
class DecisionMatrix {
public:
    struct Alternative {
        std::string label;
        std::vector<Ifn> entries;  // one per indicator
    };

    DecisionMatrix(std::vector<Alternative> alternatives,
                   std::vector<Indicator> indicators, WeightVector weights);

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t indicator_count() const noexcept { return indicators_.size(); }

    const std::vector<Alternative>& alternatives() const noexcept { return alternatives_; }
    const std::vector<Indicator>& indicators() const noexcept { return indicators_; }
    const WeightVector& weights() const noexcept { return weights_; }

    /// Row i as an IFS over the indicator labels.
    Ifs row_ifs(std::size_t i) const;

private:
    std::vector<Alternative> alternatives_;
    std::vector<Indicator> indicators_;
    WeightVector weights_;
};

/// Scores, ranking, and the winner of one measure's pass over a matrix.
struct RankingReport {
    MeasureId measure;
    Ifs ideal;
    std::vector<double> scores;                  // alternative input order
    std::vector<std::string> ranking;            // best first
    std::string best;                            // == ranking.front()
    std::vector<std::vector<std::string>> ties;  // groups of >= 2 tied labels
};

/// Per indicator, combines the best component over all alternatives:
/// (max mu, min nu) for Benefit, (min mu, max nu) for Cost. The result is
/// always a valid IFS: the min side of each pair is bounded by the value
/// the extremal row already pairs with the max side.
Ifs ideal_scheme(const DecisionMatrix& m);

/// Builds the ideal scheme, scores every alternative against it with the
/// given measure and the matrix's indicator weights (for Projection the
/// alternative is the projected side), and ranks descending.
RankingReport rank(const DecisionMatrix& m, const MeasureId& measure);

struct MeasureComparison {
    std::vector<RankingReport> reports;           // one per requested measure
    std::vector<std::string> best_alternatives;   // distinct winners, first-seen order
};

/// Runs rank once per measure and summarizes how far the winners agree.
MeasureComparison compare_measures(const DecisionMatrix& m,
                                   std::span<const MeasureId> measures);

}  // namespace ifsim
