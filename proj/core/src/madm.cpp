#include "ifsim/madm.hpp"

#include <algorithm>
#include <unordered_set>

#include "ifsim/ranking.hpp"

namespace ifsim {

DecisionMatrix::DecisionMatrix(std::vector<Alternative> alternatives,
                               std::vector<Indicator> indicators,
                               WeightVector weights)
    : alternatives_(std::move(alternatives)),
      indicators_(std::move(indicators)),
      weights_(std::move(weights)) {
    if (alternatives_.empty()) {
        throw DomainError("decision matrix needs at least one alternative");
    }
    if (indicators_.empty()) {
        throw DomainError("decision matrix needs at least one indicator");
    }
    require_weight_match(weights_, indicators_.size());
    std::unordered_set<std::string_view> seen;
    for (const auto& ind : indicators_) {
        if (!seen.insert(ind.label).second) {
            throw DomainError("duplicate indicator label '" + ind.label + "'");
        }
    }
    seen.clear();
    for (const auto& alt : alternatives_) {
        if (!seen.insert(alt.label).second) {
            throw DomainError("duplicate alternative label '" + alt.label + "'");
        }
        if (alt.entries.size() != indicators_.size()) {
            throw DomainError("alternative '" + alt.label + "' has " +
                              std::to_string(alt.entries.size()) + " entries, expected " +
                              std::to_string(indicators_.size()));
        }
    }
}

Ifs DecisionMatrix::row_ifs(std::size_t i) const {
    std::vector<Ifs::Element> elems;
    elems.reserve(indicators_.size());
    for (std::size_t j = 0; j < indicators_.size(); ++j) {
        elems.push_back({indicators_[j].label, alternatives_[i].entries[j]});
    }
    return Ifs(std::move(elems));
}

Ifs ideal_scheme(const DecisionMatrix& m) {
    std::vector<Ifs::Element> elems;
    elems.reserve(m.indicator_count());
    for (std::size_t j = 0; j < m.indicator_count(); ++j) {
        double mu = m.alternatives()[0].entries[j].mu();
        double nu = m.alternatives()[0].entries[j].nu();
        const bool benefit = m.indicators()[j].kind == IndicatorKind::Benefit;
        for (std::size_t i = 1; i < m.alternative_count(); ++i) {
            const Ifn& e = m.alternatives()[i].entries[j];
            if (benefit) {
                mu = std::max(mu, e.mu());
                nu = std::min(nu, e.nu());
            } else {
                mu = std::min(mu, e.mu());
                nu = std::max(nu, e.nu());
            }
        }
        try {
            elems.push_back({m.indicators()[j].label, Ifn(mu, nu)});
        } catch (const DomainError& e) {
            // Unreachable for valid matrices (the min side is bounded by the
            // extremal row's partner component); kept as a runtime check.
            throw DomainError("ideal construction failed for indicator '" +
                              m.indicators()[j].label + "': " + e.what());
        }
    }
    return Ifs(std::move(elems));
}

RankingReport rank(const DecisionMatrix& m, const MeasureId& measure) {
    Ifs ideal = ideal_scheme(m);
    std::vector<double> scores;
    scores.reserve(m.alternative_count());
    for (std::size_t i = 0; i < m.alternative_count(); ++i) {
        scores.push_back(similarity(measure, m.row_ifs(i), ideal, m.weights()));
    }

    const RankedOrder ranked = rank_descending(scores);
    RankingReport report{measure, std::move(ideal), std::move(scores), {}, {}, {}};
    report.ranking.reserve(ranked.order.size());
    for (std::size_t idx : ranked.order) {
        report.ranking.push_back(m.alternatives()[idx].label);
    }
    report.best = report.ranking.front();
    for (const auto& group : ranked.tie_groups) {
        std::vector<std::string> labels;
        labels.reserve(group.size());
        for (std::size_t idx : group) labels.push_back(m.alternatives()[idx].label);
        report.ties.push_back(std::move(labels));
    }
    return report;
}

MeasureComparison compare_measures(const DecisionMatrix& m,
                                   std::span<const MeasureId> measures) {
    MeasureComparison out;
    out.reports.reserve(measures.size());
    for (const MeasureId& id : measures) {
        out.reports.push_back(rank(m, id));
        const std::string& best = out.reports.back().best;
        if (std::find(out.best_alternatives.begin(), out.best_alternatives.end(),
                      best) == out.best_alternatives.end()) {
            out.best_alternatives.push_back(best);
        }
    }
    return out;
}

}  // namespace ifsim
