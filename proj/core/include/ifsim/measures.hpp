#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ifsim/ifs.hpp"

namespace ifsim {

/// The eleven similarity measures, in catalog order.
enum class Measure {
    S1Hamming,             // 1 - weighted Hamming distance on (mu, nu)
    S2Euclidean,           // 1 - weighted squared-difference distance on (mu, nu)
    S3HammingHesitancy,    // Hamming form including the hesitancy term
    S4EuclideanHesitancy,  // squared form including the hesitancy term
    S5Hausdorff,           // 1 - weighted max of the three absolute differences
    S6LiCheng,             // 1 - p-norm distance on phi = (mu + 1 - nu)/2
    S7Cosine2D,            // weighted cosine of the (mu, nu) vectors
    S8Cosine3D,            // weighted cosine of the (mu, nu, pi) vectors
    S9SpaAbsolute,         // set-pair-analysis absolute form
    S10SpaRatio,           // set-pair-analysis min/max ratio form
    Projection,            // directional: length of A times cosine to B
};

/// Measure selector. S6 carries its exponent p >= 1 (default 2).
class MeasureId {
public:
    MeasureId(Measure kind) : kind_(kind) {}  // NOLINT: implicit by design

    /// S6 with an explicit exponent.
    static MeasureId li_cheng(double p);

    Measure kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }

    /// Canonical name used by the CLI and file layer ("s1-hamming", ...).
    std::string_view name() const noexcept;

    /// Parses a canonical name; S6 picks up the supplied exponent.
    static std::optional<MeasureId> from_name(std::string_view name, double p = 2.0);

    /// Every valid canonical name, catalog order.
    static std::span<const std::string_view> names();

    /// All eleven measures in catalog order (S6 at the given p).
    static std::vector<MeasureId> all(double p = 2.0);

    friend bool operator==(const MeasureId&, const MeasureId&) = default;

private:
    Measure kind_;
    double p_ = 2.0;
};

/// Set-pair-analysis connection number (a, b, c): identity, discrepancy,
/// and contrary degrees, with a + b + c = 1.
struct ConnectionNumber {
    double a;
    double b;
    double c;
};

/// a = mu(1-nu), c = nu(1-mu), b = 1 - a - c.
ConnectionNumber connection_number(const Ifn& x) noexcept;

/// Cosine of the angle between the (mu, nu, pi) vectors of two IFNs.
/// Always in [0,1]; equals 1 iff a = b.
double cosine_ifn(const Ifn& a, const Ifn& b) noexcept;

/// Evaluates the selected measure between two aligned IFSs. S1-S10 are
/// symmetric and lie in [0,1] on valid inputs; Projection is directional
/// (a projected onto b, see projection_similarity).
///
/// Sums run left-to-right in universe order, so results are bit-identical
/// across runs and thread counts.
double similarity(const MeasureId& id, const Ifs& a, const Ifs& b, const WeightVector& w);

/// The proposed projection measure: per element, the component of a's
/// (mu, nu, pi) vector along b's direction, weight-summed. Directional —
/// projection_similarity(a, b, w) != projection_similarity(b, a, w) in
/// general, and this is deliberate: pipelines choose which side is the
/// target. Never symmetrize.
double projection_similarity(const Ifs& a, const Ifs& b, const WeightVector& w);

/// Raw-weights overload for the unweighted application (weight 1 per
/// element); same code path as the weighted form.
double projection_similarity(const Ifs& a, const Ifs& b, std::span<const double> weights);

/// Universe indices where S7's per-element denominator vanishes — an
/// element equal to (0,0) on either side. Such terms contribute 0 to S7
/// and are surfaced as degeneracy flags in reports.
std::vector<std::size_t> s7_degenerate_elements(const Ifs& a, const Ifs& b);

}  // namespace ifsim
