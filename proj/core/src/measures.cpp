#include "ifsim/measures.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace ifsim {

namespace {

constexpr std::array<std::string_view, 11> kNames = {
    "s1-hamming",  "s2-euclidean", "s3-hamming-h", "s4-euclidean-h",
    "s5-hausdorff", "s6-licheng",  "s7-cosine2d",  "s8-cosine3d",
    "s9-spa",      "s10-spa-ratio", "projection",
};

double phi(const Ifn& x) { return (x.mu() + 1.0 - x.nu()) / 2.0; }

double s1(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        d += w[i] * (std::abs(x.mu() - y.mu()) + std::abs(x.nu() - y.nu()));
    }
    return 1.0 - 0.5 * d;
}

double s2(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        const double dm = x.mu() - y.mu();
        const double dn = x.nu() - y.nu();
        d += w[i] * (dm * dm + dn * dn);
    }
    return 1.0 - 0.5 * d;
}

double s3(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        d += w[i] * (std::abs(x.mu() - y.mu()) + std::abs(x.nu() - y.nu()) +
                     std::abs(hesitancy(x) - hesitancy(y)));
    }
    return 1.0 - 0.5 * d;
}

double s4(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        const double dm = x.mu() - y.mu();
        const double dn = x.nu() - y.nu();
        const double dp = hesitancy(x) - hesitancy(y);
        d += w[i] * (dm * dm + dn * dn + dp * dp);
    }
    return 1.0 - 0.5 * d;
}

double s5(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        const double dm = std::abs(x.mu() - y.mu());
        const double dn = std::abs(x.nu() - y.nu());
        const double dp = std::abs(hesitancy(x) - hesitancy(y));
        d += w[i] * std::max({dm, dn, dp});
    }
    return 1.0 - d;
}

double s6(const Ifs& a, const Ifs& b, std::span<const double> w, double p) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d += w[i] * std::pow(std::abs(phi(a[i].value) - phi(b[i].value)), p);
    }
    return 1.0 - std::pow(d, 1.0 / p);
}

double s7(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        const double nx = std::sqrt(x.mu() * x.mu() + x.nu() * x.nu());
        const double ny = std::sqrt(y.mu() * y.mu() + y.nu() * y.nu());
        if (nx == 0.0 || ny == 0.0) continue;  // degenerate element: term is 0
        s += w[i] * (x.mu() * y.mu() + x.nu() * y.nu()) / (nx * ny);
    }
    return s;
}

double s8(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += w[i] * cosine_ifn(a[i].value, b[i].value);
    }
    return s;
}

double s9(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const ConnectionNumber x = connection_number(a[i].value);
        const ConnectionNumber y = connection_number(b[i].value);
        s += w[i] * (1.0 - (std::abs(x.a - y.a) + std::abs(x.b - y.b) +
                            std::abs(x.c - y.c)) / 3.0);
    }
    return s;
}

double s10(const Ifs& a, const Ifs& b, std::span<const double> w) {
    // Denominator cannot vanish: a+b+c = 1 per element, so each max-sum
    // is >= 1 and the weights sum to 1.
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const ConnectionNumber x = connection_number(a[i].value);
        const ConnectionNumber y = connection_number(b[i].value);
        num += w[i] * (std::min(x.a, y.a) + std::min(x.b, y.b) + std::min(x.c, y.c));
        den += w[i] * (std::max(x.a, y.a) + std::max(x.b, y.b) + std::max(x.c, y.c));
    }
    return num / den;
}

double projection(const Ifs& a, const Ifs& b, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Ifn& x = a[i].value;
        const Ifn& y = b[i].value;
        const double dot = x.mu() * y.mu() + x.nu() * y.nu() +
                           hesitancy(x) * hesitancy(y);
        s += w[i] * dot / norm3(y);
    }
    return s;
}

}  // namespace

MeasureId MeasureId::li_cheng(double p) {
    if (!(p >= 1.0)) {
        throw DomainError("Li-Cheng exponent p = " + std::to_string(p) +
                          " must be >= 1");
    }
    MeasureId id(Measure::S6LiCheng);
    id.p_ = p;
    return id;
}

std::string_view MeasureId::name() const noexcept {
    return kNames[static_cast<std::size_t>(kind_)];
}

std::optional<MeasureId> MeasureId::from_name(std::string_view name, double p) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            const auto kind = static_cast<Measure>(i);
            return kind == Measure::S6LiCheng ? li_cheng(p) : MeasureId(kind);
        }
    }
    return std::nullopt;
}

std::span<const std::string_view> MeasureId::names() { return kNames; }

std::vector<MeasureId> MeasureId::all(double p) {
    std::vector<MeasureId> out;
    out.reserve(kNames.size());
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        const auto kind = static_cast<Measure>(i);
        out.push_back(kind == Measure::S6LiCheng ? li_cheng(p) : MeasureId(kind));
    }
    return out;
}

ConnectionNumber connection_number(const Ifn& x) noexcept {
    const double a = x.mu() * (1.0 - x.nu());
    const double c = x.nu() * (1.0 - x.mu());
    return {a, 1.0 - a - c, c};
}

double cosine_ifn(const Ifn& a, const Ifn& b) noexcept {
    if (a == b) return 1.0;
    const double dot = a.mu() * b.mu() + a.nu() * b.nu() +
                       hesitancy(a) * hesitancy(b);
    // The true value lies in [0,1] (nonnegative components, Cauchy-Schwarz);
    // clamp away rounding overshoot.
    return std::clamp(dot / (norm3(a) * norm3(b)), 0.0, 1.0);
}

double similarity(const MeasureId& id, const Ifs& a, const Ifs& b,
                  const WeightVector& w) {
    require_aligned(a, b);
    require_weight_match(w, a.size());
    const std::span<const double> ws = w.values();
    switch (id.kind()) {
        case Measure::S1Hamming:            return s1(a, b, ws);
        case Measure::S2Euclidean:          return s2(a, b, ws);
        case Measure::S3HammingHesitancy:   return s3(a, b, ws);
        case Measure::S4EuclideanHesitancy: return s4(a, b, ws);
        case Measure::S5Hausdorff:          return s5(a, b, ws);
        case Measure::S6LiCheng:            return s6(a, b, ws, id.p());
        case Measure::S7Cosine2D:           return s7(a, b, ws);
        case Measure::S8Cosine3D:           return s8(a, b, ws);
        case Measure::S9SpaAbsolute:        return s9(a, b, ws);
        case Measure::S10SpaRatio:          return s10(a, b, ws);
        case Measure::Projection:           return projection(a, b, ws);
    }
    throw DomainError("unknown measure id");
}

double projection_similarity(const Ifs& a, const Ifs& b, const WeightVector& w) {
    require_aligned(a, b);
    require_weight_match(w, a.size());
    return projection(a, b, w.values());
}

double projection_similarity(const Ifs& a, const Ifs& b,
                             std::span<const double> weights) {
    require_aligned(a, b);
    if (weights.size() != a.size()) {
        throw AlignmentError("weight count " + std::to_string(weights.size()) +
                             " does not match universe size " +
                             std::to_string(a.size()));
    }
    return projection(a, b, weights);
}

std::vector<std::size_t> s7_degenerate_elements(const Ifs& a, const Ifs& b) {
    require_aligned(a, b);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool za = a[i].value.mu() == 0.0 && a[i].value.nu() == 0.0;
        const bool zb = b[i].value.mu() == 0.0 && b[i].value.nu() == 0.0;
        if (za || zb) out.push_back(i);
    }
    return out;
}

}  // namespace ifsim
