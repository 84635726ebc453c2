#pragma once

#include "peano/continuum.hpp"
#include "peano/covers.hpp"
#include "peano/path_builder.hpp"
#include "peano/skeleton.hpp"

#include <cstdint>
#include <vector>

namespace peano {

/// An increasing continuity-modulus bound with a queryable inverse.
/// Power form: Omega(t) = C * t^(1/alpha). Tabulated form: piecewise-linear
/// through given increasing points, linear from the origin to the first
/// point, constant past the last.
class ModulusSpec {
public:
    static ModulusSpec power(double C, double alpha);
    static ModulusSpec tabulated(std::vector<std::pair<double, double>> points);

    double omega(double t) const;
    /// Least t with Omega(t) >= y; throws InverseUndefined when y is not
    /// reached (the hypothesis (0,1] within the range fails).
    double omega_inv(double y) const;

    bool is_power() const { return alpha_ > 0; }
    double alpha() const { return alpha_; }
    double holder_c() const { return c_; }

private:
    ModulusSpec() = default;
    double c_ = 0;
    double alpha_ = 0; // 0 marks the tabulated form
    std::vector<std::pair<double, double>> points_;
};

/// delta_n = Omega^{-1}(min{1, 2^{6-n}}) for n = 1..N; nonincreasing.
std::vector<double> delta_sequence(const ModulusSpec& omega, int N);

/// eps_n = sum_{m=n}^{N} upper(2^-m) * delta_m, using the table's upper
/// bounds; strictly decreasing, with delta_n <= eps_n.
std::vector<double> epsilon_sequence(const SierpinskiTable& table,
                                     const std::vector<double>& deltas);

/// Fill one skeleton gap with a path from its endpoint images through the
/// gap's connecting set, affinely reparametrized onto [u, v]. The returned
/// segment starts at (u, cell_u); the closing (v, cell_v) breakpoint is the
/// next skeleton point.
ParamCurve fill_gap(const Continuum& X, const NestedCovers& nested, const GapRecord& gap,
                    const std::vector<double>& deltas_1_to_N);

struct AssembleOptions {
    std::size_t budget = 20;       // exhaustive-cover budget for the table
    std::uint64_t seed = 0;        // pair-subsampling seed
    std::size_t pair_cap = 100000; // max sampled breakpoint pairs in scans
};

/// The assembled surjection plus its empirical certificate.
struct HolderCurve {
    struct CertRow {
        int n = 1;
        double delta = 0;
        double allowed = 0;  // 2^5 * 2^-n
        double observed = 0; // max image distance over pairs closer than delta
    };

    ParamCurve curve;
    std::vector<CertRow> certificate;
    double coverage = 0; // fraction of cells hit by breakpoints
    double s = 0;
    int levels = 0; // certificate valid for n = 1..levels
    bool passed = false;
    double worst_ratio = 0; // max omega_hat(t) / Omega(t) over the gap grid
    double worst_t = 0;
};

/// Full pipeline: covers -> table -> deltas/epsilons -> skeleton -> gap
/// fills -> splice -> certificate. A failing certificate is returned
/// flagged, not thrown.
HolderCurve assemble(const Continuum& X, const ModulusSpec& omega, int N,
                     const AssembleOptions& opts = {});

/// Smallest n with 2^-n below the inter-cell resolution, so the deepest raw
/// cover splits into singletons and the skeleton visits every cell.
int default_level_count(const Continuum& X);

/// Largest n whose covers can hold whole adjacency edges (2^-n >= max edge
/// length); chain refinement works down to this level and no further.
int chain_level_cap(const Continuum& X);

/// Per-case audit of the five pair classes of the splice bound
/// (both-in-D, same gap, straddling left/right, two gaps), each against its
/// own constant. Sampled deterministically; violations list (case, n) pairs.
struct FiveCaseAudit {
    // max observed / allowed ratio per case (1-indexed by the case number)
    double worst[6] = {0, 0, 0, 0, 0, 0};
    long pairs[6] = {0, 0, 0, 0, 0, 0};
    bool ok = true;
};
FiveCaseAudit audit_five_cases(const Continuum& X, const Skeleton& sk, const ParamCurve& curve,
                               const std::vector<double>& deltas, const AssembleOptions& opts = {});

} // namespace peano
