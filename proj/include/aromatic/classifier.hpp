#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aromatic/eldiff.hpp"
#include "aromatic/integrators.hpp"

namespace aromatic {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class OrderStatus { b_series, aromatic_only, not_equivariant };

std::string to_string(OrderStatus s);

/// Maps a probe field in dimension k to the h^k jet term of the method.
using KFormOracle = std::function<PolyVectorField(const PolyVectorField&)>;

struct RecoveryResult {
    bool ok = false;
    ForestSeries series;          // the unique aromatic representation, when ok
    std::string failure;          // diagnostic otherwise
    PolyVectorField witness_field{0};  // probe exhibiting the failure
};

/// Solves for the aromatic-tree combination matching the oracle on a probe
/// set (structured dual-field probes first, then seeded random fields
/// until the exact evaluation matrix has full column rank), then verifies
/// the result on held-out random probes. Failure means the k-form has no
/// aromatic representation. Throws when the probe matrix stays rank
/// deficient after augmentation.
RecoveryResult recover_kform(const KFormOracle& oracle, int k,
                             std::uint64_t seed = kDefaultSeed);

struct OrderVerdict {
    int order = 0;
    OrderStatus status = OrderStatus::b_series;
    ForestSeries series;                  // b_series / aromatic_only
    std::vector<CanonicalKey> offending;  // non-tree keys, aromatic_only
    std::string witness;                  // human-readable witness payload
};

struct ClassificationVerdict {
    std::vector<OrderVerdict> orders;
    OrderStatus overall() const;  // not_equivariant > aromatic_only > b_series
};

ClassificationVerdict classify_integrator(const IntegratorSpec& method, int K,
                                          std::uint64_t seed = kDefaultSeed);

struct DecouplingOutcome {
    bool pass = true;
    int order = 0;      // first mismatching order
    int component = 0;  // block component of the mismatch
    std::string detail;
};

/// Checks expand(method, f (+) g) against expand(method, f) (+)
/// expand(method, g), exactly, per order up to K.
DecouplingOutcome decoupling_test(const IntegratorSpec& method, const PolyVectorField& f,
                                  const PolyVectorField& g, int K);

struct EquivarianceOutcome {
    bool pass = true;
    int order = 0;
    std::string residual;
};

/// Requires intertwines(a, f, g); verifies each jet term is a-related.
EquivarianceOutcome equivariance_probe(const IntegratorSpec& method, const AffineMap& a,
                                       const PolyVectorField& f, const PolyVectorField& g,
                                       int K);

struct FixedPointOutcome {
    bool pass = true;
    int order = 0;
    std::string value;
};

/// Requires f(x0) = 0; every jet term must vanish at x0.
FixedPointOutcome fixed_point_test(const IntegratorSpec& method, const PolyVectorField& f,
                                   const std::vector<Rat>& x0, int K);

}  // namespace aromatic
