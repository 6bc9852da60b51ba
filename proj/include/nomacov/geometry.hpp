#pragma once

#include "nomacov/config.hpp"

#include <vector>

namespace nomacov {

enum class ZoneKind { TerrestrialAnnulus, AerialShell };

/// Power zone i: annulus (2-D disc) or spherical shell (3-D semi-sphere).
/// Zone 1 starts at r0; zone i > 1 spans ((i-1)R/M, iR/M).
struct ZoneGeometry {
    int index = 1;
    ZoneKind kind = ZoneKind::TerrestrialAnnulus;
    double inner = 0.0; // m
    double outer = 0.0; // m
};

ZoneGeometry make_zone(const NetworkConfig& cfg, ZoneKind kind, int index);
std::vector<ZoneGeometry> make_zones(const NetworkConfig& cfg, ZoneKind kind);

/// Distance density of the device conditioned to zone `zone`:
///   terrestrial: 2 M^2 r / (R^2 - M^2 r0^2) for i = 1,
///                2 M^2 r / ((2i-1) R^2)     for i > 1;
///   aerial:      3 M^3 r^2 / (R^3 - M^3 r0^3) for i = 1,
///                3 M^3 r^2 / (R^3 (3i^2-3i+1)) for i > 1.
/// Zero outside the zone.
double pdf_terrestrial(const NetworkConfig& cfg, const ZoneGeometry& zone, double r);
double pdf_aerial(const NetworkConfig& cfg, const ZoneGeometry& zone, double r);

/// Normalizing measure of the zone pdf (denominator above, without the
/// 2M^2 r / 3M^3 r^2 numerator). Exposed for the analytics prefactors.
double zone_norm_terrestrial(const NetworkConfig& cfg, int index);
double zone_norm_aerial(const NetworkConfig& cfg, int index);

/// Inverse-CDF distance sampler, strictly increasing in u on (0,1):
///   annulus: sqrt(inner^2 + u (outer^2 - inner^2))
///   shell:   cbrt(inner^3 + u (outer^3 - inner^3))
double sample_distance(const ZoneGeometry& zone, double u);

} // namespace nomacov
