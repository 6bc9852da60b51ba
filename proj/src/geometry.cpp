#include "nomacov/geometry.hpp"

#include <cmath>

namespace nomacov {

ZoneGeometry make_zone(const NetworkConfig& cfg, ZoneKind kind, int index) {
    if (index < 1 || index > cfg.M)
        throw std::domain_error("make_zone: index out of [1, M]");
    if (!(cfg.r0 > 0.0 && cfg.r0 < cfg.R / cfg.M))
        throw config_error("make_zone: requires 0 < r0 < R/M");
    ZoneGeometry z;
    z.index = index;
    z.kind = kind;
    z.inner = index == 1 ? cfg.r0 : (index - 1) * cfg.R / cfg.M;
    z.outer = index * cfg.R / cfg.M;
    return z;
}

std::vector<ZoneGeometry> make_zones(const NetworkConfig& cfg, ZoneKind kind) {
    std::vector<ZoneGeometry> out;
    out.reserve(cfg.M);
    for (int i = 1; i <= cfg.M; ++i) out.push_back(make_zone(cfg, kind, i));
    return out;
}

double zone_norm_terrestrial(const NetworkConfig& cfg, int index) {
    const double M = cfg.M, R = cfg.R;
    if (index == 1) return R * R - M * M * cfg.r0 * cfg.r0;
    return (2.0 * index - 1.0) * R * R;
}

double zone_norm_aerial(const NetworkConfig& cfg, int index) {
    const double M = cfg.M, R = cfg.R;
    if (index == 1) return R * R * R - M * M * M * cfg.r0 * cfg.r0 * cfg.r0;
    return R * R * R * (3.0 * index * index - 3.0 * index + 1.0);
}

double pdf_terrestrial(const NetworkConfig& cfg, const ZoneGeometry& zone, double r) {
    if (zone.kind != ZoneKind::TerrestrialAnnulus)
        throw std::domain_error("pdf_terrestrial: zone is not an annulus");
    if (r <= zone.inner || r >= zone.outer) return 0.0;
    const double M = cfg.M;
    return 2.0 * M * M * r / zone_norm_terrestrial(cfg, zone.index);
}

double pdf_aerial(const NetworkConfig& cfg, const ZoneGeometry& zone, double r) {
    if (zone.kind != ZoneKind::AerialShell)
        throw std::domain_error("pdf_aerial: zone is not a shell");
    if (r <= zone.inner || r >= zone.outer) return 0.0;
    const double M = cfg.M;
    return 3.0 * M * M * M * r * r / zone_norm_aerial(cfg, zone.index);
}

double sample_distance(const ZoneGeometry& zone, double u) {
    if (zone.kind == ZoneKind::TerrestrialAnnulus) {
        const double i2 = zone.inner * zone.inner;
        const double o2 = zone.outer * zone.outer;
        return std::sqrt(i2 + u * (o2 - i2));
    }
    const double i3 = zone.inner * zone.inner * zone.inner;
    const double o3 = zone.outer * zone.outer * zone.outer;
    return std::cbrt(i3 + u * (o3 - i3));
}

} // namespace nomacov
