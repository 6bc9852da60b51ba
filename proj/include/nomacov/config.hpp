#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nomacov {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full scenario parameterization. All internal quantities are SI
/// (meters, watts, hertz, bits per second); dBm conversion happens once
/// at load time.
struct NetworkConfig {
    int M = 2;                 // devices per tier, one per power zone
    double R = 1000.0;         // disc / semi-sphere radius, m
    double r0 = 1.0;           // path-loss clamp and minimum device distance, m
    double alpha_g = 4.0;      // terrestrial path-loss exponent (> 2)
    double alpha_u = 3.0;      // aerial path-loss exponent (>= 3)
    double P_g = 1e-3;         // terrestrial transmit power, W
    double P_u = 1e-3;         // aerial transmit power, W
    double sigma2 = 0.0;       // noise power, W (0 means: derive from B)
    double B = 125e3;          // bandwidth, Hz
    std::vector<int> m;        // Nakagami parameters per aerial device
    std::vector<double> rates; // target rates per device, bits/s

    double delta_g() const { return 2.0 / alpha_g; }
    double delta_u() const { return 3.0 / alpha_u; }

    /// SINR threshold tau_i = 2^(R_i/B) - 1 for device index i in [1, M].
    double tau(int i) const;
    /// OMA threshold 2^(M R_i / B) - 1.
    double tau_oma(int i) const;
    /// Target rate of device i in bits per channel use (R_i / B).
    double rate_bpcu(int i) const;

    /// Throws config_error naming the violated invariant.
    void validate() const;
};

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// Noise power for bandwidth B: -174 + 10 log10(B) dBm, converted to watts.
double thermal_noise_watt(double bandwidth_hz);

/// Default configuration: M=2, R=1000 m, r0=1 m, alpha_g=4, alpha_u=3,
/// B=125 kHz, P_g=P_u=0 dBm, sigma2 from B, m=[1,...], rates 1.5 BPCU for
/// device 1 and 1 BPCU for the rest.
NetworkConfig default_config(int M = 2);

/// Parse a plain-text key-value config file. Recognized keys:
///   M, R_m, r0_m, alpha_g, alpha_u, Pg_dBm, Pu_dBm, B_Hz, sigma2_dBm,
///   m_list, rates_bps_list
/// Omitted keys fall back to the defaults above. Values may carry their
/// unit as a suffix token ("0 dBm"). Lines starting with '#' are comments.
NetworkConfig load_config(const std::string& path);

/// Same parser over an in-memory string (used by the sweep loader).
NetworkConfig parse_config(const std::string& text, const std::string& origin = "<string>");

} // namespace nomacov
