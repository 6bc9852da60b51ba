#include "nomacov/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace nomacov {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

double thermal_noise_watt(double bandwidth_hz) {
    return dbm_to_watt(-174.0 + 10.0 * std::log10(bandwidth_hz));
}

double NetworkConfig::tau(int i) const {
    return std::pow(2.0, rates.at(i - 1) / B) - 1.0;
}

double NetworkConfig::tau_oma(int i) const {
    return std::pow(2.0, static_cast<double>(M) * rates.at(i - 1) / B) - 1.0;
}

double NetworkConfig::rate_bpcu(int i) const { return rates.at(i - 1) / B; }

void NetworkConfig::validate() const {
    if (M < 1) throw config_error("config: M must be >= 1");
    if (!(R > 0.0)) throw config_error("config: R must be > 0");
    if (!(r0 > 0.0)) throw config_error("config: r0 must be > 0");
    if (!(r0 < R / M))
        throw config_error("config: r0 must be < R/M (zone 1 must be nonempty)");
    if (!(alpha_g > 2.0))
        throw config_error("config: alpha_g must be > 2 (delta_g = 2/alpha_g < 1)");
    if (!(alpha_u >= 3.0))
        throw config_error("config: alpha_u must be >= 3");
    if (P_g < 0.0 || P_u < 0.0) throw config_error("config: powers must be >= 0");
    if (!(sigma2 >= 0.0)) throw config_error("config: sigma2 must be >= 0");
    if (!(B > 0.0)) throw config_error("config: B must be > 0");
    if (static_cast<int>(m.size()) != M)
        throw config_error("config: m_list must have M entries");
    if (static_cast<int>(rates.size()) != M)
        throw config_error("config: rates_bps_list must have M entries");
    for (int mi : m)
        if (mi < 1) throw config_error("config: Nakagami m must be integer >= 1");
    for (double r : rates)
        if (!(r > 0.0)) throw config_error("config: rates must be > 0");
}

NetworkConfig default_config(int M) {
    NetworkConfig cfg;
    cfg.M = M;
    cfg.sigma2 = thermal_noise_watt(cfg.B);
    cfg.m.assign(M, 1);
    cfg.rates.assign(M, 1.0 * cfg.B);
    if (M >= 1) cfg.rates[0] = 1.5 * cfg.B;
    return cfg;
}

namespace {

struct KvFile {
    std::map<std::string, std::string> kv;
    std::map<std::string, int> line_of;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

KvFile parse_kv(const std::string& text, const std::string& origin) {
    KvFile out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        out.kv[key] = val;
        out.line_of[key] = lineno;
    }
    return out;
}

double parse_number(const std::string& key, const std::string& val,
                    const std::string& unit, const std::string& origin, int line) {
    std::istringstream is(val);
    double x;
    if (!(is >> x))
        throw config_error(origin + ":" + std::to_string(line) + ": key '" + key +
                           "' has non-numeric value '" + val + "'");
    std::string suffix;
    if (is >> suffix && !unit.empty() && suffix != unit)
        throw config_error(origin + ":" + std::to_string(line) + ": key '" + key +
                           "' has unexpected unit '" + suffix + "' (expected " + unit + ")");
    return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& val,
                               const std::string& origin, int line) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(val);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw config_error(origin + ":" + std::to_string(line) + ": key '" + key +
                               "' has non-numeric list entry '" + item + "'");
        }
    }
    return out;
}

} // namespace

NetworkConfig parse_config(const std::string& text, const std::string& origin) {
    const KvFile f = parse_kv(text, origin);
    NetworkConfig cfg;
    bool sigma_given = false;

    auto num = [&](const std::string& key, const std::string& unit) {
        return parse_number(key, f.kv.at(key), unit, origin, f.line_of.at(key));
    };

    if (f.kv.count("M")) cfg.M = static_cast<int>(num("M", ""));
    if (f.kv.count("R_m")) cfg.R = num("R_m", "m");
    if (f.kv.count("r0_m")) cfg.r0 = num("r0_m", "m");
    if (f.kv.count("alpha_g")) cfg.alpha_g = num("alpha_g", "");
    if (f.kv.count("alpha_u")) cfg.alpha_u = num("alpha_u", "");
    if (f.kv.count("Pg_dBm")) cfg.P_g = dbm_to_watt(num("Pg_dBm", "dBm"));
    if (f.kv.count("Pu_dBm")) cfg.P_u = dbm_to_watt(num("Pu_dBm", "dBm"));
    if (f.kv.count("B_Hz")) cfg.B = num("B_Hz", "Hz");
    if (f.kv.count("sigma2_dBm")) {
        cfg.sigma2 = dbm_to_watt(num("sigma2_dBm", "dBm"));
        sigma_given = true;
    }
    // Pu_W / Pg_W escape hatch for exactly-zero powers (no dBm equivalent).
    if (f.kv.count("Pg_W")) cfg.P_g = num("Pg_W", "W");
    if (f.kv.count("Pu_W")) cfg.P_u = num("Pu_W", "W");

    if (!sigma_given) cfg.sigma2 = thermal_noise_watt(cfg.B);

    if (f.kv.count("m_list")) {
        const auto v = parse_list("m_list", f.kv.at("m_list"), origin, f.line_of.at("m_list"));
        cfg.m.clear();
        for (double x : v) {
            if (x != std::floor(x))
                throw config_error(origin + ": m_list entries must be integers");
            cfg.m.push_back(static_cast<int>(x));
        }
    } else {
        cfg.m.assign(cfg.M, 1);
    }
    if (f.kv.count("rates_bps_list")) {
        cfg.rates = parse_list("rates_bps_list", f.kv.at("rates_bps_list"), origin,
                               f.line_of.at("rates_bps_list"));
    } else {
        cfg.rates.assign(cfg.M, 1.0 * cfg.B);
        if (cfg.M >= 1) cfg.rates[0] = 1.5 * cfg.B;
    }

    static const char* known[] = {"M",      "R_m",       "r0_m",   "alpha_g",
                                  "alpha_u", "Pg_dBm",   "Pu_dBm", "B_Hz",
                                  "sigma2_dBm", "m_list", "rates_bps_list",
                                  "Pg_W",   "Pu_W"};
    for (const auto& [key, _] : f.kv) {
        if (key.rfind("sweep.", 0) == 0) continue; // sweep keys handled elsewhere
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known))
            throw config_error(origin + ":" + std::to_string(f.line_of.at(key)) +
                               ": unknown key '" + key + "'");
    }

    cfg.validate();
    return cfg;
}

NetworkConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

} // namespace nomacov
