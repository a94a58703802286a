// SPDX-License-Identifier: Apache-2.0
#include "airs/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "airs/errors.hpp"

namespace airs {

namespace {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_vec(const Vec3& v) {
    return fmt_num(v.x) + "," + fmt_num(v.y) + "," + fmt_num(v.z);
}

double parse_num(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + ": malformed numeric value '" + value + "'");
    }
    while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) {
        ++pos;
    }
    if (pos != value.size()) {
        throw ConfigError(key + ": malformed numeric value '" + value + "'");
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_num(key, value);
    if (std::abs(v - std::llround(v)) > 1e-9) {
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    }
    return static_cast<int>(std::llround(v));
}

Vec3 parse_vec(const std::string& key, const std::string& value) {
    std::vector<double> parts;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(parse_num(key, item));
    }
    if (parts.size() == 2) {
        parts.push_back(0.0);
    }
    if (parts.size() != 3) {
        throw ConfigError(key + ": expected 'x,y,z', got '" + value + "'");
    }
    return {parts[0], parts[1], parts[2]};
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

std::string scheme_to_string(Scheme s) {
    switch (s) {
        case Scheme::One: return "1";
        case Scheme::Two: return "2";
        case Scheme::FixedIrs: return "fixed";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "1" || s == "scheme1") return Scheme::One;
    if (s == "2" || s == "scheme2") return Scheme::Two;
    if (s == "fixed") return Scheme::FixedIrs;
    throw ConfigError("scheme: expected 1, 2 or fixed, got '" + s + "'");
}

ScenarioConfig default_config() {
    return finalize_config(ScenarioConfig{}).config;
}

void apply_config_key(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "M") {
        cfg.m_sensors = parse_int(key, value);
    } else if (key == "r") {
        cfg.field_radius = parse_num(key, value);
    } else if (key == "Omega_A") {
        cfg.omega_a = parse_vec(key, value);
    } else if (key == "Omega_B") {
        cfg.omega_b = parse_vec(key, value);
    } else if (key == "Omega_E") {
        cfg.omega_e = parse_vec(key, value);
    } else if (key == "Omega_fixIRS") {
        cfg.omega_fix_irs = parse_vec(key, value);
    } else if (key == "q_o") {
        cfg.q_start = parse_vec(key, value);
    } else if (key == "H") {
        cfg.altitude = parse_num(key, value);
    } else if (key == "T") {
        cfg.total_time = parse_num(key, value);
    } else if (key == "Z") {
        cfg.speed = parse_num(key, value);
    } else if (key == "alpha") {
        cfg.dt = parse_num(key, value);
    } else if (key == "f") {
        cfg.carrier_hz = parse_num(key, value);
    } else if (key == "Kx") {
        cfg.kx = parse_int(key, value);
    } else if (key == "Ky") {
        cfg.ky = parse_int(key, value);
    } else if (key == "K") {
        const int k = parse_int(key, value);
        const int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(k))));
        if (side * side != k || k < 1) {
            throw ConfigError("K: must be a perfect square (use Kx/Ky otherwise)");
        }
        cfg.kx = side;
        cfg.ky = side;
    } else if (key == "dx") {
        cfg.dx = parse_num(key, value);
    } else if (key == "dy") {
        cfg.dy = parse_num(key, value);
    } else if (key == "sigma2_B_dBm") {
        cfg.sigma_b2_dbm = parse_num(key, value);
    } else if (key == "sigma2_E_dBm") {
        cfg.sigma_e2_dbm = parse_num(key, value);
    } else if (key == "rho0_dB") {
        cfg.rho0_db = parse_num(key, value);
    } else if (key == "P_dBm") {
        cfg.power_dbm = parse_num(key, value);
    } else if (key == "scheme") {
        cfg.scheme = scheme_from_string(value);
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
    } else if (key == "trials") {
        cfg.trials = parse_int(key, value);
    } else if (key == "share_eve_fading") {
        cfg.share_eve_fading = (value == "1" || value == "true");
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

ParsedConfig finalize_config(ScenarioConfig cfg) {
    ParsedConfig out;
    if (cfg.m_sensors < 1) {
        throw ConfigError("M: need at least one sensor");
    }
    if (cfg.field_radius < 0.0) {
        throw ConfigError("r: radius must be non-negative");
    }
    if (!(cfg.altitude > 0.0)) {
        throw ConfigError("H: altitude must be positive");
    }
    if (!(cfg.dt > 0.0) || !(cfg.total_time > 0.0)) {
        throw ConfigError("T/alpha: flight time and slot duration must be positive");
    }
    const double n = cfg.total_time / cfg.dt;
    if (std::abs(n - std::llround(n)) > 1e-9 || std::llround(n) < 1) {
        throw ConfigError("T/alpha: N = T/alpha must be a positive integer");
    }
    if (cfg.speed < 0.0) {
        throw ConfigError("Z: speed must be non-negative");
    }
    if (!(cfg.carrier_hz > 0.0)) {
        throw ConfigError("f: carrier frequency must be positive");
    }
    if (cfg.trials < 1) {
        throw ConfigError("trials: must be >= 1");
    }

    const double lambda = cfg.wavelength();
    if (cfg.dx == 0.0) {
        cfg.dx = lambda / 4.0;
    }
    if (cfg.dy == 0.0) {
        cfg.dy = lambda / 4.0;
    }

    cfg.sigma_b2 = std::pow(10.0, cfg.sigma_b2_dbm / 10.0);
    cfg.sigma_e2 = std::pow(10.0, cfg.sigma_e2_dbm / 10.0);
    cfg.rho0 = std::pow(10.0, cfg.rho0_db / 10.0);
    cfg.power = std::pow(10.0, cfg.power_dbm / 10.0);
    if (!(cfg.sigma_b2 > 0.0) || !(cfg.sigma_e2 > 0.0)) {
        throw ConfigError("sigma2: noise power must be positive");
    }
    if (!(cfg.power > 0.0)) {
        throw ConfigError("P_dBm: transmit power must be positive");
    }

    cfg.q_start.z = cfg.altitude;

    IrsGrid grid = cfg.grid(); // validates spacings and counts
    const Lemma1Limits lim = lemma1_limits(grid);
    if (!lim.feasible) {
        out.warnings.push_back("K=" + std::to_string(grid.size()) +
                               " exceeds the Lemma-1 limit " +
                               std::to_string(lim.kx_max * lim.ky_max) +
                               " (Kx<=" + std::to_string(lim.kx_max) + ", Ky<=" +
                               std::to_string(lim.ky_max) + "); running anyway");
    }
    out.config = cfg;
    return out;
}

ParsedConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        }
        apply_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return finalize_config(cfg);
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string manifest_text(const ScenarioConfig& cfg, const std::string& command,
                          const std::string& out_dir, const std::string& timestamp) {
    std::string out;
    out += "# airs_sim manifest\n";
    out += "# version=" + std::string(kToolVersion) + "\n";
    out += "# command=" + command + "\n";
    out += "# out=" + out_dir + "\n";
    out += "# timestamp=" + timestamp + "\n";
    out += "M=" + std::to_string(cfg.m_sensors) + "\n";
    out += "r=" + fmt_num(cfg.field_radius) + "\n";
    out += "Omega_A=" + fmt_vec(cfg.omega_a) + "\n";
    out += "Omega_B=" + fmt_vec(cfg.omega_b) + "\n";
    out += "Omega_E=" + fmt_vec(cfg.omega_e) + "\n";
    out += "Omega_fixIRS=" + fmt_vec(cfg.omega_fix_irs) + "\n";
    out += "q_o=" + fmt_vec(cfg.q_start) + "\n";
    out += "H=" + fmt_num(cfg.altitude) + "\n";
    out += "T=" + fmt_num(cfg.total_time) + "\n";
    out += "Z=" + fmt_num(cfg.speed) + "\n";
    out += "alpha=" + fmt_num(cfg.dt) + "\n";
    out += "f=" + fmt_num(cfg.carrier_hz) + "\n";
    out += "Kx=" + std::to_string(cfg.kx) + "\n";
    out += "Ky=" + std::to_string(cfg.ky) + "\n";
    out += "dx=" + fmt_num(cfg.dx) + "\n";
    out += "dy=" + fmt_num(cfg.dy) + "\n";
    out += "sigma2_B_dBm=" + fmt_num(cfg.sigma_b2_dbm) + "\n";
    out += "sigma2_E_dBm=" + fmt_num(cfg.sigma_e2_dbm) + "\n";
    out += "rho0_dB=" + fmt_num(cfg.rho0_db) + "\n";
    out += "P_dBm=" + fmt_num(cfg.power_dbm) + "\n";
    out += "scheme=" + scheme_to_string(cfg.scheme) + "\n";
    out += "seed=" + std::to_string(cfg.seed) + "\n";
    out += "trials=" + std::to_string(cfg.trials) + "\n";
    out += "share_eve_fading=" + std::string(cfg.share_eve_fading ? "1" : "0") + "\n";
    return out;
}

} // namespace airs
