#include "ocr/config.hpp"

#include <fstream>
#include <sstream>

namespace ocr {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_num(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "config: bad numeric value for " + key + ": '" + v + "'");
    }
}

} // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "se_halfwidth") se_halfwidth = static_cast<int>(parse_num(key, value));
    else if (key == "target_pen") target_pen = parse_num(key, value);
    else if (key == "scale_clamp_min") scale_clamp_min = parse_num(key, value);
    else if (key == "scale_clamp_max") scale_clamp_max = parse_num(key, value);
    else if (key == "band_merge") band_merge = parse_num(key, value);
    else if (key == "theta_factor") theta_factor = parse_num(key, value);
    else if (key == "dot_area1") dot_area1 = parse_num(key, value);
    else if (key == "dot_ratio") dot_ratio = parse_num(key, value);
    else if (key == "dot_area2") dot_area2 = parse_num(key, value);
    else if (key == "spur_len") spur_len = static_cast<int>(parse_num(key, value));
    else if (key == "min_support") min_support = static_cast<int>(parse_num(key, value));
    else if (key == "residual") residual = parse_num(key, value);
    else if (key == "min_box_span") min_box_span = parse_num(key, value);
    else if (key == "spacing") spacing = parse_num(key, value);
    else if (key == "civ_db_path") civ_db_path = value;
    else if (key == "dump_dir") dump_dir = value;
    else if (key == "jobs") jobs = static_cast<int>(parse_num(key, value));
    else throw Error(ErrorKind::ParseError, "config: unknown key '" + key + "'");

    if (se_halfwidth < 1) throw Error(ErrorKind::ParseError, "config: se_halfwidth must be >= 1");
    if (target_pen <= 0) throw Error(ErrorKind::ParseError, "config: target_pen must be > 0");
    if (scale_clamp_min >= scale_clamp_max)
        throw Error(ErrorKind::ParseError, "config: scale clamp range is empty");
}

void Config::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::IoError, "cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        lineno++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::ParseError,
                        "config: line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        set(key, value);
    }
}

std::string Config::print() const {
    std::ostringstream o;
    o << "se_halfwidth = " << se_halfwidth << "\n";
    o << "target_pen = " << target_pen << "\n";
    o << "scale_clamp_min = " << scale_clamp_min << "\n";
    o << "scale_clamp_max = " << scale_clamp_max << "\n";
    o << "band_merge = " << band_merge << "\n";
    o << "theta_factor = " << theta_factor << "\n";
    o << "dot_area1 = " << dot_area1 << "\n";
    o << "dot_ratio = " << dot_ratio << "\n";
    o << "dot_area2 = " << dot_area2 << "\n";
    o << "spur_len = " << spur_len << "\n";
    o << "min_support = " << min_support << "\n";
    o << "residual = " << residual << "\n";
    o << "min_box_span = " << min_box_span << "\n";
    o << "spacing = " << spacing << "\n";
    o << "civ_db_path = " << civ_db_path << "\n";
    if (dump_dir) o << "dump_dir = " << *dump_dir << "\n";
    o << "jobs = " << jobs << "\n";
    return o.str();
}

} // namespace ocr
