#include "thetalab/config.hpp"

#include <fstream>
#include <sstream>

#include "thetalab/errors.hpp"

namespace thetalab::config {

void RunConfig::validate() const {
    if (tol_roots <= 0 || tol_matrix <= 0) throw Error("config: tolerances must be positive");
    if (degree_window < 0) throw Error("config: degree window must be nonnegative");
    if (format != "json" && format != "csv") throw Error("config: format must be json or csv");
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const char* ws = " \t\r\n";
            auto b = s.find_first_not_of(ws);
            auto e = s.find_last_not_of(ws);
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "tol_roots")
            base.tol_roots = std::stod(val);
        else if (key == "tol_matrix")
            base.tol_matrix = std::stod(val);
        else if (key == "degree_window")
            base.degree_window = std::stoi(val);
        else if (key == "seed")
            base.seed = std::stoull(val);
        else if (key == "group_cap")
            base.group_cap = std::stoull(val);
        else if (key == "format")
            base.format = val;
        else if (key == "timings")
            base.timings = (val == "1" || val == "true");
        else
            throw Error("config: unknown key '" + key + "'");
    }
    base.validate();
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream f(path);
    if (!f) throw Error("config: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), base);
}

}  // namespace thetalab::config
