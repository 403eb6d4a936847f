#pragma once
// Golden-file cases: manifest parsing and output capture through the CLI.
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"

namespace golden {

namespace fs = std::filesystem;

struct Case {
    std::string name;
    std::vector<std::string> args;
};

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
    return s;
}

inline std::vector<Case> read_manifest(const fs::path& path, const std::string& data_dir) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::vector<Case> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("malformed manifest line: " + line);
        Case c{line.substr(0, tab), {"repkit"}};
        std::istringstream words(line.substr(tab + 1));
        for (std::string w; words >> w;) c.args.push_back(replace_all(w, "@DATA@", data_dir));
        cases.push_back(std::move(c));
    }
    return cases;
}

// exit code header, then stdout; absolute data paths are folded back to the placeholder
inline std::string capture(const Case& c, const std::string& data_dir) {
    std::ostringstream out, err;
    const int code = repkit::cli::run(c.args, out, err);
    return "# exit " + std::to_string(code) + "\n" + replace_all(out.str(), data_dir, "@DATA@");
}

inline std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace golden
