#pragma once
// Reads golden/cases.txt: one invocation per line, "name exit args...",
// where "@file" names a file under golden/inputs.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case {
    std::string name;
    int exit_code = 0;
    std::vector<std::string> args;
};

inline std::string dir() { return MMPKIT_GOLDEN_DIR; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<Case> load() {
    std::vector<Case> cases;
    std::istringstream lines(read_file(dir() + "/cases.txt"));
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream words(line);
        Case c;
        words >> c.name >> c.exit_code;
        for (std::string w; words >> w;) c.args.push_back(w[0] == '@' ? dir() + "/inputs/" + w.substr(1) : w);
        c.args.push_back("--format");
        c.args.push_back("machine");
        cases.push_back(std::move(c));
    }
    return cases;
}

inline std::string expected(const Case& c) { return read_file(dir() + "/expected/" + c.name + ".json"); }

} // namespace golden
