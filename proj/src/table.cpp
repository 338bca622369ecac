#include "lgskein/table.hpp"

#include <fstream>
#include <sstream>

namespace lgs {

namespace {

std::string trim(std::string_view s) {
    const size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    const size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) out.push_back(trim(part));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::vector<KnotTableEntry> parse_table(std::string_view text) {
    std::vector<KnotTableEntry> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto fail = [&](const std::string& what) -> void {
            throw ParseError("line " + std::to_string(lineno) + ": " + what);
        };
        const std::vector<std::string> f = split(line, ';');
        if (f.size() < 3) fail("expected 'name ; strands ; word'");
        KnotTableEntry e;
        e.line = lineno;
        e.name = f[0];
        if (e.name.empty()) fail("empty name");
        try {
            size_t used = 0;
            e.strands = std::stoi(f[1], &used);
            if (used != f[1].size()) fail("bad strand count '" + f[1] + "'");
        } catch (const std::logic_error&) {
            fail("bad strand count '" + f[1] + "'");
        }
        if (e.strands < 1) fail("strand count must be positive");
        try {
            e.word = parse_braid(f[2], e.strands);
        } catch (const std::exception& ex) {
            fail(ex.what());
        }
        for (size_t i = 3; i < f.size(); ++i) {
            const size_t eq = f[i].find('=');
            if (eq == std::string::npos) fail("expected 'kind = value' in '" + f[i] + "'");
            const std::string key = trim(std::string_view(f[i]).substr(0, eq));
            try {
                e.expected[key] = Scalar::parse(trim(std::string_view(f[i]).substr(eq + 1)));
            } catch (const std::exception& ex) {
                fail(ex.what());
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<KnotTableEntry> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

std::string format_entry(const KnotTableEntry& e) {
    std::string s = e.name + " ; " + std::to_string(e.strands) + " ; " + word_str(e.word.letters);
    for (const auto& [k, v] : e.expected) s += " ; " + k + " = " + v.str();
    return s;
}

}  // namespace lgs
