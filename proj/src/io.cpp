#include "finspace/io.hpp"

#include <fstream>
#include <sstream>

namespace finspace {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    std::size_t b = s.find_first_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b);
}

int parse_index(const std::string& tok, const std::string& line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "' in line: " + line);
    }
}

}  // namespace

Poset read_poset(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::pair<int, std::string>> labels;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty()) {
            if (n >= 0) break;  // blank line ends a poset block once started
            continue;
        }
        std::istringstream ss(s);
        std::string kw;
        ss >> kw;
        if (kw == "poset") {
            if (n >= 0) throw ParseError("duplicate 'poset' line: " + line);
            std::string tok;
            if (!(ss >> tok)) throw ParseError("missing count in line: " + line);
            n = parse_index(tok, line);
        } else if (kw == "cover") {
            if (n < 0) throw ParseError("'cover' before 'poset' line: " + line);
            std::string ti, tj;
            if (!(ss >> ti >> tj)) throw ParseError("cover needs two indices: " + line);
            covers.emplace_back(parse_index(ti, line), parse_index(tj, line));
        } else if (kw == "label") {
            if (n < 0) throw ParseError("'label' before 'poset' line: " + line);
            std::string ti;
            if (!(ss >> ti)) throw ParseError("label needs an index: " + line);
            int i = parse_index(ti, line);
            std::string name;
            std::getline(ss, name);
            std::size_t b = name.find_first_not_of(" \t");
            if (b == std::string::npos) throw ParseError("label needs a name: " + line);
            labels.emplace_back(i, name.substr(b));
        } else {
            throw ParseError("unknown directive '" + kw + "' in line: " + line);
        }
    }
    if (n < 0) throw ParseError("no 'poset <n>' line found");
    Poset p = from_covers(n, covers);
    for (auto& [i, name] : labels) {
        if (i < 0 || i >= n) throw ParseError("label index out of range: " + std::to_string(i));
        if (p.labels.empty()) p.labels.resize(n);
        p.labels[i] = name;
    }
    return p;
}

Poset read_poset_string(const std::string& text) {
    std::istringstream ss(text);
    return read_poset(ss);
}

Poset read_poset_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open for reading: " + path);
    return read_poset(f);
}

void write_poset(std::ostream& out, const Poset& p) {
    out << "poset " << p.n << "\n";
    for (auto [i, j] : cover_pairs(p)) {
        out << "cover " << i << " " << j << "\n";
    }
    if (!p.labels.empty()) {
        for (int i = 0; i < p.n; ++i) {
            if (!p.labels[i].empty()) out << "label " << i << " " << p.labels[i] << "\n";
        }
    }
}

std::string poset_to_string(const Poset& p) {
    std::ostringstream ss;
    write_poset(ss, p);
    return ss.str();
}

void write_poset_file(const std::string& path, const Poset& p) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    write_poset(f, p);
}

}  // namespace finspace
