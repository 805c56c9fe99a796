#include "shiftlogic/pattern_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shiftlogic {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

std::string grid_to_text(const Pattern& p, Coord top_left) {
    const Rect box = p.bounding_box();
    std::ostringstream out;
    if (box.empty()) return "";
    bool compact = p.alphabet()->all_single_char();
    for (int y = box.y1; y >= box.y0; --y) {
        bool first = true;
        for (int x = box.x0; x <= box.x1; ++x) {
            auto l = p.at({x, y});
            std::string tok = l ? p.alphabet()->token(*l) : ".";
            if (compact) {
                out << tok;
            } else {
                if (!first) out << ' ';
                out << tok;
            }
            first = false;
        }
        out << '\n';
    }
    (void)top_left;
    return out.str();
}

std::string pattern_to_text(const Pattern& p) {
    std::ostringstream out;
    out << "alphabet";
    for (auto& t : p.alphabet()->tokens()) out << ' ' << t;
    out << '\n';
    const Rect box = p.bounding_box();
    if (!box.empty()) {
        out << "origin " << box.x0 << ' ' << box.y1 << '\n';
        out << grid_to_text(p, {box.x0, box.y1});
    }
    return out.str();
}

Pattern pattern_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    AlphabetRef alphabet;
    bool have_origin = false;
    Coord origin{0, 0};
    std::vector<std::pair<Coord, std::string>> cells;
    int row = 0;
    while (std::getline(in, line)) {
        // comment lines start with '#'
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        auto toks = split_ws(line);
        if (toks[0] == "alphabet") {
            alphabet = Alphabet::make({toks.begin() + 1, toks.end()});
            continue;
        }
        if (toks[0] == "origin") {
            if (toks.size() != 3) throw std::runtime_error("pattern: bad origin line");
            origin = {std::stoi(toks[1]), std::stoi(toks[2])};
            have_origin = true;
            continue;
        }
        if (!alphabet) throw std::runtime_error("pattern: grid before alphabet line");
        if (!have_origin) throw std::runtime_error("pattern: grid before origin line");
        // grid row
        std::vector<std::string> rowtoks;
        if (toks.size() == 1 && alphabet->all_single_char() && toks[0].size() > 1) {
            for (char ch : toks[0]) rowtoks.push_back(std::string(1, ch));
        } else {
            rowtoks = toks;
        }
        for (size_t i = 0; i < rowtoks.size(); ++i) {
            if (rowtoks[i] == ".") continue;
            cells.push_back({Coord{origin.x + int(i), origin.y - row}, rowtoks[i]});
        }
        ++row;
    }
    if (!alphabet) throw std::runtime_error("pattern: missing alphabet line");
    return Pattern::from_tokens(alphabet, cells);
}

Pattern load_pattern(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open pattern file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return pattern_from_text(buf.str());
}

void save_pattern(const Pattern& p, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write pattern file: " + path);
    f << pattern_to_text(p);
}

}  // namespace shiftlogic
