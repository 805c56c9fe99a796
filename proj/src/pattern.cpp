#include "shiftlogic/pattern.hpp"

#include <stdexcept>

namespace shiftlogic {

Pattern::Pattern(AlphabetRef alphabet, std::vector<Cell> cells)
    : alphabet_(std::move(alphabet)), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(),
              [](const Cell& a, const Cell& b) { return canonical_less(a.at, b.at); });
    for (size_t i = 0; i + 1 < cells_.size(); ++i)
        if (cells_[i].at == cells_[i + 1].at)
            throw std::runtime_error("pattern has duplicate cell");
    for (auto& c : cells_) {
        if (c.letter >= alphabet_->size()) throw std::runtime_error("pattern letter out of range");
        bbox_.include(c.at);
    }
}

Pattern Pattern::from_tokens(AlphabetRef alphabet,
                             const std::vector<std::pair<Coord, std::string>>& cells) {
    std::vector<Cell> cs;
    cs.reserve(cells.size());
    for (auto& [at, tok] : cells) cs.push_back({at, alphabet->index_of(tok)});
    return Pattern(std::move(alphabet), std::move(cs));
}

std::optional<uint16_t> Pattern::at(Coord c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c, [](const Cell& cell, Coord v) {
        return canonical_less(cell.at, v);
    });
    if (it != cells_.end() && it->at == c) return it->letter;
    return std::nullopt;
}

const std::string& Pattern::token_at(Coord c) const {
    auto l = at(c);
    if (!l) throw std::runtime_error("coordinate outside pattern domain");
    return alphabet_->token(*l);
}

void Pattern::set(Coord c, uint16_t letter) {
    if (letter >= alphabet_->size()) throw std::runtime_error("pattern letter out of range");
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c, [](const Cell& cell, Coord v) {
        return canonical_less(cell.at, v);
    });
    if (it != cells_.end() && it->at == c) {
        it->letter = letter;
        return;
    }
    cells_.insert(it, Cell{c, letter});
    bbox_.include(c);
}

Pattern Pattern::translated(Coord v) const {
    std::vector<Cell> cs = cells_;
    for (auto& c : cs) c.at = c.at + v;
    return Pattern(alphabet_, std::move(cs));
}

Pattern Pattern::restricted(const std::vector<Coord>& domain) const {
    std::vector<Cell> cs;
    for (Coord c : domain) {
        auto l = at(c);
        if (l) cs.push_back({c, *l});
    }
    return Pattern(alphabet_, std::move(cs));
}

bool operator==(const Pattern& a, const Pattern& b) {
    if (!same_alphabet(a.alphabet_, b.alphabet_)) return false;
    if (a.cells_.size() != b.cells_.size()) return false;
    for (size_t i = 0; i < a.cells_.size(); ++i)
        if (a.cells_[i].at != b.cells_[i].at || a.cells_[i].letter != b.cells_[i].letter)
            return false;
    return true;
}

bool Pattern::canonical_before(const Pattern& a, const Pattern& b) {
    size_t n = std::min(a.cells_.size(), b.cells_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.cells_[i].at != b.cells_[i].at)
            return canonical_less(a.cells_[i].at, b.cells_[i].at);
        if (a.cells_[i].letter != b.cells_[i].letter)
            return a.cells_[i].letter < b.cells_[i].letter;
    }
    return a.cells_.size() < b.cells_.size();
}

bool occurs_at(const Pattern& p, const Pattern& q, Coord v) {
    if (!same_alphabet(p.alphabet(), q.alphabet()))
        throw std::runtime_error("occurs_at: alphabet mismatch");
    for (auto& cell : p.cells()) {
        auto l = q.at(v + cell.at);
        if (!l || *l != cell.letter) return false;
    }
    return true;
}

}  // namespace shiftlogic
