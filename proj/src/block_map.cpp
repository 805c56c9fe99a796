#include "shiftlogic/block_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlogic {

BlockMap::BlockMap(AlphabetRef source, AlphabetRef target, std::vector<Coord> neighborhood)
    : source_(std::move(source)), target_(std::move(target)), nbhd_(std::move(neighborhood)) {
    std::sort(nbhd_.begin(), nbhd_.end(), canonical_less);
}

void BlockMap::add_rule(const std::vector<std::string>& neighborhood_letters, const std::string& out) {
    if (neighborhood_letters.size() != nbhd_.size())
        throw std::runtime_error("block map rule arity mismatch");
    std::vector<uint16_t> key;
    key.reserve(nbhd_.size());
    for (auto& t : neighborhood_letters) key.push_back(source_->index_of(t));
    rule_[key] = target_->index_of(out);
}

Pattern BlockMap::apply(const Pattern& p) const {
    if (!same_alphabet(p.alphabet(), source_))
        throw std::runtime_error("block map source alphabet mismatch");
    std::vector<Pattern::Cell> out;
    if (p.empty() || nbhd_.empty()) {
        if (nbhd_.empty()) throw std::runtime_error("block map has empty neighborhood");
        return Pattern(target_);
    }
    const Rect box = p.bounding_box();
    Rect nb;
    for (Coord c : nbhd_) nb.include(c);
    for (int y = box.y1 - nb.y0; y >= box.y0 - nb.y1; --y) {
        for (int x = box.x0 - nb.x0; x <= box.x1 - nb.x1; ++x) {
            Coord v{x, y};
            std::vector<uint16_t> key;
            key.reserve(nbhd_.size());
            bool full = true;
            for (Coord w : nbhd_) {
                auto l = p.at(v + w);
                if (!l) { full = false; break; }
                key.push_back(*l);
            }
            if (!full) continue;
            auto it = rule_.find(key);
            if (it == rule_.end()) {
                std::string seen;
                for (size_t i = 0; i < key.size(); ++i) {
                    if (i) seen += ' ';
                    seen += source_->token(key[i]);
                }
                throw std::runtime_error("block map local rule undefined on window: " + seen);
            }
            out.push_back({v, it->second});
        }
    }
    return Pattern(target_, std::move(out));
}

}  // namespace shiftlogic
