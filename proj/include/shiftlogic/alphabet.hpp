#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace shiftlogic {

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

// Finite ordered set of letter tokens. Letters are whitespace-free strings.
// A product alphabet keeps its component alphabets; tuple letters render as
// components joined with '|', component 0 major in the letter ordering.
class Alphabet {
public:
    static AlphabetRef make(std::vector<std::string> tokens) {
        return std::shared_ptr<const Alphabet>(new Alphabet(std::move(tokens), {}));
    }

    static AlphabetRef product(std::vector<AlphabetRef> components) {
        std::vector<std::string> toks;
        size_t total = 1;
        for (auto& c : components) total *= c->size();
        toks.reserve(total);
        std::vector<size_t> idx(components.size(), 0);
        for (size_t n = 0; n < total; ++n) {
            std::string t;
            size_t rest = n;
            // component 0 major
            for (size_t k = components.size(); k-- > 0;) {
                idx[k] = rest % components[k]->size();
                rest /= components[k]->size();
            }
            for (size_t k = 0; k < components.size(); ++k) {
                if (k) t += '|';
                t += components[k]->token(idx[k]);
            }
            toks.push_back(std::move(t));
        }
        return std::shared_ptr<const Alphabet>(new Alphabet(std::move(toks), std::move(components)));
    }

    size_t size() const { return tokens_.size(); }
    const std::string& token(size_t i) const { return tokens_.at(i); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool has(const std::string& tok) const { return index_.count(tok) != 0; }
    uint16_t index_of(const std::string& tok) const {
        auto it = index_.find(tok);
        if (it == index_.end()) throw std::runtime_error("letter '" + tok + "' not in alphabet");
        return it->second;
    }

    bool is_product() const { return !components_.empty(); }
    size_t layer_count() const { return components_.empty() ? 1 : components_.size(); }
    const std::vector<AlphabetRef>& components() const { return components_; }

    // Component index of product letter `li` in layer `layer`.
    uint16_t component(uint16_t li, size_t layer) const {
        if (components_.empty()) return li;
        size_t rest = li;
        uint16_t out = 0;
        for (size_t k = components_.size(); k-- > 0;) {
            uint16_t c = uint16_t(rest % components_[k]->size());
            rest /= components_[k]->size();
            if (k == layer) out = c;
        }
        return out;
    }

    uint16_t compose(const std::vector<uint16_t>& comps) const {
        if (components_.empty()) return comps.at(0);
        size_t n = 0;
        for (size_t k = 0; k < components_.size(); ++k)
            n = n * components_[k]->size() + comps.at(k);
        return uint16_t(n);
    }

    bool all_single_char() const {
        for (auto& t : tokens_)
            if (t.size() != 1) return false;
        return true;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    Alphabet(std::vector<std::string> toks, std::vector<AlphabetRef> comps)
        : tokens_(std::move(toks)), components_(std::move(comps)) {
        for (size_t i = 0; i < tokens_.size(); ++i) {
            if (!index_.emplace(tokens_[i], uint16_t(i)).second)
                throw std::runtime_error("duplicate letter '" + tokens_[i] + "' in alphabet");
        }
    }

    std::vector<std::string> tokens_;
    std::vector<AlphabetRef> components_;
    std::unordered_map<std::string, uint16_t> index_;
};

inline bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace shiftlogic
