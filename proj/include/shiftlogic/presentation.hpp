#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "shiftlogic/pattern.hpp"

namespace shiftlogic {

class SubshiftPresentation;
using PresentationRef = std::shared_ptr<const SubshiftPresentation>;

// A forbidden stencil over a (possibly product) alphabet: each support cell
// constrains a subset of the layers. Over a single-layer alphabet with every
// cell constraining layer 0 this is exactly a forbidden pattern.
struct LayeredRule {
    struct CellReq {
        Coord at;
        // (layer, component letter index) pairs, each layer at most once.
        std::vector<std::pair<uint8_t, uint16_t>> req;
    };
    std::vector<CellReq> cells;

    Rect support() const {
        Rect r;
        for (auto& c : cells) r.include(c.at);
        return r;
    }
};

// Letter-to-letter pair constraint given as an allowed-pair table on one
// layer. Used where listing the complement would be quadratic in a large
// alphabet (the compiled machine layers).
struct PairTable {
    uint8_t layer = 0;
    bool horizontal = true;  // (west, east) if true else (south, north)
    size_t n = 0;            // layer alphabet size
    std::vector<uint8_t> allowed;  // n*n, row = first letter

    bool ok(uint16_t a, uint16_t b) const { return allowed[size_t(a) * n + b] != 0; }
    void set(uint16_t a, uint16_t b, bool v) { allowed[size_t(a) * n + b] = v ? 1 : 0; }
    static PairTable all_forbidden(uint8_t layer, bool horizontal, size_t n) {
        return PairTable{layer, horizontal, n, std::vector<uint8_t>(n * n, 0)};
    }
};

// Full constraint system of an SFT-like presentation.
struct RuleSet {
    AlphabetRef alphabet;
    std::vector<LayeredRule> rules;
    std::vector<PairTable> tables;

    size_t constraint_count() const { return rules.size() + tables.size(); }
};

// Threshold counting constraint: boolean combination of "P occurs at most n
// times" leaves.
struct ThresholdExpr {
    enum class Kind { Leaf, Union, Intersection };
    Kind kind = Kind::Leaf;
    Pattern pattern;   // Leaf
    long long bound = 0;  // Leaf
    std::vector<ThresholdExpr> parts;

    static ThresholdExpr leaf(Pattern p, long long n) {
        ThresholdExpr e;
        e.kind = Kind::Leaf;
        e.pattern = std::move(p);
        e.bound = n;
        return e;
    }
    static ThresholdExpr unite(std::vector<ThresholdExpr> parts) {
        ThresholdExpr e;
        e.kind = Kind::Union;
        e.parts = std::move(parts);
        return e;
    }
    static ThresholdExpr intersect(std::vector<ThresholdExpr> parts) {
        ThresholdExpr e;
        e.kind = Kind::Intersection;
        e.parts = std::move(parts);
        return e;
    }
};

// Variant presentation of a subshift:
//   FullShift | Sft (finite forbidden patterns) | RuleSft (rule system over a
//   product alphabet) | Threshold | Product | Sofic (SFT + letter map).
class SubshiftPresentation {
public:
    enum class Kind { Full, Sft, RuleSft, Threshold, Product, Sofic };

    static PresentationRef full_shift(AlphabetRef a);
    static PresentationRef sft(AlphabetRef a, std::vector<Pattern> forbidden);
    static PresentationRef rule_sft(RuleSet rules);
    static PresentationRef threshold(AlphabetRef a, ThresholdExpr expr);
    static PresentationRef product(std::vector<PresentationRef> components);
    static PresentationRef sofic(PresentationRef sft, std::vector<uint16_t> letter_map,
                                 AlphabetRef target);

    Kind kind() const { return kind_; }
    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }
    const RuleSet& rules() const { return rules_; }
    const ThresholdExpr& threshold_expr() const { return threshold_; }
    const std::vector<PresentationRef>& components() const { return components_; }
    const PresentationRef& sofic_base() const { return sofic_base_; }
    const std::vector<uint16_t>& letter_map() const { return letter_map_; }

    // Stable structural identity, used as a memoization key.
    const std::string& serial() const { return serial_; }

    friend bool operator==(const SubshiftPresentation& a, const SubshiftPresentation& b) {
        return a.serial_ == b.serial_;
    }

private:
    SubshiftPresentation() = default;

    Kind kind_ = Kind::Full;
    AlphabetRef alphabet_;
    std::vector<Pattern> forbidden_;
    RuleSet rules_;
    ThresholdExpr threshold_;
    std::vector<PresentationRef> components_;
    PresentationRef sofic_base_;
    std::vector<uint16_t> letter_map_;
    std::string serial_;
};

// SFT file: "alphabet ..." then "forbidden:" blocks each followed by a grid.
std::string sft_to_text(const SubshiftPresentation& p);
PresentationRef sft_from_text(const std::string& text);
PresentationRef load_sft(const std::string& path);
void save_sft(const SubshiftPresentation& p, const std::string& path);

}  // namespace shiftlogic
