#include "shiftlogic/search.hpp"

#include <algorithm>
#include <cstring>

namespace shiftlogic {

namespace {

std::vector<uint8_t> match_set(const Alphabet& a, const LayeredRule::CellReq& req) {
    std::vector<uint8_t> ok(a.size(), 1);
    for (size_t l = 0; l < a.size(); ++l)
        for (auto& [layer, letter] : req.req)
            if (a.component(uint16_t(l), layer) != letter) {
                ok[l] = 0;
                break;
            }
    return ok;
}

}  // namespace

size_t GridModel::index_of(Coord c) const { return storage_index(c); }

GridModel::GridModel(const PresentationRef& x, const Rect& grid) : grid_(grid) {
    const Alphabet& a = *x->alphabet();
    n_ = a.size();
    if (n_ > 4096)
        throw SearchCapExceeded("alphabet of " + std::to_string(n_) +
                                " letters exceeds the solver's pair-table limit");
    words_ = (n_ + 63) / 64;
    cells_.assign(size_t(grid_.area()), -1);
    order_ = grid_.cells();

    auto full_row = [&]() {
        std::vector<uint64_t> row(words_, ~0ULL);
        if (n_ % 64) row[words_ - 1] = (1ULL << (n_ % 64)) - 1;
        return row;
    };

    std::vector<LayeredRule> rules;
    const std::vector<PairTable>* tables = nullptr;
    switch (x->kind()) {
        case SubshiftPresentation::Kind::Full:
            trivial_ = true;
            break;
        case SubshiftPresentation::Kind::Sft:
            for (auto& f : x->forbidden()) {
                LayeredRule r;
                for (auto& c : f.cells()) r.cells.push_back({c.at, {{0, c.letter}}});
                rules.push_back(std::move(r));
            }
            break;
        case SubshiftPresentation::Kind::RuleSft:
            rules = x->rules().rules;
            tables = &x->rules().tables;
            break;
        default:
            throw std::runtime_error("GridModel: unsupported presentation kind");
    }
    if (trivial_) return;

    // start fully allowed, clear pairs as rules come in
    auto row = full_row();
    east_ok_.resize(n_ * words_);
    north_ok_.resize(n_ * words_);
    for (size_t l = 0; l < n_; ++l) {
        std::copy(row.begin(), row.end(), east_ok_.begin() + l * words_);
        std::copy(row.begin(), row.end(), north_ok_.begin() + l * words_);
    }
    unary_ok_.assign(n_, 1);

    auto clear_pair = [&](std::vector<uint64_t>& table, const std::vector<uint8_t>& first,
                          const std::vector<uint8_t>& second) {
        for (size_t p = 0; p < n_; ++p) {
            if (!first[p]) continue;
            uint64_t* r = table.data() + p * words_;
            for (size_t q = 0; q < n_; ++q)
                if (second[q]) r[q / 64] &= ~(1ULL << (q % 64));
        }
    };

    for (auto& rule : rules) {
        if (rule.cells.size() == 1) {
            auto m = match_set(a, rule.cells[0]);
            for (size_t l = 0; l < n_; ++l)
                if (m[l]) unary_ok_[l] = 0;
            continue;
        }
        if (rule.cells.size() == 2) {
            Coord d = rule.cells[1].at - rule.cells[0].at;
            auto m0 = match_set(a, rule.cells[0]);
            auto m1 = match_set(a, rule.cells[1]);
            if (d == Coord{1, 0}) { clear_pair(east_ok_, m0, m1); continue; }
            if (d == Coord{-1, 0}) { clear_pair(east_ok_, m1, m0); continue; }
            if (d == Coord{0, 1}) { clear_pair(north_ok_, m0, m1); continue; }
            if (d == Coord{0, -1}) { clear_pair(north_ok_, m1, m0); continue; }
        }
        Stencil s;
        for (auto& c : rule.cells) {
            s.at.push_back(c.at);
            s.ok.push_back(match_set(a, c));
        }
        s.last = s.at[0];
        for (Coord c : s.at)
            if (canonical_less(s.last, c)) s.last = c;
        stencils_.push_back(std::move(s));
    }

    if (tables) {
        for (auto& t : *tables) {
            auto& table = t.horizontal ? east_ok_ : north_ok_;
            for (size_t p = 0; p < n_; ++p) {
                uint16_t cp = a.component(uint16_t(p), t.layer);
                uint64_t* r = table.data() + p * words_;
                for (size_t q = 0; q < n_; ++q)
                    if (!t.ok(cp, a.component(uint16_t(q), t.layer)))
                        r[q / 64] &= ~(1ULL << (q % 64));
            }
        }
    }

    // transposes
    west_ok_.assign(n_ * words_, 0);
    south_ok_.assign(n_ * words_, 0);
    for (size_t p = 0; p < n_; ++p) {
        for (size_t q = 0; q < n_; ++q) {
            if (east_ok_[p * words_ + q / 64] >> (q % 64) & 1)
                west_ok_[q * words_ + p / 64] |= 1ULL << (p % 64);
            if (north_ok_[p * words_ + q / 64] >> (q % 64) & 1)
                south_ok_[q * words_ + p / 64] |= 1ULL << (p % 64);
        }
    }
}

bool GridModel::stencils_ok(size_t cell_index, uint16_t letter) const {
    if (stencils_.empty()) return true;
    // reconstruct coordinate from storage index
    int w = grid_.width();
    Coord c{grid_.x0 + int(cell_index % w), grid_.y1 - int(cell_index / w)};
    for (auto& s : stencils_) {
        for (size_t i = 0; i < s.at.size(); ++i) {
            Coord anchor = c - s.at[i];
            bool complete = true, fires = true;
            for (size_t j = 0; j < s.at.size(); ++j) {
                Coord cj = anchor + s.at[j];
                int lj;
                if (cj == c) {
                    lj = letter;
                } else {
                    if (!grid_.contains(cj)) { complete = false; break; }
                    lj = cells_[storage_index(cj)];
                    if (lj < 0) { complete = false; break; }
                }
                if (!s.ok[j][size_t(lj)]) { fires = false; break; }
            }
            if (complete && fires) return false;
        }
    }
    return true;
}

void GridModel::candidates(size_t cell_index, std::vector<uint16_t>& out) const {
    out.clear();
    int w = grid_.width();
    Coord c{grid_.x0 + int(cell_index % w), grid_.y1 - int(cell_index / w)};
    if (trivial_) {
        for (size_t l = 0; l < n_; ++l) out.push_back(uint16_t(l));
        return;
    }
    std::vector<uint64_t> mask(words_, ~0ULL);
    if (n_ % 64) mask[words_ - 1] = (1ULL << (n_ % 64)) - 1;
    auto intersect = [&](const std::vector<uint64_t>& table, int letter) {
        const uint64_t* r = table.data() + size_t(letter) * words_;
        for (size_t i = 0; i < words_; ++i) mask[i] &= r[i];
    };
    Coord nb[4] = {west(c), east(c), south(c), north(c)};
    for (int k = 0; k < 4; ++k) {
        if (!grid_.contains(nb[k])) continue;
        int l = cells_[storage_index(nb[k])];
        if (l < 0) continue;
        switch (k) {
            case 0: intersect(east_ok_, l); break;   // c is east of assigned west nb
            case 1: intersect(west_ok_, l); break;
            case 2: intersect(north_ok_, l); break;  // c is north of assigned south nb
            case 3: intersect(south_ok_, l); break;
        }
    }
    for (size_t i = 0; i < words_; ++i) {
        uint64_t bits = mask[i];
        while (bits) {
            unsigned b = unsigned(__builtin_ctzll(bits));
            bits &= bits - 1;
            uint16_t l = uint16_t(i * 64 + b);
            if (!unary_ok_[l]) continue;
            if (!stencils_ok(cell_index, l)) continue;
            out.push_back(l);
        }
    }
}

void GridModel::assign(size_t cell_index, uint16_t letter) { cells_[cell_index] = letter; }
void GridModel::unassign(size_t cell_index) { cells_[cell_index] = -1; }

namespace {

struct Budget {
    long long left;
    void spend() {
        if (--left < 0)
            throw SearchCapExceeded("search node budget exhausted (raise the cap to continue)");
    }
};

// DFS over order[k..]; cb() is called on complete assignments and returns
// true to keep enumerating, false to stop the whole search.
bool dfs(GridModel& m, const std::vector<size_t>& order, size_t k, Budget& budget,
         const std::function<bool()>& cb) {
    if (k == order.size()) return cb();
    std::vector<uint16_t> cand;
    m.candidates(order[k], cand);
    for (uint16_t l : cand) {
        budget.spend();
        m.assign(order[k], l);
        bool go = dfs(m, order, k + 1, budget, cb);
        m.unassign(order[k]);
        if (!go) return false;
    }
    return true;
}

Pattern grid_restriction(const GridModel& m, const Rect& e, const AlphabetRef& a) {
    std::vector<Pattern::Cell> cells;
    cells.reserve(size_t(e.area()));
    for (Coord c : e.cells()) {
        int l = m.letter_at(m.index_of(c));
        cells.push_back({c, uint16_t(l)});
    }
    return Pattern(a, std::move(cells));
}

std::vector<size_t> order_of(const GridModel& m, const std::vector<Coord>& coords) {
    std::vector<size_t> out;
    out.reserve(coords.size());
    for (Coord c : coords) out.push_back(m.index_of(c));
    return out;
}

long long checked_pow(size_t base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / (long long)base)
            throw SearchCapExceeded("full-shift window count overflows");
        r *= (long long)base;
    }
    return r;
}

bool is_solver_kind(const PresentationRef& x) {
    switch (x->kind()) {
        case SubshiftPresentation::Kind::Full:
        case SubshiftPresentation::Kind::Sft:
        case SubshiftPresentation::Kind::RuleSft:
            return true;
        default:
            return false;
    }
}

// enumerate/count over E with margin-extendability, solver-backed kinds only
void solve_windows(const PresentationRef& x, const Rect& e, int margin, const SearchOptions& opts,
                   const std::function<bool(const GridModel&)>& on_window) {
    GridModel m(x, e.inflate(margin));
    Budget budget{opts.node_budget};
    std::vector<Coord> ecells = e.cells();
    std::vector<Coord> mcells;
    for (Coord c : m.grid().cells())
        if (!e.contains(c)) mcells.push_back(c);
    auto eorder = order_of(m, ecells);
    auto morder = order_of(m, mcells);

    dfs(m, eorder, 0, budget, [&]() {
        bool extendable = false;
        dfs(m, morder, 0, budget, [&]() {
            extendable = true;
            return false;  // first completion is enough
        });
        if (!extendable) return true;
        return on_window(m);
    });
}

std::vector<Pattern> threshold_enumerate(const PresentationRef& x, const Rect& e,
                                         const SearchOptions& opts) {
    auto full = SubshiftPresentation::full_shift(x->alphabet());
    GridModel m(full, e);
    Budget budget{opts.node_budget};
    auto order = order_of(m, e.cells());
    std::vector<Pattern> out;
    dfs(m, order, 0, budget, [&]() {
        Pattern w = grid_restriction(m, e, x->alphabet());
        if (threshold_window_ok(x->threshold_expr(), w)) out.push_back(std::move(w));
        return true;
    });
    return out;
}

}  // namespace

std::vector<Pattern> enumerate_admissible(const PresentationRef& x, const Rect& e, int margin,
                                          const SearchOptions& opts) {
    if (e.empty()) return {Pattern(x->alphabet())};
    switch (x->kind()) {
        case SubshiftPresentation::Kind::Threshold:
            return threshold_enumerate(x, e, opts);
        case SubshiftPresentation::Kind::Product: {
            std::vector<std::vector<Pattern>> parts;
            for (auto& c : x->components()) {
                parts.push_back(enumerate_admissible(c, e, margin, opts));
                if (parts.back().empty()) return {};
            }
            std::vector<Pattern> out;
            std::vector<size_t> pick(parts.size(), 0);
            auto cells = e.cells();
            while (true) {
                std::vector<Pattern::Cell> cs;
                cs.reserve(cells.size());
                for (Coord c : cells) {
                    std::vector<uint16_t> comps;
                    for (size_t k = 0; k < parts.size(); ++k)
                        comps.push_back(*parts[k][pick[k]].at(c));
                    cs.push_back({c, x->alphabet()->compose(comps)});
                }
                out.push_back(Pattern(x->alphabet(), std::move(cs)));
                size_t k = parts.size();
                while (k > 0) {
                    --k;
                    if (++pick[k] < parts[k].size()) break;
                    pick[k] = 0;
                    if (k == 0) {
                        std::sort(out.begin(), out.end(), Pattern::canonical_before);
                        return out;
                    }
                }
                if (parts.empty()) return out;
            }
        }
        case SubshiftPresentation::Kind::Sofic: {
            auto base = enumerate_admissible(x->sofic_base(), e, margin, opts);
            std::vector<Pattern> out;
            for (auto& b : base) {
                std::vector<Pattern::Cell> cs;
                for (auto& c : b.cells()) cs.push_back({c.at, x->letter_map()[c.letter]});
                out.push_back(Pattern(x->alphabet(), std::move(cs)));
            }
            std::sort(out.begin(), out.end(), Pattern::canonical_before);
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        default: {
            std::vector<Pattern> out;
            solve_windows(x, e, margin, opts, [&](const GridModel& m) {
                out.push_back(grid_restriction(m, e, x->alphabet()));
                return true;
            });
            return out;
        }
    }
}

long long count_admissible(const PresentationRef& x, const Rect& e, int margin,
                           const SearchOptions& opts) {
    if (e.empty()) return 1;
    switch (x->kind()) {
        case SubshiftPresentation::Kind::Full:
            return checked_pow(x->alphabet()->size(), e.area());
        case SubshiftPresentation::Kind::Threshold:
            return (long long)threshold_enumerate(x, e, opts).size();
        case SubshiftPresentation::Kind::Product: {
            long long r = 1;
            for (auto& c : x->components()) {
                long long k = count_admissible(c, e, margin, opts);
                if (k != 0 && r > (1LL << 62) / k)
                    throw SearchCapExceeded("product window count overflows");
                r *= k;
            }
            return r;
        }
        case SubshiftPresentation::Kind::Sofic:
            return (long long)enumerate_admissible(x, e, margin, opts).size();
        default: {
            long long n = 0;
            solve_windows(x, e, margin, opts, [&](const GridModel&) {
                ++n;
                return true;
            });
            return n;
        }
    }
}

std::optional<Pattern> extend(const Pattern& pins, const PresentationRef& x, const Rect& e,
                              int margin, const SearchOptions& opts) {
    for (auto& c : pins.cells())
        if (!e.contains(c.at)) throw std::runtime_error("extend: pins outside the target domain");
    if (!pins.empty() && !same_alphabet(pins.alphabet(), x->alphabet()))
        throw std::runtime_error("extend: pin alphabet mismatch");

    if (!is_solver_kind(x)) {
        // desk-scale fallback through full enumeration
        for (auto& w : enumerate_admissible(x, e.inflate(margin), 0, opts)) {
            bool ok = true;
            for (auto& c : pins.cells())
                if (*w.at(c.at) != c.letter) { ok = false; break; }
            if (ok) return w.restricted(e.cells());
        }
        return std::nullopt;
    }

    GridModel m(x, e.inflate(margin));
    Budget budget{opts.node_budget};
    // pins are placed first; instances they complete are checked on the spot
    std::vector<uint16_t> cand;
    for (auto& c : pins.cells()) {
        size_t idx = m.index_of(c.at);
        m.candidates(idx, cand);
        if (std::find(cand.begin(), cand.end(), c.letter) == cand.end()) return std::nullopt;
        m.assign(idx, c.letter);
    }
    std::vector<Coord> free_cells;
    for (Coord c : m.grid().cells())
        if (!pins.has(c)) free_cells.push_back(c);
    auto order = order_of(m, free_cells);
    std::optional<Pattern> result;
    dfs(m, order, 0, budget, [&]() {
        result = grid_restriction(m, e, x->alphabet());
        return false;
    });
    return result;
}

bool threshold_window_ok(const ThresholdExpr& expr, const Pattern& window) {
    const Alphabet& a = *window.alphabet();
    constexpr long long kInf = (1LL << 60);

    // occurrences of leaf in (window, uniform c elsewhere)
    auto count_with_fill = [&](const ThresholdExpr& leaf, uint16_t c) -> long long {
        bool monochrome = true;
        for (auto& cell : leaf.pattern.cells())
            if (cell.letter != c) { monochrome = false; break; }
        if (monochrome) return kInf;  // occurs everywhere far away
        if (window.empty()) return 0;
        Rect wb = window.bounding_box();
        Rect fb = leaf.pattern.bounding_box();
        long long n = 0;
        for (int y = wb.y1 - fb.y0 + fb.height(); y >= wb.y0 - fb.y1 - fb.height(); --y) {
            for (int x = wb.x0 - fb.x1 - fb.width(); x <= wb.x1 - fb.x0 + fb.width(); ++x) {
                bool hit = true;
                for (auto& cell : leaf.pattern.cells()) {
                    Coord at{x + cell.at.x, y + cell.at.y};
                    auto l = window.at(at);
                    uint16_t have = l ? *l : c;
                    if (have != cell.letter) { hit = false; break; }
                }
                if (hit && ++n > kInf / 2) return kInf;
            }
        }
        return n;
    };

    std::function<bool(const ThresholdExpr&, uint16_t)> eval = [&](const ThresholdExpr& e,
                                                                   uint16_t c) -> bool {
        switch (e.kind) {
            case ThresholdExpr::Kind::Leaf:
                return count_with_fill(e, c) <= e.bound;
            case ThresholdExpr::Kind::Union:
                for (auto& p : e.parts)
                    if (eval(p, c)) return true;
                return false;
            case ThresholdExpr::Kind::Intersection:
                for (auto& p : e.parts)
                    if (!eval(p, c)) return false;
                return true;
        }
        return false;
    };

    for (size_t c = 0; c < a.size(); ++c)
        if (eval(expr, uint16_t(c))) return true;
    return false;
}

}  // namespace shiftlogic
