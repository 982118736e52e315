#include "k0/cell.hpp"

#include <algorithm>
#include <stdexcept>

namespace k0 {

bool Cell::contains(std::span<const long long> tuple, int modulus) const {
    if (!positive.contains(tuple, modulus)) return false;
    for (const auto& n : negatives)
        if (n.contains(tuple, modulus)) return false;
    return true;
}

bool Cell::constants_only() const {
    if (!positive.constants_only()) return false;
    for (const auto& n : negatives)
        if (!n.constants_only()) return false;
    return true;
}

std::string Cell::to_string(const VarInterface& iface) const {
    std::string out = "(" + positive.to_string(iface) + ")";
    for (const auto& n : negatives) out += " \\ (" + n.to_string(iface) + ")";
    return out;
}

std::string Cell::to_string() const {
    std::vector<std::string> names;
    for (int i = 1; i <= positive.arity(); ++i) names.push_back("x" + std::to_string(i));
    return to_string(VarInterface(names));
}

std::optional<Cell> make_cell(SimpleSet positive, const std::vector<SimpleSet>& candidates) {
    if (positive.is_empty()) return std::nullopt;
    std::vector<SimpleSet> negs;
    for (const auto& c : candidates) {
        SimpleSet n = positive.intersect(c);
        if (n.is_empty()) continue;
        if (n == positive) return std::nullopt;  // the cell is swallowed
        negs.push_back(std::move(n));
    }
    // irredundant: keep only maximal negatives
    std::vector<SimpleSet> kept;
    for (size_t i = 0; i < negs.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < negs.size() && !dominated; ++j) {
            if (i == j) continue;
            if (negs[j].includes(negs[i]) && !(negs[i] == negs[j] && i < j)) dominated = true;
        }
        if (!dominated) kept.push_back(negs[i]);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return Cell{std::move(positive), std::move(kept)};
}

bool cells_overlap(const Cell& a, const Cell& b) {
    SimpleSet c = a.positive.intersect(b.positive);
    if (c.is_empty()) return false;
    // nonempty iff no single negative covers c (c is irreducible)
    for (const auto& n : a.negatives)
        if (n.includes(c)) return false;
    for (const auto& n : b.negatives)
        if (n.includes(c)) return false;
    return true;
}

std::optional<Cell> intersect_cells(const Cell& c, const Cell& e) {
    SimpleSet pos = c.positive.intersect(e.positive);
    if (pos.is_empty()) return std::nullopt;
    std::vector<SimpleSet> cands = c.negatives;
    cands.insert(cands.end(), e.negatives.begin(), e.negatives.end());
    return make_cell(std::move(pos), cands);
}

std::vector<Cell> subtract_cell(const Cell& c, const Cell& e) {
    if (!cells_overlap(c, e)) return {c};
    SimpleSet inter = c.positive.intersect(e.positive);

    std::vector<Cell> pieces;
    // part of c outside positive/\positive
    {
        std::vector<SimpleSet> cands = c.negatives;
        cands.push_back(inter);
        if (auto p0 = make_cell(c.positive, cands)) pieces.push_back(std::move(*p0));
    }
    // parts inside the intersection that e's negatives give back;
    // prior pieces are subtracted to keep the result disjoint
    std::vector<SimpleSet> prior;
    for (const auto& m : e.negatives) {
        SimpleSet pos = inter.intersect(m);
        if (pos.is_empty()) continue;
        std::vector<SimpleSet> cands = c.negatives;
        cands.insert(cands.end(), prior.begin(), prior.end());
        if (auto p = make_cell(pos, cands)) pieces.push_back(std::move(*p));
        prior.push_back(std::move(pos));
    }
    return pieces;
}

// ---------------------------------------------------------------------------

bool Decomposition::contains(std::span<const long long> tuple, int modulus) const {
    for (const auto& c : cells)
        if (c.contains(tuple, modulus)) return true;
    return false;
}

bool Decomposition::constants_only() const {
    for (const auto& c : cells)
        if (!c.constants_only()) return false;
    return true;
}

Dim Decomposition::dimension() const {
    Dim d = Dim::neg_inf();
    for (const auto& c : cells) d = max(d, c.dimension());
    return d;
}

void Decomposition::validate() const {
    for (const auto& c : cells) {
        if (c.positive.is_empty()) throw std::logic_error("cell with empty positive");
        if (c.positive.arity() != arity) throw std::logic_error("cell arity mismatch");
        for (size_t i = 0; i < c.negatives.size(); ++i) {
            const auto& n = c.negatives[i];
            if (n.is_empty() || !(c.positive.includes(n)) || n == c.positive)
                throw std::logic_error("negative not strictly below positive");
            for (size_t j = 0; j < c.negatives.size(); ++j)
                if (i != j && c.negatives[j].includes(n))
                    throw std::logic_error("redundant negative");
        }
    }
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (cells_overlap(cells[i], cells[j]))
                throw std::logic_error("cells overlap");
}

std::string Decomposition::to_string(const VarInterface& iface) const {
    if (cells.empty()) return "{}";
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += "  u  ";
        out += cells[i].to_string(iface);
    }
    return out;
}

std::string Decomposition::to_string() const {
    std::vector<std::string> names;
    for (int i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
    return to_string(VarInterface(names));
}

// ---------------------------------------------------------------------------

namespace {

// reindex a simple set into a larger ambient power, coordinates shifted by `off`
SimpleSet embed(const SimpleSet& s, int arity, int off) {
    if (s.is_empty()) return SimpleSet::empty(arity);
    std::vector<NormalizedAtom> atoms;
    for (auto a : s.to_atoms()) {
        if (a.kind == NormalizedAtom::Kind::VarVar)
            atoms.push_back(NormalizedAtom::var_var(a.lhs + off, a.rhs + off, a.shift));
        else if (a.kind == NormalizedAtom::Kind::VarPoint)
            atoms.push_back(NormalizedAtom::var_point(a.lhs + off, a.point));
    }
    return SimpleSet::from_atoms(atoms, arity);
}

}  // namespace

Decomposition product(const Decomposition& a, const Decomposition& b) {
    Decomposition out;
    out.arity = a.arity + b.arity;
    for (const auto& ca : a.cells)
        for (const auto& cb : b.cells) {
            SimpleSet pos = embed(ca.positive, out.arity, 0)
                                .intersect(embed(cb.positive, out.arity, a.arity));
            std::vector<SimpleSet> cands;
            for (const auto& n : ca.negatives)
                cands.push_back(embed(n, out.arity, 0).intersect(embed(cb.positive, out.arity, a.arity)));
            for (const auto& n : cb.negatives)
                cands.push_back(embed(ca.positive, out.arity, 0).intersect(embed(n, out.arity, a.arity)));
            if (auto cell = make_cell(std::move(pos), cands)) out.cells.push_back(std::move(*cell));
        }
    return out;
}

Decomposition disjoint_union(const Decomposition& a, const Decomposition& b) {
    if (a.arity != b.arity) throw std::invalid_argument("arity mismatch in union");
    for (const auto& ca : a.cells)
        for (const auto& cb : b.cells)
            if (cells_overlap(ca, cb))
                throw std::invalid_argument("union of overlapping decompositions");
    Decomposition out = a;
    out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

std::vector<SimpleSet> closure(const Decomposition& d) {
    std::vector<SimpleSet> pos;
    for (const auto& c : d.cells) pos.push_back(c.positive);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::vector<SimpleSet> out;
    for (size_t i = 0; i < pos.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < pos.size() && !dominated; ++j)
            if (i != j && pos[j].includes(pos[i])) dominated = true;
        if (!dominated) out.push_back(pos[i]);
    }
    return out;
}

bool same_union(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    auto covered = [](const std::vector<Cell>& xs, const std::vector<Cell>& ys) {
        for (const auto& x : xs) {
            std::vector<Cell> rest = {x};
            for (const auto& y : ys) {
                std::vector<Cell> next;
                for (const auto& r : rest) {
                    auto pieces = subtract_cell(r, y);
                    next.insert(next.end(), pieces.begin(), pieces.end());
                }
                rest = std::move(next);
                if (rest.empty()) break;
            }
            if (!rest.empty()) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

}  // namespace k0
