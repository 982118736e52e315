#include "k0/simple_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace k0 {

SimpleSet SimpleSet::empty(int arity) {
    SimpleSet s;
    s.arity_ = arity;
    s.empty_ = true;
    return s;
}

SimpleSet SimpleSet::full(int arity) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    SimpleSet s;
    s.arity_ = arity;
    for (int i = 0; i < arity; ++i) s.groups_.push_back({{i}, {0}});
    return s;
}

namespace {

// Union-find where each node carries its level relative to the root:
// x_i = f^{delta_i}(x_root) with delta_i possibly negative while solving.
struct OffsetUnionFind {
    std::vector<int> parent;
    std::vector<long long> delta;          // level relative to parent
    std::vector<std::optional<OrbitPoint>> pin;  // on roots: x_root = point
    bool inconsistent = false;

    explicit OffsetUnionFind(int n) : parent(n), delta(n, 0), pin(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, long long> find(int i) {
        if (parent[i] == i) return {i, 0};
        auto [root, d] = find(parent[i]);
        parent[i] = root;
        delta[i] += d;
        return {root, delta[i]};
    }

    // x_a = f^k(x_b)
    void relate(int a, int b, long long k) {
        if (inconsistent) return;
        auto [ra, da] = find(a);
        auto [rb, db] = find(b);
        if (ra == rb) {
            if (da != k + db) inconsistent = true;  // offset cycle
            return;
        }
        // x_ra = f^{k + db - da}(x_rb)
        parent[ra] = rb;
        delta[ra] = k + db - da;
        if (pin[ra]) {
            auto moved = pin[ra]->try_shift(-delta[ra]);
            pin[ra].reset();
            if (!moved) {
                inconsistent = true;
                return;
            }
            set_pin(rb, *moved);
        }
    }

    // x_i = p
    void pin_coord(int i, const OrbitPoint& p) {
        if (inconsistent) return;
        auto [r, d] = find(i);
        auto root_pt = p.try_shift(-d);
        if (!root_pt) {
            inconsistent = true;
            return;
        }
        set_pin(r, *root_pt);
    }

    void set_pin(int root, const OrbitPoint& p) {
        if (pin[root]) {
            if (*pin[root] != p) inconsistent = true;
            return;
        }
        pin[root] = p;
    }
};

}  // namespace

SimpleSet SimpleSet::from_atoms(const std::vector<NormalizedAtom>& atoms, int arity) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    OffsetUnionFind uf(arity);
    for (const auto& a : atoms) {
        switch (a.kind) {
            case NormalizedAtom::Kind::Trivial:
                if (!a.truth) return empty(arity);
                break;
            case NormalizedAtom::Kind::VarVar:
                if (a.lhs < 0 || a.lhs >= arity || a.rhs < 0 || a.rhs >= arity)
                    throw std::invalid_argument("atom coordinate out of range");
                uf.relate(a.lhs, a.rhs, a.shift);
                break;
            case NormalizedAtom::Kind::VarPoint:
                if (a.lhs < 0 || a.lhs >= arity)
                    throw std::invalid_argument("atom coordinate out of range");
                uf.pin_coord(a.lhs, a.point);
                break;
        }
        if (uf.inconsistent) return empty(arity);
    }

    // Extract components in least-coordinate order.
    std::map<int, std::vector<std::pair<int, long long>>> comps;  // root -> (coord, delta)
    for (int i = 0; i < arity; ++i) {
        auto [r, d] = uf.find(i);
        comps[r].push_back({i, d});
    }

    SimpleSet out;
    out.arity_ = arity;
    std::vector<std::pair<int, FreeGroup>> groups;  // keyed by least coord
    for (auto& [root, members] : comps) {
        std::sort(members.begin(), members.end());
        if (uf.pin[root]) {
            for (auto& [coord, d] : members) {
                auto pt = uf.pin[root]->try_shift(d);
                if (!pt) return empty(arity);  // constant pushed below its orbit base
                out.pinned_.push_back({coord, *pt});
            }
        } else {
            long long lo = members.front().second;
            for (auto& [coord, d] : members) lo = std::min(lo, d);
            FreeGroup g;
            for (auto& [coord, d] : members) {
                g.coords.push_back(coord);
                g.levels.push_back(d - lo);
            }
            groups.push_back({g.coords.front(), std::move(g)});
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [least, g] : groups) out.groups_.push_back(std::move(g));
    std::sort(out.pinned_.begin(), out.pinned_.end());
    return out;
}

Dim SimpleSet::dimension() const {
    if (empty_) return Dim::neg_inf();
    return Dim::of(static_cast<int>(groups_.size()));
}

std::vector<NormalizedAtom> SimpleSet::to_atoms() const {
    if (empty_) return {NormalizedAtom::trivial(false)};
    std::vector<NormalizedAtom> atoms;
    for (const auto& g : groups_) {
        int det = determining_of_group(g);
        for (size_t i = 0; i < g.coords.size(); ++i) {
            if (g.coords[i] == det) continue;
            atoms.push_back(NormalizedAtom::var_var(g.coords[i], det, g.levels[i]));
        }
    }
    for (const auto& p : pinned_) atoms.push_back(NormalizedAtom::var_point(p.coord, p.point));
    return atoms;
}

SimpleSet SimpleSet::intersect(const SimpleSet& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch in intersect");
    if (empty_ || other.empty_) return empty(arity_);
    std::vector<NormalizedAtom> atoms = to_atoms();
    auto more = other.to_atoms();
    atoms.insert(atoms.end(), more.begin(), more.end());
    return from_atoms(atoms, arity_);
}

bool SimpleSet::includes(const SimpleSet& sub) const {
    if (arity_ != sub.arity_) throw std::invalid_argument("arity mismatch in includes");
    if (sub.empty_) return true;
    if (empty_) return false;
    return intersect(sub) == sub;
}

std::vector<int> SimpleSet::determining_assignment() const {
    if (empty_) throw std::invalid_argument("empty set has no determining assignment");
    std::vector<int> out;
    for (const auto& g : groups_) out.push_back(determining_of_group(g));
    return out;
}

bool SimpleSet::contains(std::span<const long long> tuple, int modulus) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw std::invalid_argument("tuple arity mismatch");
    if (empty_) return false;
    for (const auto& g : groups_) {
        // all coords must realize x = det_value + N*level with det_value >= 0
        long long base = tuple[g.coords[0]] - modulus * g.levels[0];
        if (base < 0) return false;
        for (size_t i = 1; i < g.coords.size(); ++i)
            if (tuple[g.coords[i]] - modulus * g.levels[i] != base) return false;
    }
    for (const auto& p : pinned_) {
        auto v = p.point.value_in(modulus);
        if (!v) throw std::invalid_argument("generic orbit point in standard-model check");
        if (tuple[p.coord] != *v) return false;
    }
    return true;
}

bool SimpleSet::constants_only() const {
    for (const auto& p : pinned_)
        if (!p.point.orbit.is_constant()) return false;
    return true;
}

long long SimpleSet::max_level() const {
    long long m = 0;
    for (const auto& g : groups_)
        for (long long l : g.levels) m = std::max(m, l);
    return m;
}

long long SimpleSet::max_const_offset() const {
    long long m = 0;
    for (const auto& p : pinned_)
        if (p.point.orbit.is_constant()) m = std::max(m, p.point.offset);
    return m;
}

std::optional<OrbitPoint> SimpleSet::pin_of(int coord) const {
    for (const auto& p : pinned_)
        if (p.coord == coord) return p.point;
    return std::nullopt;
}

int SimpleSet::group_of(int coord) const {
    for (size_t gi = 0; gi < groups_.size(); ++gi)
        for (int c : groups_[gi].coords)
            if (c == coord) return static_cast<int>(gi);
    return -1;
}

int SimpleSet::determining_of_group(const FreeGroup& g) {
    // min level, then least coordinate; coords are sorted so first hit wins
    for (size_t i = 0; i < g.coords.size(); ++i)
        if (g.levels[i] == 0) return g.coords[i];
    throw std::logic_error("group without level-0 coordinate");
}

std::string SimpleSet::to_string(const VarInterface& iface) const {
    if (empty_) return "{}";
    auto atoms = to_atoms();
    if (atoms.empty()) return "M^" + std::to_string(arity_);
    std::string out;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += " & ";
        out += atoms[i].to_string(iface);
    }
    return out;
}

std::string SimpleSet::to_string() const {
    std::vector<std::string> names;
    for (int i = 1; i <= arity_; ++i) names.push_back("x" + std::to_string(i));
    return to_string(VarInterface(names));
}

// ---------------------------------------------------------------------------

MeasurePoly MeasurePoly::from_dims(const std::vector<int>& dims) {
    MeasurePoly m;
    for (int d : dims) m.add_dim(d);
    return m;
}

void MeasurePoly::add_dim(int d) {
    if (d < 0) throw std::invalid_argument("negative dimension in measure");
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, 0);
    ++coeffs[d];
}

std::vector<long long> MeasurePoly::normalized() const {
    auto c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

bool MeasurePoly::strictly_less(const MeasurePoly& other) const {
    auto a = normalized(), b = other.normalized();
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::string MeasurePoly::to_string() const {
    auto c = normalized();
    if (c.empty()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += (i == 1) ? "X" : "X^" + std::to_string(i);
        }
    }
    return out;
}

MeasurePoly s_measure(const std::vector<SimpleSet>& components) {
    for (size_t i = 0; i < components.size(); ++i)
        for (size_t j = 0; j < components.size(); ++j)
            if (i != j && components[i].includes(components[j]))
                throw std::invalid_argument("component list has an inclusion");
    MeasurePoly m;
    for (const auto& c : components) {
        Dim d = c.dimension();
        if (!d.finite) throw std::invalid_argument("empty set is not a component");
        m.add_dim(d.value);
    }
    return m;
}

}  // namespace k0
