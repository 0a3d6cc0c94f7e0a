#include "latkit/lorentzian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "latkit/enumerate.hpp"
#include "latkit/zoo.hpp"

namespace latkit {

Int LorentzClass::square() const {
    Int s = a * a;
    for (const Int& bi : b) s -= bi * bi;
    return s;
}

ScaledVector LorentzClass::vector() const {
    std::vector<Int> coords;
    coords.reserve(b.size() + 1);
    coords.push_back(a);
    for (const Int& bi : b) coords.push_back(bi);
    return ScaledVector::integral(std::move(coords));
}

LatticeHandle complement_lattice(const LorentzClass& v) {
    if (v.square() != 1)
        throw error("complement_lattice: class has square " + v.square().get_str() +
                    ", expected 1");
    const int n = static_cast<int>(v.b.size());
    // x . v = x_0 a - sum x_i b_i, so the complement is the integer kernel of
    // the column (a, -b_1, ..., -b_n)^T.
    IntMat column(n + 1, std::vector<Int>(1));
    column[0][0] = v.a;
    for (int i = 0; i < n; ++i) column[i + 1][0] = -v.b[i];
    IntMat kernel = integer_kernel(column);
    std::vector<ScaledVector> gens;
    for (auto& row : kernel) gens.push_back(ScaledVector::integral(std::move(row)));
    LatticeHandle complement =
        LatticeHandle::from_generators(AmbientForm::lorentzian(n), std::move(gens));
    if (complement.rank() != n || !complement.is_unimodular() ||
        complement.orientation() != -1)
        throw error("complement_lattice: complement of a square-one class must be "
                    "negative definite unimodular of corank one");
    return complement;
}

Int adjunction_genus(const LorentzClass& v) {
    Int s = -3 * v.a + 3;
    for (const Int& bi : v.b) s += bi;
    if (s % 2 != 0) throw error("adjunction_genus: odd adjunction sum");
    Int g = s / 2;
    if (g < 0) throw error("adjunction_genus: negative genus");
    return g;
}

bool even_complement_test(const LorentzClass& v) {
    if (v.a % 2 == 0) return false;
    for (const Int& bi : v.b)
        if (bi % 2 == 0) return false;
    return true;
}

std::string RootSystemFingerprint::str() const {
    if (components.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out << "+";
        out << components[i].first << components[i].second;
    }
    return out.str();
}

namespace {

// Positivity functional: integer weights applied to the scaled coordinates of
// a vector (common denominator cleared per vector; only the sign matters).
struct Functional {
    std::vector<Int> weights;

    // Sign of the functional; 0 means the functional fails to separate.
    // The shared denominator is positive, so only the numerators matter.
    int sign(const ScaledVector& v) const {
        Int acc(0);
        for (std::size_t i = 0; i < v.coords.size(); ++i) acc += v.coords[i] * weights[i];
        return sgn(acc);
    }
};

// Deterministic functional: heavily weighted lexicographic order, so the sign
// is that of the first nonzero coordinate.
Functional lex_functional(int dim, const Int& /*scale*/) {
    Functional f;
    f.weights.resize(dim);
    Int w = 1;
    for (int i = dim - 1; i >= 0; --i) {
        f.weights[i] = w;
        // Coordinates of norm-2 vectors in a definite lattice are bounded well
        // below this growth rate, so earlier coordinates always dominate.
        w *= 1000;
    }
    return f;
}

struct DynkinComponent {
    char family;
    int rank;
    std::vector<int> members;  // indices into the simple root list
};

// Classifies a connected simply laced Dynkin diagram given its adjacency.
DynkinComponent classify_component(const std::vector<int>& members,
                                   const std::vector<std::set<int>>& adj) {
    DynkinComponent out;
    out.members = members;
    out.rank = static_cast<int>(members.size());
    std::vector<int> branch;
    for (int m : members) {
        std::size_t deg = adj[m].size();
        if (deg > 3) throw error("root system: vertex of degree > 3");
        if (deg == 3) branch.push_back(m);
    }
    if (branch.size() > 1) throw error("root system: two branch vertices");
    if (branch.empty()) {
        out.family = 'A';
        return out;
    }
    // Walk the three legs from the branch vertex.
    std::vector<int> legs;
    for (int start : adj[branch[0]]) {
        int len = 1, prev = branch[0], cur = start;
        for (;;) {
            int next = -1;
            for (int nb : adj[cur])
                if (nb != prev) next = nb;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) {
        out.family = 'D';
        return out;
    }
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
        out.family = 'E';
        return out;
    }
    throw error("root system: diagram is not of ADE type");
}

Int component_root_count(char family, int n) {
    switch (family) {
        case 'A': return Int(n) * (n + 1);
        case 'D': return Int(2) * n * (n - 1);
        case 'E': return n == 6 ? Int(72) : n == 7 ? Int(126) : Int(240);
        default: throw error("unknown root family");
    }
}

RootSystemFingerprint fingerprint_with(const LatticeHandle& lattice,
                                       const Functional& functional) {
    RootSystemFingerprint fp;
    ShortVectorQuery q;
    q.lattice = &lattice;
    q.norm_bound = 2;
    q.mode = EnumMode::Collect;
    q.modulo_negation = true;
    ShortVectorResult res = short_vectors(q);
    std::vector<ScaledVector> positive;
    for (const ScaledVector& v : res.vectors) {
        if (norm(v, lattice.ambient()) * lattice.orientation() != 2) continue;
        int s = functional.sign(v);
        if (s == 0) throw error("root system: functional vanishes on a root");
        positive.push_back(s > 0 ? v : v.scaled(Int(-1)));
    }
    fp.root_count = Int(2) * Int(static_cast<long>(positive.size()));
    if (positive.empty()) {
        fp.spans_full_rank = lattice.rank() == 0;
        return fp;
    }
    std::set<ScaledVector> pos_set(positive.begin(), positive.end());
    // Simple roots: positive roots that are not a sum of two positive roots.
    std::vector<ScaledVector> simple;
    for (const ScaledVector& alpha : positive) {
        bool decomposable = false;
        for (const ScaledVector& beta : positive) {
            if (pos_set.count(alpha - beta) && !(beta == alpha)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(alpha);
    }
    const int m = static_cast<int>(simple.size());
    std::vector<std::set<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Int p = pairing(simple[i], simple[j], lattice.ambient()) *
                    lattice.orientation();
            if (p == 0) continue;
            if (p != -1)
                throw error("root system: simple roots pair to " + p.get_str());
            adj[i].insert(j);
            adj[j].insert(i);
        }
    // Connected components.
    std::vector<int> comp(m, -1);
    std::vector<DynkinComponent> parts;
    for (int i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> members;
        std::deque<int> queue{i};
        comp[i] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            members.push_back(cur);
            for (int nb : adj[cur])
                if (comp[nb] < 0) {
                    comp[nb] = 1;
                    queue.push_back(nb);
                }
        }
        std::sort(members.begin(), members.end());
        parts.push_back(classify_component(members, adj));
    }
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        if (x.family != y.family) return x.family < y.family;
        return x.rank > y.rank;
    });
    Int total(0);
    int span = 0;
    for (const auto& part : parts) {
        fp.components.emplace_back(part.family, part.rank);
        std::vector<ScaledVector> roots;
        for (int idx : part.members) roots.push_back(simple[idx]);
        fp.component_simple_roots.push_back(std::move(roots));
        total += component_root_count(part.family, part.rank);
        span += part.rank;
    }
    if (total != fp.root_count)
        throw error("root system: component root counts " + total.get_str() +
                    " disagree with the census " + fp.root_count.get_str());
    fp.spans_full_rank = span == lattice.rank();
    return fp;
}

}  // namespace

RootSystemFingerprint root_fingerprint(const LatticeHandle& lattice) {
    return fingerprint_with(lattice, lex_functional(lattice.ambient_dim(), 1));
}

RootSystemFingerprint root_fingerprint(const LatticeHandle& lattice, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Functional f;
        f.weights.resize(lattice.ambient_dim());
        for (Int& w : f.weights) w = dist(rng);
        try {
            return fingerprint_with(lattice, f);
        } catch (const error&) {
            // Functional vanished on a root; redraw.
        }
    }
    throw error("root_fingerprint: no separating functional found");
}

const std::string& IdentifyResult::name() const {
    if (!identified()) throw error("identify: lattice not uniquely identified");
    return candidates.front();
}

namespace {

struct TableRow {
    std::string name;
    int rank;
    bool even;
    std::vector<std::pair<char, int>> components;
    bool unique;
};

const std::vector<TableRow>& classification_table() {
    static const std::vector<TableRow> table = [] {
        std::vector<TableRow> rows;
        for (const CatalogEntry& entry : builtin_catalog()) {
            TableRow row;
            row.name = entry.name;
            row.rank = entry.rank;
            row.even = entry.even;
            for (const std::string& label : entry.root_components) {
                int n = std::stoi(label.substr(1));
                row.components.emplace_back(label[0], n);
            }
            row.unique = entry.uniquely_determined_by_roots;
            rows.push_back(std::move(row));
        }
        // A full rank root sublattice A16+A1 already forces A17A1: it is the
        // only unimodular overlattice.  Likewise for A9+A9.
        rows.push_back({"A17A1", 18, false, {{'A', 16}, {'A', 1}}, true});
        return rows;
    }();
    return table;
}

std::vector<std::pair<char, int>> sorted_components(
    std::vector<std::pair<char, int>> components) {
    std::sort(components.begin(), components.end(),
              [](const auto& x, const auto& y) {
                  if (x.first != y.first) return x.first < y.first;
                  return x.second > y.second;
              });
    return components;
}

// The two short legs of a D_n Dynkin component: the leaves adjacent to the
// branch vertex (for D4 an arbitrary pair of leaves).
std::pair<ScaledVector, ScaledVector> short_legs(
    const std::vector<ScaledVector>& simple, const AmbientForm& form,
    int orientation) {
    const int m = static_cast<int>(simple.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && pairing(simple[i], simple[j], form) * orientation == -1)
                adj[i].push_back(j);
    for (int i = 0; i < m; ++i) {
        if (adj[i].size() != 3) continue;
        std::vector<int> leaves;
        for (int nb : adj[i])
            if (adj[nb].size() == 1) leaves.push_back(nb);
        if (leaves.size() < 2) throw error("short_legs: malformed D component");
        return {simple[leaves[0]], simple[leaves[1]]};
    }
    throw error("short_legs: no branch vertex");
}

}  // namespace

IdentifyResult identify_by_fingerprint(
    int rank, bool even, const std::vector<std::pair<char, int>>& components) {
    IdentifyResult out;
    out.fingerprint.components = sorted_components(components);
    std::vector<const TableRow*> matches;
    for (const TableRow& row : classification_table())
        if (row.rank == rank && row.even == even &&
            sorted_components(row.components) == out.fingerprint.components)
            matches.push_back(&row);
    for (const TableRow* row : matches) out.candidates.push_back(row->name);
    std::sort(out.candidates.begin(), out.candidates.end());
    out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()),
                         out.candidates.end());
    if (!matches.empty() && !matches.front()->unique && out.candidates.size() == 1)
        out.detail = "fingerprint shared by several overlattices";
    return out;
}

IdentifyResult identify_unimodular(const LatticeHandle& lattice) {
    if (!lattice.is_unimodular()) throw error("identify: lattice is not unimodular");
    RootSystemFingerprint fp = root_fingerprint(lattice);
    IdentifyResult out =
        identify_by_fingerprint(lattice.rank(), lattice.is_even(), fp.components);
    out.fingerprint = fp;
    bool needs_membership = false;
    for (const TableRow& row : classification_table())
        if (row.rank == lattice.rank() && row.even == lattice.is_even() &&
            sorted_components(row.components) ==
                sorted_components(fp.components) &&
            !row.unique)
            needs_membership = true;
    if (!needs_membership) return out;

    // D8+D8 fingerprint: four unimodular lattices contain two orthogonal
    // copies of D8.  Half the sum of the short legs of a copy lies in the
    // lattice exactly when that copy extends to E8 inside it.
    out.candidates.clear();
    bool half_sum_member = false;
    for (std::size_t c = 0; c < fp.components.size(); ++c) {
        if (fp.components[c].first != 'D') continue;
        auto legs = short_legs(fp.component_simple_roots[c], lattice.ambient(),
                               lattice.orientation());
        ScaledVector half = (legs.first + legs.second).scaled(Rat(1, 2));
        if (lattice.contains(half)) half_sum_member = true;
    }
    if (!half_sum_member) {
        out.candidates = {lattice.is_even() ? "E8^2" : "D8^2"};
        out.detail = lattice.is_even()
                         ? "no D8 copy extends; even, so E8^2"
                         : "no D8 copy extends to E8 and the lattice is odd";
        return out;
    }
    if (lattice.is_even()) {
        out.candidates = {"E8^2"};
        out.detail = "a D8 copy extends to E8; even overlattice";
        return out;
    }
    // Odd with an extending copy: E8+I8 or I16, separated by the number of
    // unit vectors.
    auto theta = theta_coefficients(lattice, 1);
    Int units = theta[1];
    if (units == 16) {
        out.candidates = {"E8+I8"};
    } else if (units == 32) {
        out.candidates = {"I16"};
    } else {
        out.candidates = {"E8+I8", "I16"};
    }
    out.detail = "odd overlattice with an extending D8 copy";
    return out;
}

IntMat PlumbingGraph::gram() const {
    const int n = size();
    if (static_cast<int>(edges.size()) != n - 1)
        throw error("plumbing: a tree on " + std::to_string(n) + " vertices needs " +
                    std::to_string(n - 1) + " edges");
    IntMat g(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) g[i][i] = weights[i];
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw error("plumbing: bad edge");
        if (g[a][b] != 0) throw error("plumbing: duplicate edge");
        g[a][b] = g[b][a] = 1;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        ++visited;
        for (int nb : adj[cur])
            if (!seen[nb]) {
                seen[nb] = 1;
                queue.push_back(nb);
            }
    }
    if (visited != n) throw error("plumbing: edge set is not connected");
    return g;
}

LatticeHandle plumbing_lattice(const PlumbingGraph& graph) {
    return LatticeHandle::from_gram(graph.gram());
}

std::optional<std::vector<ScaledVector>> align_plumbing_signs(
    std::vector<ScaledVector> basis, const PlumbingGraph& graph,
    const AmbientForm& form) {
    const int n = graph.size();
    if (static_cast<int>(basis.size()) != n) return std::nullopt;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : graph.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> sign(n, 0);
    sign[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nb : adj[cur]) {
            if (sign[nb] != 0) continue;
            Int p = pairing(basis[cur], basis[nb], form);
            if (p != 1 && p != -1) return std::nullopt;
            sign[nb] = sign[cur] * (p == 1 ? 1 : -1);
            queue.push_back(nb);
        }
    }
    for (int i = 0; i < n; ++i)
        if (sign[i] == -1) basis[i] = basis[i].scaled(Int(-1));
    return basis;
}

bool verify_embedding(const LatticeHandle& lattice,
                      const std::vector<ScaledVector>& basis,
                      const PlumbingGraph& graph) {
    if (static_cast<int>(basis.size()) != graph.size())
        throw error("verify_embedding: basis size does not match the graph");
    for (const ScaledVector& v : basis)
        if (!lattice.contains(v))
            throw error("verify_embedding: vector " + v.str() +
                        " is not a lattice member");
    IntMat expected = graph.gram();
    const int n = graph.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pairing(basis[i], basis[j], lattice.ambient()) != expected[i][j])
                return false;
    // Gram equality already forces det 1 for our graphs, but check anyway.
    IntMat g = expected;
    Int det = determinant(g);
    return det == 1 || det == -1;
}

}  // namespace latkit
