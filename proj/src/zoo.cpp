#include "latkit/zoo.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include "latkit/enumerate.hpp"

#ifndef LATKIT_DATA_DIR
#define LATKIT_DATA_DIR "data"
#endif

namespace latkit {

namespace {

// (coeff, repeat) run-length notation for glue vectors
std::vector<Int> runs(std::initializer_list<std::pair<Int, int>> parts) {
    std::vector<Int> v;
    for (const auto& [coeff, repeat] : parts)
        for (int i = 0; i < repeat; ++i) v.push_back(coeff);
    return v;
}

std::vector<std::vector<Int>> root_generators(const RootComponentSpec& spec) {
    std::vector<std::vector<Int>> gens;
    const int n = spec.rank;
    const int d = spec.ambient_dim();
    auto chain = [&](int count) {
        for (int i = 0; i < count; ++i) {
            std::vector<Int> v(d, 0);
            v[i] = 1;
            v[i + 1] = -1;
            gens.push_back(std::move(v));
        }
    };
    switch (spec.family) {
        case 'A':
            chain(n);
            break;
        case 'D': {
            if (n < 2) throw error("make_root_lattice: D rank must be >= 2");
            chain(n - 1);
            std::vector<Int> v(d, 0);
            v[n - 2] = 1;
            v[n - 1] = 1;
            gens.push_back(std::move(v));
            break;
        }
        case 'E':
            if (n != 6 && n != 7 && n != 8) throw error("make_root_lattice: E rank must be 6, 7 or 8");
            // models inside R^8; a half vector (denominator 2) completes each,
            // and E_8 additionally closes the D_8 chain
            chain(n - 1);
            break;
        default:
            throw error("make_root_lattice: unknown family");
    }
    return gens;
}

// The E-family needs one half-integral generator on top of root_generators.
std::vector<Int> e_half_generator(int rank) {
    switch (rank) {
        case 8:
            // D_8 closing root plus the half vector: chain(6) covers e_i - e_{i+1}
            return runs({{1, 8}});
        case 7:
            return runs({{1, 4}, {-1, 4}});
        case 6:
            return runs({{1, 3}, {-1, 3}, {1, 1}, {-1, 1}});
        default:
            throw error("e_half_generator: bad rank");
    }
}

}  // namespace

int RootComponentSpec::ambient_dim() const {
    switch (family) {
        case 'A':
            return rank + 1;
        case 'D':
            return rank;
        case 'E':
            return 8;
    }
    throw error("RootComponentSpec: unknown family");
}

Int RootComponentSpec::determinant() const {
    switch (family) {
        case 'A':
            return rank + 1;
        case 'D':
            return 4;
        case 'E':
            return 9 - rank;  // 3, 2, 1
    }
    throw error("RootComponentSpec: unknown family");
}

Int RootComponentSpec::root_count() const {
    switch (family) {
        case 'A':
            return Int(rank) * (rank + 1);
        case 'D':
            return Int(2) * rank * (rank - 1);
        case 'E':
            return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    }
    throw error("RootComponentSpec: unknown family");
}

LatticeHandle make_root_lattice(const RootComponentSpec& spec) {
    std::vector<ScaledVector> gens;
    for (auto& g : root_generators(spec)) gens.push_back(ScaledVector::integral(std::move(g)));
    if (spec.family == 'E') {
        if (spec.rank == 8) {
            // D_8 closing root, then the half vector
            std::vector<Int> closing(8, 0);
            closing[6] = 1;
            closing[7] = 1;
            gens.push_back(ScaledVector::integral(std::move(closing)));
        }
        gens.push_back(ScaledVector(e_half_generator(spec.rank), 2));
    }
    return LatticeHandle::from_generators(AmbientForm::euclidean(spec.ambient_dim()),
                                          std::move(gens));
}

std::vector<ScaledVector> component_generators(const std::vector<RootComponentSpec>& components,
                                               int index) {
    int total = 0, offset = 0;
    for (int i = 0; i < static_cast<int>(components.size()); ++i) {
        if (i < index) offset += components[i].ambient_dim();
        total += components[i].ambient_dim();
    }
    const RootComponentSpec& spec = components[index];
    LatticeHandle local = make_root_lattice(spec);
    std::vector<ScaledVector> out;
    for (const ScaledVector& b : local.basis()) {
        std::vector<Int> v(total, 0);
        for (int j = 0; j < b.dim(); ++j) v[offset + j] = b.coords[j];
        out.push_back(ScaledVector(std::move(v), b.denom));
    }
    return out;
}

LatticeHandle make_glued(const GluedLatticeSpec& spec) {
    int total = 0;
    for (const auto& c : spec.components) total += c.ambient_dim();
    AmbientForm form = AmbientForm::euclidean(total);

    std::vector<ScaledVector> gens;
    for (int i = 0; i < static_cast<int>(spec.components.size()); ++i)
        for (auto& g : component_generators(spec.components, i)) gens.push_back(std::move(g));

    for (const ScaledVector& glue : spec.glue_generators) {
        if (glue.dim() != total) throw error("make_glued: glue vector dimension mismatch");
        for (const ScaledVector& root : gens)
            pairing(glue, root, form);  // dual membership: throws if non-integral
    }
    for (const ScaledVector& glue : spec.glue_generators) gens.push_back(glue);

    LatticeHandle L = LatticeHandle::from_generators(form, std::move(gens));
    if (!L.is_unimodular())
        throw error("make_glued: " + spec.name + " is not unimodular (det " +
                    L.det_abs().get_str() + "); bad glue code");
    return L;
}

LatticeHandle make_gamma(int n) {
    if (n % 4 != 0 || n <= 0) throw error("make_gamma: n must be a positive multiple of 4");
    GluedLatticeSpec spec;
    spec.name = "Gamma" + std::to_string(n);
    spec.components = {{'D', n}};
    spec.glue_generators = {ScaledVector(runs({{1, n}}), 2)};
    return make_glued(spec);
}

std::string data_dir() {
    if (const char* env = std::getenv("LATKIT_DATA_DIR")) return env;
    return LATKIT_DATA_DIR;
}

namespace {

// 12 generator words of the extended binary Golay code, one 24-bit line each
std::vector<std::vector<int>> load_golay() {
    std::string path = data_dir() + "/golay24.txt";
    std::ifstream in(path);
    if (!in) throw error("cannot open Golay generator file " + path);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> bits;
        for (char c : line) {
            if (c == '0' || c == '1') bits.push_back(c - '0');
        }
        if (bits.size() != 24) throw error("bad Golay generator line in " + path);
        rows.push_back(std::move(bits));
    }
    if (rows.size() != 12) throw error("expected 12 Golay generator words in " + path);
    return rows;
}

struct LeechModel {
    IntMat basis;  // rows, coordinates at scale sqrt(8)
    IntMat gram;
};

const LeechModel& leech_model() {
    static const LeechModel model = [] {
        auto golay = load_golay();
        IntMat gens;
        for (const auto& word : golay) {
            std::vector<Int> v(24);
            for (int i = 0; i < 24; ++i) v[i] = 2 * word[i];
            gens.push_back(std::move(v));
        }
        for (int i = 1; i < 24; ++i) {
            std::vector<Int> v(24, 0);
            v[0] = 4;
            v[i] = -4;
            gens.push_back(std::move(v));
        }
        gens.push_back(runs({{4, 2}, {0, 22}}));
        gens.push_back(runs({{-3, 1}, {1, 23}}));

        LeechModel m;
        m.basis = hnf_rows(std::move(gens));
        if (m.basis.size() != 24) throw error("Leech basis has wrong rank");
        m.gram.assign(24, std::vector<Int>(24, 0));
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j) {
                Int dot = 0;
                for (int k = 0; k < 24; ++k) dot += m.basis[i][k] * m.basis[j][k];
                m.gram[i][j] = exact_div(dot, 8);
            }
        return m;
    }();
    return model;
}

}  // namespace

LatticeHandle make_leech() {
    LatticeHandle L = LatticeHandle::from_gram(leech_model().gram);
    if (!L.is_unimodular() || !L.is_even() || L.rank() != 24)
        throw error("Leech construction failed validation");
    return L;
}

ScaledVector leech_witness(int wanted_norm) {
    std::vector<Int> target;
    if (wanted_norm == 6) {
        target = runs({{5, 1}, {1, 23}});
    } else if (wanted_norm == 8) {
        target = runs({{4, 4}, {0, 20}});
    } else {
        throw error("leech_witness: only norms 6 and 8 are provided");
    }
    auto coords = solve_echelon(leech_model().basis, target);
    if (!coords) throw error("leech_witness: target outside the lattice span");
    std::vector<Int> c(24);
    for (int i = 0; i < 24; ++i) {
        if ((*coords)[i].get_den() != 1) throw error("leech_witness: target not a lattice member");
        c[i] = (*coords)[i].get_num();
    }
    return ScaledVector::integral(std::move(c));
}

Int theta_by_modular_identity(const Int& a2, int i) {
    switch (i) {
        case 4:
            return 196560 - 24 * a2;
        case 6:
            return 16773120 + 252 * a2;
        case 8:
            return 398034000 - 1472 * a2;
    }
    throw error("theta_by_modular_identity: index must be 4, 6 or 8");
}

LatticeHandle CatalogEntry::build() const {
    switch (kind) {
        case Kind::Glued:
            return make_glued(glued);
        case Kind::Gamma:
            return make_gamma(gamma_n);
        case Kind::Leech:
            return make_leech();
    }
    throw error("CatalogEntry: unknown kind");
}

namespace {

CatalogEntry glued_entry(std::string name, std::vector<RootComponentSpec> components,
                         std::vector<ScaledVector> glue, int rank, bool even, Int a2,
                         std::vector<std::string> root_components, bool unique = true) {
    CatalogEntry e;
    e.name = name;
    e.kind = CatalogEntry::Kind::Glued;
    e.glued = {std::move(name), std::move(components), std::move(glue)};
    e.rank = rank;
    e.even = even;
    e.a2 = std::move(a2);
    e.root_components = std::move(root_components);
    e.uniquely_determined_by_roots = unique;
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    cat.push_back(glued_entry("D24", {{'D', 24}}, {ScaledVector(runs({{1, 24}}), 2)}, 24, true,
                              1104, {"D24"}));
    cat.push_back(glued_entry("A24", {{'A', 24}}, {ScaledVector(runs({{1, 20}, {-4, 5}}), 5)}, 24,
                              true, 600, {"A24"}));
    cat.push_back(glued_entry(
        "A12^2", {{'A', 12}, {'A', 12}},
        {ScaledVector(runs({{1, 12}, {-12, 1}, {5, 8}, {-8, 5}}), 13)}, 24, true, 312,
        {"A12", "A12"}));
    cat.push_back(glued_entry(
        "A15D9", {{'A', 15}, {'D', 9}},
        {ScaledVector(runs({{1, 14}, {-7, 2}, {4, 9}}), 8)}, 24, true, 384, {"A15", "D9"}));
    cat.push_back(glued_entry(
        "A17E7", {{'A', 17}, {'E', 7}},
        {ScaledVector(runs({{2, 15}, {-10, 3}, {3, 6}, {-9, 2}}), 12)}, 24, true, 432,
        {"A17", "E7"}));

    {
        CatalogEntry leech;
        leech.name = "Leech";
        leech.kind = CatalogEntry::Kind::Leech;
        leech.rank = 24;
        leech.even = true;
        leech.a2 = 0;
        cat.push_back(std::move(leech));
    }

    for (int n : {12, 16, 20}) {
        CatalogEntry g;
        g.name = "Gamma" + std::to_string(n);
        g.kind = CatalogEntry::Kind::Gamma;
        g.gamma_n = n;
        g.rank = n;
        g.even = (n / 4) % 2 == 0;
        g.a2 = Int(2) * n * (n - 1);
        g.root_components = {"D" + std::to_string(n)};
        cat.push_back(std::move(g));
    }

    cat.push_back(glued_entry("E8", {{'E', 8}}, {}, 8, true, 240, {"E8"}));
    cat.push_back(glued_entry("E8^2", {{'E', 8}, {'E', 8}}, {}, 16, true, 480, {"E8", "E8"}));
    cat.push_back(glued_entry(
        "E7^2", {{'E', 7}, {'E', 7}},
        {ScaledVector(runs({{1, 6}, {-3, 2}, {1, 6}, {-3, 2}}), 4)}, 14, false, 252,
        {"E7", "E7"}));
    cat.push_back(glued_entry(
        "D8^2", {{'D', 8}, {'D', 8}},
        {ScaledVector(runs({{1, 8}, {2, 1}, {0, 7}}), 2),
         ScaledVector(runs({{2, 1}, {0, 7}, {1, 8}}), 2)},
        16, false, 224, {"D8", "D8"}, false));
    cat.push_back(glued_entry("A15", {{'A', 15}}, {ScaledVector(runs({{1, 12}, {-3, 4}}), 4)}, 15,
                              false, 240, {"A15"}));
    cat.push_back(glued_entry(
        "A17A1", {{'A', 17}, {'A', 1}},
        {ScaledVector(runs({{1, 15}, {-5, 3}, {3, 1}, {-3, 1}}), 6)}, 18, false, 308,
        {"A17", "A1"}));
    cat.push_back(glued_entry(
        "A9^2", {{'A', 9}, {'A', 9}},
        {ScaledVector(runs({{-7, 3}, {3, 7}, {-9, 1}, {1, 9}}), 10)}, 18, false, 180,
        {"A9", "A9"}));

    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : builtin_catalog())
        if (e.name == name) return e;
    throw error("no catalog entry named " + name);
}

}  // namespace latkit
