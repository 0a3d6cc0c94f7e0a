#pragma once

#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Root lattice component in its coordinate model:
//   A_n = {x in Z^{n+1} : sum x_i = 0}
//   D_n = {x in Z^n : sum x_i even}
//   E_6, E_7 inside the R^8 model of E_8; E_8 = D_8 + (1/2^8).
struct RootComponentSpec {
    char family = 'A';  // 'A', 'D' or 'E'
    int rank = 1;

    int ambient_dim() const;
    Int determinant() const;
    Int root_count() const;
};

LatticeHandle make_root_lattice(const RootComponentSpec& spec);

// Generators of the component alone, as vectors in the ambient of the
// orthogonal direct sum (component `index` of `components`).
std::vector<ScaledVector> component_generators(const std::vector<RootComponentSpec>& components,
                                               int index);

struct GluedLatticeSpec {
    std::string name;
    std::vector<RootComponentSpec> components;
    std::vector<ScaledVector> glue_generators;  // in the dual of the root direct sum
};

// Root direct sum plus glue generators. Asserts: every glue generator pairs
// integrally with every root generator (dual membership), and the result is
// unimodular.
LatticeHandle make_glued(const GluedLatticeSpec& spec);

// Gamma_n = D_n + (1/2^n), n divisible by 4; even iff n/4 is even.
LatticeHandle make_gamma(int n);

// Leech lattice, presented by its Gram matrix (the coordinate model lives at
// scale sqrt(8) and is divided out). Validated at construction: rank 24,
// even, unimodular.
LatticeHandle make_leech();

// A vector of the requested norm (6 or 8) in make_leech()'s coordinates.
ScaledVector leech_witness(int wanted_norm);

// Theta coefficients a_4, a_6, a_8 of an even unimodular rank-24 lattice as
// linear functions of a_2.
Int theta_by_modular_identity(const Int& a2, int i);

struct CatalogEntry {
    enum class Kind { Glued, Gamma, Leech };

    std::string name;
    Kind kind = Kind::Glued;
    GluedLatticeSpec glued;  // Kind::Glued
    int gamma_n = 0;         // Kind::Gamma

    // expected invariants, checked by `zoo check` and the test suite
    int rank = 0;
    bool even = false;
    Int a2{0};
    std::vector<std::string> root_components;  // e.g. {"A12", "A12"}
    bool uniquely_determined_by_roots = true;

    LatticeHandle build() const;
};

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// Directory holding shipped data files (golay24.txt, catalog.json);
// overridable through the LATKIT_DATA_DIR environment variable.
std::string data_dir();

}  // namespace latkit
