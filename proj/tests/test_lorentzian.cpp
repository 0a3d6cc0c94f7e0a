#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/enumerate.hpp"
#include "latkit/lorentzian.hpp"
#include "latkit/parse.hpp"
#include "latkit/zoo.hpp"

using namespace latkit;

TEST_CASE("lorentz class basics") {
    LorentzClass v = parse_lorentz_class("(7|5,1^23)");
    CHECK(v.a == 7);
    CHECK(v.b.size() == 24);
    CHECK(v.square() == 1);
    CHECK(adjunction_genus(v) == 5);
    CHECK(even_complement_test(v));

    LorentzClass d = parse_lorentz_class("(8|4,3,2^8,1^6)");
    CHECK(d.square() == 1);
    CHECK(adjunction_genus(d) == 4);
    CHECK_FALSE(even_complement_test(d));

    CHECK_THROWS_AS(complement_lattice(parse_lorentz_class("(2|1,1)")), error);
    CHECK_THROWS_AS(adjunction_genus(parse_lorentz_class("(2|1^2)")), error);  // odd sum
}

TEST_CASE("complement identifications: the nine classes") {
    struct Case {
        const char* cls;
        const char* name;
        const char* roots;
        long genus;  // -1: no adjunction claim
        bool even;
    };
    const Case cases[] = {
        {"(7|5,1^23)", "D24", "D24", 5, true},
        {"(5|1^24)", "A24", "A24", 6, true},
        {"(11|3^12,1^12)", "A12^2", "A12+A12", 9, true},
        {"(11|5,3^9,1^14)", "A15D9", "A15+D9", 8, true},
        {"(9|3^7,1^17)", "A17E7", "A17+E7", 7, true},
        {"(9|3^8,1^8)", "E8^2", "E8+E8", 4, true},
        {"(8|4,3,2^8,1^6)", "D8^2", "D8+D8", 4, false},
        {"(7|2^10,1^8)", "A9^2", "A9+A9", 5, false},
        {"(145|51,47,45,...,5,3)", "Leech", "-", -1, true},
    };
    for (const Case& c : cases) {
        CAPTURE(c.cls);
        LorentzClass cls = parse_lorentz_class(c.cls);
        REQUIRE(cls.square() == 1);
        LatticeHandle C = complement_lattice(cls);
        CHECK(C.is_unimodular());
        CHECK(C.orientation() == -1);
        CHECK(C.is_even() == c.even);
        // The parity test is sufficient, never necessary.
        if (even_complement_test(cls)) CHECK(C.is_even());
        IdentifyResult id = identify_unimodular(C);
        CHECK(id.fingerprint.str() == c.roots);
        REQUIRE(id.identified());
        CHECK(id.name() == c.name);
        if (c.genus >= 0) CHECK(adjunction_genus(cls) == c.genus);
    }
}

TEST_CASE("fingerprints are functional-independent") {
    const char* names[] = {"E7^2", "D8^2", "A9^2", "Gamma12", "E8"};
    for (const char* name : names) {
        CAPTURE(name);
        LatticeHandle L = catalog_entry(name).build();
        RootSystemFingerprint base = root_fingerprint(L);
        CHECK(base.spans_full_rank);
        for (unsigned seed = 1; seed <= 5; ++seed) {
            RootSystemFingerprint fp = root_fingerprint(L, seed);
            CHECK(fp.components == base.components);
            CHECK(fp.root_count == base.root_count);
        }
        // Simple root counts match the component ranks.
        for (std::size_t i = 0; i < base.components.size(); ++i)
            CHECK(static_cast<int>(base.component_simple_roots[i].size()) ==
                  base.components[i].second);
    }
}

TEST_CASE("identify: table rows and ambiguity reporting") {
    IdentifyResult a17 = identify_by_fingerprint(18, false, {{'A', 16}, {'A', 1}});
    REQUIRE(a17.identified());
    CHECK(a17.name() == "A17A1");

    IdentifyResult a92 = identify_by_fingerprint(18, false, {{'A', 9}, {'A', 9}});
    REQUIRE(a92.identified());
    CHECK(a92.name() == "A9^2");

    IdentifyResult d8 = identify_by_fingerprint(16, false, {{'D', 8}, {'D', 8}});
    CHECK(d8.candidates == std::vector<std::string>{"D8^2"});
    CHECK_FALSE(d8.detail.empty());  // flagged as not determined by roots alone

    // An odd rank-16 lattice with fingerprint D16 matches no catalog row:
    // ambiguity is reported, not guessed.
    IdentifyResult i16 = identify_unimodular(LatticeHandle::from_gram(identity_mat(16)));
    CHECK(i16.fingerprint.str() == "D16");
    CHECK_FALSE(i16.identified());
}

TEST_CASE("identify: D8-copy disambiguation") {
    IdentifyResult d82 = identify_unimodular(catalog_entry("D8^2").build());
    REQUIRE(d82.identified());
    CHECK(d82.name() == "D8^2");
    CHECK(d82.detail == "no D8 copy extends to E8 and the lattice is odd");

    IdentifyResult e82 = identify_unimodular(catalog_entry("E8^2").build());
    REQUIRE(e82.identified());
    CHECK(e82.name() == "E8^2");
}

TEST_CASE("plumbing graph Gram and error paths") {
    PlumbingGraph path3{{Int(2), Int(2), Int(2)}, {{0, 1}, {1, 2}}};
    IntMat g = path3.gram();
    CHECK(g[0][1] == 1);
    CHECK(g[0][2] == 0);
    IntMat gc = g;
    CHECK(determinant(gc) == 4);  // A3 Gram

    PlumbingGraph cycle{{Int(2), Int(2), Int(2)}, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK_THROWS_AS(cycle.gram(), error);
    PlumbingGraph split{{Int(2), Int(2), Int(2), Int(2)}, {{0, 1}, {0, 1}, {2, 3}}};
    CHECK_THROWS_AS(split.gram(), error);
    PlumbingGraph disconnected{{Int(2), Int(2), Int(2), Int(2)},
                               {{0, 1}, {2, 3}, {2, 3}}};
    CHECK_THROWS_AS(disconnected.gram(), error);
}

TEST_CASE("plumbing files verify against their lattices") {
    const std::pair<const char*, const char*> cases[] = {
        {"D24", "D24"},    {"A24", "A24"},    {"E7xE7", "E7^2"},
        {"D8xD8", "D8^2"}, {"A9xA9", "A9^2"}, {"A17A1", "A17A1"},
    };
    for (const auto& [file, name] : cases) {
        CAPTURE(file);
        PlumbingFile pf = parse_plumbing_file(data_dir() + "/plumbings/" + file + ".txt");
        CHECK(pf.graph.size() == catalog_entry(name).rank);
        IntMat gram = pf.graph.gram();
        Int det = determinant(gram);
        CHECK((det == 1 || det == -1));
        LatticeHandle L = catalog_entry(name).build();
        REQUIRE(pf.basis.size() == static_cast<std::size_t>(pf.graph.size()));
        auto aligned = align_plumbing_signs(pf.basis, pf.graph, L.ambient());
        REQUIRE(aligned.has_value());
        CHECK(verify_embedding(L, *aligned, pf.graph));
    }
}

TEST_CASE("sign alignment recovers a flipped basis") {
    PlumbingFile pf = parse_plumbing_file(data_dir() + "/plumbings/E7xE7.txt");
    LatticeHandle L = catalog_entry("E7^2").build();
    std::vector<ScaledVector> flipped = pf.basis;
    for (std::size_t i = 0; i < flipped.size(); i += 3) flipped[i] = -flipped[i];
    auto aligned = align_plumbing_signs(flipped, pf.graph, L.ambient());
    REQUIRE(aligned.has_value());
    CHECK(verify_embedding(L, *aligned, pf.graph));
}

TEST_CASE("verify_embedding failure modes") {
    PlumbingFile pf = parse_plumbing_file(data_dir() + "/plumbings/D8xD8.txt");
    LatticeHandle L = catalog_entry("D8^2").build();
    // Non-member vector: membership failure names the offender.
    std::vector<ScaledVector> bad = pf.basis;
    bad[0] = ScaledVector(std::vector<Int>(16, Int(1)), Int(3));
    CHECK_THROWS_AS(verify_embedding(L, bad, pf.graph), error);
    // Wrong Gram: swap two non-adjacent basis vectors.
    std::vector<ScaledVector> swapped = pf.basis;
    std::swap(swapped[0], swapped[pf.graph.size() - 1]);
    auto aligned = align_plumbing_signs(swapped, pf.graph, L.ambient());
    CHECK((!aligned || !verify_embedding(L, *aligned, pf.graph)));
}

TEST_CASE("plumbing lattice theta agrees with the catalog lattice") {
    PlumbingFile pf = parse_plumbing_file(data_dir() + "/plumbings/E7xE7.txt");
    LatticeHandle abstract = plumbing_lattice(pf.graph);
    LatticeHandle L = catalog_entry("E7^2").build();
    auto ta = theta_coefficients(abstract, 4);
    auto tb = theta_coefficients(L, 4);
    CHECK(ta == tb);
}
