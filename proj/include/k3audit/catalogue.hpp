#pragma once

#include "k3audit/group.hpp"
#include "k3audit/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3 {

// Expected transformation behaviour of a certificate polynomial.
struct CharacterSpec {
    enum Kind { Trivial, AnyCharacter, OfOrder } kind = Trivial;
    int order = 1;
    std::string str() const;
};

struct Certificate {
    std::string poly_file;       // relative to the catalogue directory
    Poly poly{0};
    CharacterSpec expected;
};

struct CatalogueEntry {
    std::string name;
    int size = 0;                // ambient matrix size
    int expected_order = 0;      // linear closure order
    int expected_proj_order = 0;
    std::vector<GMatrix> generators;
    std::vector<Certificate> certificates;

    FiniteMatrixGroup group;     // verified linear closure
    FiniteMatrixGroup projective;
};

// directory holding *.grp and *.poly files; K3AUDIT_DATA overrides the
// compiled-in default
std::string catalogue_directory();

std::vector<std::string> catalogue_names();

// loads <name>.grp, runs the closure, and verifies every expectation in the
// entry (orders, certificate invariances); throws on any failure
CatalogueEntry catalogue(const std::string& name);

// same, but loaded at most once per process (audits share the heavy closures)
const CatalogueEntry& catalogue_cached(const std::string& name);

// parse/serialize of the .grp format (round-trip exact for canonical files)
CatalogueEntry parse_catalogue_text(const std::string& text,
                                    const std::string& dir,
                                    bool verify = true);
std::string serialize_catalogue_text(const CatalogueEntry& e);

} // namespace k3
