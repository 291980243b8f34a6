#pragma once

#include "spalg/bracket.hpp"
#include "spalg/dirac.hpp"
#include "spalg/star.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spalg {

// Parsed session declaration: variables, odd metric, constraints, truncation
// order. The file grammar is documented in docs/formats.md:
//
//   pair <q-name> <p-name>
//   odd <name> [<name> ...]
//   metric <odd-name> <odd-name> <rational>
//   constraint <expression>
//   order <K>
//
// '#' starts a comment. Metric entries default to 0 and are mirrored
// symmetrically; conflicting assignments are an error.
struct SessionSpec {
    TablePtr table;
    std::vector<std::vector<Rational>> odd_metric;
    std::vector<std::string> constraint_texts;
    std::size_t order = 4;

    BracketStructure bracket_structure() const { return BracketStructure(table, odd_metric); }

    StarProduct star_product() const { return StarProduct(bracket_structure(), order); }

    std::vector<SuperPolynomial> parsed_constraints() const;

    bool has_constraints() const { return !constraint_texts.empty(); }

    // Builds the Dirac context; throws (OddEntry/SingularBody/...) if the
    // constraint set is not usable.
    DiracContext dirac_context() const;
};

SessionSpec parse_session(const std::string& text);
SessionSpec load_session_file(const std::string& path);

// The desk-scale default used by the verification harness when no file is
// given: two symplectic pairs (q1,p1,q2,p2), three odd variables
// theta1..theta3 with the identity metric, constraints {q1, p1, theta1},
// truncation order 4.
SessionSpec default_session();

} // namespace spalg
