#pragma once

#include "spalg/bracket.hpp"
#include "spalg/exprio.hpp"

namespace spalg::testing {

// Desk-scale chart used across the test suites: two symplectic pairs and
// three odd variables.
inline TablePtr desk_table() {
    static TablePtr table =
        VariableTable::create({"q1", "p1", "q2", "p2"}, {"theta1", "theta2", "theta3"});
    return table;
}

inline SuperPolynomial P(const std::string& text) {
    return parse_expression(text, desk_table());
}

inline BracketStructure delta_bracket() { return BracketStructure::identity_metric(desk_table()); }

} // namespace spalg::testing
