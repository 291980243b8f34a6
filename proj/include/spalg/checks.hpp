#pragma once

#include "spalg/machine.hpp"
#include "spalg/random_poly.hpp"
#include "spalg/session.hpp"

#include <string>
#include <vector>

namespace spalg {

// The documented suite set, in the order "all" runs them.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

// Runs one named suite: `cases` seeded random instances through the
// corresponding checkers, exact pass/fail per law. Deterministic: identical
// (session, suite, cases, seed, term spec) produce identical reports up to
// the timing field.
CheckReport run_suite(const std::string& name, const SessionSpec& session, std::uint64_t cases,
                      std::uint64_t seed, const RandomTermSpec& spec);

std::vector<CheckReport> run_all_suites(const SessionSpec& session, std::uint64_t cases,
                                        std::uint64_t seed, const RandomTermSpec& spec);

std::string render_text(const CheckReport& report);

struct FuzzOutcome {
    std::uint64_t attempted = 0;
    std::uint64_t parsed = 0;
    std::uint64_t positioned_errors = 0;
    std::uint64_t other_failures = 0; // anything but a positioned error: a bug
};

// Feeds `count` seeded random byte strings to the lexer/parser. Every input
// must either parse or raise a positioned error; anything else counts as a
// failure.
FuzzOutcome fuzz_parser(const TablePtr& table, std::uint64_t count, std::uint64_t seed);

} // namespace spalg
