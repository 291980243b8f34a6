#pragma once

#include "spalg/series.hpp"
#include "spalg/super_polynomial.hpp"

#include <string>
#include <vector>

namespace spalg {

struct CheckFailure {
    std::uint64_t case_index = 0;
    std::string law;                                        // name of the violated identity
    std::vector<std::pair<std::string, std::string>> inputs; // (slot, canonical text)
    std::string residual;                                   // canonical text of the residual
};

struct CheckReport {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t seed = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes; // suite-specific payload lines
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

// Line-oriented structured text encoding, byte-stable across runs for
// identical inputs. Documented in docs/formats.md. Reports never carry
// timing.
std::string to_machine_encoding(const SuperPolynomial& f);
std::string to_machine_encoding(const FormalSeries& series);
std::string to_machine_encoding(const CheckReport& report);

// Inverse of the polynomial encoding; validates the table digest.
SuperPolynomial parse_machine_poly(const std::string& text, const TablePtr& table);

} // namespace spalg
