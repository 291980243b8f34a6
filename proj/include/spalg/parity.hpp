#pragma once

#include <string>

namespace spalg {

// Z/2Z grading. Even elements are bosonic, odd elements fermionic.
enum class Parity : unsigned { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return Parity((static_cast<unsigned>(a) + static_cast<unsigned>(b)) % 2u);
}

constexpr Parity parity_of_count(std::size_t count) {
    return (count % 2u) ? Parity::Odd : Parity::Even;
}

// (-1)^{ab} as an integer sign.
constexpr int koszul_sign(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

inline std::string to_string(Parity p) {
    return p == Parity::Even ? "Even" : "Odd";
}

} // namespace spalg
