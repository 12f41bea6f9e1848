#pragma once

namespace trapdamp::constants {

// SI defining constants (exact since the 2019 redefinition).
inline constexpr double planck = 6.62607015e-34;            // J s
inline constexpr double boltzmann = 1.380649e-23;           // J/K
inline constexpr double elementary_charge = 1.602176634e-19;  // C

// CODATA 2018 recommended value.
inline constexpr double electron_mass = 9.1093837015e-31;   // kg

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double hbar = planck / two_pi;             // J s

}  // namespace trapdamp::constants
