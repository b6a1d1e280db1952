// units.hpp — Physical constants and unit conversions (cm^-1 / ps / K system)

#pragma once

namespace exciwalk::units {

// hbar in cm^-1 ps: E (cm^-1) = hbar * omega (rad/ps)
inline constexpr double hbar = 5.3088;

// Boltzmann constant in cm^-1 / K
inline constexpr double k_boltzmann = 0.69504;

// Energy (cm^-1) -> angular frequency (rad/ps)
constexpr double angular_frequency(double energy_cm1) { return energy_cm1 / hbar; }

// Angular frequency (rad/ps) -> energy (cm^-1)
constexpr double energy(double omega_ps1) { return omega_ps1 * hbar; }

}  // namespace exciwalk::units
