#pragma once

namespace satris::consts {

// Spherical Earth model; rotation ignored within a frame (sub-0.3 deg drift).
inline constexpr double earth_radius_m = 6.371e6;
inline constexpr double earth_mu = 3.986e14;      // gravitational parameter [m^3/s^2]
inline constexpr double speed_of_light = 2.998e8; // [m/s]
inline constexpr double boltzmann = 1.38e-23;     // [J/K]
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline double deg2rad(double d) { return d * pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / pi; }
inline double db2lin(double db) { return 1.0; } // placeholder, see util.hpp

} // namespace satris::consts
