#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "leo/core.hpp"

namespace leo::physics {

/// Power-law nose cone y = a x^n at fineness L/D = 1. Drag from Newtonian
/// surface pressure (Cp = 2 sin^2 theta), referenced to base area.
struct NoseConeSpec {
  double fineness = 1.0;          // L/D, fixed at 1
  std::size_t quadrature_points = 4096;  // composite Simpson intervals
  double tip_cutoff = 1e-6;       // quadrature starts at tip_cutoff * L
};

double nosecone_drag(double n, const NoseConeSpec& spec = {});

/// Quasi-1D supersonic nozzle whose wall is a cubic Bezier between fixed
/// endpoints (0, r_i) and (l, r_o). Objective: radial exit velocity.
struct NozzleSpec {
  double inlet_radius = 1.0;
  double outlet_radius = 2.0;
  double length = 5.0;
  double gamma = 1.4;
  std::size_t t_grid = 128;          // feasibility sampling along the curve
  double infeasible_penalty = 1e6;
};

/// Exit Mach from the area-Mach relation (supersonic branch, throat = inlet
/// area), exit speed from isentropic relations (normalized by the stagnation
/// speed of sound), exit angle from the Bezier tangent at t = 1.
/// Returns v_r = V_exit * sin(theta_exit); infeasible contours return the
/// penalty value.
double nozzle_objective(const std::array<double, 4>& ctrl, const NozzleSpec& spec = {});

/// A/A* for Mach M (isentropic quasi-1D).
double area_mach_ratio(double mach, double gamma = 1.4);

/// Inverts area_mach_ratio on the supersonic branch (M >= 1). Requires
/// area_ratio >= 1.
double mach_from_area_ratio_supersonic(double area_ratio, double gamma = 1.4);

/// 1D steady heat conduction residual. N interior unknowns on [0, L] with
/// T(0) = t_left, T(L) = t_right and spacing dx = L / (N + 1).
struct HeatSpec {
  std::size_t num_unknowns = 2;
  double length = 1.0;
  double q_over_k = 10.0;
  double t_left = 0.0;
  double t_right = 1.0;

  double dx() const { return length / static_cast<double>(num_unknowns + 1); }
};

/// Sum of squared node residuals of the central-difference discretization.
double heat_residual_loss(const std::vector<double>& t_interior, const HeatSpec& spec = {});

/// Exact solver of the discrete system (Thomas algorithm); the unique zero of
/// heat_residual_loss.
std::vector<double> heat_solve_discrete(const HeatSpec& spec);

/// Jensen top-hat wake windfarm on a square domain, 72 directions at 5 deg.
struct WindfarmSpec {
  std::size_t num_turbines = 2;
  double domain_size = 1000.0;        // m (square)
  double rotor_diameter = 126.0;      // m
  std::size_t num_directions = 72;    // 5 degree steps, uniform frequency
  double mean_wind_speed = 8.0;       // m/s
  double wind_speed_std = 0.5;        // m/s, stochastic mode only
  double wake_decay = 0.05;           // k_w
  double thrust_coefficient = 0.8;    // Ct
  double power_coefficient = 0.45;    // Cp
  double air_density = 1.225;         // kg/m^3
  double rated_speed = 12.0;          // m/s
  double cut_in_speed = 3.0;          // m/s
  double min_spacing_diameters = 2.0;
  double penalty_weight = 1e3;        // MWh per squared metre of violation
  bool stochastic_speed = false;
  std::uint64_t seed = 0;             // stochastic mode only
};

/// Annual energy production in MWh for turbine positions given as (x, y)
/// pairs. Spacing and domain violations subtract a quadratic penalty.
/// Turbines closer than 1e-6 m are rejected.
double windfarm_aep(const std::vector<std::array<double, 2>>& layout,
                    const WindfarmSpec& spec = {});

/// Jensen top-hat fractional deficit at axial distance `downstream` and
/// crosswind offset `offset` behind a rotor of diameter D (zero outside the
/// expanding cone).
double jensen_deficit(double downstream, double offset, const WindfarmSpec& spec);

}  // namespace leo::physics
