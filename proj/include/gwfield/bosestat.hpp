// Copyright 2026 The gwfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Photon-gas state counting and entropy maximization over band occupancy
// tables, the Planck spectral density, the emission/absorption balance, and
// symmetrized N-photon wave functions.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gwf {

/// 8 pi nu^2 d_nu / c^3 states per cm^3 (both helicities).
double band_state_count(double nu, double d_nu);

class FrequencyBand {
   public:
    static FrequencyBand create(double nu, double d_nu, double volume = 1.0);

    double nu() const {
        return nu_;
    }
    double d_nu() const {
        return d_nu_;
    }
    double volume() const {
        return volume_;
    }
    /// A, states per cm^3.
    double states_per_volume() const {
        return a_;
    }
    /// A V, the number of cells in the band.
    double states() const {
        return a_ * volume_;
    }
    /// h nu in erg.
    double quantum() const;

   private:
    FrequencyBand(double nu, double d_nu, double volume, double a)
        : nu_(nu), d_nu_(d_nu), volume_(volume), a_(a) {
    }
    double nu_;
    double d_nu_;
    double volume_;
    double a_;
};

/// Geometric tail fraction admitted beyond the last occupancy row entry.
inline constexpr double kOccupancyTail = 1e-12;

/// Smallest R with exp(-(R+1) h nu / beta) < kOccupancyTail.
std::size_t occupancy_rows_needed(const FrequencyBand &band, double beta);

/// p_r = A V (1 - x) x^r, x = exp(-h nu / kT), for r = 0..R. R is the larger of
/// `r_max` and occupancy_rows_needed.
std::vector<double> geometric_occupancy(const FrequencyBand &band, double T, std::size_t r_max = 0);

/// p[s][r]: number of cells in band s holding exactly r photons.
struct OccupancyTable {
    std::vector<FrequencyBand> bands;
    std::vector<std::vector<double>> p;

    double energy() const;
    double photon_count() const;
    /// Stirling-form ln W = sum_s [A V ln(A V) - sum_r p_r ln p_r], W being the
    /// number of microscopic arrangements compatible with the table.
    double ln_multiplicity() const;
};

struct ThermoState {
    double beta = 0.0;       ///< erg
    double E = 0.0;          ///< erg
    double S_entropy = 0.0;  ///< erg / K
    double N_photons = 0.0;
};

struct MaxEntOptions {
    /// 0 selects the row count automatically (doubling until the tail bound holds).
    /// A nonzero value is a hard cap.
    std::size_t r_max = 0;
    double tol = 1e-6;
    /// Cap on inner ascent iterations per multiplier value.
    int max_iterations = 2000;
    /// Stop the inner ascent once the stationarity residual (log space) is below this.
    double kkt_tolerance = 1e-13;
};

struct MaxEntResult {
    OccupancyTable table;
    ThermoState state;
    int bisection_steps = 0;
    int inner_iterations = 0;  ///< total over all multiplier evaluations
    double kkt_residual = 0.0;
};

/// Maximizes ln W subject to sum_r p_r = A V per band and fixed total energy.
///
/// Inner problem (fixed multiplier 1/beta): entropic mirror ascent on each band
/// simplex, ln p <- (1 - eta) ln p - eta r h nu / beta (+ normalization), eta = 1/2,
/// started from the uniform row. Outer problem: bisection on ln beta until the
/// table energy matches `E_target`.
MaxEntResult maximize_entropy(const std::vector<FrequencyBand> &bands, double E_target,
                              const MaxEntOptions &options = {});

/// |(dS/dE) T - 1| by central difference of the maximized entropy, with T = beta / k.
double entropy_temperature_residual(const std::vector<FrequencyBand> &bands, double E_target,
                                    double rel_step = 1e-4);

/// (8 pi nu^2 / c^3) h nu / (exp(h nu / kT) - 1), erg / (cm^3 Hz).
double planck_density(double nu, double T);

/// Root of 3 (1 - e^{-x}) = x on (1, 5): the spectral peak h nu* / kT.
double planck_peak_x();

struct EquilibriumPerturbation {
    double occupancy_scale = 1.0;  ///< multiplies N
    bool spontaneous = true;       ///< false drops the spontaneous term A
};

/// |n2 (N + A) / (n1 N) - g2/g1| with N = A / (exp(h nu / kT) - 1) and
/// n1 g2 / (n2 g1) = exp(h nu / kT); zero up to rounding when unperturbed.
double spontaneous_equilibrium_check(double nu, double T, double g_ratio,
                                     const EquilibriumPerturbation &perturbation = {});

using ModeFunction = std::function<std::complex<double>(double)>;

/// Bosonic N-particle wave function built from single-particle modes with
/// integer occupations, normalized by the number of distinct arrangements W:
/// Psi(x_1..x_N) = W^{-1/2} sum over distinct label orderings of prod_j psi_{l_j}(x_j).
class PhotonWavefunction {
   public:
    static constexpr std::size_t kMaxParticles = 8;

    /// Rejects N = sum(occupation) above kMaxParticles or N = 0.
    static PhotonWavefunction create(std::vector<ModeFunction> modes,
                                     std::vector<std::size_t> occupation);

    std::size_t particles() const {
        return labels_.size();
    }
    /// N! / prod n_i!
    double arrangements() const {
        return arrangements_;
    }
    /// Mode index of each particle slot, sorted.
    const std::vector<std::size_t> &labels() const {
        return labels_;
    }
    std::complex<double> operator()(std::span<const double> x) const;

   private:
    PhotonWavefunction(std::vector<ModeFunction> modes, std::vector<std::size_t> labels,
                       double arrangements, double norm)
        : modes_(std::move(modes)), labels_(std::move(labels)), arrangements_(arrangements),
          norm_(norm) {
    }
    std::vector<ModeFunction> modes_;
    std::vector<std::size_t> labels_;
    double arrangements_;
    double norm_;  ///< 1 / (sqrt(W) prod n_i!)
};

PhotonWavefunction symmetrize_photons(std::vector<ModeFunction> modes,
                                      std::vector<std::size_t> occupation);

}  // namespace gwf
