// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace nmeascene::link_budget {

inline constexpr double kBoltzmann = 1.38e-23;  // W*s/K

struct LinkBudgetParams {
  double signal_power_dbw = 0.0;     // S_r
  double antenna_gain_db = 0.0;      // G_a
  double system_noise_temp_k = 1.0;  // T_sys = T_source + T_receiver, > 0
  double implementation_loss_db = 0.0;
};

/// Theoretical carrier-to-noise density in dB-Hz:
///   S_r + G_a - 10 log10(k) - 10 log10(T_sys) - L
/// Some printings of this link budget show a coefficient of 1 on the
/// T_sys term; the dimensionally consistent form uses 10, as here.
/// Throws Error(DomainError) when T_sys <= 0.
double cn0_theoretical(const LinkBudgetParams& p);

/// Signal-to-noise ratio in dB from signal and noise powers in dB.
double snr_from_powers(double signal_power_db, double noise_power_db) noexcept;

enum class Conversion { SnrToCn0, Cn0ToSnr };

/// C/N0 = SNR + BW, with BW the observation bandwidth in dB-Hz.
double cn0_snr_convert(double value, double bandwidth_dbhz,
                       Conversion direction) noexcept;

enum class Material {
  Drywall,
  Plywood,
  Glass,
  Wood,
  RebarGrid,
  Brick,
  Concrete,
  ReinforcedConcrete,
};

inline constexpr std::size_t kMaterialCount = 8;

struct MaterialAttenuation {
  Material material;
  std::string_view name;
  double atten_min_db;
  double atten_max_db;
  double factor_min;  // dimensionless; carried as data only
  double factor_max;
};

// L-band attenuation of common construction materials.
const std::array<MaterialAttenuation, kMaterialCount>& material_table() noexcept;

const MaterialAttenuation& material_info(Material m) noexcept;
std::optional<Material> material_from_name(std::string_view name) noexcept;

/// atten_min + position * (atten_max - atten_min). Throws Error(RangeError)
/// unless 0 <= position <= 1.
double material_attenuation_db(Material m, double position);

/// `material,atten_min_db,atten_max_db,factor_min,factor_max` with header.
std::string material_table_csv();

}  // namespace nmeascene::link_budget
