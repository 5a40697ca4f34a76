// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "link_budget.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace nmeascene::link_budget {

namespace {

// Factor column: the attenuation-free fraction of signal power. For each
// material the factor falls as the attenuation rises, so factor_max pairs
// with atten_min.
constexpr std::array<MaterialAttenuation, kMaterialCount> kTable{{
    {Material::Drywall, "drywall", 1, 1, 0.8, 0.8},
    {Material::Plywood, "plywood", 1, 3, 0.5, 0.8},
    {Material::Glass, "glass", 1, 4, 0.4, 0.8},
    {Material::Wood, "wood", 2, 9, 0.1, 0.6},
    {Material::RebarGrid, "rebar_grid", 2, 11, 0.08, 0.6},
    {Material::Brick, "brick", 5, 31, 0.001, 0.3},
    {Material::Concrete, "concrete", 12, 43, 0.00005, 0.06},
    {Material::ReinforcedConcrete, "reinforced_concrete", 29, 33, 0.0005, 0.001},
}};

}  // namespace

double cn0_theoretical(const LinkBudgetParams& p) {
  if (!(p.system_noise_temp_k > 0.0)) {
    throw Error(ErrorCode::DomainError,
                "system noise temperature must be positive");
  }
  return p.signal_power_dbw + p.antenna_gain_db - 10.0 * std::log10(kBoltzmann) -
         10.0 * std::log10(p.system_noise_temp_k) - p.implementation_loss_db;
}

double snr_from_powers(double signal_power_db, double noise_power_db) noexcept {
  return signal_power_db - noise_power_db;
}

double cn0_snr_convert(double value, double bandwidth_dbhz,
                       Conversion direction) noexcept {
  return direction == Conversion::SnrToCn0 ? value + bandwidth_dbhz
                                           : value - bandwidth_dbhz;
}

const std::array<MaterialAttenuation, kMaterialCount>& material_table() noexcept {
  return kTable;
}

const MaterialAttenuation& material_info(Material m) noexcept {
  return kTable[static_cast<std::size_t>(m)];
}

std::optional<Material> material_from_name(std::string_view name) noexcept {
  for (const auto& row : kTable) {
    if (row.name == name) return row.material;
  }
  return std::nullopt;
}

double material_attenuation_db(Material m, double position) {
  if (!(position >= 0.0 && position <= 1.0)) {
    throw Error(ErrorCode::RangeError, "position must lie in [0, 1]");
  }
  const auto& row = material_info(m);
  return row.atten_min_db + position * (row.atten_max_db - row.atten_min_db);
}

std::string material_table_csv() {
  std::ostringstream os;
  os << "material,atten_min_db,atten_max_db,factor_min,factor_max\n";
  for (const auto& row : kTable) {
    os << row.name << ',' << row.atten_min_db << ',' << row.atten_max_db << ','
       << row.factor_min << ',' << row.factor_max << '\n';
  }
  return os.str();
}

}  // namespace nmeascene::link_budget
