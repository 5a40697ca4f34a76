// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "sites.hpp"

namespace nmeascene::sites {

namespace {

using classify::Scenario;
constexpr auto A = Scenario::OpenOutdoor;
constexpr auto B = Scenario::ObstructedOutdoor;
constexpr auto C = Scenario::IndoorNearOpening;
constexpr auto D = Scenario::Indoor;

// name, label, scenario, mean C/N0, sum C/N0, PDOP, HDOP, satellites,
// epochs with (without) measurements
constexpr std::array<SiteStatistics, kSiteCount> kSites{{
    {"local_a1", "A-1", A, {38.84, 1.00}, {528.60, 68.52}, {1.91, 0.31}, {0.87, 0.04}, {13.61, 1.72}, 3527, 73},
    {"local_a2", "A-2", A, {38.14, 1.24}, {485.02, 88.39}, {1.99, 0.19}, {0.83, 0.04}, {12.73, 2.35}, 3598, 2},
    {"local_a3", "A-3", A, {37.61, 1.25}, {488.97, 133.95}, {1.76, 0.21}, {0.85, 0.05}, {13.02, 3.64}, 3272, 328},
    {"local_a4", "A-4", A, {32.67, 1.94}, {528.64, 169.65}, {1.65, 0.21}, {0.91, 0.10}, {16.15, 4.95}, 3486, 124},
    {"local_a5", "A-5", A, {36.33, 1.40}, {474.55, 99.65}, {1.85, 0.21}, {0.89, 0.06}, {13.09, 2.83}, 3419, 181},
    {"local_a6", "A-6", A, {34.76, 1.50}, {435.12, 66.42}, {1.68, 0.23}, {0.90, 0.11}, {12.51, 1.81}, 3558, 42},
    {"local_a7", "A-7", A, {39.94, 1.23}, {523.16, 192.32}, {1.86, 0.29}, {0.88, 0.07}, {13.07, 4.72}, 3065, 535},
    {"local_a8", "A-8", A, {39.83, 1.09}, {566.65, 39.60}, {1.78, 0.08}, {0.86, 0.07}, {14.23, 1.02}, 3578, 22},
    {"local_a9", "A-9", A, {38.03, 1.14}, {507.87, 73.41}, {2.06, 0.21}, {0.83, 0.03}, {13.36, 1.96}, 3552, 48},
    {"local_a10", "A-10", A, {38.86, 3.12}, {571.01, 123.50}, {1.75, 0.23}, {0.91, 0.11}, {14.68, 3.12}, 3404, 196},
    {"local_b1", "B-1", B, {27.50, 1.97}, {291.34, 29.79}, {3.09, 2.30}, {1.93, 2.12}, {10.64, 1.31}, 3599, 1},
    {"local_b2", "B-2", B, {27.10, 2.48}, {233.80, 25.38}, {3.33, 1.37}, {1.91, 1.24}, {8.70, 1.24}, 3600, 0},
    {"local_b3", "B-3", B, {28.83, 2.34}, {248.28, 26.30}, {3.67, 1.21}, {2.50, 1.08}, {8.69, 1.21}, 3600, 0},
    {"local_b4", "B-4", B, {25.76, 2.09}, {260.65, 27.24}, {2.22, 0.59}, {1.21, 0.25}, {10.14, 1.03}, 3598, 2},
    {"local_b5", "B-5", B, {26.98, 2.65}, {281.10, 29.48}, {3.81, 6.53}, {2.57, 5.81}, {10.50, 1.35}, 3600, 0},
    {"local_b6", "B-6", B, {29.82, 1.77}, {287.94, 22.08}, {2.07, 0.19}, {0.99, 0.10}, {9.67, 0.73}, 3600, 0},
    {"local_b7", "B-7", B, {29.40, 1.72}, {319.90, 17.18}, {2.02, 0.28}, {0.96, 0.10}, {10.91, 0.82}, 3600, 0},
    {"local_b8", "B-8", B, {29.05, 2.37}, {263.98, 36.02}, {3.38, 0.54}, {1.88, 0.38}, {9.10, 1.17}, 3600, 0},
    {"local_b9", "B-9", B, {29.83, 2.41}, {254.56, 23.76}, {3.74, 1.99}, {2.77, 1.80}, {8.58, 1.04}, 3598, 2},
    {"local_b10", "B-10", B, {27.24, 2.09}, {264.66, 22.47}, {2.60, 0.33}, {1.32, 0.22}, {9.77, 1.13}, 3599, 1},
    {"local_c1", "C-1", C, {20.64, 2.51}, {123.48, 40.75}, {22.38, 38.18}, {21.11, 38.78}, {6.08, 2.09}, 3521, 79},
    {"local_c2", "C-2", C, {21.55, 2.05}, {172.95, 19.91}, {2.89, 0.81}, {1.42, 0.44}, {8.05, 0.85}, 3600, 0},
    {"local_c3", "C-3", C, {21.95, 3.30}, {118.43, 19.26}, {16.79, 26.99}, {15.20, 27.52}, {5.51, 1.16}, 3599, 1},
    {"local_c4", "C-4", C, {26.78, 2.63}, {122.69, 17.26}, {14.81, 24.69}, {13.70, 25.12}, {4.63, 0.85}, 3600, 0},
    {"local_c5", "C-5", C, {21.76, 2.44}, {102.60, 28.37}, {51.59, 47.25}, {51.51, 49.34}, {4.73, 1.30}, 3600, 0},
    {"local_c6", "C-6", C, {25.69, 2.13}, {159.13, 17.66}, {4.80, 4.72}, {3.93, 4.66}, {6.23, 0.86}, 3592, 8},
    {"local_c7", "C-7", C, {16.93, 1.71}, {157.17, 22.45}, {6.70, 7.67}, {5.67, 3.61}, {6.27, 1.11}, 3600, 0},
    {"local_c8", "C-8", C, {25.45, 3.31}, {149.53, 30.73}, {13.90, 25.26}, {12.12, 25.78}, {6.02, 1.49}, 3600, 0},
    {"local_c9", "C-9", C, {22.18, 2.22}, {140.96, 18.66}, {5.19, 9.42}, {3.91, 9.32}, {6.39, 0.92}, 3600, 0},
    {"local_c10", "C-10", C, {23.91, 2.29}, {174.32, 25.48}, {8.96, 19.41}, {7.58, 19.64}, {7.35, 1.24}, 3600, 0},
    {"local_d1", "D-1", D, {21.87, 3.15}, {45.66, 27.12}, {99.99, 0.0}, {99.99, 0.0}, {2.07, 1.17}, 2965, 635},
    {"local_d2", "D-2", D, {20.84, 6.47}, {21.77, 7.44}, {99.99, 0.0}, {99.99, 0.0}, {1.05, 0.22}, 435, 3165},
    {"local_d3", "D-3", D, {21.39, 3.01}, {84.30, 27.47}, {54.27, 46.48}, {52.70, 47.65}, {4.04, 1.41}, 3600, 0},
    {"local_d4", "D-4", D, {23.73, 2.69}, {65.70, 36.13}, {99.99, 0.0}, {99.99, 0.0}, {2.79, 1.54}, 3377, 223},
    {"local_d5", "D-5", D, {22.54, 2.64}, {73.93, 48.63}, {99.99, 0.0}, {99.99, 0.0}, {3.25, 2.04}, 3354, 246},
    {"local_d6", "D-6", D, {19.95, 4.23}, {35.67, 18.43}, {99.99, 0.0}, {99.99, 0.0}, {1.80, 0.91}, 2850, 750},
    {"local_d7", "D-7", D, {19.85, 5.69}, {70.79, 93.16}, {80.12, 39.10}, {79.91, 39.51}, {2.93, 3.09}, 2288, 712},
    {"local_d8", "D-8", D, {19.78, 4.53}, {27.37, 22.01}, {99.99, 0.0}, {99.99, 0.0}, {1.37, 0.76}, 2058, 1542},
    {"local_d9", "D-9", D, {19.41, 5.89}, {21.75, 9.40}, {99.99, 0.0}, {99.99, 0.0}, {1.12, 0.37}, 612, 2988},
    {"local_d10", "D-10", D, {18.82, 4.38}, {25.88, 13.61}, {99.99, 0.0}, {99.99, 0.0}, {1.36, 0.63}, 1913, 1687},
}};

}  // namespace

const std::array<SiteStatistics, kSiteCount>& site_table() noexcept { return kSites; }

std::optional<SiteStatistics> find_site(std::string_view name) noexcept {
  for (const auto& s : kSites) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

epoch::EpochMetrics site_mean_metrics(const SiteStatistics& s) {
  epoch::EpochMetrics m;
  m.cn0_sum = s.cn0_sum.mean;
  m.cn0_mean = s.cn0_mean.mean;
  m.pdop = s.pdop.mean;
  m.hdop = s.hdop.mean;
  m.satellite_count = classify::round_half_up_count(s.satellites.mean);
  m.has_measurement = m.satellite_count > 0;
  return m;
}

}  // namespace nmeascene::sites
