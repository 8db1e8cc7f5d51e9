// Ground-truth reflectance scenes: labeled rectangular regions with per-band
// reflectance, rasterizable to a dense per-pixel reflectance grid.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "radcal/types.hpp"

namespace radcal {

enum class RegionLabel { black_target, gray_target, white_target, crp, canopy, soil };

constexpr std::array<RegionLabel, 6> kAllRegionLabels = {
    RegionLabel::black_target, RegionLabel::gray_target, RegionLabel::white_target,
    RegionLabel::crp,          RegionLabel::canopy,      RegionLabel::soil};

const char* region_label_name(RegionLabel label);
RegionLabel region_label_from_name(const std::string& name);

// Per-band reflectance ratios, indexed by Band.
using BandRatios = std::array<double, 5>;

inline double band_ratio(const BandRatios& r, Band b) {
  return r[static_cast<std::size_t>(b)];
}

// Same ratio in every band.
BandRatios uniform_ratios(double value);

struct SceneRegion {
  RegionLabel label = RegionLabel::soil;
  Rect rect;
  BandRatios reflectance = {};
};

struct ReflectanceScene {
  int width = 0;
  int height = 0;
  std::vector<SceneRegion> regions;

  // First region with the given label, if any.
  std::optional<Rect> region_rect(RegionLabel label) const;

  // Per-pixel reflectance for one band. Throws UncoveredScene when any pixel
  // is not covered by a region.
  PixelGrid rasterize(Band band) const;
};

// Checks bounds, reflectance range [0, 1], and pairwise non-overlap.
void validate_scene(const ReflectanceScene& scene);

// Geometry for the synthetic three-target scene: a canopy strip across the
// top, soil below, and black/gray/white target squares evenly spaced inside
// the soil area.
struct TargetLayout {
  int width = 128;
  int height = 96;
  int target_size = 24;
  int canopy_rows = 36;
};

// Builds a fully covered scene (every pixel belongs to exactly one region).
// Throws LayoutOverflow when the targets do not fit the layout.
ReflectanceScene generate_target_scene(const TargetLayout& layout,
                                       const BandRatios& black,
                                       const BandRatios& gray,
                                       const BandRatios& white,
                                       const BandRatios& soil,
                                       const BandRatios& canopy);

// Single full-frame panel region of the given known reflectance (all bands).
ReflectanceScene crp_panel_scene(int size, double known_reflectance);

// Regular grid of canopy plots over a soil background. The canopy regions
// appear in row-major plot order; plot_reflectance must supply rows * cols
// entries.
struct PlotGridSpec {
  int rows = 1;
  int cols = 1;
  int plot_px = 12;
  int gap_px = 4;
};

ReflectanceScene generate_plot_grid_scene(const PlotGridSpec& grid,
                                          const std::vector<BandRatios>& plot_reflectance,
                                          const BandRatios& soil);

// Dominant object category for metadata purposes.
ObjectCategory scene_category(const ReflectanceScene& scene);

}  // namespace radcal
