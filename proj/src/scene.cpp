#include "radcal/scene.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace radcal {

const char* region_label_name(RegionLabel label) {
  switch (label) {
    case RegionLabel::black_target: return "black_target";
    case RegionLabel::gray_target: return "gray_target";
    case RegionLabel::white_target: return "white_target";
    case RegionLabel::crp: return "crp";
    case RegionLabel::canopy: return "canopy";
    case RegionLabel::soil: return "soil";
  }
  return "unknown";
}

RegionLabel region_label_from_name(const std::string& name) {
  for (RegionLabel l : kAllRegionLabels)
    if (name == region_label_name(l)) return l;
  raise(ErrorCode::SchemaViolation, "unknown region label '" + name + "'");
}

BandRatios uniform_ratios(double value) {
  BandRatios r;
  r.fill(value);
  return r;
}

std::optional<Rect> ReflectanceScene::region_rect(RegionLabel label) const {
  for (const SceneRegion& region : regions)
    if (region.label == label) return region.rect;
  return std::nullopt;
}

void validate_scene(const ReflectanceScene& scene) {
  if (scene.width <= 0 || scene.height <= 0)
    raise(ErrorCode::InvalidArgument, "scene dimensions must be positive");
  for (const SceneRegion& region : scene.regions) {
    if (!region.rect.inside(scene.width, scene.height))
      raise(ErrorCode::InvalidArgument,
            std::string("region '") + region_label_name(region.label) +
                "' exceeds scene bounds");
    for (double rho : region.reflectance)
      if (rho < 0.0 || rho > 1.0)
        raise(ErrorCode::InvalidArgument, "region reflectance must lie in [0, 1]");
  }
  for (std::size_t i = 0; i < scene.regions.size(); ++i)
    for (std::size_t j = i + 1; j < scene.regions.size(); ++j) {
      const Rect& a = scene.regions[i].rect;
      const Rect& b = scene.regions[j].rect;
      const bool overlap = a.x < b.x + b.width && b.x < a.x + a.width &&
                           a.y < b.y + b.height && b.y < a.y + a.height;
      if (overlap)
        raise(ErrorCode::InvalidArgument, "scene regions overlap");
    }
}

PixelGrid ReflectanceScene::rasterize(Band band) const {
  PixelGrid grid = PixelGrid::Constant(height, width, -1.0);
  for (const SceneRegion& region : regions)
    grid.block(region.rect.y, region.rect.x, region.rect.height, region.rect.width)
        .setConstant(band_ratio(region.reflectance, band));
  if ((grid < 0.0).any())
    raise(ErrorCode::UncoveredScene, "scene regions do not cover every pixel");
  return grid;
}

ReflectanceScene generate_target_scene(const TargetLayout& layout,
                                       const BandRatios& black,
                                       const BandRatios& gray,
                                       const BandRatios& white,
                                       const BandRatios& soil,
                                       const BandRatios& canopy) {
  const int ts = layout.target_size;
  const int gap = (layout.width - 3 * ts) / 4;
  const int soil_rows = layout.height - layout.canopy_rows;
  const int ty = layout.canopy_rows + (soil_rows - ts) / 2;
  if (ts <= 0 || gap <= 0 || soil_rows < ts || layout.canopy_rows < 0)
    raise(ErrorCode::LayoutOverflow, "targets do not fit the layout");

  const int x_black = gap;
  const int x_gray = 2 * gap + ts;
  const int x_white = 3 * gap + 2 * ts;

  ReflectanceScene scene;
  scene.width = layout.width;
  scene.height = layout.height;

  if (layout.canopy_rows > 0)
    scene.regions.push_back(
        {RegionLabel::canopy, Rect{0, 0, layout.width, layout.canopy_rows}, canopy});

  scene.regions.push_back({RegionLabel::black_target, Rect{x_black, ty, ts, ts}, black});
  scene.regions.push_back({RegionLabel::gray_target, Rect{x_gray, ty, ts, ts}, gray});
  scene.regions.push_back({RegionLabel::white_target, Rect{x_white, ty, ts, ts}, white});

  // Soil fills the remainder of the frame as an exact rect decomposition:
  // a strip above and below the target row, and the gaps between targets.
  auto add_soil = [&](Rect r) {
    if (r.width > 0 && r.height > 0)
      scene.regions.push_back({RegionLabel::soil, r, soil});
  };
  add_soil(Rect{0, layout.canopy_rows, layout.width, ty - layout.canopy_rows});
  add_soil(Rect{0, ty + ts, layout.width, layout.height - (ty + ts)});
  add_soil(Rect{0, ty, x_black, ts});
  add_soil(Rect{x_black + ts, ty, x_gray - (x_black + ts), ts});
  add_soil(Rect{x_gray + ts, ty, x_white - (x_gray + ts), ts});
  add_soil(Rect{x_white + ts, ty, layout.width - (x_white + ts), ts});

  validate_scene(scene);
  return scene;
}

ReflectanceScene crp_panel_scene(int size, double known_reflectance) {
  if (size <= 0)
    raise(ErrorCode::InvalidArgument, "panel size must be positive");
  ReflectanceScene scene;
  scene.width = size;
  scene.height = size;
  scene.regions.push_back(
      {RegionLabel::crp, Rect{0, 0, size, size}, uniform_ratios(known_reflectance)});
  validate_scene(scene);
  return scene;
}

ReflectanceScene generate_plot_grid_scene(const PlotGridSpec& grid,
                                          const std::vector<BandRatios>& plot_reflectance,
                                          const BandRatios& soil) {
  if (grid.rows <= 0 || grid.cols <= 0 || grid.plot_px <= 0 || grid.gap_px < 0)
    raise(ErrorCode::InvalidArgument, "plot grid extents must be positive");
  if (plot_reflectance.size() !=
      static_cast<std::size_t>(grid.rows) * static_cast<std::size_t>(grid.cols))
    raise(ErrorCode::InvalidArgument, "plot grid needs rows * cols reflectance entries");

  const int pitch = grid.plot_px + grid.gap_px;
  ReflectanceScene scene;
  scene.width = grid.gap_px + grid.cols * pitch;
  scene.height = grid.gap_px + grid.rows * pitch;

  auto add_soil = [&](Rect r) {
    if (r.width > 0 && r.height > 0)
      scene.regions.push_back({RegionLabel::soil, r, soil});
  };

  int y = 0;
  for (int row = 0; row < grid.rows; ++row) {
    const int plot_y = grid.gap_px + row * pitch;
    add_soil(Rect{0, y, scene.width, plot_y - y});  // strip above this row
    for (int col = 0; col < grid.cols; ++col) {
      const int plot_x = grid.gap_px + col * pitch;
      add_soil(Rect{plot_x - grid.gap_px, plot_y, grid.gap_px, grid.plot_px});
      scene.regions.push_back(
          {RegionLabel::canopy, Rect{plot_x, plot_y, grid.plot_px, grid.plot_px},
           plot_reflectance[static_cast<std::size_t>(row) * grid.cols + col]});
    }
    add_soil(Rect{scene.width - grid.gap_px, plot_y, grid.gap_px, grid.plot_px});
    y = plot_y + grid.plot_px;
  }
  add_soil(Rect{0, y, scene.width, scene.height - y});

  validate_scene(scene);
  return scene;
}

ObjectCategory scene_category(const ReflectanceScene& scene) {
  bool has_target = false;
  std::map<RegionLabel, long> area;
  for (const SceneRegion& region : scene.regions) {
    area[region.label] += static_cast<long>(region.rect.width) * region.rect.height;
    if (region.label == RegionLabel::black_target ||
        region.label == RegionLabel::gray_target ||
        region.label == RegionLabel::white_target)
      has_target = true;
  }
  if (has_target) return ObjectCategory::targets;
  if (area.count(RegionLabel::crp)) return ObjectCategory::crp;
  const long canopy = area.count(RegionLabel::canopy) ? area[RegionLabel::canopy] : 0;
  const long soil = area.count(RegionLabel::soil) ? area[RegionLabel::soil] : 0;
  if (canopy == 0 && soil == 0) return ObjectCategory::mixed;
  return canopy >= soil ? ObjectCategory::canopy : ObjectCategory::soil;
}

}  // namespace radcal
