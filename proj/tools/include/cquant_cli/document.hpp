#pragma once

/**
 * @file document.hpp
 * @brief JSON region documents.
 *
 * Every number is an exact rational string ("3", "-1/2"). Keys are emitted
 * in sorted order, so identical inputs give byte-identical documents.
 */

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cquant/quantile.hpp"

namespace cquant::cli {

struct DocumentInput {
  std::size_t n = 0;
  std::size_t d = 0;
  Rational p;
  /// Level requested on the command line when --nudge changed it.
  std::optional<Rational> requested_p;
  /// Generators and interior point for cone regions; empty for Tukey regions.
  std::optional<Matrix> cone;
  std::optional<Vector> interior;
};

nlohmann::json region_document(const QuantileRegion& region, const DocumentInput& input);

/// Halfspaces listed in a document.
std::vector<Halfspace> document_halfspaces(const nlohmann::json& doc);
/// Polyhedron from the document's vertices/rays/lines.
Polyhedron document_polyhedron(const nlohmann::json& doc);

/// Vertices of a bounded planar region in counter-clockwise order, one
/// "x,y" decimal line each.
std::string plot_cycle(const Polyhedron& region, int digits = 10);

}  // namespace cquant::cli
