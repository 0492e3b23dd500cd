#pragma once

#include <string>

#include <json.hpp>

#include "gridcover/certificates.hpp"
#include "gridcover/cover.hpp"

namespace gridcover {

// FNV-1a over the canonical axis serialization; 16 hex digits. Stable across
// platforms, used to pair cover files with the grid they were made for.
std::string grid_hash(const Grid& g);

// {"s1": ["0", "1", "5/2"], "s2": [...]} with exact rational strings.
nlohmann::json grid_to_json(const Grid& g);
Grid grid_from_json(const nlohmann::json& j);
Grid load_grid(const std::string& path);
void save_grid(const Grid& g, const std::string& path);

// "a;b" with exact rational halves.
std::string line_str(const Line& ln);
Line parse_line(const std::string& s);

// Text format: a comment header carrying grid hash and k, then one
// "<a>;<b> x <mult>" entry per line of the cover.
void save_cover(const Cover& c, const Grid& g, const std::string& path);
// expect, when given, validates the stored hash against that grid.
Cover load_cover(const std::string& path, const Grid* expect = nullptr);

// {"points": [{"x":.., "y": .., "w": ..}, ...], "total": ..} over all
// nonzero grid points in index order.
nlohmann::json weighting_to_json(const Grid& g, const Weighting& wt);
void save_weighting(const Grid& g, const Weighting& wt,
                    const std::string& path);

}  // namespace gridcover
