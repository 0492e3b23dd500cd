#include "gridcover/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

std::string axis_str(const std::vector<Rat>& axis) {
  std::string s;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (i) s += ',';
    s += rat_str(axis[i]);
  }
  return s;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot read " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
  return f;
}

}  // namespace

std::string grid_hash(const Grid& g) {
  std::string data = "s1=" + axis_str(g.s1()) + ";s2=" + axis_str(g.s2());
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json grid_to_json(const Grid& g) {
  nlohmann::json j;
  for (const Rat& v : g.s1()) j["s1"].push_back(rat_str(v));
  for (const Rat& v : g.s2()) j["s2"].push_back(rat_str(v));
  return j;
}

Grid grid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("s1") || !j.contains("s2"))
    throw Error(ErrorKind::IoError, "grid json needs s1 and s2 arrays");
  std::vector<Rat> s1, s2;
  for (const auto& v : j.at("s1")) s1.push_back(parse_rat(v.get<std::string>()));
  for (const auto& v : j.at("s2")) s2.push_back(parse_rat(v.get<std::string>()));
  return Grid(std::move(s1), std::move(s2));
}

Grid load_grid(const std::string& path) {
  auto f = open_in(path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoError, std::string("bad grid json: ") + e.what());
  }
  return grid_from_json(j);
}

void save_grid(const Grid& g, const std::string& path) {
  auto f = open_out(path);
  f << grid_to_json(g).dump(2) << '\n';
}

std::string line_str(const Line& ln) {
  return rat_str(ln.a) + ";" + rat_str(ln.b);
}

Line parse_line(const std::string& s) {
  auto sep = s.find(';');
  if (sep == std::string::npos)
    throw Error(ErrorKind::IoError, "line literal needs 'a;b': " + s);
  return Line{parse_rat(s.substr(0, sep)), parse_rat(s.substr(sep + 1))};
}

void save_cover(const Cover& c, const Grid& g, const std::string& path) {
  auto f = open_out(path);
  f << "# grid=" << grid_hash(g) << " k=" << c.k << "\n";
  for (const auto& [ln, mult] : c.entries)
    f << line_str(ln) << " x " << mult << "\n";
}

Cover load_cover(const std::string& path, const Grid* expect) {
  auto f = open_in(path);
  Cover c;
  bool header_seen = false;
  std::string raw;
  while (std::getline(f, raw)) {
    if (raw.empty()) continue;
    if (raw[0] == '#') {
      std::string hash;
      long k = 0;
      auto gpos = raw.find("grid=");
      auto kpos = raw.find("k=");
      if (gpos == std::string::npos || kpos == std::string::npos)
        throw Error(ErrorKind::IoError, "malformed cover header: " + raw);
      hash = raw.substr(gpos + 5, raw.find(' ', gpos + 5) - gpos - 5);
      k = std::stol(raw.substr(kpos + 2));
      if (k < 1) throw Error(ErrorKind::IoError, "cover header k < 1");
      c.k = k;
      if (expect && hash != grid_hash(*expect))
        throw Error(ErrorKind::IoError,
                    "cover was written for a different grid");
      header_seen = true;
      continue;
    }
    auto xpos = raw.find(" x ");
    if (xpos == std::string::npos)
      throw Error(ErrorKind::IoError, "malformed cover entry: " + raw);
    Line ln = parse_line(raw.substr(0, xpos));
    long mult = std::stol(raw.substr(xpos + 3));
    if (mult < 1)
      throw Error(ErrorKind::IoError, "cover entry multiplicity < 1");
    c.entries[ln] += mult;
  }
  if (!header_seen)
    throw Error(ErrorKind::IoError, "cover file lacks its header");
  return c;
}

nlohmann::json weighting_to_json(const Grid& g, const Weighting& wt) {
  const auto& pts = g.nonzero_points();
  if (wt.w.size() != pts.size())
    throw Error(ErrorKind::DimensionMismatch, "weighting size vs grid");
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (std::size_t i = 0; i < pts.size(); ++i)
    j["points"].push_back({{"x", rat_str(pts[i].x)},
                           {"y", rat_str(pts[i].y)},
                           {"w", rat_str(wt.w[i])}});
  j["total"] = rat_str(wt.total);
  return j;
}

void save_weighting(const Grid& g, const Weighting& wt,
                    const std::string& path) {
  auto f = open_out(path);
  f << weighting_to_json(g, wt).dump(2) << '\n';
}

}  // namespace gridcover
