#include "mumford/dot.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mumford {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hull_dot(const HullTree& h) {
  std::ostringstream os;
  os << "graph hull {\n  node [shape=ellipse];\n";
  const auto& nodes = h.nodes;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  v" << i << " [label=" << quoted(nodes[i].str()) << (i == 0 ? ", style=bold" : "") << "];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const std::int64_t d = distance(nodes[i], nodes[j]);
      bool direct = d > 0;
      for (std::size_t k = 0; direct && k < nodes.size(); ++k)
        if (k != i && k != j && distance(nodes[i], nodes[k]) + distance(nodes[k], nodes[j]) == d) direct = false;
      if (direct) os << "  v" << i << " -- v" << j << " [label=" << d << "];\n";
    }
  for (std::size_t k = 0; k < h.points.size(); ++k) {
    const End& z = h.points[k];
    std::size_t best = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const bool better = z.is_infinite() ? nodes[i].level < nodes[best].level
                                          : nodes[i].contains(z.value()) &&
                                                (!nodes[best].contains(z.value()) || nodes[i].level > nodes[best].level);
      if (better) best = i;
    }
    os << "  a" << k << " [shape=plaintext, label=" << quoted("a" + std::to_string(k + 1) + " = " + z.str())
       << "];\n  v" << best << " -- a" << k << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

std::string scan_dot(const GeodesicScan& scan) {
  std::vector<std::int64_t> pos = scan.fixed_by_first;
  pos.insert(pos.end(), scan.fixed_by_second.begin(), scan.fixed_by_second.end());
  std::sort(pos.begin(), pos.end());
  std::ostringstream os;
  os << "graph geodesic {\n  rankdir=LR;\n";
  if (pos.empty()) return os.str() + "}\n";
  auto has = [](const std::vector<std::int64_t>& v, std::int64_t s) { return std::find(v.begin(), v.end(), s) != v.end(); };
  const std::int64_t lo = pos.front(), hi = pos.back();
  for (std::int64_t s = lo; s <= hi; ++s) {
    const bool f1 = has(scan.fixed_by_first, s), f2 = has(scan.fixed_by_second, s);
    const char* color = f1 && f2 ? "purple" : f1 ? "red" : f2 ? "blue" : "black";
    os << "  s" << (s < 0 ? "m" : "") << std::llabs(s) << " [label=\"" << s << "\", color=" << color << "];\n";
  }
  for (std::int64_t s = lo; s < hi; ++s)
    os << "  s" << (s < 0 ? "m" : "") << std::llabs(s) << " -- s" << (s + 1 < 0 ? "m" : "") << std::llabs(s + 1) << ";\n";
  os << "  label=\"mirror distance " << scan.distance << "\";\n}\n";
  return os.str();
}

std::string pieces_dot(const std::vector<Piece>& pieces) {
  std::ostringstream os;
  os << "graph pieces {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < pieces.size(); ++i) os << "  u" << i << " [label=" << quoted(pieces[i].str()) << "];\n";
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const auto& x = pieces[i].index;
      const auto& y = pieces[j].index;
      if (x.size() != y.size()) continue;
      int steps = 0;
      bool unit = true;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == y[k]) continue;
        ++steps;
        unit = unit && std::abs(x[k] - y[k]) == 1;
      }
      if (steps == 1 && unit) os << "  u" << i << " -- u" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace mumford
