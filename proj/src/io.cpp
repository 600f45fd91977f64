#include "diskscale/io.hpp"

#include "diskscale/geometry.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace diskscale {

using nlohmann::json;

namespace {

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path + ": expected a number");
  return j.get<double>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("<root>: expected an object");
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known{"problem", "alpha", "k", "mu", "points", "planted"};
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError(key + ": unknown field");
  }
  auto need = [&](const char* key) -> const json& {
    if (!doc.contains(key)) throw ParseError(std::string(key) + ": missing");
    return doc.at(key);
  };
  const json& pj = need("problem");
  if (!pj.is_string()) throw ParseError("problem: expected a string");
  const auto problem = problem_from_name(pj.get<std::string>());
  if (!problem) throw ParseError("problem: unknown value '" + pj.get<std::string>() + "'");
  const double alpha = number(need("alpha"), "alpha");
  const json& kj = need("k");
  if (!kj.is_number_integer()) throw ParseError("k: expected an integer");
  std::optional<double> mu;
  if (doc.contains("mu") && !doc.at("mu").is_null()) mu = number(doc.at("mu"), "mu");

  const json& ps = need("points");
  if (!ps.is_array()) throw ParseError("points: expected an array");
  std::vector<Point> points;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    if (!ps[i].is_array() || ps[i].size() != 2) throw ParseError(path + ": expected [x, y]");
    points.emplace_back(number(ps[i][0], path + "[0]"), number(ps[i][1], path + "[1]"));
  }
  Instance inst;
  try {
    inst = make_instance(std::move(points), *problem, alpha, kj.get<int>(), mu);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (doc.contains("planted")) {
    const json& pl = doc.at("planted");
    if (!pl.is_object() || !pl.contains("count") || !pl.at("count").is_number_integer() || !pl.contains("cost")) {
      throw ParseError("planted: expected {count: integer, cost: number}");
    }
    inst.planted = PlantedOptimum{pl.at("count").get<int>(), number(pl.at("cost"), "planted.cost")};
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "{\n  \"problem\": \"" << problem_name(inst.problem) << "\",\n";
  out << "  \"alpha\": " << real(inst.alpha) << ",\n";
  out << "  \"k\": " << inst.k << ",\n";
  if (inst.mu) out << "  \"mu\": " << real(*inst.mu) << ",\n";
  out << "  \"points\": [";
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << "[" << real(inst.points[i].x()) << ", " << real(inst.points[i].y()) << "]";
  }
  out << (inst.points.empty() ? "]" : "\n  ]");
  if (inst.planted) out << ",\n  \"planted\": {\"count\": " << inst.planted->count << ", \"cost\": " << real(inst.planted->cost) << "}";
  out << "\n}\n";
  return out.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string serialize_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "{\n  \"answer\": \"" << answer_name(v.answer) << "\"";
  if (v.witness) {
    out << ",\n  \"count\": " << v.witness->shrunk.size();
    out << ",\n  \"cost\": " << real(cost(*v.witness));
    out << ",\n  \"shrunk\": [";
    for (std::size_t i = 0; i < v.witness->shrunk.size(); ++i) out << (i ? ", " : "") << v.witness->shrunk[i];
    out << "],\n  \"radii\": [";
    for (std::size_t i = 0; i < v.witness->radii.size(); ++i) out << (i ? ", " : "") << real(v.witness->radii[i]);
    out << "]";
  }
  out << ",\n  \"note\": " << json(v.note).dump() << "\n}\n";
  return out.str();
}

Solution parse_verdict_witness(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("radii") || !doc.contains("shrunk")) throw ParseError("<root>: no witness");
  Solution s;
  for (std::size_t i = 0; i < doc.at("shrunk").size(); ++i) {
    const json& x = doc.at("shrunk")[i];
    if (!x.is_number_integer()) throw ParseError("shrunk[" + std::to_string(i) + "]: expected an integer");
    s.shrunk.push_back(x.get<int>());
  }
  for (std::size_t i = 0; i < doc.at("radii").size(); ++i) {
    s.radii.push_back(number(doc.at("radii")[i], "radii[" + std::to_string(i) + "]"));
  }
  return s;
}

namespace {

// Uniform integer in [0, m] via modulo; slight bias is fine and keeps results
// identical across standard libraries.
long long draw(std::mt19937_64& rng, long long m) { return static_cast<long long>(rng() % static_cast<std::uint64_t>(m + 1)); }

double snap(double x) { return static_cast<double>(std::llround(x * 1e9)) / 1e9; }

}  // namespace

Instance generate(const GenerateParams& p) {
  if (p.n < 0) throw std::invalid_argument("n: must be non-negative");
  std::mt19937_64 rng(p.seed);
  std::vector<Point> pts;
  std::optional<PlantedOptimum> planted;
  std::optional<double> mu = p.mu;
  if (p.kind == "random") {
    if (!(p.box > 0)) throw std::invalid_argument("box: must be positive");
    const long long span = std::llround(p.box * 100);
    for (int i = 0; i < p.n; ++i) pts.emplace_back(draw(rng, span) / 100.0, draw(rng, span) / 100.0);
  } else if (p.kind == "path") {
    for (int i = 0; i < p.n; ++i) pts.emplace_back(snap(p.spacing * i), 0.0);
  } else if (p.kind == "cycle") {
    if (p.n < 3) throw std::invalid_argument("n: a cycle needs at least 3 points");
    const double pi = std::acos(-1.0);
    const double radius = p.spacing / (2.0 * std::sin(pi / p.n));
    for (int i = 0; i < p.n; ++i) {
      const double t = 2.0 * pi * i / p.n;
      pts.emplace_back(snap(radius * std::cos(t)), snap(radius * std::sin(t)));
    }
  } else if (p.kind == "grid-cluster") {
    if (p.clusters < 1) throw std::invalid_argument("clusters: must be positive");
    const int cols = static_cast<int>(std::ceil(std::sqrt(p.clusters)));
    for (int i = 0; i < p.n; ++i) {
      const int c = i % p.clusters;
      pts.emplace_back(snap(p.spacing * (c % cols)) + draw(rng, 60) / 100.0, snap(p.spacing * (c / cols)) + draw(rng, 60) / 100.0);
    }
  } else if (p.kind == "planted") {
    if (!is_independence(p.problem) && !is_acyclicity(p.problem)) {
      throw std::invalid_argument("planted: only independence and acyclicity problems");
    }
    if (p.alpha > 0.8) throw std::invalid_argument("alpha: planted gadgets need alpha <= 0.8");
    // Gadgets 10 apart on a row; filler points isolated on a second row.
    for (int g = 0; g < p.k; ++g) {
      const double x = 10.0 * g + draw(rng, 300) / 100.0;
      pts.emplace_back(x, 0.0);
      pts.emplace_back(x + 1.8, 0.0);
      if (is_acyclicity(p.problem)) pts.emplace_back(snap(x + 0.9), snap(1.8 * std::sqrt(3.0) / 2.0));
    }
    for (int i = static_cast<int>(pts.size()); i < p.n; ++i) pts.emplace_back(3.0 * i, 20.0 + draw(rng, 100) / 100.0);
    // Shrinking one endpoint to 0.8 clears each gadget; nothing cheaper works.
    const double c = is_min_variant(p.problem) ? 0.2 * p.k : (1.0 - p.alpha) * p.k;
    planted = PlantedOptimum{p.k, c};
    if (is_min_variant(p.problem) && !mu) mu = 0.2 * p.k;
  } else {
    throw std::invalid_argument("kind: unknown generator '" + p.kind + "'");
  }
  if (is_min_variant(p.problem) && !mu) mu = 1.0;
  Instance inst = make_instance(std::move(pts), p.problem, p.alpha, p.k, mu);
  inst.planted = planted;
  return inst;
}

std::string render_svg(const Instance& inst, const Solution* sol) {
  const double scale = 40.0;
  double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
  if (!inst.points.empty()) {
    lo_x = hi_x = inst.points[0].x();
    lo_y = hi_y = inst.points[0].y();
  }
  std::vector<double> radii = sol ? sol->radii : std::vector<double>(inst.points.size(), 1.0);
  const double reach = std::max(1.0, radii.empty() ? 1.0 : *std::max_element(radii.begin(), radii.end()));
  for (const auto& q : inst.points) {
    lo_x = std::min(lo_x, q.x());
    hi_x = std::max(hi_x, q.x());
    lo_y = std::min(lo_y, q.y());
    hi_y = std::max(hi_y, q.y());
  }
  lo_x -= reach + 0.5;
  lo_y -= reach + 0.5;
  hi_x += reach + 0.5;
  hi_y += reach + 0.5;
  auto sx = [&](double x) { return real((x - lo_x) * scale); };
  auto sy = [&](double y) { return real((hi_y - y) * scale); };  // y up

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << real((hi_x - lo_x) * scale)
      << "\" height=\"" << real((hi_y - lo_y) * scale) << "\">\n";
  out << "<g id=\"unit\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\">\n";
  for (const auto& q : inst.points) out << "  <circle cx=\"" << sx(q.x()) << "\" cy=\"" << sy(q.y()) << "\" r=\"" << real(scale) << "\"/>\n";
  out << "</g>\n<g id=\"scaled\" fill=\"none\" stroke=\"#c33\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const auto& q = inst.points[i];
    out << "  <circle cx=\"" << sx(q.x()) << "\" cy=\"" << sy(q.y()) << "\" r=\"" << real(radii[i] * scale) << "\"/>\n";
  }
  out << "</g>\n<g id=\"edges\" stroke=\"#226\" stroke-width=\"1\">\n";
  const DiskGraph g = build_disk_graph(inst.points, radii, inst.model);
  for (const auto& e : g.edges()) {
    const auto& a = inst.points[static_cast<std::size_t>(e.u)];
    const auto& b = inst.points[static_cast<std::size_t>(e.v)];
    out << "  <line x1=\"" << sx(a.x()) << "\" y1=\"" << sy(a.y()) << "\" x2=\"" << sx(b.x()) << "\" y2=\"" << sy(b.y()) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace diskscale
