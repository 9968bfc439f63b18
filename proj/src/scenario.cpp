#include "mega/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mega/errors.hpp"
#include "mega/rng.hpp"

namespace mega {

namespace {

using nlohmann::json;

void check_area(const AreaSpec& area) {
  if (!(area.width > 0.0) || !(area.height > 0.0) || !std::isfinite(area.width) ||
      !std::isfinite(area.height)) {
    throw InvalidArgument("area must have positive finite width and height");
  }
}

std::string number(double v) { return json(v).dump(); }

const json& require(const json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw MalformedFile(field, "missing");
  return *it;
}

double require_positive(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_number()) throw MalformedFile(field, "expected a number");
  const double d = v.get<double>();
  if (!(d > 0.0) || !std::isfinite(d)) throw MalformedFile(field, "must be positive");
  return d;
}

}  // namespace

Scenario::Scenario(AreaSpec area, PointSet clients, int router_count, double coverage_radius,
                   std::uint64_t seed)
    : area_(area),
      clients_(std::move(clients)),
      router_count_(router_count),
      coverage_radius_(coverage_radius),
      seed_(seed) {
  check_area(area_);
  if (router_count_ < 1) throw InvalidArgument("router_count must be >= 1");
  if (!(coverage_radius_ > 0.0) || !std::isfinite(coverage_radius_))
    throw InvalidArgument("coverage_radius must be positive");
  if (clients_.cols() < 1) throw InvalidArgument("scenario needs at least one client");
  for (Eigen::Index i = 0; i < clients_.cols(); ++i) {
    if (!area_.contains(clients_.col(i)))
      throw InvalidArgument("client " + std::to_string(i) + " lies outside the area");
  }
}

Scenario generate_scenario(int n, int m, double cr, const AreaSpec& area, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (!(cr > 0.0)) throw InvalidArgument("cr must be positive");
  check_area(area);

  Rng rng(seed);
  PointSet clients(2, n);
  for (int i = 0; i < n; ++i) {
    clients(0, i) = rng.uniform(0.0, area.width);
    clients(1, i) = rng.uniform(0.0, area.height);
  }
  return Scenario(area, std::move(clients), m, cr, seed);
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "{\n"
      << "  \"version\": " << kScenarioFormatVersion << ",\n"
      << "  \"width\": " << number(s.area().width) << ",\n"
      << "  \"height\": " << number(s.area().height) << ",\n"
      << "  \"router_count\": " << s.router_count() << ",\n"
      << "  \"coverage_radius\": " << number(s.coverage_radius()) << ",\n"
      << "  \"seed\": " << s.seed() << ",\n"
      << "  \"clients\": [\n";
  const auto& c = s.clients();
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    out << "    [" << number(c(0, i)) << ", " << number(c(1, i)) << "]"
        << (i + 1 < c.cols() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFile("document", std::string("not a complete JSON document (") + e.what() + ")");
  }
  if (!doc.is_object()) throw MalformedFile("document", "expected a JSON object");

  const json& version = require(doc, "version");
  if (!version.is_number_integer() || version.get<long long>() != kScenarioFormatVersion)
    throw MalformedFile("version", "unsupported version");

  AreaSpec area{require_positive(doc, "width"), require_positive(doc, "height")};

  const json& rc = require(doc, "router_count");
  if (!rc.is_number_integer() || rc.get<long long>() < 1 ||
      rc.get<long long>() > std::numeric_limits<int>::max())
    throw MalformedFile("router_count", "expected a positive integer");

  const double cr = require_positive(doc, "coverage_radius");

  const json& seed = require(doc, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    throw MalformedFile("seed", "expected an unsigned integer");

  const json& clients = require(doc, "clients");
  if (!clients.is_array() || clients.empty())
    throw MalformedFile("clients", "expected a non-empty array");
  PointSet pts(2, static_cast<Eigen::Index>(clients.size()));
  for (std::size_t i = 0; i < clients.size(); ++i) {
    const std::string field = "clients[" + std::to_string(i) + "]";
    const json& c = clients[i];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
      throw MalformedFile(field, "expected [x, y]");
    Point p(c[0].get<double>(), c[1].get<double>());
    if (!area.contains(p)) throw MalformedFile(field, "point lies outside the area");
    pts.col(static_cast<Eigen::Index>(i)) = p;
  }

  return Scenario(area, std::move(pts), rc.get<int>(), cr, seed.get<std::uint64_t>());
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << serialize_scenario(s);
  if (!out) throw IoError("failed writing " + path.string());
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace mega
