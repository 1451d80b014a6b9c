#include "braidfgl/kz/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "braidfgl/error.hpp"

namespace braidfgl::kz {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return Rational(j.get<double>());
  throw ParseError("expected a rational (string \"p/q\" or number), got " + j.dump());
}

template <class F>
auto with_json_errors(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string pair_key(PairIndex p) { return std::to_string(p.i) + "," + std::to_string(p.j); }

PairIndex parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("pair key '" + key + "' is not of the form i,j");
  try {
    std::size_t used_i = 0, used_j = 0;
    const int i = std::stoi(key.substr(0, comma), &used_i);
    const int j = std::stoi(key.substr(comma + 1), &used_j);
    if (used_i != comma || used_j != key.size() - comma - 1 || i == j) throw std::invalid_argument(key);
    return PairIndex(i, j);
  } catch (const std::logic_error&) {
    throw ParseError("pair key '" + key + "' is not of the form i,j");
  }
}

}  // namespace

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  return with_json_errors("matrix JSON", [&] {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("matrix rows must be arrays");
      std::vector<Rational> values;
      for (const auto& e : row) values.push_back(rational_from_json(e));
      rows.push_back(std::move(values));
    }
    return RationalMatrix(rows);
  });
}

json to_json(const InfinitesimalSystem& sys) {
  json a = json::object();
  for (const auto& [pair, m] : sys.matrices()) a[pair_key(pair)] = to_json(m);
  return {{"n", sys.points()}, {"dim", sys.dim()}, {"A", a}};
}

InfinitesimalSystem system_from_json(const json& j) {
  return with_json_errors("system JSON", [&] {
    const int n = j.at("n").get<int>();
    const auto d = j.at("dim").get<std::size_t>();
    std::map<PairIndex, RationalMatrix> matrices;
    for (const auto& [key, value] : j.at("A").items()) {
      const PairIndex p = parse_pair_key(key);
      if (!matrices.emplace(p, matrix_from_json(value)).second) {
        throw ParseError("duplicate matrix for pair " + key);
      }
    }
    return InfinitesimalSystem(n, d, std::move(matrices));
  });
}

json to_json(const RelationReport& r) {
  json commuting = json::array();
  for (const auto& v : r.commuting) {
    commuting.push_back({{"pairs", {{v.first.i, v.first.j}, {v.second.i, v.second.j}}},
                         {"residual", to_string(v.residual)}});
  }
  auto triples = [](const std::vector<TripleViolation>& list) {
    json out = json::array();
    for (const auto& v : list) {
      out.push_back({{"triple", {v.i, v.j, v.k}}, {"residual", to_string(v.residual)}});
    }
    return out;
  };
  return {{"satisfied", r.empty()},
          {"flat", r.flat()},
          {"commuting_violations", commuting},
          {"triangle_violations", triples(r.triangle)},
          {"flatness_violations", triples(r.flatness)},
          {"max_residual", to_string(r.max_residual)}};
}

json to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from_json(const json& j) {
  return with_json_errors("complex JSON", [&] {
    return std::complex<double>(j.at("re").get<double>(), j.at("im").get<double>());
  });
}

json to_json(const HolonomyResult& r) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < r.matrix.cols(); ++k) row.push_back(to_json(r.matrix(i, k)));
    rows.push_back(row);
  }
  return {{"matrix", rows}, {"steps", r.step_count}, {"error_estimate", r.error_estimate}};
}

ConfigurationPoint configuration_point_from_json(const json& j) {
  return with_json_errors("configuration JSON", [&] {
    std::vector<ComplexRational> z;
    for (const auto& c : j) z.push_back({rational_from_json(c.at("re")), rational_from_json(c.at("im"))});
    return ConfigurationPoint(std::move(z));
  });
}

std::vector<RationalMatrix> rho_from_json(const json& j, int points) {
  return with_json_errors("rho JSON", [&] {
    std::vector<RationalMatrix> rho;
    if (j.is_array()) {
      for (const auto& m : j) rho.push_back(matrix_from_json(m));
      return rho;
    }
    for (int k = 1; k < points; ++k) rho.push_back(matrix_from_json(j.at(std::to_string(k))));
    if (j.size() != static_cast<std::size_t>(points - 1)) {
      throw ParseError("rho has entries beyond the adjacent transpositions 1.." + std::to_string(points - 1));
    }
    return rho;
  });
}

std::vector<Configuration> polyline_from_json(const json& j) {
  return with_json_errors("polyline JSON", [&] {
    std::vector<Configuration> vertices;
    for (const auto& v : j) {
      Configuration z;
      for (const auto& c : v) z.push_back(complex_from_json(c));
      vertices.push_back(std::move(z));
    }
    return vertices;
  });
}

LoopPath parse_loop_spec(std::string_view spec, int points) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("loop spec '" + std::string(spec) + "' lacks a kind");
  const std::string kind(spec.substr(0, colon));
  const std::string args(spec.substr(colon + 1));

  auto split = [&](std::size_t expected) {
    std::vector<std::string> parts;
    std::stringstream ss(args);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != expected) {
      throw ParseError("loop spec '" + std::string(spec) + "' expects " + std::to_string(expected) +
                       " comma-separated arguments");
    }
    return parts;
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("loop spec: '" + s + "' is not an integer");
    }
  };
  auto to_double = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("loop spec: '" + s + "' is not a number");
    }
  };

  if (kind == "circle") {
    const auto p = split(3);
    return LoopPath::circle(points, to_int(p[0]), to_int(p[1]), to_double(p[2]));
  }
  if (kind == "offset") {
    const auto p = split(2);
    return LoopPath::offset_circle(points, to_int(p[0]), to_double(p[1]));
  }
  if (kind == "polyline") {
    if (args.empty() || args.front() != '@') throw ParseError("polyline loop spec must be polyline:@file");
    const std::string path = args.substr(1);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polyline file '" + path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError("polyline file '" + path + "': " + e.what());
    }
    return LoopPath::polyline(polyline_from_json(j));
  }
  throw ParseError("unknown loop kind '" + kind + "' (expected circle, offset or polyline)");
}

}  // namespace braidfgl::kz
