// Copyright 2026 The tspbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tspbound/tsplib_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "tspbound/error.hpp"

namespace tspbound {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class TokenStream {
 public:
  TokenStream(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  std::optional<std::string_view> next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view expect(const char* what) {
    auto tok = next();
    if (!tok || *tok == "EOF") throw DataError(fmt::format("unexpected end of input reading {}", what));
    return *tok;
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_;
};

template <typename T>
T parse_number(std::string_view tok, const char* what) {
  T value{};
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DataError(fmt::format("invalid {} '{}'", what, tok));
  }
  return value;
}

double parse_coordinate(std::string_view tok) {
  // from_chars for double is missing from older libstdc++; strtod needs a
  // terminated buffer.
  const std::string buf(tok);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw DataError(fmt::format("invalid coordinate '{}'", tok));
  }
  return value;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

Instance parse_tsplib(std::string_view text) {
  std::string name;
  std::optional<std::size_t> dimension;
  std::string weight_type;
  std::string weight_format;
  bool saw_type = false;

  std::size_t pos = 0;
  std::optional<std::string> section;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    const std::size_t colon = line.find(':');
    const std::string key = upper(trim(line.substr(0, colon)));
    const std::string_view value =
        colon == std::string_view::npos ? std::string_view{} : trim(line.substr(colon + 1));

    if (key == "EOF") break;
    if (key == "NODE_COORD_SECTION" || key == "EDGE_WEIGHT_SECTION") {
      section = key;
      break;
    }
    if (key == "NAME") {
      name = value;
    } else if (key == "TYPE") {
      if (upper(value) != "TSP") throw DataError(fmt::format("unsupported TYPE '{}'", value));
      saw_type = true;
    } else if (key == "COMMENT") {
    } else if (key == "DIMENSION") {
      dimension = parse_number<std::size_t>(value, "DIMENSION");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = upper(value);
      if (weight_type != "EUC_2D" && weight_type != "EXPLICIT") {
        throw DataError(fmt::format("unsupported EDGE_WEIGHT_TYPE '{}'", value));
      }
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = upper(value);
      if (weight_format != "FULL_MATRIX") {
        throw DataError(fmt::format("unsupported EDGE_WEIGHT_FORMAT '{}'", value));
      }
    } else {
      throw DataError(fmt::format("unknown keyword '{}'", key));
    }
  }

  if (!saw_type) throw DataError("missing TYPE");
  if (!dimension) throw DataError("missing DIMENSION");
  if (weight_type.empty()) throw DataError("missing EDGE_WEIGHT_TYPE");
  if (*dimension < 3) throw DataError(fmt::format("DIMENSION {} < 3", *dimension));
  const std::size_t n = *dimension;

  TokenStream tokens(text, std::min(pos, text.size()));
  if (weight_type == "EUC_2D") {
    if (section != "NODE_COORD_SECTION") throw DataError("EUC_2D requires NODE_COORD_SECTION");
    std::vector<Point> points(n);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      const auto id = parse_number<std::size_t>(tokens.expect("node id"), "node id");
      if (id < 1 || id > n || seen[id - 1]) {
        throw DataError(fmt::format("dimension mismatch: bad or repeated node id {}", id));
      }
      seen[id - 1] = true;
      points[id - 1].x = parse_coordinate(tokens.expect("x coordinate"));
      points[id - 1].y = parse_coordinate(tokens.expect("y coordinate"));
    }
    if (auto extra = tokens.next(); extra && *extra != "EOF") {
      throw DataError(fmt::format("dimension mismatch: unexpected token '{}' after {} nodes", *extra, n));
    }
    return euclidean_from_points(std::move(points), std::move(name));
  }

  if (weight_format.empty()) throw DataError("EXPLICIT requires EDGE_WEIGHT_FORMAT");
  if (section != "EDGE_WEIGHT_SECTION") throw DataError("EXPLICIT requires EDGE_WEIGHT_SECTION");
  WeightMatrix weights(n, std::vector<Weight>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      weights[r][c] = parse_number<Weight>(tokens.expect("matrix entry"), "weight");
    }
  }
  if (auto extra = tokens.next(); extra && *extra != "EOF") {
    throw DataError(fmt::format("dimension mismatch: unexpected token '{}' after {}x{} matrix", *extra, n, n));
  }
  return make_instance(n, weights, std::move(name));
}

Instance read_tsplib(const std::filesystem::path& path) {
  return parse_tsplib(read_file(path));
}

std::string emit_tsplib(const Instance& inst) {
  std::string out;
  out += fmt::format("NAME: {}\n", inst.name());
  out += "TYPE: TSP\n";
  out += fmt::format("DIMENSION: {}\n", inst.n());
  out += "EDGE_WEIGHT_TYPE: EXPLICIT\n";
  out += "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
  out += "EDGE_WEIGHT_SECTION\n";
  const auto n = static_cast<Vertex>(inst.n());
  for (Vertex r = 0; r < n; ++r) {
    for (Vertex c = 0; c < n; ++c) {
      if (c > 0) out += ' ';
      out += fmt::format("{}", r == c ? 0 : inst.weight(r, c));
    }
    out += '\n';
  }
  out += "EOF\n";
  return out;
}

namespace {

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.u, a.v});
  return out;
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw DataError(fmt::format("{}: expected an object", path));
  const auto it = obj.find(key);
  if (it == obj.end()) throw DataError(fmt::format("{}{}: missing", path.empty() ? "" : path + ".", key));
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::int64_t get_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer()) throw DataError(fmt::format("{}: expected an integer", join(path, key)));
  return v.get<std::int64_t>();
}

std::size_t get_count(const json& obj, const std::string& key, const std::string& path) {
  const std::int64_t v = get_int(obj, key, path);
  if (v < 0) throw DataError(fmt::format("{}: must be non-negative", join(path, key)));
  return static_cast<std::size_t>(v);
}

std::string get_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) throw DataError(fmt::format("{}: expected a string", join(path, key)));
  return v.get<std::string>();
}

std::vector<Arc> get_arcs(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  const std::string where = join(path, key);
  if (!v.is_array()) throw DataError(fmt::format("{}: expected an array", where));
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const json& pair = v[k];
    const std::string at = fmt::format("{}[{}]", where, k);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw DataError(fmt::format("{}: expected [u, v]", at));
    }
    const auto u = pair[0].get<std::uint64_t>();
    const auto w = pair[1].get<std::uint64_t>();
    if (u == w || u > 0xffffffffu || w > 0xffffffffu) {
      throw DataError(fmt::format("{}: invalid arc", at));
    }
    arcs.push_back(make_arc(static_cast<Vertex>(u), static_cast<Vertex>(w)));
  }
  return arcs;
}

}  // namespace

std::string trace_to_json(const Trace& trace) {
  json steps = json::array();
  for (const ConstructionStep& s : trace.steps) {
    json step;
    step["i"] = s.i;
    step["a_new"] = arcs_to_json(s.a_new);
    step["a_old"] = arcs_to_json(s.a_old);
    step["m"] = s.m;
    step["delta_a"] = s.delta_a;
    step["w_before"] = s.w_before;
    step["w_after"] = s.w_after;
    steps.push_back(std::move(step));
  }
  json doc;
  doc["instance_name"] = trace.instance_name;
  doc["heuristic"] = trace.heuristic;
  doc["n"] = trace.n;
  doc["steps"] = std::move(steps);
  doc["final_arcs"] = arcs_to_json(trace.final_arcs);
  doc["final_weight"] = trace.final_weight;
  if (trace.beta_used) doc["beta_used"] = true;
  return doc.dump(1) + "\n";
}

Trace trace_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(fmt::format("malformed trace JSON: {}", e.what()));
  }
  Trace trace;
  trace.instance_name = get_string(doc, "instance_name", "");
  trace.heuristic = get_string(doc, "heuristic", "");
  trace.n = get_count(doc, "n", "");
  const json& steps = field(doc, "steps", "");
  if (!steps.is_array()) throw DataError("steps: expected an array");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string path = fmt::format("steps[{}]", k);
    const json& s = steps[k];
    ConstructionStep step;
    step.i = get_count(s, "i", path);
    step.a_new = get_arcs(s, "a_new", path);
    step.a_old = get_arcs(s, "a_old", path);
    step.m = get_int(s, "m", path);
    if (step.m < 1) throw DataError(fmt::format("{}.m: invariant m >= 1 violated (m = {})", path, step.m));
    step.delta_a = get_int(s, "delta_a", path);
    step.w_before = get_int(s, "w_before", path);
    step.w_after = get_int(s, "w_after", path);
    trace.steps.push_back(std::move(step));
  }
  trace.final_arcs = get_arcs(doc, "final_arcs", "");
  trace.final_weight = get_int(doc, "final_weight", "");
  if (const auto it = doc.find("beta_used"); it != doc.end()) {
    if (!it->is_boolean()) throw DataError("beta_used: expected a boolean");
    trace.beta_used = it->get<bool>();
  }
  return trace;
}

std::string report_to_json(const BoundReport& r) {
  auto num = [](double v) { return json(v); };
  json doc;
  doc["instance"] = r.instance;
  doc["heuristic"] = r.heuristic;
  doc["n"] = r.n;
  doc["opt"] = r.opt;
  doc["final"] = r.final;
  doc["ratio"] = std::isfinite(r.ratio) ? num(r.ratio) : json("inf");
  doc["pr_sum"] = num(r.pr_sum);
  doc["pr_excluded"] = r.pr_excluded;
  doc["pr_sum_from_i2"] = num(r.pr_sum_from_i2);
  doc["pr_holds"] = r.pr_holds;
  doc["avarc_all"] = r.avarc_all;
  doc["avarc_violations"] = r.avarc_violations;
  doc["step_m"] = r.step_m;
  doc["m_max"] = r.m_max;
  doc["harmonic"] = num(r.harmonic);
  doc["log2n"] = num(r.log2n);
  doc["bound_harmonic"] = num(r.bound_harmonic);
  doc["bound_log"] = num(r.bound_log);
  doc["thelog_holds"] = r.thelog_holds;
  doc["chain_applicable"] = r.chain_applicable;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(fmt::format("cannot write '{}'", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError(fmt::format("short write to '{}'", path.string()));
}

}  // namespace tspbound
