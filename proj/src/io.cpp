#include "chshkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chsh::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double get_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<double> get_vector(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(get_number(e, what));
  return v;
}

const json& get_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::complex<double> get_complex(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {get_number(j[0], what), get_number(j[1], what)};
  }
  throw ParseError(std::string(what) + ": expected a number or [re, im]");
}

json complex_json(std::complex<double> z, Mode mode) {
  if (mode == Mode::Real) return json(z.real());
  return json::array({z.real(), z.imag()});
}

json block_json(const CorrelationBlock& b) {
  return json{{"c", {{b(0, 0), b(0, 1)}, {b(1, 0), b(1, 1)}}}};
}

json completion_json(const CompletionResult& r) {
  json j{
      {"status", r.feasible() ? "feasible" : "infeasible"},
      {"mode", r.mode == Mode::Real ? "real" : "hermitian"},
      {"x_star", complex_json(r.x_star, r.mode)},
      {"y_star", complex_json(r.y_star, r.mode)},
      {"lambda_star", r.lambda_star},
  };
  if (r.gram_vectors) j["gram_vectors"] = *r.gram_vectors;
  if (r.analytic_certificate) {
    j["analytic_certificate"] = json{
        {"matrix", r.analytic_certificate->which == '-' ? "R-" : "R+"},
        {"value", r.analytic_certificate->value},
    };
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
}

CorrelationBlock parse_block(const std::string& text) {
  const json j = parse_json(text);
  const json& c = get_field(j, "c");
  if (!c.is_array() || c.size() != 2 || !c[0].is_array() || c[0].size() != 2 ||
      !c[1].is_array() || c[1].size() != 2) {
    throw ParseError("\"c\" must be a 2x2 array");
  }
  return CorrelationBlock(get_number(c[0][0], "c"), get_number(c[0][1], "c"),
                          get_number(c[1][0], "c"), get_number(c[1][1], "c"));
}

LhvModel parse_lhv(const std::string& text) {
  const json j = parse_json(text);
  const std::vector<double> w = get_vector(get_field(j, "weights"), "weights");
  if (w.size() != 16) throw ParseError("\"weights\" must have 16 entries");
  std::array<double, 16> arr{};
  std::copy(w.begin(), w.end(), arr.begin());
  return LhvModel(arr);
}

QubitModel parse_qubit(const std::string& text) {
  const json j = parse_json(text);
  const json& state = get_field(j, "state");
  if (!state.is_array() || state.size() != 4) {
    throw ParseError("\"state\" must have 4 amplitudes");
  }
  std::array<std::complex<double>, 4> amps;
  for (int i = 0; i < 4; ++i) amps[i] = get_complex(state[i], "state");

  auto dirs = [&](const char* key) {
    const json& d = get_field(j, key);
    if (!d.is_array() || d.size() != 2) {
      throw ParseError(std::string(key) + " must hold 2 direction vectors");
    }
    std::array<std::array<double, 3>, 2> out{};
    for (int i = 0; i < 2; ++i) {
      const std::vector<double> v = get_vector(d[i], key);
      if (v.size() != 3) throw ParseError(std::string(key) + ": directions are 3-vectors");
      out[i] = {v[0], v[1], v[2]};
    }
    return out;
  };
  return QubitModel(amps, dirs("a_dirs"), dirs("b_dirs"));
}

VectorModel parse_vectors(const std::string& text) {
  const json j = parse_json(text);
  auto vec = [&](const char* key) { return get_vector(get_field(j, key), key); };
  return VectorModel(vec("u1"), vec("u2"), vec("v1"), vec("v2"));
}

int parse_prbox_sign(const std::string& text) {
  const json j = parse_json(text);
  const json& s = get_field(j, "sign");
  if (s.is_string()) {
    if (s == "+") return 1;
    if (s == "-") return -1;
  }
  throw ParseError("\"sign\" must be \"+\" or \"-\"");
}

std::string analysis_json(const AnalysisReport& r) {
  json j{
      {"block", block_json(r.block)},
      {"chsh",
       {
           {"s_canonical", r.chsh.s_canonical},
           {"b_canonical", r.chsh.b_canonical},
           {"variants", r.chsh.variants},
           {"b_max", r.chsh.b_max},
           {"is_local", r.chsh.is_local},
           {"within_tsirelson", r.chsh.within_tsirelson},
       }},
      {"r_certificate", {{"tr_plus", r.r_cert.first}, {"tr_minus", r.r_cert.second}}},
      {"completion", completion_json(r.completion)},
      {"classification", to_string(r.classification)},
  };
  if (r.completion_hermitian) {
    j["completion_hermitian"] = completion_json(*r.completion_hermitian);
  }
  return dump(j);
}

std::string generated_json(const GeneratedCorrelations& g, const std::string& kind) {
  const Mode mode = g.full.mode;
  json full = json::array();
  const HermMatrix m = g.full.herm_matrix();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(complex_json(m(i, k), mode));
    full.push_back(row);
  }
  json j{
      {"kind", kind},
      {"mode", mode == Mode::Real ? "real" : "hermitian"},
      {"c", block_json(g.block)["c"]},
      {"x", complex_json(g.full.x, mode)},
      {"y", complex_json(g.full.y, mode)},
      {"full", full},
  };
  return dump(j);
}

std::string realize_json(const CompletionResult& r) {
  json j{
      {"status", r.feasible() ? "feasible" : "infeasible"},
      {"lambda_star", r.lambda_star},
  };
  if (r.feasible()) {
    j["x_star"] = complex_json(r.x_star, r.mode);
    j["y_star"] = complex_json(r.y_star, r.mode);
    if (r.gram_vectors) j["vectors"] = *r.gram_vectors;
  } else if (r.analytic_certificate) {
    j["analytic_certificate"] = json{
        {"matrix", r.analytic_certificate->which == '-' ? "R-" : "R+"},
        {"value", r.analytic_certificate->value},
    };
  }
  return dump(j);
}

std::string exercise_json(const ExerciseResult& r, double disprove_margin) {
  const bool disproved = r.b_value > 2.0 + disprove_margin;
  json j{
      {"verdict", disproved ? "disproved" : "not_disproved"},
      {"b_value", r.b_value},
      {"best_index", r.best_index},
      {"samples", r.samples},
      {"seed", r.seed},
      {"block", block_json(r.block)},
      {"completion", completion_json(r.completion)},
  };
  return dump(j);
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "t,b_value,feasible,lambda_star\n";
  for (const ScanRow& row : rows) {
    out += format_double(row.t);
    out += ',';
    out += format_double(row.b_value);
    out += ',';
    out += row.feasible ? '1' : '0';
    out += ',';
    out += format_double(row.lambda_star);
    out += '\n';
  }
  return out;
}

}  // namespace chsh::io
