// Copyright 2026 The fermitomo Authors
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

#include "fermitomo/serialization.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fermitomo {
namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_flat(const Json& j) {
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (const auto& f : e) {
        if (!is_scalar(f)) return false;
      }
    }
  }
  return true;
}

void emit_scalar(const Json& j, std::string& out) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument("cannot serialise a non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
  } else {
    out += j.dump();
  }
}

void emit(const Json& j, int indent, bool inline_mode, std::string& out) {
  if (is_scalar(j)) {
    emit_scalar(j, out);
    return;
  }
  if (j.empty()) {
    out += j.is_array() ? "[]" : "{}";
    return;
  }
  const bool one_line = inline_mode || (j.is_array() && is_flat(j));
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out += j.is_array() ? '[' : '{';
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += one_line ? ", " : ",";
    first = false;
    if (!one_line) {
      out += '\n';
      out += pad;
    }
    if (j.is_object()) {
      out += Json(it.key()).dump();
      out += ": ";
    }
    emit(*it, indent + 2, one_line, out);
  }
  if (!one_line) {
    out += '\n';
    out += std::string(static_cast<std::size_t>(indent), ' ');
  }
  out += j.is_array() ? ']' : '}';
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::uint64_t uint_field(const Json& j, const char* key, std::uint64_t fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0)) {
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

double number(const Json& j) {
  if (!j.is_number()) throw ParseError("expected a number");
  return j.get<double>();
}

void check_type(const Json& j, const char* expected) {
  const auto it = j.find("type");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != expected)) {
    throw ParseError(std::string("expected a document of type \"") + expected + "\"");
  }
}

void check_modes(int declared, int actual, const char* what) {
  if (declared != actual) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(actual) +
                                " modes but the document declares m = " + std::to_string(declared));
  }
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string dump_canonical(const Json& j) {
  std::string out;
  emit(j, 0, false, out);
  out += '\n';
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_canonical(j);
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Matrix& x) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < x.cols(); ++k) row.push_back(to_json(x(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RealMatrix& x) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < x.cols(); ++k) row.push_back(x(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers are [re, im] pairs");
  return Complex(number(j[0]), number(j[1]));
}

namespace {

template <typename Out, typename Elem>
Out matrix_from_json(const Json& j, Elem&& elem) {
  if (!j.is_array() || j.empty()) throw ParseError("matrices are non-empty arrays of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
  Out out(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = elem(j[i][k]);
    }
  }
  return out;
}

}  // namespace

Matrix complex_matrix_from_json(const Json& j) {
  return matrix_from_json<Matrix>(j, [](const Json& e) { return complex_from_json(e); });
}

RealMatrix real_matrix_from_json(const Json& j) {
  return matrix_from_json<RealMatrix>(j, [](const Json& e) { return number(e); });
}

Json to_json(const FermionState& s) {
  return Json{{"type", "state"}, {"m", s.modes()}, {"rho", to_json(s.rho)}};
}

FermionState state_from_json(const Json& j) {
  return guarded([&] {
    check_type(j, "state");
    FermionState s(complex_matrix_from_json(field(j, "rho")));
    check_modes(int_field(j, "m"), s.modes(), "rho");
    return s;
  });
}

Json to_json(const FermionPOVM& p) {
  Json elements = Json::array();
  for (const auto& e : p.elements) elements.push_back(to_json(e));
  return Json{{"type", "povm"}, {"m", p.modes()}, {"elements", std::move(elements)}};
}

FermionPOVM povm_from_json(const Json& j) {
  return guarded([&] {
    check_type(j, "povm");
    const Json& arr = field(j, "elements");
    if (!arr.is_array() || arr.empty()) throw ParseError("\"elements\" must be a non-empty array");
    std::vector<Matrix> elements;
    for (const auto& e : arr) elements.push_back(complex_matrix_from_json(e));
    FermionPOVM p(std::move(elements));
    check_modes(int_field(j, "m"), p.modes(), "POVM");
    return p;
  });
}

Json to_json(const ProcessRep& p) {
  Json data;
  switch (p.representation()) {
    case Representation::kKraus:
      data = Json::array();
      for (const auto& k : p.kraus().operators) data.push_back(to_json(k));
      break;
    case Representation::kChi: data = to_json(p.chi().chi); break;
    case Representation::kChoi: data = to_json(p.choi().choi); break;
    case Representation::kTransfer: data = to_json(p.transfer().matrix); break;
  }
  return Json{{"m", p.modes()}, {"representation", std::string(to_string(p.representation()))},
              {"data", std::move(data)}};
}

ProcessRep process_from_json(const Json& j) {
  return guarded([&] {
    check_type(j, "process");
    const Json& rep = field(j, "representation");
    if (!rep.is_string()) throw ParseError("\"representation\" must be a string");
    Representation r;
    try {
      r = representation_from_string(rep.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    const Json& data = field(j, "data");
    ProcessRep p = [&] {
      switch (r) {
        case Representation::kKraus: {
          if (!data.is_array() || data.empty()) throw ParseError("kraus data must be a non-empty list");
          std::vector<Matrix> ops;
          for (const auto& k : data) ops.push_back(complex_matrix_from_json(k));
          return ProcessRep::FromKraus(std::move(ops));
        }
        case Representation::kChi: return ProcessRep::FromChi(complex_matrix_from_json(data));
        case Representation::kChoi: return ProcessRep::FromChoi(complex_matrix_from_json(data));
        case Representation::kTransfer: return ProcessRep::FromTransfer(real_matrix_from_json(data));
      }
      throw std::logic_error("unreachable");
    }();
    check_modes(int_field(j, "m"), p.modes(), "process");
    return p;
  });
}

Json to_json(const GateSpec& g) {
  return Json{{"kind", std::string(to_string(g.kind))}, {"modes", g.modes}};
}

GateSpec gate_from_json(const Json& j) {
  return guarded([&] {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("\"kind\" must be a string");
    GateSpec g;
    try {
      g.kind = gate_kind_from_string(kind.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    g.modes = field(j, "modes").get<std::vector<int>>();
    if (static_cast<int>(g.modes.size()) != gate_arity(g.kind)) {
      throw ParseError("gate " + kind.get<std::string>() + " takes " + std::to_string(gate_arity(g.kind)) +
                       " modes");
    }
    return g;
  });
}

Json circuit_to_json(const Circuit& c) {
  Json out = Json::array();
  for (const auto& g : c) out.push_back(to_json(g));
  return out;
}

Circuit circuit_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a circuit is a list of gates");
  Circuit c;
  for (const auto& g : j) c.push_back(gate_from_json(g));
  return c;
}

Json gatesets_to_json(int m) {
  auto set_json = [](const GateSet& s) {
    Json circuits = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      circuits.push_back(Json{{"index", i}, {"circuit", circuit_to_json(s.circuits[i])}});
    }
    return Json{{"pairs", s.pairs}, {"size", s.size()}, {"circuits", std::move(circuits)}};
  };
  return Json{{"type", "gatesets"},
              {"m", m},
              {"majorana_count", 2 * (m + 1)},
              {"G", set_json(generate_G(m + 1))},
              {"U", set_json(generate_U(m + 1))},
              {"ordering",
               "Circuits list gates in time order with global 1-based Majorana indices. "
               "G_{k+1}[4i+s] is G_k[i] followed by S_s (S_0 = none, S_1 = R(2k,2k+1), "
               "S_2 = R(2k,2k+2), S_3 = R(2k,2k+1) twice). U_{k+1}[3i+s] is R(2k+1,2k) (s = 1) or "
               "R(2k+2,2k) (s = 2) followed by U_k[i]. R(j,i) is the inverse of R(i,j)."}};
}

Json to_json(const ExperimentRecord& r) {
  Json settings = Json::array();
  for (const auto& [g, u] : r.settings) settings.push_back(Json::array({g, u}));
  Json j{{"type", "experiment_record"},
         {"m", r.m},
         {"settings", std::move(settings)},
         {"shots", r.shots},
         {"seed", r.seed}};
  if (r.sampled()) {
    j["counts"] = r.counts;
  } else {
    j["probabilities"] = r.probabilities;
  }
  return j;
}

ExperimentRecord record_from_json(const Json& j) {
  return guarded([&] {
    check_type(j, "experiment_record");
    ExperimentRecord r;
    r.m = int_field(j, "m");
    for (const auto& s : field(j, "settings")) {
      if (!s.is_array() || s.size() != 2) throw ParseError("settings are [g, u] pairs");
      r.settings.emplace_back(s[0].get<int>(), s[1].get<int>());
    }
    r.shots = uint_field(j, "shots", 0);
    r.seed = uint_field(j, "seed", 0);
    if (j.contains("counts")) {
      r.counts = j.at("counts").get<std::vector<std::vector<std::uint64_t>>>();
    } else {
      r.probabilities = field(j, "probabilities").get<std::vector<std::vector<double>>>();
    }
    r.validate();
    return r;
  });
}

Json to_json(const ReconstructionResult& r) {
  return Json{{"type", "reconstruction"},
              {"m", r.m},
              {"even_block", to_json(r.even_block)},
              {"odd_block", to_json(r.odd_block)},
              {"chi", to_json(r.chi)},
              {"residual_norm", r.residual_norm},
              {"design_rank", r.design_rank},
              {"unknowns", r.unknowns},
              {"condition_number", r.condition_number},
              {"informationally_complete", r.informationally_complete()}};
}

ReconstructionResult reconstruction_from_json(const Json& j) {
  return guarded([&] {
    check_type(j, "reconstruction");
    ReconstructionResult r;
    r.m = int_field(j, "m");
    r.even_block = real_matrix_from_json(field(j, "even_block"));
    r.odd_block = real_matrix_from_json(field(j, "odd_block"));
    r.chi = complex_matrix_from_json(field(j, "chi"));
    r.residual_norm = number(field(j, "residual_norm"));
    r.design_rank = int_field(j, "design_rank");
    r.unknowns = int_field(j, "unknowns");
    r.condition_number = number(field(j, "condition_number"));
    const Eigen::Index half = (Eigen::Index{1} << (2 * r.m)) / 2;
    if (r.even_block.rows() != half || r.even_block.cols() != half || r.odd_block.rows() != half ||
        r.odd_block.cols() != half) {
      throw std::invalid_argument("block sizes do not match m = " + std::to_string(r.m));
    }
    return r;
  });
}

Json to_json(const ErrorMetrics& e) { return Json{{"frobenius", e.frobenius}, {"max_abs", e.max_abs}}; }

Json to_json(const BlockErrors& e) {
  return Json{{"even", to_json(e.even)}, {"odd", to_json(e.odd)}, {"overall", to_json(e.overall)}, {"mse", e.mse}};
}

DocumentKind document_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object at the top level");
  if (j.contains("representation")) return DocumentKind::kProcess;
  const auto it = j.find("type");
  if (it == j.end() || !it->is_string()) throw ParseError("document has no \"type\" field");
  const std::string t = it->get<std::string>();
  if (t == "state") return DocumentKind::kState;
  if (t == "povm") return DocumentKind::kPovm;
  if (t == "process") return DocumentKind::kProcess;
  if (t == "experiment_record") return DocumentKind::kRecord;
  if (t == "reconstruction") return DocumentKind::kReconstruction;
  throw ParseError("unknown document type \"" + t + "\"");
}

}  // namespace fermitomo
