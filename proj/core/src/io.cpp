//  Copyright 2026 The obsfn Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "obsfn/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "obsfn/errors.hpp"

namespace obsfn {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(fmt::format("missing field '{}'", key));
  return j.at(key);
}

std::size_t index_in(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw InputError(fmt::format("{} must be an element index below {}", what, bound));
  return static_cast<std::size_t>(j.get<long long>());
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(fmt::format("{} must be a number", what));
  return j.get<double>();
}

std::vector<std::vector<double>> rows(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw InputError(fmt::format("'{}' must have {} rows", what, n));
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw InputError(fmt::format("'{}' rows must have {} entries", what, n));
    std::vector<double> r;
    for (const auto& v : row) r.push_back(number(v, what));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

RawLattice parse_lattice(const std::string& text) {
  const json j = parse(text);
  RawLattice raw;
  const json& elements = field(j, "elements");
  if (!elements.is_array()) throw InputError("'elements' must be an array");
  for (const auto& e : elements) {
    if (!e.is_string()) throw InputError("element names must be strings");
    raw.names.push_back(e.get<std::string>());
  }
  const std::size_t n = raw.names.size();
  const json& leq = field(j, "leq");
  if (!leq.is_array()) throw InputError("'leq' must be an array");
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2) throw InputError("'leq' entries must be pairs");
    raw.leq.emplace_back(index_in(p[0], n, "leq"), index_in(p[1], n, "leq"));
  }
  const json& ortho = field(j, "ortho");
  if (!ortho.is_array() || ortho.size() != n)
    throw InputError("'ortho' must list one index per element");
  for (const auto& o : ortho) raw.ortho.push_back(index_in(o, n, "ortho"));
  return raw;
}

std::string dump_lattice(const Lattice& l) {
  json j;
  j["elements"] = l.names();
  j["leq"] = json::array();
  for (auto [a, b] : l.cover_pairs()) j["leq"].push_back({a.index, b.index});
  j["ortho"] = json::array();
  for (auto e : l.elements()) j["ortho"].push_back(l.ortho(e).index);
  return j.dump(2) + "\n";
}

SpectralFamily parse_family(const std::string& text, LatticePtr lattice) {
  const json j = parse(text);
  const json& jumps = field(j, "jumps");
  if (!jumps.is_array()) throw InputError("'jumps' must be an array");
  std::vector<Jump> out;
  for (const auto& x : jumps)
    out.push_back({number(field(x, "lambda"), "lambda"),
                   lattice->element(index_in(field(x, "element"), lattice->size(), "element"))});
  return SpectralFamily(std::move(lattice), std::move(out));
}

std::string dump_family(const SpectralFamily& e) {
  json j;
  j["jumps"] = json::array();
  for (const auto& x : e.jumps()) j["jumps"].push_back({{"lambda", x.lambda}, {"element", x.value.index}});
  return j.dump(2) + "\n";
}

ObservableTable parse_table(const std::string& text, LatticePtr lattice) {
  const json j = parse(text);
  const json& values = field(j, "values");
  if (!values.is_array()) throw InputError("'values' must be an array");
  ObservableTable f(lattice);
  for (const auto& x : values) {
    const Element e = lattice->element(index_in(field(x, "element"), lattice->size(), "element"));
    if (e == lattice->bottom()) throw InputError("tables carry no value at 0");
    f.set(e, number(field(x, "f"), "f"));
  }
  if (!f.total()) throw InputError("table must give a value for every nonzero element");
  return f;
}

std::string dump_table(const ObservableTable& f) {
  json j;
  j["values"] = json::array();
  for (auto e : f.lattice().nonzero_elements())
    j["values"].push_back({{"element", e.index}, {"f", f.at(e)}});
  return j.dump(2) + "\n";
}

QuasipointFn parse_quasipoint_data(const std::string& text, const Lattice& lattice) {
  const json j = parse(text);
  const json& values = field(j, "values");
  if (!values.is_array()) throw InputError("'values' must be an array");
  QuasipointFn f;
  for (const auto& x : values) {
    const Element e = lattice.element(index_in(field(x, "atom"), lattice.size(), "atom"));
    if (!lattice.is_atom(e)) throw InputError("'" + lattice.name(e) + "' is not an atom");
    f[e] = number(field(x, "f"), "f");
  }
  for (auto a : lattice.atoms())
    if (!f.contains(a)) throw InputError("no value for atom '" + lattice.name(a) + "'");
  return f;
}

std::string dump_quasipoint_data(const QuasipointFn& f) {
  json j;
  j["values"] = json::array();
  for (const auto& [a, v] : f) j["values"].push_back({{"atom", a.index}, {"f", v}});
  return j.dump(2) + "\n";
}

CMatrix parse_matrix(const std::string& text) {
  const json j = parse(text);
  const json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() <= 0)
    throw InputError("'n' must be a positive integer");
  const auto n = static_cast<std::size_t>(nj.get<long long>());
  const auto re = rows(field(j, "re"), n, "re");
  const auto im = j.contains("im") ? rows(j.at("im"), n, "im")
                                   : std::vector<std::vector<double>>(n, std::vector<double>(n, 0));
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r][c], im[r][c]};
  return m;
}

std::string dump_matrix(const CMatrix& m) {
  json j;
  j["n"] = m.rows();
  j["re"] = json::array();
  j["im"] = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re = json::array(), im = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
    j["re"].push_back(re);
    j["im"].push_back(im);
  }
  return j.dump(2) + "\n";
}

CVector parse_ray(const std::string& text) {
  const json j = parse(text);
  const json& re = field(j, "re");
  if (!re.is_array() || re.empty()) throw InputError("'re' must be a nonempty array");
  const std::size_t n = re.size();
  if (j.contains("im") && (!j.at("im").is_array() || j.at("im").size() != n))
    throw InputError("'im' must match 're' in length");
  CVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    v[static_cast<Eigen::Index>(i)] = {number(re[i], "re"),
                                      j.contains("im") ? number(j.at("im")[i], "im") : 0.0};
  return v;
}

namespace {

json report_json(const Report& r) {
  json j;
  j["name"] = r.name();
  j["ok"] = r.ok();
  j["findings"] = json::array();
  for (const auto& f : r.findings())
    j["findings"].push_back({{"clause", f.clause}, {"ok", f.ok}, {"detail", f.detail}});
  return j;
}

}  // namespace

std::string dump_report(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string dump_reports(const std::vector<Report>& reports) {
  json j = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    j.push_back(report_json(r));
    ok = ok && r.ok();
  }
  return json{{"ok", ok}, {"reports", j}}.dump(2) + "\n";
}

std::string dump_structure(const StructureReport& s, const Lattice* /*names*/) {
  auto verdict = [](bool v, const std::optional<Witness>& w) {
    json j{{"value", v}};
    if (w) j["witness"] = {{"elements", w->elements}, {"text", w->text}};
    return j;
  };
  json j;
  j["is_lattice"] = verdict(s.is_lattice, s.lattice_witness);
  j["is_ortho_complemented"] = verdict(s.is_ortho_complemented, s.ortho_witness);
  j["is_orthomodular"] = verdict(s.is_orthomodular, s.orthomodular_witness);
  j["is_distributive"] = verdict(s.is_distributive, s.distributive_witness);
  j["is_boolean"] = verdict(s.is_boolean, s.boolean_witness);
  j["is_atomistic"] = verdict(s.is_atomistic, s.atomistic_witness);
  return j.dump(2) + "\n";
}

std::string dump_ideals(const Lattice& l, const std::vector<DualIdeal>& ideals) {
  json j = json::array();
  for (auto d : ideals) {
    json ms = json::array();
    for (auto e : members(l, d)) ms.push_back(e.index);
    j.push_back(ms);
  }
  return j.dump() + "\n";
}

std::string ray_table_csv(const std::vector<RayReading>& readings) {
  std::string out = "ray_id,f,g,expectation\n";
  for (std::size_t i = 0; i < readings.size(); ++i)
    out += fmt::format("{},{},{},{}\n", i, readings[i].f, readings[i].g, readings[i].expectation);
  return out;
}

std::string gelfand_csv(const Lattice& l, const std::vector<Quasipoint>& qs,
                        const std::vector<std::complex<double>>& values) {
  std::string out = "atom,re,im\n";
  for (std::size_t i = 0; i < qs.size(); ++i)
    out += fmt::format("{},{},{}\n", l.name(qs[i].atom), values[i].real(), values[i].imag());
  return out;
}

std::string step_plot_csv(const SpectralFamily& e) {
  std::string out = "lambda,rank\n";
  for (const auto& j : e.jumps())
    out += fmt::format("{},{}\n", j.lambda, e.lattice().rank(j.value));
  return out;
}

}  // namespace obsfn
