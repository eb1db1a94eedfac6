#include "sbd/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sbd/errors.hpp"

namespace sbd {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> parse_grid(const json& j, int n,
                                            const std::string& where) {
  if (!j.is_array())
    throw ParseError(where + ": expected an array of rows");
  if (static_cast<int>(j.size()) != n)
    throw DimensionMismatch(where + ": expected " + std::to_string(n) +
                            " rows, got " + std::to_string(j.size()));
  std::vector<std::vector<double>> grid;
  grid.reserve(n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array())
      throw ParseError(where + ": row " + std::to_string(i) +
                       " is not an array");
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch(where + ": row " + std::to_string(i) +
                              " has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(n));
    std::vector<double> vals;
    vals.reserve(n);
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number())
        throw ParseError(where + ": entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") is not a number");
      const double v = row[k].get<double>();
      if (!std::isfinite(v))
        throw ParseError(where + ": entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") is not finite");
      vals.push_back(v);
    }
    grid.push_back(std::move(vals));
  }
  return grid;
}

ordered_json complex_to_json(const cd& z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(ordered_json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError(where + ": expected a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  std::vector<cd> entries;
  entries.reserve(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(where + ": ragged rows");
    for (int k = 0; k < cols; ++k) {
      const json& cell = row[k];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw ParseError(where + ": entries must be [re, im] pairs");
      entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

}  // namespace

NamedSet parse_matrix_set_text(const std::string& content,
                               const std::string& origin) {
  json root;
  try {
    root = json::parse(content);
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError(origin + ": top level must be an object");
  if (!root.contains("n") || !root["n"].is_number_integer())
    throw ParseError(origin + ": missing integer field \"n\"");
  const int n = root["n"].get<int>();
  if (n < 1) throw ParseError(origin + ": \"n\" must be >= 1");
  if (!root.contains("matrices") || !root["matrices"].is_array() ||
      root["matrices"].empty())
    throw ParseError(origin + ": \"matrices\" must be a non-empty array");

  NamedSet set;
  set.n = n;
  int idx = 0;
  for (const json& entry : root["matrices"]) {
    const std::string where = origin + ": matrices[" + std::to_string(idx) + "]";
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    if (!entry.contains("name") || !entry["name"].is_string())
      throw ParseError(where + ": missing string field \"name\"");
    const std::string name = entry["name"].get<std::string>();
    for (const std::string& existing : set.names)
      if (existing == name)
        throw DuplicateName(origin + ": duplicate matrix name \"" + name + "\"");
    if (!entry.contains("re"))
      throw ParseError(where + ": missing field \"re\"");
    const auto re = parse_grid(entry["re"], n, where + ".re");
    std::vector<std::vector<double>> im;
    if (entry.contains("im") && !entry["im"].is_null())
      im = parse_grid(entry["im"], n, where + ".im");

    std::vector<cd> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        entries.emplace_back(re[i][j], im.empty() ? 0.0 : im[i][j]);
    set.names.push_back(name);
    set.mats.emplace_back(n, n, std::move(entries));
    ++idx;
  }
  return set;
}

NamedSet parse_matrix_set(const std::string& path) {
  return parse_matrix_set_text(read_file(path), path);
}

namespace {

ordered_json provenance_to_json(const Provenance& p) {
  ordered_json j;
  j["seed"] = p.seed;
  j["trials"] = p.trials;
  if (p.algorithm == 'A' || p.algorithm == 'B') {
    j["chain"] = p.chain;
    j["final_block_certified"] = p.final_block_certified;
    j["chain_minimal_certified"] = p.chain_minimal_certified;
    if (p.algorithm == 'B') j["gamma_size"] = p.gamma_size;
  } else {
    j["commutant_dim"] = p.commutant_dim;
    j["commuting_matrix"] = matrix_to_json(p.commuting_matrix);
    ordered_json eig = ordered_json::array();
    for (const cd& z : p.commuting_spectrum.eigenvalues)
      eig.push_back(complex_to_json(z));
    j["eigenvalues"] = eig;
    j["multiplicities"] = p.commuting_spectrum.multiplicities;
  }
  return j;
}

}  // namespace

std::string report_to_json(const DecompositionReport& r,
                           const std::vector<std::string>& names) {
  ordered_json j;
  j["algorithm"] = std::string(1, r.provenance.algorithm);
  j["partition"] = {
      {"kind", r.partition.kind == BlockKind::BT ? "BT" : "BD"},
      {"sizes", r.partition.sizes}};
  j["transform"] = {{"unitary", r.transform.unitary},
                    {"s", matrix_to_json(r.transform.s)},
                    {"s_inv", matrix_to_json(r.transform.s_inv)}};
  ordered_json transformed = ordered_json::object();
  ordered_json residuals = ordered_json::object();
  for (size_t i = 0; i < r.transformed.size(); ++i) {
    const std::string name =
        i < names.size() ? names[i] : "m" + std::to_string(i);
    transformed[name] = matrix_to_json(r.transformed[i]);
    residuals[name] = r.residuals[i];
  }
  j["transformed"] = transformed;
  j["residuals"] = residuals;
  j["provenance"] = provenance_to_json(r.provenance);
  return j.dump(2) + "\n";
}

std::string report_to_text(const DecompositionReport& r,
                           const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "algorithm: " << r.provenance.algorithm << "\n";
  out << "partition: "
      << (r.partition.kind == BlockKind::BT ? "BT(" : "BD(");
  for (size_t i = 0; i < r.partition.sizes.size(); ++i) {
    if (i) out << ",";
    out << r.partition.sizes[i];
  }
  out << ")\n";
  out << "transform: " << (r.transform.unitary ? "unitary" : "invertible")
      << " " << r.transform.s.rows() << "x" << r.transform.s.cols() << "\n";
  out << "residuals:\n";
  for (size_t i = 0; i < r.residuals.size(); ++i) {
    const std::string name =
        i < names.size() ? names[i] : "m" + std::to_string(i);
    out << "  " << name << ": " << r.residuals[i] << "\n";
  }
  if (r.provenance.algorithm == 'C') {
    out << "commutant dimension: " << r.provenance.commutant_dim << "\n";
    out << "distinct eigenvalues of the commuting matrix: "
        << r.provenance.commuting_spectrum.distinct_count() << "\n";
  } else {
    out << "invariant chain:";
    for (int d : r.provenance.chain) out << " " << d;
    out << "\n";
  }
  return out.str();
}

ParsedReport parse_report(const std::string& path) {
  const std::string content = read_file(path);
  json root;
  try {
    root = json::parse(content);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  ParsedReport out;
  try {
    const std::string alg = root.at("algorithm").get<std::string>();
    out.report.provenance.algorithm = alg.empty() ? '?' : alg[0];
    const json& part = root.at("partition");
    out.report.partition.kind =
        part.at("kind").get<std::string>() == "BT" ? BlockKind::BT
                                                   : BlockKind::BD;
    out.report.partition.sizes = part.at("sizes").get<std::vector<int>>();
    const json& tr = root.at("transform");
    out.report.transform.unitary = tr.at("unitary").get<bool>();
    out.report.transform.s = matrix_from_json(tr.at("s"), path + ": transform.s");
    out.report.transform.s_inv =
        matrix_from_json(tr.at("s_inv"), path + ": transform.s_inv");
    if (root.contains("transformed")) {
      for (const auto& [name, mat] : root["transformed"].items()) {
        out.names.push_back(name);
        out.report.transformed.push_back(
            matrix_from_json(mat, path + ": transformed." + name));
      }
    }
    if (root.contains("residuals")) {
      for (const std::string& name : out.names) {
        if (root["residuals"].contains(name))
          out.report.residuals.push_back(root["residuals"][name].get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(path + ": malformed report: " + e.what());
  }
  return out;
}

}  // namespace sbd
