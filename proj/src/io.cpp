#include "qcorr/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

Complex parse_entry(const nlohmann::json& cell) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
    throw ParseError("matrix entries must be [re, im] pairs");
  }
  return Complex(cell[0].get<double>(), cell[1].get<double>());
}

}  // namespace

DenseOperator load_state_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("kind") || !j.contains("data")) {
    throw ParseError("state file needs dims, kind and data fields");
  }
  SystemShape shape;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer()) throw ParseError("dims must be integers");
    shape.dims.push_back(d.get<int>());
  }
  const std::string kind = j["kind"].get<std::string>();
  const long dim = shape.dims.empty() ? 0 : shape.total_dim();
  const auto& data = j["data"];

  if (kind == "pure") {
    if (!data.is_array() || static_cast<long>(data.size()) != dim) {
      throw ParseError("amplitude count does not match dims");
    }
    Vector v(dim);
    for (long i = 0; i < dim; ++i) v(i) = parse_entry(data[i]);
    return to_density(make_pure_state(std::move(shape), std::move(v)));
  }
  if (kind == "density") {
    if (!data.is_array() || static_cast<long>(data.size()) != dim) {
      throw ParseError("matrix row count does not match dims");
    }
    Matrix m(dim, dim);
    for (long i = 0; i < dim; ++i) {
      const auto& row = data[i];
      if (!row.is_array() || static_cast<long>(row.size()) != dim) {
        throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
      }
      for (long k = 0; k < dim; ++k) m(i, k) = parse_entry(row[k]);
    }
    return make_state(std::move(shape), std::move(m));
  }
  throw ParseError("kind must be \"density\" or \"pure\"");
}

DenseOperator load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file: " + path);
  return load_state_json(in);
}

namespace {

nlohmann::json entry_json(const Complex& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

}  // namespace

std::string state_to_json(const DenseOperator& op) {
  nlohmann::ordered_json j;
  j["dims"] = op.shape.dims;
  j["kind"] = "density";
  nlohmann::json rows = nlohmann::json::array();
  for (long i = 0; i < op.mat.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (long k = 0; k < op.mat.cols(); ++k) row.push_back(entry_json(op.mat(i, k)));
    rows.push_back(std::move(row));
  }
  j["data"] = std::move(rows);
  return j.dump();
}

std::string pure_to_json(const PureState& psi) {
  nlohmann::ordered_json j;
  j["dims"] = psi.shape.dims;
  j["kind"] = "pure";
  nlohmann::json amps = nlohmann::json::array();
  for (long i = 0; i < psi.amps.size(); ++i) amps.push_back(entry_json(psi.amps(i)));
  j["data"] = std::move(amps);
  return j.dump();
}

std::vector<PauliOperator> load_stabilizer_generators(std::istream& in) {
  std::vector<PauliOperator> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Trim trailing whitespace/CR and leading spaces.
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    PauliOperator p;
    try {
      p = parse_pauli(std::string_view(line).substr(start));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!gens.empty() && p.n != gens.front().n) {
      throw ParseError("line " + std::to_string(lineno) + ": qubit count differs from line 1");
    }
    gens.push_back(p);
  }
  if (gens.empty()) throw ParseError("stabilizer file contains no generators");
  return gens;
}

std::vector<PauliOperator> load_stabilizer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stabilizer file: " + path);
  return load_stabilizer_generators(in);
}

}  // namespace qcorr
