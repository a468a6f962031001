#include "dqc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dqc::io {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  raise("BadInputFile", "complex scalar must be a number or a [re, im] pair");
}

json matrix_to_json(const ComplexMatrix& a) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(complex_to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    raise("BadInputFile", "matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  if (cols == 0) raise("BadInputFile", "matrix rows must be nonempty");
  ComplexMatrix a(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      raise("BadInputFile", "matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = complex_from_json(j[r][c]);
  }
  return a;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) raise("BadInputFile", "vector must be a nonempty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = complex_from_json(j[i]);
  return v;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise("BadInputFile", "malformed JSON");
  return j;
}

}  // namespace

std::string encode_matrix(const ComplexMatrix& a, int indent) {
  return matrix_to_json(a).dump(indent);
}

std::string encode_vector(const ComplexVector& v, int indent) {
  return vector_to_json(v).dump(indent);
}

ComplexMatrix decode_matrix(const std::string& text) { return matrix_from_json(parse_text(text)); }

ComplexVector decode_vector(const std::string& text) { return vector_from_json(parse_text(text)); }

ProgramFile parse_program(const std::string& text, double tol) {
  json j = parse_text(text);
  if (!j.is_object()) raise("BadInputFile", "program file must be a JSON object");
  if (!j.contains("weights") || !j.contains("operators") || !j.contains("initial_state"))
    raise("BadInputFile", "program file needs weights, operators and initial_state");

  std::vector<ComplexMatrix> operators;
  for (const json& op : j.at("operators")) operators.push_back(matrix_from_json(op));
  if (operators.empty()) raise("BadInputFile", "program file has no operators");

  std::vector<double> weights = j.at("weights").get<std::vector<double>>();
  std::vector<double> times;
  if (j.contains("times")) times = j.at("times").get<std::vector<double>>();
  std::vector<std::size_t> order;
  if (j.contains("order")) order = j.at("order").get<std::vector<std::size_t>>();

  int m = 0;
  while ((std::size_t(1) << m) < operators.size()) ++m;
  m = j.value("m", m);
  const int p = j.value("p", 1);

  ProgramFile out;
  out.program = make_program(m, p, std::move(weights), std::move(operators), std::move(times),
                             std::move(order), tol);
  if (j.contains("n") && j.at("n").get<int>() != out.program.layout.n)
    raise("BadInputFile", "declared n does not match the operator dimension");

  out.initial_state = vector_from_json(j.at("initial_state"));
  if (out.initial_state.size() != out.program.layout.work_dim())
    raise("DimensionMismatch", "initial state does not match the work register");
  if (!is_normalized(out.initial_state, tol))
    raise("UnnormalizedInput", "initial state norm is " +
                                   std::to_string(out.initial_state.norm()));
  return out;
}

ProblemFile parse_problem(const std::string& text, double tol) {
  json j = parse_text(text);
  if (!j.is_object()) raise("BadInputFile", "problem file must be a JSON object");
  if (!j.contains("hamiltonian") || !j.contains("E") || !j.contains("epsilon"))
    raise("BadInputFile", "problem file needs hamiltonian, E and epsilon");

  ComplexMatrix h = matrix_from_json(j.at("hamiltonian"));
  StateVector trial;
  if (j.contains("trial_state")) trial = vector_from_json(j.at("trial_state"));

  ProblemFile out;
  out.problem = make_problem(std::move(h), j.at("E").get<double>(), std::move(trial),
                             j.at("epsilon").get<double>(), tol);
  if (j.contains("m0_override")) out.options.m0_override = j.at("m0_override").get<int>();
  if (j.contains("M_override")) out.options.terms_override = j.at("M_override").get<int>();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise("BadInputFile", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise("BadOutputFile", "cannot open " + path);
  out << contents;
  if (!out) raise("BadOutputFile", "failed writing " + path);
}

ProgramFile load_program(const std::string& path, double tol) {
  return parse_program(read_file(path), tol);
}

ProblemFile load_problem(const std::string& path, double tol) {
  return parse_problem(read_file(path), tol);
}

ComplexMatrix load_matrix(const std::string& path) { return decode_matrix(read_file(path)); }

}  // namespace dqc::io
