#pragma once

#include <string>

#include "dqc/gtc.hpp"
#include "dqc/simulator.hpp"

namespace dqc::io {

// JSON conventions shared by every file format: a complex scalar is a
// two-element array [re, im] (a bare number is accepted as purely real on
// input), a matrix is a row-major array of rows, a vector a flat array.
// Values survive a text round trip to within 1e-12.

std::string encode_matrix(const ComplexMatrix& a, int indent = -1);
std::string encode_vector(const ComplexVector& v, int indent = -1);
ComplexMatrix decode_matrix(const std::string& text);
ComplexVector decode_vector(const std::string& text);

/// Program file:
///   { "m", "p", "n", "weights": [...], "operators": [matrix, ...],
///     "times": [...], "order": [...], "initial_state": [...] }
/// Operators are the raw contractions B_i; dilations are constructed when
/// the program is built. m/p/n, times and order may be omitted (defaults:
/// smallest fitting m, p = 1, n from the operators, unit times, identity
/// order).
struct ProgramFile {
  LcuProgram program;
  StateVector initial_state;
};

ProgramFile parse_program(const std::string& text, double tol = kDefaultTolerance);
ProgramFile load_program(const std::string& path, double tol = kDefaultTolerance);

/// Problem file:
///   { "hamiltonian": matrix, "E": real, "trial_state": vector (optional,
///     default uniform superposition), "epsilon": real,
///     "m0_override": int (optional), "M_override": int (optional) }
struct ProblemFile {
  GroundStateProblem problem;
  GtcOptions options;
};

ProblemFile parse_problem(const std::string& text, double tol = kDefaultTolerance);
ProblemFile load_problem(const std::string& path, double tol = kDefaultTolerance);

ComplexMatrix load_matrix(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace dqc::io
