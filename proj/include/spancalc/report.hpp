#pragma once

#include <string>
#include <vector>

#include "spancalc/diagram.hpp"
#include "spancalc/fock.hpp"
#include "spancalc/sln.hpp"

namespace spancalc {

// Every emitted table carries this version marker; bump on layout changes.
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// All emitters are deterministic (no timings, no floating point, fixed key
// order) so outputs can be compared byte for byte.

std::string qmatrix_json(const QMatrix& m, const std::string& title);
std::string qmatrix_csv(const QMatrix& m);
std::string qmatrix_text(const QMatrix& m, const std::string& title);

std::string dimblock_json(const DimBlock& b, const std::string& title);
std::string dimblock_csv(const DimBlock& b);
std::string dimblock_text(const DimBlock& b, const std::string& title);

// The partition lattice under single-box additions, totals 0..max_n.
std::string lattice_dot(int max_n);
std::string lattice_json(int max_n);

std::string sequence_json(const std::vector<Rational>& values,
                          const std::string& title);
std::string sequence_csv(const std::vector<Rational>& values);
std::string sequence_text(const std::vector<Rational>& values,
                          const std::string& title);

bool all_pass(const std::vector<RelationResult>& results);
bool all_pass(const std::vector<SlnCheck>& checks);

std::string heisenberg_report_json(const std::vector<RelationResult>& results,
                                   int max_card);
std::string heisenberg_report_csv(const std::vector<RelationResult>& results);
std::string heisenberg_report_text(const std::vector<RelationResult>& results,
                                   int max_card);

std::string sln_report_json(const std::vector<SlnCheck>& checks, int max_card);
std::string sln_report_csv(const std::vector<SlnCheck>& checks);
std::string sln_report_text(const std::vector<SlnCheck>& checks, int max_card);

}  // namespace spancalc
