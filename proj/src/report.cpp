#include "spancalc/report.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spancalc/young.hpp"

namespace spancalc {

namespace {

using nlohmann::json;

// nlohmann keeps object keys sorted, so dump() is deterministic.
std::string finish(const json& j) { return j.dump(2) + "\n"; }

std::string label_str(const std::vector<int>& v) { return json(v).dump(); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_header() {
  return "schema_version," + std::to_string(kSchemaVersion) + "\n";
}

template <typename Cell>
std::string grid_csv(const std::vector<std::vector<int>>& rows,
                     const std::vector<std::vector<int>>& cols,
                     const std::vector<std::vector<Cell>>& entries,
                     const std::function<std::string(const Cell&)>& show) {
  std::string out = csv_header();
  out += "label";
  for (const auto& c : cols) out += "," + csv_quote(label_str(c));
  out += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += csv_quote(label_str(rows[r]));
    for (const auto& cell : entries[r]) out += "," + show(cell);
    out += "\n";
  }
  return out;
}

template <typename Cell>
std::string grid_text(const std::string& title,
                      const std::vector<std::vector<int>>& rows,
                      const std::vector<std::vector<int>>& cols,
                      const std::vector<std::vector<Cell>>& entries,
                      const std::function<std::string(const Cell&)>& show) {
  std::vector<std::string> row_names;
  row_names.reserve(rows.size());
  std::size_t name_w = 0;
  for (const auto& r : rows) {
    row_names.push_back(label_str(r));
    name_w = std::max(name_w, row_names.back().size());
  }
  std::vector<std::vector<std::string>> cells(rows.size());
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    width[c] = label_str(cols[c]).size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      cells[r].push_back(show(entries[r][c]));
      width[c] = std::max(width[c], cells[r].back().size());
    }
  }
  std::ostringstream out;
  out << title << " (schema " << kSchemaVersion << ", " << rows.size() << "x"
      << cols.size() << ")\n";
  out << std::string(name_w, ' ');
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::string l = label_str(cols[c]);
    out << "  " << std::string(width[c] - l.size(), ' ') << l;
  }
  out << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << row_names[r] << std::string(name_w - row_names[r].size(), ' ');
    for (std::size_t c = 0; c < cols.size(); ++c)
      out << "  " << std::string(width[c] - cells[r][c].size(), ' ')
          << cells[r][c];
    out << "\n";
  }
  return out.str();
}

std::string show_rational(const Rational& q) { return q.str(); }
std::string show_int(const long long& v) { return std::to_string(v); }

json qmatrix_entries(const QMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& q : row) r.push_back(q.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

struct LatticeData {
  std::vector<Partition> nodes;
  std::vector<std::pair<Partition, Partition>> edges;
};

LatticeData lattice_data(int max_n) {
  if (max_n < 0) throw std::invalid_argument("lattice bound must be >= 0");
  LatticeData d;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& p : partitions_of(n)) {
      d.nodes.push_back(p);
      if (n == max_n) continue;
      for (const auto& up : branch_up(p)) d.edges.emplace_back(p, up);
    }
  return d;
}

json verification_shell(const std::string& suite, int max_card, bool passed,
                        std::size_t total, std::size_t good) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = std::string("spancalc ") + kToolVersion;
  j["kind"] = "verification";
  j["suite"] = suite;
  j["max_card"] = max_card;
  j["status"] = passed ? "pass" : "fail";
  j["total"] = total;
  j["passed"] = good;
  return j;
}

std::size_t count_pass(const std::vector<RelationResult>& results) {
  std::size_t good = 0;
  for (const auto& r : results) good += r.pass ? 1 : 0;
  return good;
}

std::size_t count_pass(const std::vector<SlnCheck>& checks) {
  std::size_t good = 0;
  for (const auto& c : checks) good += c.pass ? 1 : 0;
  return good;
}

}  // namespace

std::string qmatrix_json(const QMatrix& m, const std::string& title) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "rational-matrix";
  j["title"] = title;
  j["row_labels"] = m.row_labels;
  j["col_labels"] = m.col_labels;
  j["entries"] = qmatrix_entries(m);
  return finish(j);
}

std::string qmatrix_csv(const QMatrix& m) {
  return grid_csv<Rational>(m.row_labels, m.col_labels, m.entries,
                            show_rational);
}

std::string qmatrix_text(const QMatrix& m, const std::string& title) {
  return grid_text<Rational>(title, m.row_labels, m.col_labels, m.entries,
                             show_rational);
}

std::string dimblock_json(const DimBlock& b, const std::string& title) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "integer-block";
  j["title"] = title;
  j["row_labels"] = b.rows;
  j["col_labels"] = b.cols;
  j["entries"] = b.entries;
  return finish(j);
}

std::string dimblock_csv(const DimBlock& b) {
  return grid_csv<long long>(b.rows, b.cols, b.entries, show_int);
}

std::string dimblock_text(const DimBlock& b, const std::string& title) {
  return grid_text<long long>(title, b.rows, b.cols, b.entries, show_int);
}

std::string lattice_dot(int max_n) {
  const LatticeData d = lattice_data(max_n);
  std::string out = "digraph young_lattice {\n  rankdir=BT;\n";
  for (const auto& p : d.nodes) out += "  \"" + label_str(p) + "\";\n";
  for (const auto& [from, to] : d.edges)
    out += "  \"" + label_str(from) + "\" -> \"" + label_str(to) + "\";\n";
  return out + "}\n";
}

std::string lattice_json(int max_n) {
  const LatticeData d = lattice_data(max_n);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "young-lattice";
  j["max"] = max_n;
  j["nodes"] = d.nodes;
  json edges = json::array();
  for (const auto& [from, to] : d.edges)
    edges.push_back(json::array({from, to}));
  j["edges"] = std::move(edges);
  return finish(j);
}

std::string sequence_json(const std::vector<Rational>& values,
                          const std::string& title) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sequence";
  j["title"] = title;
  json vals = json::array();
  for (const auto& q : values) vals.push_back(q.str());
  j["values"] = std::move(vals);
  return finish(j);
}

std::string sequence_csv(const std::vector<Rational>& values) {
  std::string out = csv_header() + "index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out += std::to_string(i) + "," + values[i].str() + "\n";
  return out;
}

std::string sequence_text(const std::vector<Rational>& values,
                          const std::string& title) {
  std::ostringstream out;
  out << title << " (schema " << kSchemaVersion << ")\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out << "  " << i << ": " << values[i].str() << "\n";
  return out.str();
}

bool all_pass(const std::vector<RelationResult>& results) {
  return count_pass(results) == results.size();
}

bool all_pass(const std::vector<SlnCheck>& checks) {
  return count_pass(checks) == checks.size();
}

std::string heisenberg_report_json(const std::vector<RelationResult>& results,
                                   int max_card) {
  json j = verification_shell("heisenberg", max_card, all_pass(results),
                              results.size(), count_pass(results));
  json checks = json::array();
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["relation"] = relation_kind_name(r.kind);
    c["pass"] = r.pass;
    c["bound"] = r.bound;
    c["lhs_components"] = r.lhs_components;
    c["rhs_components"] = r.rhs_components;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return finish(j);
}

std::string heisenberg_report_csv(const std::vector<RelationResult>& results) {
  std::string out =
      csv_header() + "name,relation,pass,bound,lhs_components,rhs_components\n";
  for (const auto& r : results)
    out += csv_quote(r.name) + "," + relation_kind_name(r.kind) + "," +
           (r.pass ? "true" : "false") + "," + std::to_string(r.bound) + "," +
           std::to_string(r.lhs_components) + "," +
           std::to_string(r.rhs_components) + "\n";
  return out;
}

std::string heisenberg_report_text(const std::vector<RelationResult>& results,
                                   int max_card) {
  std::ostringstream out;
  out << "heisenberg relations at window " << max_card << " (schema "
      << kSchemaVersion << ")\n";
  for (const auto& r : results)
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  ["
        << relation_kind_name(r.kind) << ", bound " << r.bound << ", lhs "
        << r.lhs_components << ", rhs " << r.rhs_components << "]\n";
  out << "overall: " << (all_pass(results) ? "PASS" : "FAIL") << " ("
      << count_pass(results) << "/" << results.size() << ")\n";
  return out.str();
}

std::string sln_report_json(const std::vector<SlnCheck>& checks,
                            int max_card) {
  json j = verification_shell("sln", max_card, all_pass(checks), checks.size(),
                              count_pass(checks));
  json list = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["relation"] = sln_relation_name(c.which);
    e["i"] = c.i;
    e["j"] = c.j;
    e["n"] = c.n;
    e["pass"] = c.pass;
    e["bound"] = c.bound;
    e["lhs_components"] = c.lhs_components;
    e["rhs_components"] = c.rhs_components;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  return finish(j);
}

std::string sln_report_csv(const std::vector<SlnCheck>& checks) {
  std::string out =
      csv_header() +
      "name,relation,i,j,n,pass,bound,lhs_components,rhs_components\n";
  for (const auto& c : checks)
    out += csv_quote(c.name) + "," + sln_relation_name(c.which) + "," +
           std::to_string(c.i) + "," + std::to_string(c.j) + "," +
           std::to_string(c.n) + "," + (c.pass ? "true" : "false") + "," +
           std::to_string(c.bound) + "," + std::to_string(c.lhs_components) +
           "," + std::to_string(c.rhs_components) + "\n";
  return out;
}

std::string sln_report_text(const std::vector<SlnCheck>& checks,
                            int max_card) {
  std::ostringstream out;
  out << "sl_n relations at window " << max_card << " (schema "
      << kSchemaVersion << ")\n";
  for (const auto& c : checks)
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [bound " << c.bound
        << ", lhs " << c.lhs_components << ", rhs " << c.rhs_components
        << "]\n";
  out << "overall: " << (all_pass(checks) ? "PASS" : "FAIL") << " ("
      << count_pass(checks) << "/" << checks.size() << ")\n";
  return out.str();
}

}  // namespace spancalc
