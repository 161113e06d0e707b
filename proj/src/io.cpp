#include "regame/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace regame {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const SweepRecord& r : records) {
    out += format_number(r.regulation.theta_g);
    out += ',';
    out += format_number(r.regulation.theta_d);
    out += ',';
    out += format_number(r.delta);
    out += ',';
    out += r.outcome.abstained ? '1' : '0';
    out += ',';
    out += format_number(r.outcome.gamma0.alpha);
    out += ',';
    out += format_number(r.outcome.gamma0.beta);
    out += ',';
    out += format_number(r.outcome.gamma1.alpha);
    out += ',';
    out += format_number(r.outcome.gamma1.beta);
    out += ',';
    out += format_number(r.outcome.u_g);
    out += ',';
    out += format_number(r.outcome.u_d);
    out += ',';
    out += to_string(r.classification);
    out += ',';
    out += r.backfire ? '1' : '0';
    out += ',';
    out += r.mutualism ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double to_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                ": not a number: '" + s + "'");
  }
}

}  // namespace

std::vector<CsvRow> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("CSV is empty");
  const std::vector<std::string> header = split_csv_line(line);
  const std::vector<std::string> expected = split_csv_line(kSweepCsvHeader);
  std::vector<int> index(expected.size(), -1);
  for (std::size_t e = 0; e < expected.size(); ++e) {
    for (std::size_t h = 0; h < header.size(); ++h) {
      if (header[h] == expected[e]) {
        index[e] = static_cast<int>(h);
        break;
      }
    }
    if (index[e] < 0) {
      throw std::invalid_argument("CSV schema mismatch: missing column '" + expected[e] + "'");
    }
  }

  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() < header.size()) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": too few fields");
    }
    auto at = [&](std::size_t e) -> const std::string& {
      return f[static_cast<std::size_t>(index[e])];
    };
    CsvRow row;
    row.theta_g = to_double(at(0), line_no);
    row.theta_d = to_double(at(1), line_no);
    row.delta = to_double(at(2), line_no);
    row.abstain = to_double(at(3), line_no) != 0.0;
    row.alpha0 = to_double(at(4), line_no);
    row.beta0 = to_double(at(5), line_no);
    row.alpha1 = to_double(at(6), line_no);
    row.beta1 = to_double(at(7), line_no);
    row.u_g = to_double(at(8), line_no);
    row.u_d = to_double(at(9), line_no);
    row.cls = at(10);
    row.backfire = to_double(at(11), line_no) != 0.0;
    row.mutualism = to_double(at(12), line_no) != 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<CsvRow> read_sweep_csv(const std::string& path) {
  return parse_sweep_csv(read_file(path));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

}  // namespace

std::string outcome_to_json(const EquilibriumOutcome& o, int indent) {
  const std::string p = pad(indent);
  std::string s = p + "{\n";
  s += p + "  \"abstained\": " + (o.abstained ? "true" : "false") + ",\n";
  s += p + "  \"alpha0\": " + format_number(o.gamma0.alpha) + ",\n";
  s += p + "  \"beta0\": " + format_number(o.gamma0.beta) + ",\n";
  s += p + "  \"alpha1\": " + format_number(o.gamma1.alpha) + ",\n";
  s += p + "  \"beta1\": " + format_number(o.gamma1.beta) + ",\n";
  s += p + "  \"u_g\": " + format_number(o.u_g) + ",\n";
  s += p + "  \"u_d\": " + format_number(o.u_d) + ",\n";
  s += p + "  \"g_candidate\": \"" + to_string(o.g_candidate) + "\",\n";
  s += p + "  \"d_candidate\": \"" + to_string(o.d_candidate) + "\"\n";
  s += p + "}";
  return s;
}

std::string bargain_to_json(const BargainResult& r) {
  std::string s = "{\n";
  s += "  \"delta_star\": " + format_number(r.delta_star) + ",\n";
  s += "  \"score\": " + format_number(r.score) + ",\n";
  s += "  \"viable\": " + std::string(r.viable ? "true" : "false") + ",\n";
  if (!r.viable) s += "  \"note\": \"no viable bargain\",\n";
  s += "  \"outcome\":\n" + outcome_to_json(r.outcome, 2) + "\n";
  s += "}";
  return s;
}

std::string compare_to_json(const CompareReport& r) {
  std::string s = "{\n";
  s += "  \"pass\": " + std::string(r.pass ? "true" : "false") + ",\n";
  s += "  \"du_g\": " + format_number(r.du_g) + ",\n";
  s += "  \"du_d\": " + format_number(r.du_d) + ",\n";
  s += "  \"dist_gamma0\": " + format_number(r.dist_gamma0) + ",\n";
  s += "  \"dist_gamma1\": " + format_number(r.dist_gamma1) + ",\n";
  s += "  \"tol_u\": " + format_number(r.tol_u) + ",\n";
  s += "  \"tol_strategy\": " + format_number(r.tol_strategy) + "\n";
  s += "}";
  return s;
}

std::string probe_to_json(const ProbeReport& r, int indent) {
  const std::string p = pad(indent);
  std::string s = p + "{\n";
  s += p + "  \"hypothesis_met\": " + (r.hypothesis_met ? "true" : "false") + ",\n";
  s += p + "  \"pass\": " + std::string(r.pass ? "true" : "false") + ",\n";
  s += p + "  \"degenerate\": " + std::string(r.degenerate ? "true" : "false") + ",\n";
  s += p + "  \"beta0_unreg\": " + format_number(r.beta0_unreg) + ",\n";
  s += p + "  \"beta1_unreg\": " + format_number(r.beta1_unreg) + ",\n";
  s += p + "  \"backfire_at_beta0_minus_eps\": " +
       std::string(r.backfire_at_beta0_minus_eps ? "true" : "false") + ",\n";
  s += p + "  \"backfire_at_beta1_minus_eps\": " +
       std::string(r.backfire_at_beta1_minus_eps ? "true" : "false") + ",\n";
  s += p + "  \"first_backfire_theta_d\": " + format_number(r.first_backfire_theta_d) + ",\n";
  s += p + "  \"theta_g\": " + format_number(r.regulation.theta_g) + ",\n";
  s += p + "  \"theta_d\": " + format_number(r.regulation.theta_d) + ",\n";
  s += p + "  \"d_ug\": " + format_number(r.d_ug) + ",\n";
  s += p + "  \"d_ud\": " + format_number(r.d_ud) + ",\n";
  s += p + "  \"message\": \"" + r.message + "\"\n";
  s += p + "}";
  return s;
}

}  // namespace regame
