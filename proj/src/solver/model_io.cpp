// Copyright 2026 The Ventalloc Authors
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

#include "ventalloc/solver/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

constexpr std::size_t kLpLineWidth = 200;

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  if (value == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string lower_case(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::optional<double> parse_double(const std::string& token) {
  const std::string lower = lower_case(token);
  if (lower == "inf" || lower == "infinity" || lower == "+inf" || lower == "+infinity") {
    return kInfinity;
  }
  if (lower == "-inf" || lower == "-infinity") return -kInfinity;
  if (token.empty()) return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) return std::nullopt;
  return value;
}

// Collects columns in order of first appearance while a model is being read.
class ColumnTable {
 public:
  int get(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(columns_.size()));
    if (inserted) columns_.push_back(Column{name});
    return it->second;
  }
  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Column& operator[](int j) { return columns_[j]; }
  std::vector<Column>& columns() { return columns_; }

 private:
  std::map<std::string, int> index_;
  std::vector<Column> columns_;
};

// ---------------------------------------------------------------------------
// LP writer

class LpLineWriter {
 public:
  explicit LpLineWriter(std::ostream& out) : out_(out) {}
  void start(const std::string& text) {
    line_ = text;
  }
  void append(const std::string& piece) {
    if (line_.size() + piece.size() + 1 > kLpLineWidth && !line_.empty()) {
      out_ << line_ << '\n';
      line_ = "  ";
    }
    if (!line_.empty() && line_.back() != ' ') line_ += ' ';
    line_ += piece;
  }
  void finish() {
    out_ << line_ << '\n';
    line_.clear();
  }

 private:
  std::ostream& out_;
  std::string line_;
};

void write_terms(LpLineWriter& writer, const std::vector<int>& columns,
                 const std::vector<double>& coefficients, const MilpModel& model) {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const double c = coefficients[k];
    const std::string sign = (std::signbit(c) ? "- " : (k == 0 ? "" : "+ "));
    writer.append(sign + format_number(std::abs(c)) + " " + model.columns()[columns[k]].name);
  }
}

void write_lp(const MilpModel& model, std::ostream& out) {
  LpLineWriter writer(out);
  out << "\\ ventalloc allocation model: " << model.num_columns() << " columns, "
      << model.num_rows() << " rows\n";
  out << "Minimize\n";
  writer.start(" obj:");
  // Every column appears in the objective so readers recover the column order.
  std::vector<int> all(model.num_columns());
  std::vector<double> objective(model.num_columns());
  for (int j = 0; j < model.num_columns(); ++j) {
    all[j] = j;
    objective[j] = model.columns()[j].objective;
  }
  write_terms(writer, all, objective, model);
  writer.finish();

  out << "Subject To\n";
  for (const Row& row : model.rows()) {
    writer.start(" " + row.name + ":");
    if (row.columns.empty()) {
      if (model.num_columns() == 0) throw InputError("cannot write an empty row without columns");
      writer.append("0 " + model.columns()[0].name);
    } else {
      write_terms(writer, row.columns, row.coefficients, model);
    }
    const char* sense = row.sense == Sense::kLessEqual ? "<=" : row.sense == Sense::kEqual ? "=" : ">=";
    writer.append(std::string(sense) + " " + format_number(row.rhs));
    writer.finish();
  }

  out << "Bounds\n";
  for (const Column& col : model.columns()) {
    if (col.binary && col.lower == 0.0 && col.upper == 1.0) continue;
    if (std::isinf(col.lower) && col.lower < 0 && std::isinf(col.upper)) {
      out << ' ' << col.name << " free\n";
    } else if (col.lower == col.upper) {
      out << ' ' << col.name << " = " << format_number(col.lower) << '\n';
    } else if (col.lower == 0.0 && std::isinf(col.upper)) {
      continue;
    } else {
      out << ' ' << format_number(col.lower) << " <= " << col.name << " <= "
          << format_number(col.upper) << '\n';
    }
  }

  bool any_binary = false;
  for (const Column& col : model.columns()) {
    if (!col.binary) continue;
    if (!any_binary) out << "Binaries\n";
    any_binary = true;
    out << ' ' << col.name << '\n';
  }
  out << "End\n";
}

// ---------------------------------------------------------------------------
// LP reader

struct Token {
  std::string text;
  int line = 0;
};

bool is_operator_char(char c) { return c == '<' || c == '>' || c == '=' || c == ':'; }

std::vector<Token> tokenize_lp(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto pos = line.find('\\'); pos != std::string::npos) line.resize(pos);
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '+' || c == '-') {
        tokens.push_back({std::string(1, c), number});
        ++i;
      } else if (is_operator_char(c)) {
        std::size_t j = i + 1;
        while (j < line.size() && (line[j] == '<' || line[j] == '>' || line[j] == '=')) ++j;
        tokens.push_back({line.substr(i, j - i), number});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        const char* begin = line.c_str() + i;
        char* end = nullptr;
        std::strtod(begin, &end);
        if (end == begin) fail(number, "malformed number");
        tokens.push_back({std::string(begin, static_cast<const char*>(end)), number});
        i += static_cast<std::size_t>(end - begin);
      } else {
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               !is_operator_char(line[j]) && line[j] != '+' && line[j] != '-') {
          ++j;
        }
        tokens.push_back({line.substr(i, j - i), number});
        i = j;
      }
    }
  }
  return tokens;
}

enum class LpSection { kNone, kObjective, kConstraints, kBounds, kBinaries, kGenerals, kEnd };

class LpReader {
 public:
  explicit LpReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  MilpModel read() {
    LpSection section = LpSection::kNone;
    while (pos_ < tokens_.size()) {
      if (auto next = section_at(pos_)) {
        section = *next;
        if (section == LpSection::kGenerals) {
          fail(tokens_[pos_].line, "general integer columns are not supported");
        }
        if (section == LpSection::kEnd) break;
        continue;
      }
      switch (section) {
        case LpSection::kNone: fail(tokens_[pos_].line, "expected Minimize");
        case LpSection::kObjective: read_objective(); break;
        case LpSection::kConstraints: read_constraint(); break;
        case LpSection::kBounds: read_bound(); break;
        case LpSection::kBinaries: read_binary(); break;
        default: break;
      }
    }
    MilpModel model;
    for (Column& col : table_.columns()) {
      if (col.binary) {
        col.lower = std::max(col.lower, 0.0);
        if (!bounded_.count(col.name)) col.upper = 1.0;
        col.upper = std::min(col.upper, 1.0);
      }
      model.add_column(col);
    }
    for (Row& row : rows_) model.add_row(std::move(row));
    return model;
  }

 private:
  // Recognizes a section keyword at `i` and advances past it.
  std::optional<LpSection> section_at(std::size_t i) {
    const std::string word = lower_case(tokens_[i].text);
    auto take = [&](std::size_t count, LpSection s) {
      pos_ = i + count;
      return std::optional<LpSection>(s);
    };
    const bool followed_by_colon = i + 1 < tokens_.size() && tokens_[i + 1].text == ":";
    if (followed_by_colon) return std::nullopt;
    if (word == "minimize" || word == "minimum" || word == "min") return take(1, LpSection::kObjective);
    if (word == "maximize" || word == "maximum" || word == "max") {
      fail(tokens_[i].line, "only minimization models are supported");
    }
    if (word == "subject" && i + 1 < tokens_.size() && lower_case(tokens_[i + 1].text) == "to") {
      return take(2, LpSection::kConstraints);
    }
    if (word == "such" && i + 1 < tokens_.size() && lower_case(tokens_[i + 1].text) == "that") {
      return take(2, LpSection::kConstraints);
    }
    if (word == "st" || word == "s.t.") return take(1, LpSection::kConstraints);
    if (word == "bounds" || word == "bound") return take(1, LpSection::kBounds);
    if (word == "binaries" || word == "binary" || word == "bin") return take(1, LpSection::kBinaries);
    if (word == "generals" || word == "general" || word == "gen") return take(1, LpSection::kGenerals);
    if (word == "end") return take(1, LpSection::kEnd);
    if (word == "semi-continuous" || word == "semis" || word == "sos") {
      fail(tokens_[i].line, "section '" + tokens_[i].text + "' is not supported");
    }
    return std::nullopt;
  }

  bool at_section() {
    if (pos_ >= tokens_.size()) return true;
    const std::size_t saved = pos_;
    const bool hit = section_at(pos_).has_value();
    pos_ = saved;
    return hit;
  }

  static bool is_sense(const std::string& t) {
    return t == "<=" || t == ">=" || t == "=" || t == "<" || t == ">" || t == "=<" || t == "=>";
  }

  std::optional<std::string> take_label() {
    if (pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == ":") {
      std::string label = tokens_[pos_].text;
      pos_ += 2;
      return label;
    }
    return std::nullopt;
  }

  // Reads `[+-] [coef] name` terms until a sense operator or a section keyword.
  void read_terms(std::map<int, double>& terms, std::vector<int>& order) {
    while (pos_ < tokens_.size() && !is_sense(tokens_[pos_].text) && !at_section()) {
      double sign = 1.0;
      while (pos_ < tokens_.size() && (tokens_[pos_].text == "+" || tokens_[pos_].text == "-")) {
        if (tokens_[pos_].text == "-") sign = -sign;
        ++pos_;
      }
      if (pos_ >= tokens_.size()) fail(tokens_.back().line, "unexpected end of file in expression");
      double coefficient = 1.0;
      if (auto value = parse_double(tokens_[pos_].text);
          value && !std::isalpha(static_cast<unsigned char>(tokens_[pos_].text[0]))) {
        coefficient = *value;
        ++pos_;
      }
      if (pos_ >= tokens_.size()) fail(tokens_.back().line, "missing variable after coefficient");
      const Token& name = tokens_[pos_];
      if (is_sense(name.text) || name.text == ":" || parse_double(name.text)) {
        fail(name.line, "expected a variable name, got '" + name.text + "'");
      }
      const int j = table_.get(name.text);
      if (!terms.count(j)) order.push_back(j);
      terms[j] += sign * coefficient;
      ++pos_;
    }
  }

  void read_objective() {
    take_label();
    std::map<int, double> terms;
    std::vector<int> order;
    read_terms(terms, order);
    for (int j : order) table_[j].objective += terms[j];
  }

  double read_signed_number() {
    if (pos_ >= tokens_.size()) fail(tokens_.back().line, "missing number");
    double sign = 1.0;
    if (tokens_[pos_].text == "+" || tokens_[pos_].text == "-") {
      if (tokens_[pos_].text == "-") sign = -1.0;
      ++pos_;
    }
    if (pos_ >= tokens_.size()) fail(tokens_.back().line, "missing number");
    auto value = parse_double(tokens_[pos_].text);
    if (!value) fail(tokens_[pos_].line, "expected a number, got '" + tokens_[pos_].text + "'");
    ++pos_;
    return sign * *value;
  }

  void read_constraint() {
    const int line = tokens_[pos_].line;
    Row row;
    row.name = take_label().value_or("R" + std::to_string(rows_.size() + 1));
    std::map<int, double> terms;
    std::vector<int> order;
    read_terms(terms, order);
    if (pos_ >= tokens_.size() || !is_sense(tokens_[pos_].text)) {
      fail(line, "constraint '" + row.name + "' has no sense");
    }
    const std::string sense = tokens_[pos_++].text;
    row.sense = sense[0] == '<' || sense == "=<" ? Sense::kLessEqual
                : sense[0] == '>' || sense == "=>" ? Sense::kGreaterEqual
                                                    : Sense::kEqual;
    row.rhs = read_signed_number();
    for (int j : order) {
      if (terms[j] == 0.0) continue;
      row.columns.push_back(j);
      row.coefficients.push_back(terms[j]);
    }
    rows_.push_back(std::move(row));
  }

  std::optional<double> try_bound_value() {
    const std::size_t saved = pos_;
    double sign = 1.0;
    if (pos_ < tokens_.size() && (tokens_[pos_].text == "+" || tokens_[pos_].text == "-")) {
      if (tokens_[pos_].text == "-") sign = -1.0;
      ++pos_;
    }
    if (pos_ < tokens_.size()) {
      if (auto value = parse_double(tokens_[pos_].text)) {
        ++pos_;
        return sign * *value;
      }
    }
    pos_ = saved;
    return std::nullopt;
  }

  void apply_bound(Column& col, const std::string& sense, double value, bool value_first, int line) {
    bounded_.insert(col.name);
    const bool less = sense[0] == '<' || sense == "=<";
    const bool greater = sense[0] == '>' || sense == "=>";
    if (!less && !greater) {
      col.lower = col.upper = value;
    } else if (less != value_first) {
      col.upper = value;  // name <= v  or  v >= name
    } else {
      col.lower = value;  // name >= v  or  v <= name
    }
    if (col.lower > col.upper) fail(line, "empty bound interval for " + col.name);
  }

  void read_bound() {
    const int line = tokens_[pos_].line;
    if (auto first = try_bound_value()) {
      if (pos_ + 1 >= tokens_.size() || !is_sense(tokens_[pos_].text)) fail(line, "malformed bound");
      const std::string sense1 = tokens_[pos_++].text;
      Column& col = table_[table_.get(tokens_[pos_++].text)];
      apply_bound(col, sense1, *first, true, line);
      if (pos_ < tokens_.size() && tokens_[pos_].line == line && is_sense(tokens_[pos_].text)) {
        const std::string sense2 = tokens_[pos_++].text;
        apply_bound(col, sense2, read_signed_number(), false, line);
      }
      return;
    }
    Column& col = table_[table_.get(tokens_[pos_++].text)];
    if (pos_ < tokens_.size() && lower_case(tokens_[pos_].text) == "free") {
      ++pos_;
      bounded_.insert(col.name);
      col.lower = -kInfinity;
      col.upper = kInfinity;
      return;
    }
    if (pos_ >= tokens_.size() || !is_sense(tokens_[pos_].text)) fail(line, "malformed bound");
    const std::string sense = tokens_[pos_++].text;
    apply_bound(col, sense, read_signed_number(), false, line);
  }

  void read_binary() {
    table_[table_.get(tokens_[pos_++].text)].binary = true;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ColumnTable table_;
  std::vector<Row> rows_;
  std::set<std::string> bounded_;
};

// ---------------------------------------------------------------------------
// MPS

void write_mps(const MilpModel& model, std::ostream& out) {
  out << "NAME ventalloc\n";
  out << "ROWS\n N obj\n";
  for (const Row& row : model.rows()) {
    const char code = row.sense == Sense::kLessEqual ? 'L' : row.sense == Sense::kEqual ? 'E' : 'G';
    out << ' ' << code << ' ' << row.name << '\n';
  }
  std::vector<std::vector<std::pair<int, double>>> by_column(model.num_columns());
  for (int i = 0; i < model.num_rows(); ++i) {
    const Row& row = model.rows()[i];
    for (std::size_t k = 0; k < row.columns.size(); ++k) {
      by_column[row.columns[k]].emplace_back(i, row.coefficients[k]);
    }
  }
  out << "COLUMNS\n";
  bool in_marker = false;
  int marker = 0;
  for (int j = 0; j < model.num_columns(); ++j) {
    const Column& col = model.columns()[j];
    if (col.binary != in_marker) {
      out << " MARKER" << marker++ << " 'MARKER' " << (col.binary ? "'INTORG'" : "'INTEND'") << '\n';
      in_marker = col.binary;
    }
    if (col.objective != 0.0 || by_column[j].empty()) {
      out << ' ' << col.name << " obj " << format_number(col.objective) << '\n';
    }
    for (const auto& [i, value] : by_column[j]) {
      out << ' ' << col.name << ' ' << model.rows()[i].name << ' ' << format_number(value) << '\n';
    }
  }
  if (in_marker) out << " MARKER" << marker << " 'MARKER' 'INTEND'\n";
  out << "RHS\n";
  for (const Row& row : model.rows()) {
    if (row.rhs != 0.0) out << " RHS " << row.name << ' ' << format_number(row.rhs) << '\n';
  }
  out << "BOUNDS\n";
  for (const Column& col : model.columns()) {
    const std::string& name = col.name;
    if (col.binary && col.lower == 0.0 && col.upper == 1.0) {
      out << " BV BND " << name << '\n';
      continue;
    }
    const bool free_lower = std::isinf(col.lower) && col.lower < 0;
    const bool free_upper = std::isinf(col.upper);
    if (free_lower && free_upper) {
      out << " FR BND " << name << '\n';
    } else if (col.lower == col.upper) {
      out << " FX BND " << name << ' ' << format_number(col.lower) << '\n';
    } else {
      if (free_lower) out << " MI BND " << name << '\n';
      else if (col.lower != 0.0) out << " LO BND " << name << ' ' << format_number(col.lower) << '\n';
      if (!free_upper) out << " UP BND " << name << ' ' << format_number(col.upper) << '\n';
      else if (col.binary) out << " PL BND " << name << '\n';
    }
  }
  out << "ENDATA\n";
}

MilpModel read_mps_stream(std::istream& in) {
  enum class Section { kNone, kName, kRows, kColumns, kRhs, kBounds, kObjSense, kEnd };
  Section section = Section::kNone;
  std::string objective_row;
  std::map<std::string, int> row_index;
  std::set<std::string> free_rows;
  std::vector<Row> rows;
  ColumnTable table;
  std::set<std::string> bounded;
  bool integer_block = false;

  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string word; fields >> word;) f.push_back(word);
    if (f.empty()) continue;

    if (!std::isspace(static_cast<unsigned char>(line[0]))) {
      const std::string head = lower_case(f[0]);
      if (head == "name") section = Section::kName;
      else if (head == "rows") section = Section::kRows;
      else if (head == "columns") section = Section::kColumns;
      else if (head == "rhs") section = Section::kRhs;
      else if (head == "bounds") section = Section::kBounds;
      else if (head == "objsense") {
        section = Section::kObjSense;
        if (f.size() > 1 && lower_case(f[1]).rfind("max", 0) == 0) {
          fail(number, "only minimization models are supported");
        }
      } else if (head == "endata") {
        section = Section::kEnd;
        break;
      } else {
        fail(number, "section '" + f[0] + "' is not supported");
      }
      continue;
    }

    switch (section) {
      case Section::kObjSense:
        if (lower_case(f[0]).rfind("max", 0) == 0) fail(number, "only minimization models are supported");
        break;
      case Section::kRows: {
        if (f.size() != 2) fail(number, "ROWS entry needs a type and a name");
        const std::string type = lower_case(f[0]);
        if (type == "n") {
          if (objective_row.empty()) objective_row = f[1];
          else free_rows.insert(f[1]);
          break;
        }
        Row row;
        row.name = f[1];
        if (type == "l") row.sense = Sense::kLessEqual;
        else if (type == "e") row.sense = Sense::kEqual;
        else if (type == "g") row.sense = Sense::kGreaterEqual;
        else fail(number, "unknown row type '" + f[0] + "'");
        if (!row_index.emplace(row.name, static_cast<int>(rows.size())).second) {
          fail(number, "duplicate row '" + row.name + "'");
        }
        rows.push_back(std::move(row));
        break;
      }
      case Section::kColumns: {
        if (f.size() >= 3 && f[1] == "'MARKER'") {
          if (f[2] == "'INTORG'") integer_block = true;
          else if (f[2] == "'INTEND'") integer_block = false;
          else fail(number, "unknown marker " + f[2]);
          break;
        }
        if (f.size() != 3 && f.size() != 5) fail(number, "COLUMNS entry needs 3 or 5 fields");
        const int j = table.get(f[0]);
        if (integer_block) table[j].binary = true;
        for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
          auto value = parse_double(f[k + 1]);
          if (!value) fail(number, "malformed number '" + f[k + 1] + "'");
          if (f[k] == objective_row) {
            table[j].objective += *value;
          } else if (auto it = row_index.find(f[k]); it != row_index.end()) {
            if (*value == 0.0) continue;
            rows[it->second].columns.push_back(j);
            rows[it->second].coefficients.push_back(*value);
          } else if (!free_rows.count(f[k])) {
            fail(number, "unknown row '" + f[k] + "'");
          }
        }
        break;
      }
      case Section::kRhs: {
        if (f.size() != 3 && f.size() != 5) fail(number, "RHS entry needs 3 or 5 fields");
        for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
          auto value = parse_double(f[k + 1]);
          if (!value) fail(number, "malformed number '" + f[k + 1] + "'");
          if (f[k] == objective_row) {
            if (*value != 0.0) fail(number, "objective constants are not supported");
            continue;
          }
          auto it = row_index.find(f[k]);
          if (it == row_index.end()) fail(number, "unknown row '" + f[k] + "'");
          rows[it->second].rhs = *value;
        }
        break;
      }
      case Section::kBounds: {
        if (f.size() < 3) fail(number, "BOUNDS entry needs a type, a set name and a column");
        const std::string type = lower_case(f[0]);
        auto found = table.find(f[2]);
        if (!found) fail(number, "bound for unknown column '" + f[2] + "'");
        Column& col = table[*found];
        bounded.insert(col.name);
        const bool needs_value = type == "up" || type == "lo" || type == "fx";
        std::optional<double> value;
        if (needs_value) {
          if (f.size() != 4) fail(number, "bound '" + f[0] + "' needs a value");
          value = parse_double(f[3]);
          if (!value) fail(number, "malformed number '" + f[3] + "'");
        }
        if (type == "up") col.upper = *value;
        else if (type == "lo") col.lower = *value;
        else if (type == "fx") col.lower = col.upper = *value;
        else if (type == "fr") { col.lower = -kInfinity; col.upper = kInfinity; }
        else if (type == "mi") col.lower = -kInfinity;
        else if (type == "pl") col.upper = kInfinity;
        else if (type == "bv") { col.binary = true; col.lower = 0.0; col.upper = 1.0; }
        else fail(number, "unsupported bound type '" + f[0] + "'");
        break;
      }
      case Section::kName:
      case Section::kNone:
      case Section::kEnd:
        fail(number, "data outside a section");
    }
  }
  if (section != Section::kEnd) fail(number, "missing ENDATA");

  MilpModel model;
  for (Column& col : table.columns()) {
    if (col.binary) {
      if (!bounded.count(col.name)) col.upper = 1.0;
      if (col.lower < 0.0 || col.upper > 1.0) {
        throw InputError("integer column '" + col.name + "' is not binary");
      }
    }
    model.add_column(col);
  }
  for (Row& row : rows) model.add_row(std::move(row));
  return model;
}

}  // namespace

void export_model(const MilpModel& model, ModelFormat format, std::ostream& out) {
  if (format == ModelFormat::kLp) write_lp(model, out);
  else write_mps(model, out);
}

std::string export_model(const MilpModel& model, ModelFormat format) {
  std::ostringstream out;
  export_model(model, format, out);
  return out.str();
}

MilpModel read_lp(std::istream& in) {
  return LpReader(tokenize_lp(in)).read();
}

MilpModel read_mps(std::istream& in) { return read_mps_stream(in); }

MilpModel import_model(std::istream& in, ModelFormat format) {
  return format == ModelFormat::kLp ? read_lp(in) : read_mps(in);
}

std::vector<double> read_solution(std::istream& in, const MilpModel& model) {
  std::vector<double> values(model.num_columns(), 0.0);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string word; fields >> word;) f.push_back(word);
    if (f.empty() || f[0][0] == '#') continue;
    if (f.size() != 2) fail(number, "expected 'name value'");
    const auto column = model.column_by_name(f[0]);
    if (!column) fail(number, "unknown column '" + f[0] + "'");
    const auto value = parse_double(f[1]);
    if (!value || std::isinf(*value)) fail(number, "malformed value '" + f[1] + "'");
    values[*column] = *value;
  }
  return values;
}

void write_solution(std::ostream& out, const MilpModel& model, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != model.num_columns()) {
    throw ShapeMismatchError("solution has " + std::to_string(values.size()) + " values for " +
                             std::to_string(model.num_columns()) + " columns");
  }
  out << "# Objective value = " << format_number(model.objective_value(values)) << '\n';
  for (int j = 0; j < model.num_columns(); ++j) {
    out << model.columns()[j].name << ' ' << format_number(values[j]) << '\n';
  }
}

}  // namespace ventalloc
