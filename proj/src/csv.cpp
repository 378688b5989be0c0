#include "wotboost/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wotboost/error.hpp"

namespace wotboost {

namespace {

// Splits one line on the delimiter, honoring double-quoted fields with
// doubled-quote escapes. Cell whitespace is trimmed outside quotes.
std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"' && cell.empty()) {
      quoted = true;
    } else if (c == delimiter) {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  for (std::string& s : cells) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    s = begin == std::string::npos ? std::string{} : s.substr(begin, end - begin + 1);
  }
  return cells;
}

double parse_number(const std::string& cell, std::size_t row1,
                    std::size_t col1, const std::string& origin) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc{} || result.ptr != last || cell.empty()) {
    throw ParseError(origin + ": row " + std::to_string(row1) + ", column " +
                     std::to_string(col1) + ": '" + cell +
                     "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError(origin + ": row " + std::to_string(row1) + ", column " +
                     std::to_string(col1) + ": non-finite value");
  }
  return value;
}

std::size_t resolve_label_column(const std::vector<std::string>& header,
                                 const std::string& wanted,
                                 const std::string& origin) {
  if (wanted.empty()) return header.size() - 1;
  const auto hit = std::find(header.begin(), header.end(), wanted);
  if (hit != header.end()) {
    return static_cast<std::size_t>(hit - header.begin());
  }
  const bool numeric = !wanted.empty() &&
                       std::all_of(wanted.begin(), wanted.end(), [](char c) {
                         return std::isdigit(static_cast<unsigned char>(c));
                       });
  if (numeric) {
    const std::size_t idx = std::stoul(wanted);
    if (idx < header.size()) return idx;
  }
  throw ParseError(origin + ": label column '" + wanted +
                   "' matches no header name or column index");
}

}  // namespace

Dataset load_csv(std::istream& in, const CsvSchema& schema,
                 const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw EmptyDataset(origin + ": no header row");
  }
  const std::vector<std::string> header = split_line(line, schema.delimiter);
  if (header.empty()) throw ParseError(origin + ": empty header row");
  const std::size_t label_at =
      resolve_label_column(header, schema.label_column, origin);

  std::vector<std::string> feature_names;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_at) feature_names.push_back(header[c]);
  }

  Matrix features(0, header.size() - 1);
  std::vector<std::string> raw_labels;
  std::vector<double> row_values(header.size() - 1);
  std::size_t row1 = 1;  // header was row 1
  while (std::getline(in, line)) {
    ++row1;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = split_line(line, schema.delimiter);
    if (cells.size() != header.size()) {
      throw ParseError(origin + ": row " + std::to_string(row1) + " has " +
                       std::to_string(cells.size()) + " cells, header has " +
                       std::to_string(header.size()));
    }
    std::size_t at = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_at) {
        raw_labels.push_back(cells[c]);
      } else {
        row_values[at++] = parse_number(cells[c], row1, c + 1, origin);
      }
    }
    features.append_row(row_values);
  }
  if (raw_labels.empty()) throw EmptyDataset(origin + ": no data rows");

  std::set<std::string> distinct(raw_labels.begin(), raw_labels.end());
  if (!distinct.contains(schema.minority_value)) {
    throw UnknownLabelValue(origin + ": minority value '" +
                            schema.minority_value +
                            "' never occurs in the label column");
  }
  if (distinct.size() > 2) {
    std::string listing;
    for (const std::string& v : distinct) {
      if (!listing.empty()) listing += ", ";
      listing += "'" + v + "'";
    }
    throw UnknownLabelValue(origin + ": label column holds " +
                            std::to_string(distinct.size()) +
                            " distinct values (" + listing +
                            "); binary labels required");
  }

  std::vector<ClassLabel> labels;
  labels.reserve(raw_labels.size());
  std::size_t n_minority = 0;
  for (const std::string& raw : raw_labels) {
    const bool minority = raw == schema.minority_value;
    labels.push_back(minority ? ClassLabel::Minority : ClassLabel::Majority);
    if (minority) ++n_minority;
  }
  if (n_minority * 2 > raw_labels.size()) {
    throw InvertedClasses(origin + ": minority value '" +
                          schema.minority_value + "' labels " +
                          std::to_string(n_minority) + " of " +
                          std::to_string(raw_labels.size()) +
                          " rows; that is the larger class");
  }
  return make_dataset(std::move(features), std::move(labels),
                      std::move(feature_names));
}

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_csv(in, schema, path);
}

}  // namespace wotboost
