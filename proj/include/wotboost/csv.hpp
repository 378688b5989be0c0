#pragma once

#include <iosfwd>
#include <string>

#include "wotboost/dataset.hpp"

namespace wotboost {

/// How to read a labelled CSV file. The header row is mandatory; every
/// non-label column must be numeric.
struct CsvSchema {
  /// Column holding the class label: a header name, or a 0-based column
  /// index when no header matches and the string is all digits. Empty means
  /// the last column.
  std::string label_column;
  /// Label value naming the minority class. Every other value in the label
  /// column names the majority; more than two distinct values is an error.
  std::string minority_value;
  char delimiter = ',';
};

/// Loads a dataset from disk.
/// Throws ParseError (with 1-based row and column in the message) on
/// malformed cells or ragged rows, UnknownLabelValue when the minority
/// value never occurs or a third label value shows up, InvertedClasses when
/// the configured minority is actually the larger class, and the usual
/// construction errors from make_dataset.
Dataset load_csv(const std::string& path, const CsvSchema& schema);

/// Same, reading from a stream; `origin` names the source in errors.
Dataset load_csv(std::istream& in, const CsvSchema& schema,
                 const std::string& origin = "<stream>");

}  // namespace wotboost
