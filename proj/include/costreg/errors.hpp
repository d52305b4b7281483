#ifndef COSTREG_ERRORS_HPP
#define COSTREG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace costreg {

// Error taxonomy mirrors the CLI exit codes:
//   ConfigError  -> 1 (usage / configuration)
//   DataError    -> 2 (dataset / file contents)
//   NumericError -> 3 (ill-posed or non-converged solve)
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

// data module

struct MissingLabelColumn : DataError {
  explicit MissingLabelColumn(const std::string& name)
      : DataError("label column not found in header: " + name) {}
};

// Indices are 0-based: `row` counts data rows (header excluded), `col`
// counts header columns.
struct NonNumericCell : DataError {
  NonNumericCell(std::size_t row_, std::size_t col_, const std::string& text)
      : DataError("non-numeric cell at row " + std::to_string(row_) + ", column " +
                  std::to_string(col_) + ": \"" + text + "\""),
        row(row_),
        col(col_) {}
  std::size_t row;
  std::size_t col;
};

struct EmptyFile : DataError {
  explicit EmptyFile(const std::string& path)
      : DataError("no data rows in file: " + path) {}
};

struct RaggedRow : DataError {
  RaggedRow(std::size_t row_, std::size_t expected, std::size_t got)
      : DataError("row " + std::to_string(row_) + " has " + std::to_string(got) +
                  " cells, expected " + std::to_string(expected)),
        row(row_) {}
  std::size_t row;
};

struct TooFewRows : DataError {
  explicit TooFewRows(const std::string& what) : DataError(what) {}
};

struct BadLabels : DataError {
  explicit BadLabels(const std::string& what) : DataError(what) {}
};

struct BadFoldCount : ConfigError {
  explicit BadFoldCount(const std::string& what) : ConfigError(what) {}
};

// shared

struct DimensionMismatch : ConfigError {
  explicit DimensionMismatch(const std::string& what) : ConfigError(what) {}
};

// solvers

struct IllPosed : NumericError {
  explicit IllPosed(const std::string& what) : NumericError(what) {}
};

struct NotConverged : NumericError {
  explicit NotConverged(const std::string& what) : NumericError(what) {}
};

struct UnsupportedPenalty : ConfigError {
  explicit UnsupportedPenalty(const std::string& what) : ConfigError(what) {}
};

// cost module

struct NotQuantified : ConfigError {
  explicit NotQuantified(const std::string& what) : ConfigError(what) {}
};

struct BothZero : ConfigError {
  explicit BothZero(const std::string& what) : ConfigError(what) {}
};

// usefulness module

struct BadRange : ConfigError {
  explicit BadRange(const std::string& what) : ConfigError(what) {}
};

}  // namespace costreg

#endif  // COSTREG_ERRORS_HPP
