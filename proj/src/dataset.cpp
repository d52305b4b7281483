#include "costreg/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "costreg/errors.hpp"

namespace costreg {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
  const std::string text = trim(raw);
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw NonNumericCell(row, col, text);
  return value;
}

}  // namespace

Dataset Dataset::subset(const std::vector<Index>& which) const {
  Dataset out;
  out.feature_names = feature_names;
  out.features.resize(static_cast<Index>(which.size()), features.cols());
  out.labels.resize(static_cast<Index>(which.size()));
  for (Index i = 0; i < static_cast<Index>(which.size()); ++i) {
    out.features.row(i) = features.row(which[static_cast<std::size_t>(i)]);
    out.labels(i) = labels(which[static_cast<std::size_t>(i)]);
  }
  return out;
}

Eigen::MatrixXd ScalingInfo::invert(const Eigen::MatrixXd& standardized) const {
  Eigen::MatrixXd out = standardized;
  for (Index j = 0; j < out.cols(); ++j)
    out.col(j) = out.col(j) * scale(j) + Eigen::VectorXd::Constant(out.rows(), mean(j));
  return out;
}

std::vector<Index> FoldAssignment::rows_in_fold(int fold) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < fold_of_row.size(); ++i)
    if (fold_of_row[i] == fold) out.push_back(static_cast<Index>(i));
  return out;
}

std::vector<Index> FoldAssignment::rows_not_in_fold(int fold) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < fold_of_row.size(); ++i)
    if (fold_of_row[i] != fold) out.push_back(static_cast<Index>(i));
  return out;
}

Dataset load_csv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw EmptyFile(path);

  std::vector<std::string> header = split_line(line);
  for (auto& h : header) h = trim(h);

  std::size_t label_index = header.size();
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == label_column) label_index = j;
  if (label_index == header.size()) throw MissingLabelColumn(label_column);

  std::vector<std::vector<double>> rows;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size())
      throw RaggedRow(row, header.size(), cells.size());
    std::vector<double> values(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j)
      values[j] = parse_cell(cells[j], row, j);
    rows.push_back(std::move(values));
    ++row;
  }
  if (rows.empty()) throw EmptyFile(path);

  const Index T = static_cast<Index>(rows.size());
  const Index p = static_cast<Index>(header.size()) - 1;
  if (p < 1) throw DataError("file has no feature columns: " + path);

  Dataset d;
  d.features.resize(T, p);
  d.labels.resize(T);
  for (std::size_t j = 0; j < header.size(); ++j)
    if (j != label_index) d.feature_names.push_back(header[j]);
  for (Index i = 0; i < T; ++i) {
    Index fj = 0;
    for (std::size_t j = 0; j < header.size(); ++j) {
      if (j == label_index)
        d.labels(i) = rows[static_cast<std::size_t>(i)][j];
      else
        d.features(i, fj++) = rows[static_cast<std::size_t>(i)][j];
    }
  }
  return d;
}

std::pair<Dataset, ScalingInfo> standardize(const Dataset& d) {
  const Index T = d.rows();
  const Index p = d.cols();
  if (T < 2) throw TooFewRows("standardize requires at least 2 rows, got " + std::to_string(T));

  ScalingInfo info;
  info.mean.resize(p);
  info.scale.resize(p);

  Dataset out = d;
  for (Index j = 0; j < p; ++j) {
    const double mean = d.features.col(j).mean();
    const double ss = (d.features.col(j).array() - mean).square().sum();
    const double sd = std::sqrt(ss / static_cast<double>(T - 1));
    info.mean(j) = mean;
    if (sd > 0.0) {
      info.scale(j) = sd;
      out.features.col(j) = (d.features.col(j).array() - mean) / sd;
    } else {
      info.scale(j) = 1.0;
      info.constant_columns.push_back(j);
      out.features.col(j).setZero();
    }
  }
  return {std::move(out), std::move(info)};
}

FoldAssignment split_folds(const Dataset& d, int k, std::uint64_t seed) {
  const Index T = d.rows();
  if (k < 2 || static_cast<Index>(k) > T)
    throw BadFoldCount("fold count must satisfy 2 <= k <= T; got k=" + std::to_string(k) +
                       ", T=" + std::to_string(T));

  std::vector<Index> order(static_cast<std::size_t>(T));
  for (Index i = 0; i < T; ++i) order[static_cast<std::size_t>(i)] = i;

  // Hand-rolled Fisher-Yates so the assignment is identical across
  // standard library implementations.
  std::mt19937_64 gen(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
    std::swap(order[i], order[j]);
  }

  FoldAssignment fa;
  fa.k = k;
  fa.seed = seed;
  fa.fold_of_row.assign(static_cast<std::size_t>(T), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    fa.fold_of_row[static_cast<std::size_t>(order[i])] = static_cast<int>(i % static_cast<std::size_t>(k));
  return fa;
}

}  // namespace costreg
