#ifndef COSTREG_DATASET_HPP
#define COSTREG_DATASET_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace costreg {

using Index = Eigen::Index;

// Immutable after construction; safe to share across concurrent readers.
struct Dataset {
  Eigen::MatrixXd features;  // T x p
  Eigen::VectorXd labels;    // length T
  std::vector<std::string> feature_names;

  Index rows() const { return features.rows(); }
  Index cols() const { return features.cols(); }

  // Row-subset copy, preserving order of `which`.
  Dataset subset(const std::vector<Index>& which) const;
};

struct ScalingInfo {
  Eigen::VectorXd mean;   // per feature
  Eigen::VectorXd scale;  // per feature; 1 for constant columns
  std::vector<Index> constant_columns;

  // Maps standardized features back to the original units.
  Eigen::MatrixXd invert(const Eigen::MatrixXd& standardized) const;
};

struct FoldAssignment {
  std::vector<int> fold_of_row;  // values in [0, k)
  int k = 0;
  std::uint64_t seed = 0;

  std::vector<Index> rows_in_fold(int fold) const;
  std::vector<Index> rows_not_in_fold(int fold) const;
};

// Reads a comma-separated file with a header row. The label column is
// removed from the feature block. Cells are parsed as locale-independent
// decimal reals (scientific notation accepted).
Dataset load_csv(const std::string& path, const std::string& label_column);

// Centers each feature column and rescales to unit sample standard
// deviation ((n-1) denominator). Constant columns are zeroed and listed
// in ScalingInfo::constant_columns.
std::pair<Dataset, ScalingInfo> standardize(const Dataset& d);

// Deterministic balanced k-fold split: fold sizes differ by at most one,
// identical output for identical (T, k, seed).
FoldAssignment split_folds(const Dataset& d, int k, std::uint64_t seed);

}  // namespace costreg

#endif  // COSTREG_DATASET_HPP
