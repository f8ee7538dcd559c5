#pragma once

#include <Eigen/Dense>
#include <string>

#include "epquad/quadop.hpp"

namespace epquad {

/// Plain-text matrix format shared by all tools:
///   - optional leading comment lines starting with '#'
///   - a header line "rows cols"
///   - one line per row, whitespace-separated decimals at 17 significant
///     digits (doubles round-trip bit-exactly)
void write_matrix(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix(const std::string& path);

/// QuadOp files carry a "# quadop n=<n>" comment ahead of the header.
void write_quadop(const std::string& path, const QuadOp& H);
QuadOp read_quadop(const std::string& path);

std::string format_full(double v);  // 17 significant digits

}  // namespace epquad
