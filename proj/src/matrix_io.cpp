#include "epquad/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace epquad {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_body(std::ofstream& out, const Eigen::MatrixXd& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_full(m(r, c));
    }
    out << '\n';
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_matrix(const std::string& path, const Eigen::MatrixXd& m) {
  auto out = open_out(path);
  write_body(out, m);
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  Eigen::Index rows = -1, cols = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    if (!(hs >> rows >> cols) || rows < 0 || cols < 0) {
      throw std::runtime_error("malformed matrix header in " + path);
    }
    break;
  }
  if (rows < 0) throw std::runtime_error("missing matrix header in " + path);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) {
      throw std::runtime_error("truncated matrix in " + path);
    }
    std::istringstream rs(line);
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!(rs >> m(r, c))) {
        std::ostringstream os;
        os << "malformed row " << r + 1 << " in " << path;
        throw std::runtime_error(os.str());
      }
    }
  }
  return m;
}

void write_quadop(const std::string& path, const QuadOp& H) {
  auto out = open_out(path);
  out << "# quadop n=" << H.dim() << '\n';
  write_body(out, H.matrix());
}

QuadOp read_quadop(const std::string& path) {
  Eigen::MatrixXd m = read_matrix(path);
  return QuadOp(std::move(m));  // validates cols == rows^2
}

}  // namespace epquad
