#include "tropirange/maxcore.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tropirange {

namespace {

std::string shape_of(const Eigen::Ref<const Matrix>& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

void require_max_matrix(const Eigen::Ref<const Matrix>& a, const char* what) {
  if (a.rows() < 1 || a.cols() < 1)
    throw std::invalid_argument(std::string(what) + ": dimensions must be at least 1x1, got " +
                                shape_of(a));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const double v = a(i, j);
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(std::string(what) + ": entry (" + std::to_string(i + 1) +
                                    "," + std::to_string(j + 1) +
                                    ") must be finite and nonnegative, got " + std::to_string(v));
    }
}

double sorted_product(std::vector<double> factors) {
  std::sort(factors.begin(), factors.end());
  double prod = 1.0;
  for (double f : factors) prod *= f;
  return prod;
}

void require_square(const Eigen::Ref<const Matrix>& a, const char* op) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(op) + ": matrix must be square, got " + shape_of(a));
  if (a.rows() < 1)
    throw std::invalid_argument(std::string(op) + ": matrix must be at least 1x1");
}

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  const Index n = static_cast<Index>(images_.size());
  if (n < 1) throw std::invalid_argument("Permutation: size must be at least 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection on {0.." +
                                  std::to_string(n - 1) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(Index n) {
  std::vector<Index> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), Index{0});
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (Index i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[i])] = i;
  return Permutation(std::move(inv));
}

Matrix Permutation::to_matrix() const {
  const Index n = size();
  Matrix p = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) p((*this)(i), i) = 1.0;
  return p;
}

Matrix max_mul(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("max_mul: inner dimensions disagree (" + shape_of(a) + " vs " +
                                shape_of(b) + ")");
  Matrix r(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      r(i, j) = (a.row(i).transpose().array() * b.col(j).array()).maxCoeff();
  return r;
}

Matrix max_add(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_add: shapes disagree (" + shape_of(a) + " vs " + shape_of(b) +
                                ")");
  return a.cwiseMax(b);
}

Matrix max_pow(const Eigen::Ref<const Matrix>& a, Index k) {
  require_square(a, "max_pow");
  if (k < 0) throw std::invalid_argument("max_pow: exponent must be nonnegative");
  if (k == 0) return Matrix::Identity(a.rows(), a.rows());
  Matrix r = a;
  for (Index i = 1; i < k; ++i) r = max_mul(r, a);
  return r;
}

double trace_max(const Eigen::Ref<const Matrix>& a) {
  require_square(a, "trace_max");
  return a.diagonal().maxCoeff();
}

double norm_max(const Eigen::Ref<const Matrix>& a) {
  if (a.size() == 0) throw std::invalid_argument("norm_max: empty matrix");
  return a.cwiseAbs().maxCoeff();
}

Matrix conjugate_by_permutation(const Eigen::Ref<const Matrix>& a, const Permutation& sigma) {
  require_square(a, "conjugate_by_permutation");
  if (sigma.size() != a.rows())
    throw std::invalid_argument("conjugate_by_permutation: permutation size " +
                                std::to_string(sigma.size()) + " does not match matrix " +
                                shape_of(a));
  const Index n = a.rows();
  Matrix r(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) r(i, j) = a(sigma(i), sigma(j));
  return r;
}

Permutation sort_diagonal_permutation(const Eigen::Ref<const Matrix>& a) {
  require_square(a, "sort_diagonal_permutation");
  std::vector<Index> idx(static_cast<std::size_t>(a.rows()));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Index i, Index j) { return a(i, i) < a(j, j); });
  return Permutation(std::move(idx));
}

// --- text format ------------------------------------------------------------

namespace {

std::vector<double> parse_row(const std::string& line, std::size_t lineno) {
  std::string s = line;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream iss(s);
  std::vector<double> row;
  std::string tok;
  while (iss >> tok) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("matrix parse: bad token '" + tok + "' on line " +
                                  std::to_string(lineno));
    }
    if (pos != tok.size())
      throw std::invalid_argument("matrix parse: bad token '" + tok + "' on line " +
                                  std::to_string(lineno));
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("matrix parse: entry " + tok + " on line " +
                                  std::to_string(lineno) + " must be finite and nonnegative");
    row.push_back(v);
  }
  return row;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }
  return std::string(buf, p);
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  Index header_rows = -1, header_cols = -1;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    if (trimmed[0] == '#') {
      if (first_content) {
        std::istringstream hs(trimmed.substr(1));
        long r = 0, c = 0;
        if (hs >> r >> c) {
          header_rows = r;
          header_cols = c;
        }
        first_content = false;
      }
      continue;
    }
    first_content = false;
    std::vector<double> row = parse_row(trimmed, lineno);
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("matrix parse: row on line " + std::to_string(lineno) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix parse: no rows found");
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.front().size());
  if (header_rows >= 0 && (header_rows != r || header_cols != c))
    throw std::invalid_argument("matrix parse: header announces " + std::to_string(header_rows) +
                                "x" + std::to_string(header_cols) + " but body is " +
                                std::to_string(r) + "x" + std::to_string(c));
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  require_max_matrix(m, "matrix parse");
  return m;
}

Matrix parse_matrix_string(const std::string& text) {
  std::istringstream iss(text);
  return parse_matrix(iss);
}

Matrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return parse_matrix(in);
}

std::string format_matrix(const Eigen::Ref<const Matrix>& a) {
  std::string out = "# " + std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += format_double(a(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::string& path, const Eigen::Ref<const Matrix>& a) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << format_matrix(a);
}

}  // namespace tropirange
