#include "fockparse/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "fockparse/error.hpp"
#include "fockparse/lcparser.hpp"

namespace fockparse {

Trajectory trajectory(const Grammar& g, const Sentence& sentence) {
  const Signature sig = signature_of(g);
  const InteractiveParse ip = interactive_parse(g, sentence);
  if (!ip.accepted) throw ParseFailure(ip.failure);
  Trajectory tr;
  for (std::size_t j = 0; j < ip.states.size(); ++j) {
    tr.labels.push_back(j < sentence.size() ? "shift " + sentence[j].name() : "accept");
    tr.terms.push_back(ip.states[j]);
    tr.vectors.push_back(embed(ip.states[j], sig));
    tr.depths.push_back(depth(ip.states[j]));
    tr.nominal_dims.push_back(fock_dim(sig.filler_dimension(),
                                       static_cast<std::uint64_t>(sig.role_dim()),
                                       tr.depths.back()));
  }
  return tr;
}

DenseMatrix densify(const std::vector<FockVector>& vs) {
  DenseMatrix d;
  if (vs.empty()) return d;
  const int rd = vs.front().role_dim();
  std::map<std::string, BasisKey> keys;
  for (const auto& v : vs) {
    if (v.role_dim() != rd) throw DomainError("densify: vectors have different role dimensions");
    for (const auto& [k, _] : v.entries()) keys.emplace(k.text(), k);
  }
  std::map<BasisKey, Eigen::Index> column;
  for (const auto& [_, k] : keys) {
    column.emplace(k, static_cast<Eigen::Index>(d.basis.size()));
    d.basis.push_back(k);
  }
  d.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(vs.size()),
                                   static_cast<Eigen::Index>(d.basis.size()));
  for (std::size_t r = 0; r < vs.size(); ++r) {
    for (const auto& [k, c] : vs[r].entries())
      d.values(static_cast<Eigen::Index>(r), column.at(k)) = c;
  }
  return d;
}

PcaResult pca_project(const std::vector<FockVector>& vs, std::size_t k) {
  DenseMatrix d = densify(vs);
  const auto rows = static_cast<std::size_t>(d.values.rows());
  const auto cols = static_cast<std::size_t>(d.values.cols());
  if (k < 1 || k > std::min(rows, cols))
    throw DomainError("pca: k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(std::min(rows, cols)) + "]");

  const Eigen::RowVectorXd mean = d.values.colwise().mean();
  const Eigen::MatrixXd centred = d.values.rowwise() - mean;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centred, Eigen::ComputeThinU | Eigen::ComputeThinV);

  const auto ki = static_cast<Eigen::Index>(k);
  PcaResult out;
  out.basis = std::move(d.basis);
  out.components = svd.matrixV().leftCols(ki).transpose();
  for (Eigen::Index c = 0; c < ki; ++c) {
    Eigen::Index arg = 0;
    out.components.row(c).cwiseAbs().maxCoeff(&arg);
    if (out.components(c, arg) < 0) out.components.row(c) *= -1.0;
  }
  const double denom = rows > 1 ? static_cast<double>(rows - 1) : 1.0;
  out.explained_variance = svd.singularValues().head(ki).array().square() / denom;
  if (rows == 1) out.explained_variance.setZero();
  out.projected = centred * out.components.transpose();
  return out;
}

namespace {

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string pca_csv(const PcaResult& r, const std::vector<std::string>& labels) {
  if (labels.size() != static_cast<std::size_t>(r.projected.rows()))
    throw DomainError("pca_csv: one label per projected row required");
  std::string out = "label";
  for (Eigen::Index c = 0; c < r.projected.cols(); ++c) out += ",pc" + std::to_string(c + 1);
  out += "\n";
  for (Eigen::Index i = 0; i < r.projected.rows(); ++i) {
    out += labels[static_cast<std::size_t>(i)];
    for (Eigen::Index c = 0; c < r.projected.cols(); ++c) out += "," + format17(r.projected(i, c));
    out += "\n";
  }
  return out;
}

CsvTable parse_pca_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("label"))
    throw InputError("pca csv: missing header");
  const auto cols = static_cast<Eigen::Index>(std::count(line.begin(), line.end(), ','));
  std::vector<std::vector<double>> rows;
  CsvTable t;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (static_cast<Eigen::Index>(fields.size()) != cols + 1)
      throw SyntaxError(line_no, "wrong number of fields");
    t.labels.push_back(fields.front());
    std::vector<double> row;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double x = 0;
      const auto& s = fields[i];
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw SyntaxError(line_no, "invalid number '" + s + "'");
      row.push_back(x);
    }
    rows.push_back(std::move(row));
  }
  t.values.resize(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Eigen::Index c = 0; c < cols; ++c)
      t.values(static_cast<Eigen::Index>(i), c) = rows[i][static_cast<std::size_t>(c)];
  }
  return t;
}

}  // namespace fockparse
