#ifndef NNAPPROX_IO_HPP
#define NNAPPROX_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nnapprox/design.hpp"
#include "nnapprox/eval.hpp"
#include "nnapprox/nnls.hpp"
#include "nnapprox/selector.hpp"

namespace nnapprox {

namespace detail {

// Table-style scientific format with 6 fractional digits, e.g. 1.263660e-04.
inline std::string format_sci6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return buf;
}

}  // namespace detail

/// Writes via a temp file plus rename, so readers never see partial output.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

inline std::string params_csv_string(const SparseApproximant& approx) {
  std::ostringstream out;
  out << "i,u,v\n";
  for (std::size_t i = 0; i < approx.terms.size(); ++i) {
    out << (i + 1) << ',' << detail::format_sci6(approx.terms[i].u) << ','
        << detail::format_sci6(approx.terms[i].v) << '\n';
  }
  return out.str();
}

inline std::string trace_csv_string(const NnlsTrace& trace) {
  std::ostringstream out;
  out << "iter,residual_norm,support_size\n";
  char buf[32];
  for (const IterationRecord& rec : trace.records) {
    std::snprintf(buf, sizeof(buf), "%.17g", rec.residual_norm);
    out << rec.iter << ',' << buf << ',' << rec.support_size << '\n';
  }
  return out.str();
}

inline std::string error_curve_csv_string(const ErrorReport& report) {
  std::ostringstream out;
  out << "x,epsilon\n";
  char bx[32], be[32];
  for (std::size_t j = 0; j < report.nodes.size(); ++j) {
    std::snprintf(bx, sizeof(bx), "%.17g", report.nodes[j]);
    std::snprintf(be, sizeof(be), "%.17g", report.epsilon[j]);
    out << bx << ',' << be << '\n';
  }
  return out.str();
}

inline nlohmann::json params_json(const SparseApproximant& approx, double alpha) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : approx.terms) {
    terms.push_back({t.u, t.v});
  }
  return nlohmann::json{{"family", to_string(approx.family)},
                        {"alpha", alpha},
                        {"pin_value", approx.pin_value},
                        {"terms", terms},
                        {"selected_iter", approx.selected_iter},
                        {"residual_norm", approx.residual_norm}};
}

/// Debug dump of a design system: header line "n,l" then row-major entries
/// of the matrix followed by the right-hand side.
inline std::string system_csv_string(const DesignSystem& sys) {
  std::ostringstream out;
  out << sys.matrix.rows() << ',' << sys.matrix.cols() << '\n';
  char buf[32];
  for (Eigen::Index j = 0; j < sys.matrix.rows(); ++j) {
    for (Eigen::Index k = 0; k < sys.matrix.cols(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", sys.matrix(j, k));
      out << buf << (k + 1 < sys.matrix.cols() ? ',' : '\n');
    }
  }
  for (Eigen::Index j = 0; j < sys.rhs.size(); ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g", sys.rhs[j]);
    out << buf << (j + 1 < sys.rhs.size() ? ',' : '\n');
  }
  return out.str();
}

}  // namespace nnapprox

#endif  // NNAPPROX_IO_HPP
