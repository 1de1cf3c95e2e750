#include "fdt/curves.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "fdt/error.hpp"

namespace fdt {
namespace {

using RowFn = std::function<std::vector<double>(long)>;

// Rows are independent, so the OpenMP path fills the same slots as the
// serial loop and the table is identical either way.
std::vector<std::vector<double>> evaluate_rows(long count, const RowFn& row, Execution exec) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(count));
  const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = row(i);
  return rows;
}

double parse_real(std::string_view s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("parse_csv: bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void add_params(CurveTable& t, const DoubleFermi& d) {
  t.metadata.emplace_back("mu1", d.p1.mu);
  t.metadata.emplace_back("mu2", d.p2.mu);
  t.metadata.emplace_back("beta1", d.p1.beta);
  t.metadata.emplace_back("beta2", d.p2.beta);
}

}  // namespace

void CurveTable::validate() const {
  for (const auto& r : rows) {
    if (r.size() != columns.size()) throw DomainError("CurveTable: row arity mismatch");
  }
}

double CurveTable::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  throw std::out_of_range("CurveTable: no metadata key " + std::string(key));
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, ptr};
}

std::string to_csv(const CurveTable& table) {
  table.validate();
  std::string out;
  for (const auto& [k, v] : table.metadata) out += "# " + k + "=" + format_real(v) + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_real(row[c]);
    }
    out += '\n';
  }
  return out;
}

CurveTable parse_csv(std::string_view text) {
  CurveTable t;
  bool have_header = false;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw DomainError("parse_csv: metadata without '='");
      t.metadata.emplace_back(std::string(line.substr(0, eq)), parse_real(line.substr(eq + 1)));
      continue;
    }
    const auto cells = split(line, ',');
    if (!have_header) {
      for (auto c : cells) t.columns.emplace_back(c);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (auto c : cells) row.push_back(parse_real(c));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw DomainError("parse_csv: missing header line");
  t.validate();
  return t;
}

void GridSpec::validate() const {
  if (points < 2) throw DomainError("grid: need at least 2 points");
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw DomainError("grid: need finite min < max");
  }
}

double GridSpec::at(long i) const {
  if (i == 0) return min;
  if (i == points - 1) return max;
  // Weighted form: node points-1-i of a [-a, a] grid is exactly -node(i), and
  // scaling i and points-1 by 2 (grid refinement) reproduces the node exactly.
  const double n = static_cast<double>(points - 1);
  const double k = static_cast<double>(i);
  return ((n - k) * min + k * max) / n;
}

CurveTable ghilbert_table(const DoubleFermi& d, const GridSpec& grid, Execution exec) {
  d.validate();
  grid.validate();
  const double step = grid.step();
  CurveTable t;
  t.columns = {"y", "g", "g_H", "dg_H_dy"};
  add_params(t, d);
  t.metadata.emplace_back("y_min", grid.min);
  t.metadata.emplace_back("y_max", grid.max);
  t.metadata.emplace_back("points", static_cast<double>(grid.points));
  t.metadata.emplace_back("fd_step", step);
  t.metadata.emplace_back("fd_stencil_points", 3.0);
  t.rows = evaluate_rows(
      grid.points,
      [&](long i) {
        const double y = grid.at(i);
        const double deriv = (g_hilbert(y + step, d) - g_hilbert(y - step, d)) / (2.0 * step);
        return std::vector<double>{y, g(y, d), g_hilbert(y, d), deriv};
      },
      exec);
  return t;
}

CurveTable gfourier_table(const DoubleFermi& d, const GridSpec& grid, Execution exec) {
  d.validate();
  grid.validate();
  CurveTable t;
  t.columns = {"lambda", "re_g_F", "im_g_F"};
  add_params(t, d);
  t.metadata.emplace_back("lambda_min", grid.min);
  t.metadata.emplace_back("lambda_max", grid.max);
  t.metadata.emplace_back("points", static_cast<double>(grid.points));
  t.rows = evaluate_rows(
      grid.points,
      [&](long i) {
        const double lambda = grid.at(i);
        const Complex v = g_fourier(lambda, d);
        return std::vector<double>{lambda, v.real(), v.imag()};
      },
      exec);
  return t;
}

std::vector<std::pair<std::string, std::string>> transport_report(const TransportParams& tp,
                                                                  std::optional<double> lambda) {
  tp.validate();
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("omega", format_real(tp.omega));
  out.emplace_back("bias", format_real(tp.V));
  out.emplace_back("beta", format_real(tp.beta));
  out.emplace_back("I_exact", format_real(I_exact(tp)));
  if (tp.V == tp.omega) {
    out.emplace_back("note", "I_lowT omitted: the low-temperature expansion is singular at bias == omega");
  } else {
    const LowTExpansion low = I_lowT(tp);
    out.emplace_back("I_lowT", format_real(low.value()));
    out.emplace_back("I_lowT_leading", format_real(low.leading));
  }
  out.emplace_back("I_highT", format_real(I_highT(tp)));
  if (lambda) {
    const Complex k = K(*lambda, tp);
    out.emplace_back("lambda", format_real(*lambda));
    out.emplace_back("K_re", format_real(k.real()));
    out.emplace_back("K_im", format_real(k.imag()));
  }
  return out;
}

}  // namespace fdt
