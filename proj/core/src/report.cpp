#include "permutope/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace permutope {

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    out.emplace_back(line.substr(pos, next == std::string_view::npos ? line.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::size_t parse_size(const std::string& text) {
  const Rational r = parse_rational(text);
  if (boost::multiprecision::denominator(r) != 1 || r < 0) {
    throw ParseError("expected a non-negative integer, got '" + text + "'");
  }
  return boost::multiprecision::numerator(r).convert_to<std::size_t>();
}

}  // namespace

bool ConvergenceReport::sizes_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size <= rows[i - 1].size) return false;
  }
  return true;
}

std::string ConvergenceReport::to_csv() const {
  const auto patterns = all_permutations(k);
  std::ostringstream out;
  out << "m,size";
  for (const auto& pi : patterns) out << ",cocc_" << pi.to_string();
  for (const auto& pi : patterns) out << ",occ_" << pi.to_string();
  out << ",linf_consec,linf_class\n";
  for (const ReportRow& row : rows) {
    out << row.m << ',' << row.size;
    for (const auto& pi : patterns) out << ',' << to_string(row.consecutive.at(pi));
    for (const auto& pi : patterns) out << ',' << to_string(row.classical.at(pi));
    out << ',' << (row.linf_consecutive ? to_string(*row.linf_consecutive) : "");
    out << ',' << (row.linf_classical ? to_string(*row.linf_classical) : "");
    out << '\n';
  }
  return out.str();
}

ConvergenceReport ConvergenceReport::from_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view line = text.substr(pos, next - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = next + 1;
  }
  if (lines.empty()) throw ParseError("empty report");

  const auto header = split(lines[0], ',');
  if (header.size() < 4 || header[0] != "m" || header[1] != "size" || (header.size() - 4) % 2 != 0) {
    throw ParseError("unrecognized report header");
  }
  const std::size_t count = (header.size() - 4) / 2;
  std::vector<Permutation> patterns;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& name = header[2 + i];
    if (name.rfind("cocc_", 0) != 0) throw ParseError("bad column '" + name + "'");
    patterns.push_back(Permutation::parse(name.substr(5)));
  }
  ConvergenceReport report;
  report.k = patterns.empty() ? 0 : patterns.front().size();
  if (patterns != all_permutations(report.k)) throw ParseError("report columns are not S_k in lex order");

  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split(lines[l], ',');
    if (cells.size() != header.size()) {
      throw ParseError("row " + std::to_string(l) + " has " + std::to_string(cells.size()) + " cells");
    }
    std::vector<Rational> consecutive, classical;
    for (std::size_t i = 0; i < count; ++i) {
      consecutive.push_back(parse_rational(cells[2 + i]));
      classical.push_back(parse_rational(cells[2 + count + i]));
    }
    ReportRow row{parse_size(cells[0]), parse_size(cells[1]),
                  PatternVector::from_vector(report.k, consecutive),
                  PatternVector::from_vector(report.k, classical), std::nullopt, std::nullopt};
    if (!cells[cells.size() - 2].empty()) row.linf_consecutive = parse_rational(cells[cells.size() - 2]);
    if (!cells.back().empty()) row.linf_classical = parse_rational(cells.back());
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConvergenceReport convergence_report(const Generator& generator, std::size_t k,
                                     std::vector<std::size_t> m_values, const ReportOptions& options) {
  std::sort(m_values.begin(), m_values.end());
  m_values.erase(std::unique(m_values.begin(), m_values.end()), m_values.end());

  ConvergenceReport report;
  report.k = k;
  report.rows.assign(m_values.size(), ReportRow{0, 0, PatternVector(k), PatternVector(k), {}, {}});

  auto evaluate = [&](std::size_t i) {
    const Permutation sigma = generator(m_values[i]);
    ReportRow row{m_values[i], sigma.size(),
                  proportion_vector(k, sigma, PatternKind::kConsecutive, options.counting),
                  proportion_vector(k, sigma, PatternKind::kClassical, options.counting), {}, {}};
    if (options.consecutive_target) row.linf_consecutive = linf_distance(row.consecutive, *options.consecutive_target);
    if (options.classical_target) row.linf_classical = linf_distance(row.classical, *options.classical_target);
    report.rows[i] = std::move(row);
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, m_values.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < m_values.size(); ++i) evaluate(i);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < m_values.size(); i = next++) evaluate(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

std::vector<std::size_t> powers_of_two_schedule(const std::function<BigInt(std::size_t)>& size_of,
                                                std::size_t max_size) {
  std::vector<std::size_t> out;
  for (std::size_t m = 1; m <= (std::size_t{1} << 40) && size_of(m) <= max_size; m *= 2) out.push_back(m);
  return out;
}

}  // namespace permutope
