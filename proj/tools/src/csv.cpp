#include "rispla/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rispla::cli {

std::string format_number(std::optional<double> v) {
  if (!v || std::isnan(*v)) return {};
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *v);
  return std::string(buf.data(), ptr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.lq_db) << ',' << format_number(r.threshold) << ',' << format_number(r.analytical) << ','
        << format_number(r.empirical.value) << ','
        << (r.empirical.valid() ? format_number(r.empirical.half_width_95) : std::string{}) << ','
        << r.empirical.n_conditioning << '\n';
  }
  return out.str();
}

std::string roc_csv(const mc::RocCurve& curve) {
  std::ostringstream out;
  out << kRocHeader << '\n';
  for (const auto& p : curve.points) {
    out << format_number(p.epsilon) << ',' << format_number(p.pfa) << ',' << format_number(p.pd) << '\n';
  }
  return out.str();
}

std::string trace_csv(const std::vector<optim::TracePoint>& trace) {
  std::ostringstream out;
  out << kTraceHeader << '\n';
  for (const auto& t : trace) {
    out << format_number(t.coordinate) << ',' << format_number(t.value) << ',' << format_number(t.pmd) << '\n';
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace rispla::cli
