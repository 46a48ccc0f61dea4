#include "rispla/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "rispla/errors.hpp"
#include "rispla/units.hpp"

namespace rispla::channel {

double Scenario::noise_variance() const { return tx_power_w / units::db_to_linear(lq_db); }

double Scenario::noise_sigma() const { return std::sqrt(noise_variance()); }

Scenario Scenario::with_lq_db(double lq) const {
  Scenario copy = *this;
  copy.lq_db = lq;
  return copy;
}

void Scenario::validate() const {
  if (std::abs(norm(ris_normal) - 1.0) > 1e-9) {
    throw DomainError("ris_normal must have unit norm");
  }
  for (const auto* p : {&alice_pos, &eve_pos, &bob_pos}) {
    if (*p == ris_pos) throw GeometryError("node position coincides with ris_pos");
  }
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive");
  };
  positive(element_a, "element_a");
  positive(element_b, "element_b");
  positive(frequency_hz, "frequency_hz");
  positive(tx_gain, "tx_gain");
  positive(rx_gain, "rx_gain");
  positive(tx_power_w, "tx_power_w");
  positive(refractive_index, "refractive_index");
  positive(sigma_g2, "sigma_g2");
  if (n_elements == 0) throw DomainError("n_elements must be positive");
  if (!std::isfinite(lq_db)) throw DomainError("lq_db must be finite");
}

double wrap_phase(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phase, two_pi);
  if (w < 0.0) w += two_pi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (w >= two_pi) w = 0.0;
  return w;
}

PhaseProfile PhaseProfile::gradient(double dphi_dx) {
  if (!std::isfinite(dphi_dx)) throw DomainError("phase gradient must be finite");
  return PhaseProfile(ScalarGradient{dphi_dx});
}

PhaseProfile PhaseProfile::per_element(std::vector<double> phases) {
  for (double& p : phases) {
    if (!std::isfinite(p)) throw DomainError("element phase must be finite");
    p = wrap_phase(p);
  }
  return PhaseProfile(PerElement{std::move(phases)});
}

double PhaseProfile::gradient_value() const {
  if (const auto* g = std::get_if<ScalarGradient>(&value_)) return g->gradient;
  throw ContractError("phase profile is per-element, a scalar gradient was expected");
}

const std::vector<double>& PhaseProfile::phases() const {
  if (const auto* p = std::get_if<PerElement>(&value_)) return p->phases;
  throw ContractError("phase profile is a scalar gradient, per-element phases were expected");
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  double value = 0.0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": expected a real number, got '" + t + "'", line);
  }
  return value;
}

Vec3 parse_triple(const std::string& text, std::size_t line) {
  std::array<double, 3> v{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string::npos)) {
      throw ParseError("line " + std::to_string(line) + ": expected three comma-separated values", line);
    }
    v[i] = parse_real(text.substr(start, last ? std::string::npos : comma - start), line);
    start = comma + 1;
  }
  return {v[0], v[1], v[2]};
}

std::size_t parse_count(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected a positive integer, got '" + t + "'", line);
  }
  return value;
}

using Setter = std::function<void(Scenario&, const std::string&, std::size_t)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> m;
    auto vec = [](Vec3 Scenario::*field) {
      return Setter([field](Scenario& s, const std::string& v, std::size_t l) { s.*field = parse_triple(v, l); });
    };
    auto real = [](double Scenario::*field) {
      return Setter([field](Scenario& s, const std::string& v, std::size_t l) { s.*field = parse_real(v, l); });
    };
    m["alice_pos"] = vec(&Scenario::alice_pos);
    m["eve_pos"] = vec(&Scenario::eve_pos);
    m["bob_pos"] = vec(&Scenario::bob_pos);
    m["ris_pos"] = vec(&Scenario::ris_pos);
    m["ris_normal"] = vec(&Scenario::ris_normal);
    m["element_a"] = real(&Scenario::element_a);
    m["element_b"] = real(&Scenario::element_b);
    m["n_elements"] = [](Scenario& s, const std::string& v, std::size_t l) { s.n_elements = parse_count(v, l); };
    m["frequency_hz"] = real(&Scenario::frequency_hz);
    m["tx_gain"] = real(&Scenario::tx_gain);
    m["rx_gain"] = real(&Scenario::rx_gain);
    m["tx_power_w"] = real(&Scenario::tx_power_w);
    m["refractive_index"] = real(&Scenario::refractive_index);
    m["lq_db"] = real(&Scenario::lq_db);
    m["sigma_g2"] = real(&Scenario::sigma_g2);
    return m;
  }();
  return table;
}

std::string format_real(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_triple(const Vec3& v) {
  return format_real(v.x) + ", " + format_real(v.y) + ", " + format_real(v.z);
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", line_no);
    }
    if (!seen.insert(key).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no);
    }
    it->second(s, line.substr(eq + 1), line_no);
  }
  for (const auto& [key, _] : setters()) {
    if (key != "sigma_g2" && !seen.contains(key)) {
      throw ParseError("missing required key '" + key + "'", 0);
    }
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  try {
    return parse_scenario(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

std::string format_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "alice_pos = " << format_triple(s.alice_pos) << '\n'
      << "eve_pos = " << format_triple(s.eve_pos) << '\n'
      << "bob_pos = " << format_triple(s.bob_pos) << '\n'
      << "ris_pos = " << format_triple(s.ris_pos) << '\n'
      << "ris_normal = " << format_triple(s.ris_normal) << '\n'
      << "element_a = " << format_real(s.element_a) << '\n'
      << "element_b = " << format_real(s.element_b) << '\n'
      << "n_elements = " << s.n_elements << '\n'
      << "frequency_hz = " << format_real(s.frequency_hz) << '\n'
      << "tx_gain = " << format_real(s.tx_gain) << '\n'
      << "rx_gain = " << format_real(s.rx_gain) << '\n'
      << "tx_power_w = " << format_real(s.tx_power_w) << '\n'
      << "refractive_index = " << format_real(s.refractive_index) << '\n'
      << "lq_db = " << format_real(s.lq_db) << '\n'
      << "sigma_g2 = " << format_real(s.sigma_g2) << '\n';
  return out.str();
}

}  // namespace rispla::channel
