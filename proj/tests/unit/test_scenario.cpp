#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "rispla/errors.hpp"
#include "rispla/scenario.hpp"
#include "support.hpp"

using namespace rispla;
using namespace rispla::channel;

namespace {

const char* kMinimal =
    "alice_pos = 100, 100, 1\n"
    "eve_pos = 90, 100, 1\n"
    "ris_pos = 90, 90, 1\n"
    "bob_pos = 90, 80, 1\n"
    "ris_normal = 0, 1, 0\n"
    "element_a = 0.5\n"
    "element_b = 0.5\n"
    "n_elements = 256\n"
    "frequency_hz = 28e9\n"
    "tx_gain = 1000\n"
    "rx_gain = 1000\n"
    "tx_power_w = 1\n"
    "refractive_index = 1\n"
    "lq_db = 80\n";

Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError";
  return 99;
}

}  // namespace

TEST(ScenarioParse, MinimalFileMatchesBaseline) {
  const Scenario s = parse(kMinimal);
  const Scenario t = test::table1();
  EXPECT_EQ(s.alice_pos, t.alice_pos);
  EXPECT_EQ(s.eve_pos, t.eve_pos);
  EXPECT_EQ(s.bob_pos, t.bob_pos);
  EXPECT_EQ(s.n_elements, 256u);
  EXPECT_DOUBLE_EQ(s.frequency_hz, 28e9);
  EXPECT_DOUBLE_EQ(s.sigma_g2, 1.0);
}

TEST(ScenarioParse, ShippedTable1File) {
  const Scenario s = load_scenario(RISPLA_SOURCE_DIR "/scenarios/table1.cfg");
  EXPECT_EQ(s.alice_pos, test::table1().alice_pos);
  EXPECT_DOUBLE_EQ(s.lq_db, 80.0);
}

TEST(ScenarioParse, CommentsAndBlankLines) {
  const Scenario s = parse(std::string("# header\n\n") + kMinimal + "sigma_g2 = 2 # trailing\n");
  EXPECT_DOUBLE_EQ(s.sigma_g2, 2.0);
}

TEST(ScenarioParse, UnknownKeyNamesLine) {
  EXPECT_EQ(error_line(std::string(kMinimal) + "bogus = 1\n"), 15u);
}

TEST(ScenarioParse, DuplicateKeyNamesLine) {
  EXPECT_EQ(error_line(std::string(kMinimal) + "lq_db = 3\n"), 15u);
}

TEST(ScenarioParse, BadValueNamesLine) {
  std::string text = kMinimal;
  text.replace(text.find("n_elements = 256"), 16, "n_elements = -4");
  EXPECT_EQ(error_line(text), 8u);
  text = kMinimal;
  text.replace(text.find("alice_pos = 100, 100, 1"), 23, "alice_pos = 100, 100");
  EXPECT_EQ(error_line(text), 1u);
}

TEST(ScenarioParse, MissingKeyHasNoLine) {
  std::string text = kMinimal;
  text.erase(text.find("lq_db"));
  EXPECT_EQ(error_line(text), 0u);
}

TEST(ScenarioParse, ErrorMessageCarriesLine) {
  try {
    parse(std::string(kMinimal) + "nope\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 15"), std::string::npos);
  }
}

TEST(ScenarioParse, FormatRoundTrips) {
  Scenario s = test::table1();
  s.lq_db = 13.37;
  s.sigma_g2 = 0.1;
  s.frequency_hz = 2.4e9 / 3;
  const Scenario r = parse(format_scenario(s));
  EXPECT_EQ(format_scenario(r), format_scenario(s));
  EXPECT_EQ(r.lq_db, s.lq_db);
  EXPECT_EQ(r.frequency_hz, s.frequency_hz);
}

TEST(ScenarioValidate, RejectsBadInvariants) {
  Scenario s = test::table1();
  s.ris_normal = {0, 2, 0};
  EXPECT_THROW(s.validate(), DomainError);
  s = test::table1();
  s.alice_pos = s.ris_pos;
  EXPECT_THROW(s.validate(), GeometryError);
  s = test::table1();
  s.element_b = 0;
  EXPECT_THROW(s.validate(), DomainError);
  s = test::table1();
  s.n_elements = 0;
  EXPECT_THROW(s.validate(), DomainError);
  EXPECT_NO_THROW(test::table1().validate());
}

TEST(ScenarioDerived, NoiseFollowsLq) {
  Scenario s = test::table1();
  s.tx_power_w = 2.0;
  s.lq_db = 30;
  EXPECT_NEAR(s.noise_variance(), 2e-3, 1e-18);
  EXPECT_NEAR(s.with_lq_db(10).noise_sigma(), std::sqrt(0.2), 1e-15);
  EXPECT_NEAR(s.wavelength(), 299'792'458.0 / 28e9, 1e-18);
}

TEST(PhaseProfile, VariantsAndWrapping) {
  const auto g = PhaseProfile::gradient(3.5);
  EXPECT_TRUE(g.is_gradient());
  EXPECT_EQ(g.gradient_value(), 3.5);
  EXPECT_THROW(g.phases(), ContractError);

  const auto p = PhaseProfile::per_element({-std::numbers::pi / 2, 2 * std::numbers::pi, 7.0});
  ASSERT_TRUE(p.is_per_element());
  EXPECT_NEAR(p.phases()[0], 1.5 * std::numbers::pi, 1e-15);
  EXPECT_EQ(p.phases()[1], 0.0);
  EXPECT_NEAR(p.phases()[2], 7.0 - 2 * std::numbers::pi, 1e-15);
  EXPECT_THROW(p.gradient_value(), ContractError);
  EXPECT_THROW(PhaseProfile::gradient(NAN), DomainError);
}

TEST(PhaseProfile, WrapPropertyInRange) {
  test::Lcg g(4);
  for (int i = 0; i < 1000; ++i) {
    const double x = g.uniform(-1e3, 1e3);
    const double w = wrap_phase(x);
    ASSERT_GE(w, 0.0);
    ASSERT_LT(w, 2 * std::numbers::pi);
    ASSERT_NEAR(std::remainder(w - x, 2 * std::numbers::pi), 0.0, 1e-9);
  }
}
