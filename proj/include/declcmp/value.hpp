#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace declcmp {

/// Exact decimal number: coefficient * 10^-scale. Values are kept normalized
/// (no trailing zero digits in the fraction), so 1.40 and 1.4 are identical.
class Decimal {
public:
  Decimal() = default;
  static Decimal from_int(std::int64_t v) { return Decimal(v, 0); }
  /// Parses `[+-]digits[.digits][e[+-]digits]`; nullopt on anything else or
  /// when the value does not fit.
  static std::optional<Decimal> parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const Decimal&, const Decimal&) = default;
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

  /// |a - b|, exact.
  friend Decimal abs_diff(const Decimal& a, const Decimal& b);

private:
  Decimal(std::int64_t coefficient, int scale);
  void normalize();

  std::int64_t coefficient_ = 0;
  int scale_ = 0;
};

struct Null {
  friend auto operator<=>(Null, Null) = default;
};

/// A cell value: the null marker, an exact number, or text.
class Value {
public:
  Value() = default;
  Value(Null) {}
  Value(Decimal d) : v_(d) {}
  Value(std::string s) : v_(std::move(s)) {}

  static Value number(std::int64_t v) { return Value(Decimal::from_int(v)); }
  /// Cell typing shared by CSV and JSON inputs: empty or case-insensitive
  /// "null" is the null marker, numeric text is a number, anything else text.
  static Value parse_cell(std::string_view cell);

  bool is_null() const noexcept { return std::holds_alternative<Null>(v_); }
  bool is_number() const noexcept { return std::holds_alternative<Decimal>(v_); }
  bool is_text() const noexcept { return std::holds_alternative<std::string>(v_); }
  const Decimal& as_number() const { return std::get<Decimal>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }

  /// "null", the canonical decimal, or the text itself.
  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }

private:
  std::variant<Null, Decimal, std::string> v_;
};

} // namespace declcmp
