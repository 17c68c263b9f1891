#include "declcmp/value.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace declcmp {

namespace {

constexpr int kMaxScale = 18;

__int128 pow10(int e) {
  __int128 r = 1;
  while (e-- > 0) r *= 10;
  return r;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

} // namespace

Decimal::Decimal(std::int64_t coefficient, int scale) : coefficient_(coefficient), scale_(scale) {
  normalize();
}

void Decimal::normalize() {
  while (scale_ > 0 && coefficient_ % 10 == 0) {
    coefficient_ /= 10;
    --scale_;
  }
  if (coefficient_ == 0) scale_ = 0;
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  std::string digits;
  int frac = 0;
  bool any_digit = false;
  bool dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (dot) ++frac;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) return std::nullopt;

  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool neg_exp = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg_exp = text[i++] == '-';
    if (i == text.size()) return std::nullopt;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 1000) return std::nullopt;
    }
    if (neg_exp) exponent = -exponent;
  }
  if (i != text.size()) return std::nullopt;

  int scale = frac - exponent;
  if (scale < 0) {
    digits.append(static_cast<std::size_t>(-scale), '0');
    scale = 0;
  }
  while (scale > 0 && !digits.empty() && digits.back() == '0') {
    digits.pop_back();
    --scale;
  }
  auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? std::string("0") : digits.substr(first);
  if (scale > kMaxScale || digits.size() > 18) return std::nullopt;

  std::int64_t coefficient = std::stoll(digits);
  return Decimal(negative ? -coefficient : coefficient, scale);
}

std::string Decimal::to_string() const {
  auto raw = static_cast<unsigned long long>(coefficient_);
  std::string magnitude = std::to_string(coefficient_ < 0 ? 0ULL - raw : raw);
  if (scale_ > 0) {
    if (magnitude.size() <= static_cast<std::size_t>(scale_))
      magnitude.insert(0, static_cast<std::size_t>(scale_) - magnitude.size() + 1, '0');
    magnitude.insert(magnitude.size() - static_cast<std::size_t>(scale_), ".");
  }
  return coefficient_ < 0 ? "-" + magnitude : magnitude;
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  int s = std::max(a.scale_, b.scale_);
  __int128 x = static_cast<__int128>(a.coefficient_) * pow10(s - a.scale_);
  __int128 y = static_cast<__int128>(b.coefficient_) * pow10(s - b.scale_);
  return x < y ? std::strong_ordering::less
               : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Decimal abs_diff(const Decimal& a, const Decimal& b) {
  int s = std::max(a.scale_, b.scale_);
  __int128 x = static_cast<__int128>(a.coefficient_) * pow10(s - a.scale_);
  __int128 y = static_cast<__int128>(b.coefficient_) * pow10(s - b.scale_);
  __int128 d = x > y ? x - y : y - x;
  // Only reachable with operands of wildly different magnitude; precision is
  // dropped from the fraction until the result fits.
  while (d > std::numeric_limits<std::int64_t>::max() && s > 0) {
    d /= 10;
    --s;
  }
  if (d > std::numeric_limits<std::int64_t>::max()) d = std::numeric_limits<std::int64_t>::max();
  return Decimal(static_cast<std::int64_t>(d), s);
}

Value Value::parse_cell(std::string_view cell) {
  if (cell.empty() || iequals(cell, "null")) return Value(Null{});
  if (auto d = Decimal::parse(cell)) return Value(*d);
  return Value(std::string(cell));
}

std::string Value::to_string() const {
  if (is_null()) return "null";
  if (is_number()) return as_number().to_string();
  return as_text();
}

} // namespace declcmp
