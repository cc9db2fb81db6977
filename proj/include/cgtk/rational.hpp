#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cgtk {

/// Exact positive-denominator fraction. Verdicts compare by cross-multiplication only.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// length < (*this) * total, evaluated in integers.
  bool is_below(std::size_t length, std::size_t total) const;

  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cgtk
