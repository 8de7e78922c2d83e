#include "accred/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "accred/error.hpp"

namespace accred {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed rational '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw DomainError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)), s);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    if (!all_digits(den_text)) throw DomainError("malformed rational '" + std::string(s) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw DomainError("malformed rational '" + std::string(s) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(negative ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(s, s));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

BigInt round_hundredths(const Rational& q) {
  Rational scaled = q * 100;
  BigInt twice = 2 * scaled.get_num();
  BigInt den = scaled.get_den();
  // round half away from zero: floor((2|n| + d) / 2d) with sign restored
  BigInt magnitude = (abs(twice) + den) / (2 * den);
  return sgn(scaled) < 0 ? BigInt(-magnitude) : magnitude;
}

BigInt truncate_hundredths(const Rational& q) {
  Rational scaled = q * 100;
  BigInt out;
  mpz_tdiv_q(out.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return out;
}

std::string format_hundredths(const BigInt& hundredths) {
  BigInt magnitude = abs(hundredths);
  BigInt whole = magnitude / 100;
  BigInt frac = magnitude % 100;
  std::string frac_text = frac.get_str();
  if (frac_text.size() < 2) frac_text.insert(0, 2 - frac_text.size(), '0');
  std::string out = (sgn(hundredths) < 0 ? "-" : "") + whole.get_str() + "." + frac_text;
  return out;
}

}  // namespace accred
