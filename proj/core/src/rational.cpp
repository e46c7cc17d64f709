#include "hg/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hg {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<Integer> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

std::optional<Rational> parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  std::optional<Integer> num;
  std::optional<Integer> den;
  if (slash == std::string_view::npos) {
    num = parse_integer(text);
    den = Integer(1);
  } else {
    num = parse_integer(text.substr(0, slash));
    den = parse_integer(text.substr(slash + 1));
  }
  if (!num || !den || *den == 0) return std::nullopt;
  Rational q(*num, *den);
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_canonical_fraction(std::string_view text) {
  auto q = parse_fraction(text);
  if (!q || to_fraction_string(*q) != text) return std::nullopt;
  return q;
}

bool is_perfect_square(const Integer& z) {
  return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

Rational rationalize(double value, long max_denominator) {
  if (max_denominator < 1) {
    throw std::invalid_argument("max_denominator must be at least 1");
  }
  const bool negative = value < 0;
  double x = negative ? -value : value;

  // Convergents p/q of the continued fraction of x.
  Integer p_prev(0), q_prev(1), p_curr(1), q_curr(0);

  for (int step = 0; step < 64; ++step) {
    const double floor_x = std::floor(x);
    Integer a(floor_x);
    Integer p_next = a * p_curr + p_prev;
    Integer q_next = a * q_curr + q_prev;
    if (q_next > max_denominator) break;
    p_prev = p_curr;
    q_prev = q_curr;
    p_curr = p_next;
    q_curr = q_next;
    const double frac = x - floor_x;
    if (frac <= 0) break;
    x = 1.0 / frac;
  }
  if (q_curr == 0) return Rational(0);
  Rational result(p_curr, q_curr);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);  // already in lowest terms
}

}  // namespace hg
