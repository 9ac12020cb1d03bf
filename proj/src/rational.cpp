#include "cohere/rational.hpp"

#include <stdexcept>

namespace cohere {

namespace {

bool digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw bad();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)))
      throw bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = Rational(num, scale);
  } else {
    if (!digits(body)) throw bad();
    q = Rational(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cohere
