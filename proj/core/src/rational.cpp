#include "mixknap/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "mixknap/error.hpp"

namespace mixknap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string s(text);
  // Trim surrounding whitespace.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw Error("malformed rational '" + s + "'");
    try {
      Rat r(num + "/" + den);
      if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw Error("malformed rational '" + s + "'");
    }
  }

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  // Split mantissa and exponent.
  std::string mantissa(body);
  long exponent = 0;
  if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
    std::string exp_part = mantissa.substr(e + 1);
    mantissa = mantissa.substr(0, e);
    if (exp_part.empty()) throw Error("malformed rational '" + s + "'");
    bool exp_neg = false;
    if (exp_part.front() == '+' || exp_part.front() == '-') {
      exp_neg = exp_part.front() == '-';
      exp_part.erase(exp_part.begin());
    }
    if (!all_digits(exp_part)) throw Error("malformed rational '" + s + "'");
    exponent = std::strtol(exp_part.c_str(), nullptr, 10);
    if (exp_neg) exponent = -exponent;
  }

  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    std::string int_part = mantissa.substr(0, dot);
    std::string frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw Error("malformed rational '" + s + "'");
    if (!int_part.empty() && !all_digits(int_part)) throw Error("malformed rational '" + s + "'");
    if (!frac_part.empty() && !all_digits(frac_part)) throw Error("malformed rational '" + s + "'");
    digits = int_part + frac_part;
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw Error("malformed rational '" + s + "'");
    digits = mantissa;
  }
  if (digits.empty()) throw Error("malformed rational '" + s + "'");

  mpz_class numerator(digits, 10);
  if (negative) numerator = -numerator;
  long net_exp = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net_exp < 0 ? -net_exp : net_exp));
  Rat result;
  if (net_exp >= 0) {
    result = Rat(numerator * pow10);
  } else {
    result = Rat(numerator, pow10);
  }
  result.canonicalize();
  return result;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat floor_rat(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return Rat(q);
}

bool is_integral(const Rat& value) { return value.get_den() == 1; }

long to_long(const Rat& value) {
  if (!is_integral(value)) throw Error("expected integral value, got " + to_string(value));
  if (!value.get_num().fits_slong_p()) throw Error("value out of long range: " + to_string(value));
  return value.get_num().get_si();
}

double to_double(const Rat& value) { return value.get_d(); }

}  // namespace mixknap
