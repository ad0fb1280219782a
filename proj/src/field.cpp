#include "fig/field.hpp"

#include <cctype>

namespace fig {

bool is_prime_number(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p))
    throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31))
    throw FieldError("characteristic " + std::to_string(p) + " exceeds 2^31");
  return Field(p);
}

namespace {

mpz_class mod_positive(const mpz_class& a, std::uint32_t p) {
  mpz_class r = a % p;
  if (r < 0)
    r += p;
  return r;
}

}  // namespace

Scalar Field::normalize(const Scalar& value) const {
  if (!is_prime()) {
    Scalar v = value;
    v.canonicalize();
    return v;
  }
  mpz_class num = mod_positive(value.get_num(), p_);
  mpz_class den = mod_positive(value.get_den(), p_);
  if (den == 0)
    throw FieldError("denominator vanishes modulo " + std::to_string(p_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  return Scalar(mod_positive(num * inv, p_));
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty())
    throw FieldError("empty field element");
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size())
      return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.find('-') != std::string::npos)
    throw FieldError("malformed field element '" + s + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  if (den[0] == '+')
    den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0)
    throw FieldError("zero denominator in '" + s + "'");
  return normalize(Scalar(n, d));
}

std::string Field::format(const Scalar& value) const {
  return normalize(value).get_str();
}

std::string Field::name() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

}  // namespace fig
