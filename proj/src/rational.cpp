#include "rigidlab/rational.hpp"

#include "rigidlab/errors.hpp"

#include <cctype>

namespace rigidlab {

int valuation(const Integer& n, Prime p) {
  if (n == 0) throw InputError("valuation of zero");
  Integer r = n;
  int v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rational& r, Prime p) {
  return valuation(Integer(r.get_num()), p) - valuation(Integer(r.get_den()), p);
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

bool is_p_integral(const Rational& r, Prime p) {
  return !mpz_divisible_ui_p(r.get_den_mpz_t(), p);
}

Integer strip_prime(Integer n, Prime p) {
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p))
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
  return n;
}

Integer pow_prime(Prime p, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

Rational p_power_part(const Rational& r, Prime p) {
  if (is_p_integral(r, p)) return 0;
  Integer den(r.get_den());
  int e = valuation(den, p);
  Integer pe = pow_prime(p, static_cast<unsigned>(e));
  Integer rest = den / pe;
  // r = a / (p^e * rest); want c with c * rest == a (mod p^e)
  Integer inv;
  mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), pe.get_mpz_t());
  Integer c = Integer(r.get_num()) * inv;
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pe.get_mpz_t());
  Rational out(c, pe);
  out.canonicalize();
  return out;
}

std::string to_text(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false))
    throw InputError("malformed rational '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational out(n, d);
  out.canonicalize();
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

} // namespace rigidlab
