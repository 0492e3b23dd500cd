#include "gridcover/rational.hpp"

#include <cctype>

namespace gridcover {

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw Error(ErrorKind::BadParameter, "zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  std::size_t start = 0;
  if (!s.empty() && s[0] == '-') start = 1;
  std::size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(s, start, s.size());
  } else {
    ok = all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
  }
  if (!ok) throw Error(ErrorKind::IoError, "bad rational literal '" + s + "'");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
    throw Error(ErrorKind::IoError, "bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Int& z) {
  if (!z.fits_slong_p())
    throw Error(ErrorKind::BadParameter, "integer out of long range");
  return z.get_si();
}

Int isqrt(const Int& z) {
  if (z < 0) throw Error(ErrorKind::BadParameter, "isqrt of negative");
  Int s;
  mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
  return s;
}

}  // namespace gridcover
