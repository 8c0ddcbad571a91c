#include "primepoly/interval.hpp"

#include <mpfr.h>

#include <algorithm>

namespace primepoly {

namespace {

class BigFloat {
 public:
  explicit BigFloat(unsigned bits) { mpfr_init2(v_, bits); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;

  mpfr_ptr get() { return v_; }
  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

}  // namespace

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RationalInterval mul_nonnegative(const RationalInterval& a, const RationalInterval& b) {
  if (a.lo < 0 || b.lo < 0) throw InvalidInput("mul_nonnegative: negative operand");
  return {a.lo * b.lo, a.hi * b.hi};
}

RationalInterval log_enclosure(const Rational& x, unsigned bits) {
  if (x <= 0) throw InvalidInput("log_enclosure: argument must be positive");
  BigFloat lo(bits), hi(bits);
  // round the argument outward first, then the logarithm
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

RationalInterval root_enclosure(const Rational& x, unsigned long n, unsigned bits) {
  if (x < 0) throw InvalidInput("root_enclosure: argument must be nonnegative");
  if (n == 0) throw InvalidInput("root_enclosure: n must be positive");
  BigFloat lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_rootn_ui(lo.get(), lo.get(), n, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), hi.get(), n, MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

namespace {

std::string place_point(Integer scaled, int digits) {
  const bool negative = scaled < 0;
  std::string s = Integer(abs(scaled)).get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace

std::string decimal_floor(const Rational& q, int digits) {
  return place_point(floor(q * Rational(pow(Integer(10), digits))), digits);
}

std::string decimal_ceil(const Rational& q, int digits) {
  return place_point(ceil(q * Rational(pow(Integer(10), digits))), digits);
}

std::string scientific_upper(const Rational& q) {
  if (q == 0) return "0";
  BigFloat f(64);
  mpfr_set_q(f.get(), q.get_mpq_t(), MPFR_RNDU);
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.2RUe", f.get());
  return buf;
}

}  // namespace primepoly
