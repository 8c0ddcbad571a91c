#include "primepoly/poly.hpp"

#include <algorithm>
#include <cctype>

namespace primepoly {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::linear_factor(const Rational& root) { return RatPolynomial({-root, 1}); }

Rational RatPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RatPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPolynomial make_poly(std::vector<Rational> coeffs) { return RatPolynomial(std::move(coeffs)); }

RatPolynomial make_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

RatPolynomial operator+(RatPolynomial a, const Rational& c) { return a += RatPolynomial::constant(c); }
RatPolynomial operator-(RatPolynomial a, const Rational& c) { return a -= RatPolynomial::constant(c); }

DivMod divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lead = b.leading();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lead;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

RatPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  return p * Rational(den, num);
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = primitive_part(divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

RatPolynomial derivative(const RatPolynomial& p) {
  if (p.degree() < 1) return RatPolynomial();
  std::vector<Rational> d(p.degree());
  for (int i = 1; i <= p.degree(); ++i) d[i - 1] = p.coeffs()[i] * i;
  return RatPolynomial(std::move(d));
}

RatPolynomial compose_affine(const RatPolynomial& p, int sigma, int tau, const Integer& a) {
  if ((sigma != 1 && sigma != -1) || (tau != 1 && tau != -1)) {
    throw InvalidInput("compose_affine: sigma and tau must be +1 or -1");
  }
  const RatPolynomial inner({Rational(a), Rational(tau)});
  RatPolynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * inner + *it;
  return acc * Rational(sigma);
}

// ---- Binomial basis -----------------------------------------------------------

bool BinomialForm::integer_valued() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return is_integral(c); });
}

RatPolynomial binomial_poly(unsigned k) {
  RatPolynomial r = RatPolynomial::constant(1);
  for (unsigned j = 0; j < k; ++j) r *= RatPolynomial::linear_factor(j);
  return r * Rational(1, factorial(k));
}

BinomialForm to_binomial(const RatPolynomial& p) {
  // Lower-triangular solve against p(0), ..., p(n):
  //   p(m) = sum_{k <= m} c_k * C(m, k).
  BinomialForm out;
  if (p.is_zero()) return out;
  const int n = p.degree();
  out.coeffs.resize(n + 1);
  for (int m = 0; m <= n; ++m) {
    Rational acc = p(m);
    Integer choose = 1;  // C(m, k), advanced incrementally
    for (int k = 0; k < m; ++k) {
      acc -= out.coeffs[k] * choose;
      choose = choose * (m - k) / (k + 1);
    }
    out.coeffs[m] = acc;
  }
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

RatPolynomial from_binomial(const BinomialForm& b) {
  RatPolynomial out;
  RatPolynomial basis = RatPolynomial::constant(1);
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
    out += basis * b.coeffs[k];
    basis *= RatPolynomial::linear_factor(static_cast<long>(k));
    basis *= Rational(1, static_cast<long>(k + 1));
  }
  return out;
}

bool is_integer_valued(const RatPolynomial& p) { return to_binomial(p).integer_valued(); }

IntegerScaled scale_to_integer(const RatPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("scale_to_integer: zero polynomial");
  IntegerScaled out;
  out.denominator = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  out.coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.coeffs.push_back(c.get_num() * (out.denominator / c.get_den()));
  return out;
}

// ---- Ring elements ----------------------------------------------------------------

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw InvalidInput("division by zero Gaussian rational");
  GaussianRational num = a * b.conj();
  return {num.re / norm, num.im / norm};
}

namespace {

bool is_square_free(const Integer& d) {
  if (d < 2) return false;
  Integer n = d;
  for (Integer f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return false;
    }
  }
  return true;
}

void require_same_d(const QuadExtElement& x, const QuadExtElement& y) {
  if (x.d() != y.d()) {
    throw InvalidInput("quadratic extension elements with different d: " + to_string(x.d()) + " vs " +
                       to_string(y.d()));
  }
}

}  // namespace

QuadExtElement::QuadExtElement(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (!is_square_free(d_)) throw InvalidInput("quadratic extension needs square-free d >= 2, got " + to_string(d_));
  a_.canonicalize();
  b_.canonicalize();
}

int QuadExtElement::sign() const {
  const int sa = primepoly::sign(a_), sb = primepoly::sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 against b^2 * d
  Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;  // never equal because d is not a square
}

QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y) {
  require_same_d(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}

QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y) {
  require_same_d(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}

QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y) {
  require_same_d(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_), x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

bool operator==(const QuadExtElement& x, const QuadExtElement& y) {
  return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : to_string(z.im) + "*i";
  if (z.re == 0) return im;
  return to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

std::string to_string(const QuadExtElement& z) {
  if (z.b() == 0) return to_string(z.a());
  std::string root = "sqrt(" + to_string(z.d()) + ")";
  std::string irr = (z.b() == 1) ? root : (z.b() == -1) ? "-" + root : to_string(z.b()) + "*" + root;
  if (z.a() == 0) return irr;
  return to_string(z.a()) + (z.b() > 0 ? "+" : "") + irr;
}

Rational evaluate(const RatPolynomial& p, const Rational& x) { return p(x); }

GaussianRational evaluate(const RatPolynomial& p, const GaussianRational& x) {
  GaussianRational acc{0, 0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + GaussianRational{*it, 0};
  return acc;
}

QuadExtElement evaluate(const RatPolynomial& p, const QuadExtElement& x) {
  QuadExtElement acc(0, 0, x.d());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + QuadExtElement(*it, 0, x.d());
  return acc;
}

// ---- Text grammar -------------------------------------------------------------------

RatPolynomial parse_poly(std::string_view text) {
  constexpr std::string_view kBinomPrefix = "binom:";
  bool binomial = false;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.substr(0, kBinomPrefix.size()) == kBinomPrefix) {
    binomial = true;
    text.remove_prefix(kBinomPrefix.size());
  }
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      coeffs.push_back(parse_rational(field));
    } catch (const InvalidInput& e) {
      throw InvalidInput("malformed polynomial '" + std::string(text) + "': " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (binomial) return from_binomial(BinomialForm{std::move(coeffs)});
  return RatPolynomial(std::move(coeffs));
}

std::string format_poly(const RatPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coeffs()[i]);
  }
  return out;
}

std::string pretty(const RatPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string var = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += var;
    } else {
      out += to_string(mag) + "*" + var;
    }
  }
  return out;
}

}  // namespace primepoly
