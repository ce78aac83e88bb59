#include "bkw/poly_core.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bkw {

ComplexPoly::ComplexPoly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim_exact_zeros(); }

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim_exact_zeros(); }

ComplexPoly ComplexPoly::constant(cplx c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(cplx c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, cplx{});
  v.back() = c;
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::identity() { return monomial(1.0, 1); }

cplx ComplexPoly::leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }

cplx ComplexPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(j)];
}

double ComplexPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void ComplexPoly::trim_exact_zeros() {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

ComplexPoly& ComplexPoly::normalize(double tol) {
  const double cutoff = tol * max_abs_coeff();
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cutoff) coeffs_.pop_back();
  return *this;
}

ComplexPoly ComplexPoly::normalized(double tol) const {
  ComplexPoly p = *this;
  p.normalize(tol);
  return p;
}

cplx ComplexPoly::operator()(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double ComplexPoly::abs_eval(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

namespace {

// Adds (sign = +1) or subtracts (sign = -1) b into a, then drops leading
// coefficients that cancelled relative to the summands at that position.
void accumulate(std::vector<cplx>& a, const std::vector<cplx>& b, double sign) {
  const std::size_t len = std::max(a.size(), b.size());
  std::vector<double> ref(len, 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) ref[j] += std::abs(a[j]);
  for (std::size_t j = 0; j < b.size(); ++j) ref[j] += std::abs(b[j]);
  a.resize(len, cplx{});
  for (std::size_t j = 0; j < b.size(); ++j) a[j] += sign * b[j];
  while (!a.empty() && std::abs(a.back()) <= kDefaultNormalizeTol * ref[a.size() - 1]) a.pop_back();
}

}  // namespace

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& other) {
  accumulate(coeffs_, other.coeffs_, 1.0);
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& other) {
  accumulate(coeffs_, other.coeffs_, -1.0);
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(const ComplexPoly& other) {
  *this = *this * other;
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(cplx s) {
  if (s == cplx{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  trim_exact_zeros();
  return *this;
}

ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
ComplexPoly operator-(ComplexPoly a) { return a *= -1.0; }

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<cplx> out(ac.size() + bc.size() - 1, cplx{});
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == cplx{}) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return ComplexPoly(std::move(out));
}

ComplexPoly operator*(ComplexPoly a, cplx s) { return a *= s; }
ComplexPoly operator*(cplx s, ComplexPoly a) { return a *= s; }

ComplexPoly poly_add(const ComplexPoly& a, const ComplexPoly& b) { return a + b; }
ComplexPoly poly_mul(const ComplexPoly& a, const ComplexPoly& b) { return a * b; }
cplx poly_eval(const ComplexPoly& p, cplx z) { return p(z); }

ComplexPoly poly_derivative(const ComplexPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<cplx> d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  return ComplexPoly(std::move(d));
}

cplx ipow(cplx z, long k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  cplx result = 1.0;
  while (k > 0) {
    if (k & 1) result *= z;
    k >>= 1;
    if (k > 0) z *= z;
  }
  return result;
}

ComplexPoly poly_pow(const ComplexPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
  ComplexPoly result = ComplexPoly::constant(1.0);
  ComplexPoly base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

double relative_coeff_distance(const ComplexPoly& a, const ComplexPoly& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  const int top = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int j = 0; j <= top; ++j) worst = std::max(worst, std::abs(a.coeff(j) - b.coeff(j)));
  return worst / scale;
}

std::string to_string(const ComplexPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  os << std::setprecision(12);
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const cplx c = p.coeff(j);
    if (c == cplx{}) continue;
    if (!first) os << " + ";
    first = false;
    if (c.imag() == 0.0)
      os << c.real();
    else
      os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    if (j >= 1) os << "*" << var;
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

NCoeffPoly::NCoeffPoly(std::initializer_list<ComplexPoly> n_coeffs) : n_coeffs_(n_coeffs) { canonicalize(); }

NCoeffPoly::NCoeffPoly(std::vector<ComplexPoly> n_coeffs) : n_coeffs_(std::move(n_coeffs)) { canonicalize(); }

NCoeffPoly NCoeffPoly::from_poly(ComplexPoly p) { return NCoeffPoly(std::vector<ComplexPoly>{std::move(p)}); }

void NCoeffPoly::canonicalize() {
  while (!n_coeffs_.empty() && n_coeffs_.back().is_zero()) n_coeffs_.pop_back();
}

const ComplexPoly& NCoeffPoly::leading() const {
  static const ComplexPoly zero;
  return n_coeffs_.empty() ? zero : n_coeffs_.back();
}

ComplexPoly NCoeffPoly::at(long n) const {
  ComplexPoly acc;
  for (auto it = n_coeffs_.rbegin(); it != n_coeffs_.rend(); ++it) {
    acc *= static_cast<double>(n);
    acc += *it;
  }
  return acc;
}

cplx NCoeffPoly::operator()(long n, cplx z) const {
  cplx acc{};
  const double nd = static_cast<double>(n);
  for (auto it = n_coeffs_.rbegin(); it != n_coeffs_.rend(); ++it) acc = acc * nd + (*it)(z);
  return acc;
}

NCoeffPoly& NCoeffPoly::operator+=(const NCoeffPoly& other) {
  if (other.n_coeffs_.size() > n_coeffs_.size()) n_coeffs_.resize(other.n_coeffs_.size());
  for (std::size_t j = 0; j < other.n_coeffs_.size(); ++j) n_coeffs_[j] += other.n_coeffs_[j];
  canonicalize();
  return *this;
}

cplx ncoeff_eval(const NCoeffPoly& a, long n, cplx z) {
  if (n < 0) throw std::domain_error("ncoeff_eval: n must be nonnegative");
  return a(n, z);
}

// ---------------------------------------------------------------------------

ExpSumFamily::ExpSumFamily(std::string name, std::vector<ExpTerm> terms, int index_offset)
    : name_(std::move(name)), index_offset_(index_offset) {
  for (auto& t : terms) {
    if (t.lambda.is_zero()) throw std::invalid_argument("family '" + name_ + "': lambda is the zero polynomial");
    auto same = std::find_if(terms_.begin(), terms_.end(), [&](const ExpTerm& u) { return u.lambda == t.lambda; });
    if (same != terms_.end())
      same->alpha += t.alpha;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const ExpTerm& t) { return t.alpha.is_zero(); });
  if (terms_.empty()) throw std::invalid_argument("family '" + name_ + "' has no nonzero terms");
}

cplx ExpSumFamily::evaluate(long n, cplx z) const {
  const long big_n = effective_index(n);
  if (big_n < 0) throw std::domain_error("family '" + name_ + "': negative effective index");
  cplx sum{};
  for (const auto& t : terms_) sum += t.alpha(big_n, z) * ipow(t.lambda(z), big_n);
  return sum;
}

ComplexPoly expand_at_index(const ExpSumFamily& family, long n) {
  const long big_n = family.effective_index(n);
  if (big_n < 0)
    throw std::domain_error("expand_at_index: effective index " + std::to_string(big_n) + " is negative for family '" +
                            family.name() + "'");
  ComplexPoly sum;
  for (const auto& t : family.terms()) sum += t.alpha.at(big_n) * poly_pow(t.lambda, static_cast<int>(big_n));
  return sum;
}

}  // namespace bkw
