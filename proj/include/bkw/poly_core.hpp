#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace bkw {

using cplx = std::complex<double>;

inline constexpr double kDefaultNormalizeTol = 1e-12;

/// Dense univariate polynomial with complex coefficients; coeffs()[j] multiplies x^j.
///
/// The empty coefficient list is the zero polynomial. Arithmetic results are
/// trimmed of leading coefficients that cancelled during the operation, so
/// exact integer-valued families keep their true degree even when the
/// coefficient range spans many orders of magnitude.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  ComplexPoly(std::initializer_list<cplx> coeffs);
  explicit ComplexPoly(std::vector<cplx> coeffs);

  static ComplexPoly constant(cplx c);
  static ComplexPoly monomial(cplx c, int degree);
  /// The polynomial x.
  static ComplexPoly identity();

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  cplx leading() const;
  cplx coeff(int j) const;
  double max_abs_coeff() const;

  /// Drops trailing coefficients with modulus <= tol * max|coeff|.
  ComplexPoly& normalize(double tol = kDefaultNormalizeTol);
  ComplexPoly normalized(double tol = kDefaultNormalizeTol) const;

  /// Horner evaluation.
  cplx operator()(cplx z) const;
  /// Horner evaluation of sum |c_j| r^j, the rounding-error scale at |z| = r.
  double abs_eval(double r) const;

  ComplexPoly& operator+=(const ComplexPoly& other);
  ComplexPoly& operator-=(const ComplexPoly& other);
  ComplexPoly& operator*=(const ComplexPoly& other);
  ComplexPoly& operator*=(cplx s);

  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void trim_exact_zeros();
  std::vector<cplx> coeffs_;
};

ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b);
ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b);
ComplexPoly operator-(ComplexPoly a);
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(ComplexPoly a, cplx s);
ComplexPoly operator*(cplx s, ComplexPoly a);

ComplexPoly poly_add(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly poly_mul(const ComplexPoly& a, const ComplexPoly& b);
cplx poly_eval(const ComplexPoly& p, cplx z);
ComplexPoly poly_derivative(const ComplexPoly& p);
/// z^k by repeated squaring (k >= 0); ipow(0, 0) = 1.
cplx ipow(cplx z, long k);
/// p^k by repeated squaring; p^0 = 1.
ComplexPoly poly_pow(const ComplexPoly& p, int k);

/// Max coefficientwise |a - b| divided by max(max|a|, max|b|); 0 when both are zero.
double relative_coeff_distance(const ComplexPoly& a, const ComplexPoly& b);

std::string to_string(const ComplexPoly& p, const std::string& var = "x");

/// alpha(n; x) = sum_j n^j p_j(x). Canonical form has a nonzero leading entry;
/// the zero form has no entries.
class NCoeffPoly {
 public:
  NCoeffPoly() = default;
  NCoeffPoly(std::initializer_list<ComplexPoly> n_coeffs);
  explicit NCoeffPoly(std::vector<ComplexPoly> n_coeffs);
  /// Constant in n.
  static NCoeffPoly from_poly(ComplexPoly p);

  const std::vector<ComplexPoly>& n_coeffs() const { return n_coeffs_; }
  bool is_zero() const { return n_coeffs_.empty(); }
  /// Degree in n; -1 for the zero form.
  int n_degree() const { return static_cast<int>(n_coeffs_.size()) - 1; }
  /// p_{deg}; the zero polynomial for the zero form.
  const ComplexPoly& leading() const;

  /// The polynomial in x obtained by fixing n.
  ComplexPoly at(long n) const;
  cplx operator()(long n, cplx z) const;

  NCoeffPoly& operator+=(const NCoeffPoly& other);
  friend bool operator==(const NCoeffPoly&, const NCoeffPoly&) = default;

 private:
  void canonicalize();
  std::vector<ComplexPoly> n_coeffs_;
};

cplx ncoeff_eval(const NCoeffPoly& a, long n, cplx z);

struct ExpTerm {
  NCoeffPoly alpha;
  ComplexPoly lambda;
  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// P_n(x) = sum_i alpha_i(N; x) lambda_i(x)^N with N = n + index_offset.
///
/// Construction merges terms with identical lambda and drops terms whose
/// alpha is identically zero. Throws std::invalid_argument if a lambda is
/// the zero polynomial or no term survives.
class ExpSumFamily {
 public:
  ExpSumFamily(std::string name, std::vector<ExpTerm> terms, int index_offset = 0);

  const std::string& name() const { return name_; }
  const std::vector<ExpTerm>& terms() const { return terms_; }
  int index_offset() const { return index_offset_; }
  std::size_t size() const { return terms_.size(); }
  const ExpTerm& operator[](std::size_t i) const { return terms_[i]; }

  long effective_index(long n) const { return n + index_offset_; }
  /// Pointwise value of P_n at z directly from the term form.
  cplx evaluate(long n, cplx z) const;

 private:
  std::string name_;
  std::vector<ExpTerm> terms_;
  int index_offset_ = 0;
};

/// The dense expansion of P_n; throws std::domain_error if n + index_offset < 0.
ComplexPoly expand_at_index(const ExpSumFamily& family, long n);

}  // namespace bkw
