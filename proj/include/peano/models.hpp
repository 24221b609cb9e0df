// Coded interpretations of arithmetic. A coding function psi maps the
// naturals into the positive reals; the coded model has domain psi(N) and the
// usual successor, sum and product transported through psi.
//
// psi is piecewise linear with slope xi_i on [i, i+1), each xi_i either 1 or
// u, so psi(n) is always an exact linear form a + b*u with a + b = n.

#ifndef PEANO_MODELS_HPP
#define PEANO_MODELS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "peano/goldbach.hpp"

namespace peano {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a + b*u, compared exactly.
struct LinearForm {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  double at(double u) const { return static_cast<double>(a) + static_cast<double>(b) * u; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline std::string to_string(const LinearForm& f) {
  if (f.b == 0) return std::to_string(f.a);
  std::string ub = f.b == 1 ? "u" : std::to_string(f.b) + "*u";
  return f.a == 0 ? ub : std::to_string(f.a) + " + " + ub;
}

class CodingFunction {
 public:
  virtual ~CodingFunction() = default;

  virtual std::uint64_t alpha() const = 0;
  virtual double u() const = 0;
  // True when xi_i = u, false when xi_i = 1.
  virtual bool scaled(std::uint64_t i) const = 0;

  // psi(n). The default sums the slopes; subclasses may count in closed form.
  virtual LinearForm at(std::uint64_t n) const {
    LinearForm f;
    for (std::uint64_t i = 0; i < n; ++i) (scaled(i) ? f.b : f.a) += 1;
    return f;
  }

  double xi(std::uint64_t i) const { return scaled(i) ? u() : 1.0; }

  // psi on the reals: full unit intervals below x plus the fractional part
  // at the slope of the interval containing x.
  double psi(double x) const {
    if (x < 0) throw std::domain_error("psi is defined on the non-negative reals");
    double whole = std::floor(x);
    auto n = static_cast<std::uint64_t>(whole);
    return at(n).at(u()) + xi(n) * (x - whole);
  }
};

// Slope u on [2, alpha-5] except at alpha/2; slope 1 everywhere else, and
// everywhere when u = 1.
class StandInCoding final : public CodingFunction {
 public:
  StandInCoding(std::uint64_t alpha, double u) : alpha_(alpha), u_(u) {}

  std::uint64_t alpha() const override { return alpha_; }
  double u() const override { return u_; }

  bool scaled(std::uint64_t i) const override {
    return u_ != 1.0 && i >= 2 && i + 5 <= alpha_ && i != alpha_ / 2;
  }

  LinearForm at(std::uint64_t n) const override {
    if (u_ == 1.0 || n <= 2 || alpha_ < 7) return {n, 0};
    std::uint64_t top = std::min(n - 1, alpha_ - 5);
    std::uint64_t b = top >= 2 ? top - 1 : 0;
    if (alpha_ / 2 >= 2 && alpha_ / 2 <= top) --b;
    return {n - b, b};
  }

 private:
  std::uint64_t alpha_;
  double u_;
};

// Throws ModelError unless alpha is in the Goldbach set and u >= 1.
inline std::shared_ptr<const CodingFunction> default_coding(std::uint64_t alpha, double u) {
  if (!goldbach::in_frakN(alpha)) throw ModelError("alpha = " + std::to_string(alpha) + " is not in the Goldbach set");
  if (!std::isfinite(u) || u < 1.0) throw ModelError("u must be a finite real >= 1");
  return std::make_shared<StandInCoding>(alpha, u);
}

// Checks the fixed slopes: xi_0 = xi_1 = xi_{alpha/2} = 1, xi_i = 1 for
// i >= alpha - 4 (checked up to 2*alpha), all slopes 1 when u = 1, and that
// psi(n) agrees with the slope sums.
inline void validate_coding(const CodingFunction& c) {
  const std::uint64_t alpha = c.alpha();
  auto fail = [](const std::string& m) { throw ModelError("invalid coding function: " + m); };
  if (c.u() < 1.0) fail("u < 1");
  if (c.scaled(0) || c.scaled(1) || c.scaled(alpha / 2)) fail("xi_0, xi_1 and xi_{alpha/2} must be 1");
  for (std::uint64_t i = alpha >= 4 ? alpha - 4 : 0; i <= 2 * alpha + 8; ++i)
    if (c.scaled(i)) fail("xi_" + std::to_string(i) + " must be 1");
  LinearForm f;
  for (std::uint64_t i = 0; i <= 2 * alpha + 8; ++i) {
    if (c.u() == 1.0 && c.scaled(i)) fail("every slope must be 1 at u = 1");
    if (!(c.at(i) == f)) fail("psi(" + std::to_string(i) + ") disagrees with the slope sums");
    (c.scaled(i) ? f.b : f.a) += 1;
  }
}

// An element of a coded domain: n together with psi(n).
struct CodedNat {
  std::uint64_t index = 0;
  LinearForm value;
  const void* model = nullptr;

  friend bool operator==(const CodedNat& x, const CodedNat& y) { return x.index == y.index && x.model == y.model; }
};

// The interpretation I_(alpha,u). Equality of domain elements is index
// equality, which coincides with value equality since psi is strictly
// increasing.
class CodedModel {
 public:
  using element = CodedNat;
  using Successor = std::function<std::uint64_t(std::uint64_t)>;

  explicit CodedModel(std::shared_ptr<const CodingFunction> coding) : coding_(std::move(coding)) {
    if (!coding_) throw ModelError("null coding function");
    validate_coding(*coding_);
  }

  static CodedModel standard_coded(std::uint64_t alpha, double u) { return CodedModel(default_coding(alpha, u)); }

  // A deliberately broken model for fault-injection tests: successor
  // replaced, sum and product left intact.
  static CodedModel with_faulty_successor(std::shared_ptr<const CodingFunction> coding, Successor succ) {
    CodedModel m(std::move(coding));
    m.faulty_succ_ = std::move(succ);
    return m;
  }

  const CodingFunction& coding() const noexcept { return *coding_; }
  std::uint64_t alpha() const { return coding_->alpha(); }
  double u() const { return coding_->u(); }

  // True iff the operations are the genuinely transported ones, so the model
  // is isomorphic to the standard one via encode.
  bool standard_arithmetic() const noexcept { return !faulty_succ_; }

  CodedNat encode(std::uint64_t n) const { return {n, coding_->at(n), coding_.get()}; }

  std::uint64_t decode(const CodedNat& x) const {
    check(x);
    return x.index;
  }

  CodedNat zero() const { return encode(0); }
  CodedNat one() const { return encode(1); }

  CodedNat constant(unsigned k) const {
    if (k == 1) return zero();
    if (k == 2) return one();
    throw ModelError("constant a" + std::to_string(k) + " has no interpretation");
  }

  CodedNat succ(const CodedNat& x) const {
    check(x);
    if (faulty_succ_) return encode(faulty_succ_(x.index));
    return encode(checked_add(x.index, 1));
  }
  CodedNat add(const CodedNat& x, const CodedNat& y) const {
    check(x);
    check(y);
    return encode(checked_add(x.index, y.index));
  }
  CodedNat mul(const CodedNat& x, const CodedNat& y) const {
    check(x);
    check(y);
    std::uint64_t r;
    if (__builtin_mul_overflow(x.index, y.index, &r)) throw ModelError("product overflows the index range");
    return encode(r);
  }

  bool same(const CodedNat& x, const CodedNat& y) const {
    check(x);
    check(y);
    return x.index == y.index;
  }

  // Evaluator interface.
  CodedNat from_index(std::uint64_t n) const { return encode(n); }
  std::uint64_t index(const CodedNat& x) const { return decode(x); }

 private:
  void check(const CodedNat& x) const {
    if (x.model != coding_.get()) throw ModelError("element belongs to a different model");
  }
  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ModelError("sum overflows the index range");
    return r;
  }

  std::shared_ptr<const CodingFunction> coding_;
  Successor faulty_succ_;
};

// The naturals with their usual operations.
class StandardModel {
 public:
  using element = std::uint64_t;

  static bool standard_arithmetic() noexcept { return true; }

  std::uint64_t constant(unsigned k) const {
    if (k == 1) return 0;
    if (k == 2) return 1;
    throw ModelError("constant a" + std::to_string(k) + " has no interpretation");
  }
  std::uint64_t succ(std::uint64_t x) const { return add(x, 1); }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw ModelError("sum overflows");
    return r;
  }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw ModelError("product overflows");
    return r;
  }
  bool same(std::uint64_t x, std::uint64_t y) const { return x == y; }
  std::uint64_t from_index(std::uint64_t n) const { return n; }
  std::uint64_t index(std::uint64_t x) const { return x; }
};

struct LimitRow {
  double u;
  std::uint64_t n;
  double psi;
  double deviation;  // |psi(n) - n| = b_n (u - 1)
};

// Deviation of psi_(alpha,u) from the identity along a sequence of u
// decreasing to 1.
inline std::vector<LimitRow> limit_table(std::uint64_t alpha, std::uint64_t n_max, const std::vector<double>& us) {
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (us[i] < 1.0) throw ModelError("u must be >= 1");
    if (i > 0 && !(us[i] < us[i - 1])) throw ModelError("u sequence must be strictly decreasing");
  }
  std::vector<LimitRow> rows;
  for (double u : us) {
    auto coding = default_coding(alpha, u);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      LinearForm f = coding->at(n);
      rows.push_back({u, n, f.at(u), static_cast<double>(f.b) * (u - 1.0)});
    }
  }
  return rows;
}

// 1 + 2^-k for k = 1..steps, then 1.
inline std::vector<double> halving_sequence(unsigned steps) {
  std::vector<double> us;
  for (unsigned k = 1; k <= steps; ++k) us.push_back(1.0 + std::ldexp(1.0, -static_cast<int>(k)));
  us.push_back(1.0);
  return us;
}

}  // namespace peano

#endif  // PEANO_MODELS_HPP
