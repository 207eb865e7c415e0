#pragma once

// Integer sequences behind the Jaco graphs: the Lucas basis U(a,-1), Liz
// numbers, the c-series and the generalized Zeckendorf representation.
//
// All arithmetic is exact 64-bit with overflow checks. Nothing here wraps.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jaco/errors.hpp"

namespace jaco {

using Int = std::int64_t;

// Largest value a reach column entry (a*n + c) may take.
inline constexpr Int kValueCap = Int{1} << 62;

// The order parameter a of J_n(a). Always >= 1.
class Order {
 public:
  explicit Order(Int a) : a_(a) {
    if (a < 1) throw DomainError("order a must be >= 1, got " + std::to_string(a));
  }

  Int value() const noexcept { return a_; }

  friend bool operator==(Order, Order) = default;

 private:
  Int a_;
};

namespace detail {

inline std::string describe(const char* what, Int index) {
  std::string msg = std::string("integer overflow computing ") + what;
  if (index >= 0) msg += " at index " + std::to_string(index);
  return msg;
}

inline Int checked_add(Int x, Int y, const char* what, Int index = -1) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow(describe(what, index));
  return r;
}

inline Int checked_mul(Int x, Int y, const char* what, Int index = -1) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow(describe(what, index));
  return r;
}

// extends the seed terms with t_i = a*t_{i-1} + t_{i-2} up to index m
inline std::vector<Int> second_order(Int a, std::vector<Int> seeds, std::size_t m,
                                     const char* what) {
  std::vector<Int> t = std::move(seeds);
  t.reserve(m + 1);
  while (t.size() <= m) {
    const Int i = static_cast<Int>(t.size());
    t.push_back(checked_add(checked_mul(a, t[i - 1], what, i), t[i - 2], what, i));
  }
  t.resize(m + 1);
  return t;
}

}  // namespace detail

// U_0..U_m of the generalized Lucas sequence U(a,-1).
struct LucasBasis {
  Order a;
  std::vector<Int> terms;

  Int operator[](std::size_t i) const { return terms[i]; }
  std::size_t size() const noexcept { return terms.size(); }
};

inline LucasBasis lucas_terms(Order a, std::size_t m) {
  if (m < 1) throw DomainError("lucas_terms needs m >= 1");
  return {a, detail::second_order(a.value(), {0, 1}, m, "Lucas term U")};
}

// Lucas terms up to and including the first one exceeding n. If that term
// would overflow, the basis stops at the last representable one (which is
// already the largest term <= n).
inline LucasBasis lucas_basis_covering(Order a, Int n) {
  std::vector<Int> t{0, 1};
  while (t.back() <= n) {
    Int next;
    if (__builtin_mul_overflow(a.value(), t.back(), &next) ||
        __builtin_add_overflow(next, t[t.size() - 2], &next))
      break;
    t.push_back(next);
  }
  return {a, std::move(t)};
}

// Floating-point Binet value r^n / (r - s). Cross-check only.
inline long double binet_estimate(Order a, int n) {
  const long double half = static_cast<long double>(a.value()) / 2.0L;
  const long double root = std::sqrt(half * half + 1.0L);
  const long double r = half + root;
  return std::pow(r, static_cast<long double>(n)) / (2.0L * root);
}

// B_0 = 0, B_1 = B_2 = 1, B_i = a*B_{i-1} + B_{i-2}.
struct LizSequence {
  Order a;
  std::vector<Int> terms;

  Int operator[](std::size_t i) const { return terms[i]; }
  std::size_t size() const noexcept { return terms.size(); }
};

inline LizSequence liz_terms(Order a, std::size_t m) {
  if (m < 2) throw DomainError("liz_terms needs m >= 2");
  return {a, detail::second_order(a.value(), {0, 1, 1}, m, "Liz number B")};
}

// The series c_{a,n} for n = 0..horizon, with the J_inf(a) degree columns
// derived from it:
//   d_minus[n] = n - c[n]
//   d_plus[n]  = (a-1)*n + c[n]
//   reach[n]   = a*n + c[n]   (largest head of an arc leaving v_n)
class SequenceTable {
 public:
  SequenceTable(Order a, Int horizon) : a_(a), horizon_(horizon) {
    if (horizon < 0) throw DomainError("horizon must be >= 0");
    const Int av = a.value();
    const Int bound = detail::checked_mul(detail::checked_add(av, 1, "horizon cap"),
                                          horizon, "horizon cap");
    if (bound > kValueCap)
      throw ArithmeticOverflow("horizon " + std::to_string(horizon) +
                               " exceeds the 2^62 cap for a = " + std::to_string(av));

    const auto size = static_cast<std::size_t>(horizon) + 1;
    c_.assign(size, 0);
    if (horizon >= 1) c_[1] = 1;
    // The minimizing k never decreases in n, so one forward pointer suffices.
    Int k = 1;
    for (Int n = 2; n <= horizon; ++n) {
      while (av * k + c_[k] < n) ++k;
      c_[n] = k;
    }

    d_minus_.resize(size);
    d_plus_.resize(size);
    reach_.resize(size);
    for (Int n = 0; n <= horizon; ++n) {
      d_minus_[n] = n - c_[n];
      d_plus_[n] = (av - 1) * n + c_[n];
      reach_[n] = av * n + c_[n];
    }
  }

  Order order() const noexcept { return a_; }
  Int horizon() const noexcept { return horizon_; }

  Int c(Int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Int d_minus(Int n) const { return d_minus_.at(static_cast<std::size_t>(n)); }
  Int d_plus(Int n) const { return d_plus_.at(static_cast<std::size_t>(n)); }
  Int reach(Int n) const { return reach_.at(static_cast<std::size_t>(n)); }

  std::span<const Int> c() const noexcept { return c_; }
  std::span<const Int> d_minus() const noexcept { return d_minus_; }
  std::span<const Int> d_plus() const noexcept { return d_plus_; }
  std::span<const Int> reach() const noexcept { return reach_; }

 private:
  Order a_;
  Int horizon_;
  std::vector<Int> c_;
  std::vector<Int> d_minus_;
  std::vector<Int> d_plus_;
  std::vector<Int> reach_;
};

inline SequenceTable c_series(Order a, Int horizon) { return SequenceTable(a, horizon); }

// Generalized Zeckendorf digits over U(a,-1), least significant first:
// digits[0] is the coefficient of U_1. Zero is the empty string.
struct ZeckRep {
  Order a;
  std::vector<Int> digits;

  // coefficient of U_i, 1-based; zero past the end
  Int alpha(std::size_t i) const { return i >= 1 && i <= digits.size() ? digits[i - 1] : 0; }

  friend bool operator==(const ZeckRep&, const ZeckRep&) = default;
};

// Throws ValidationError naming the first digit that breaks
//   0 <= alpha_1 < a,  0 <= alpha_i <= a,  alpha_i = a only after a zero digit
// or a trailing zero.
inline void validate(const ZeckRep& rep) {
  const Int a = rep.a.value();
  const auto& d = rep.digits;
  auto fail = [&](std::size_t i, const std::string& why) {
    throw ValidationError(
        "alpha_" + std::to_string(i) + " = " + std::to_string(d[i - 1]) + " " + why, i);
  };
  for (std::size_t i = 1; i <= d.size(); ++i) {
    const Int x = d[i - 1];
    if (x < 0) fail(i, "is negative");
    if (i == 1 && x >= a) fail(i, "must be < a");
    if (x > a) fail(i, "exceeds a");
    if (i >= 2 && x == a && d[i - 2] != 0)
      fail(i, "equals a but alpha_" + std::to_string(i - 1) + " != 0");
  }
  if (!d.empty() && d.back() == 0)
    throw ValidationError("leading digit alpha_" + std::to_string(d.size()) + " is zero",
                          d.size());
}

// Greedy expansion: take the largest U_i <= n with the largest multiple that
// fits, then continue on the remainder. `basis` must cover n.
inline ZeckRep zeck_encode(const LucasBasis& basis, Int n) {
  if (n < 0) throw DomainError("zeck_encode needs n >= 0");
  std::size_t top = 0;
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (basis[i] <= n) top = i;
  if (basis.terms.back() <= n) {
    // only legal when the next term is unrepresentable
    Int next;
    if (!__builtin_mul_overflow(basis.a.value(), basis.terms.back(), &next) &&
        !__builtin_add_overflow(next, basis[basis.size() - 2], &next))
      throw DomainError("Lucas basis does not cover " + std::to_string(n));
  }
  ZeckRep rep{basis.a, std::vector<Int>(top, 0)};
  Int rest = n;
  for (std::size_t i = top; i >= 1; --i) {
    rep.digits[i - 1] = rest / basis[i];
    rest %= basis[i];
  }
  return rep;
}

inline ZeckRep zeck_encode(Order a, Int n) { return zeck_encode(lucas_basis_covering(a, n), n); }

inline Int zeck_decode(const ZeckRep& rep) {
  validate(rep);
  if (rep.digits.empty()) return 0;
  const LucasBasis u = lucas_terms(rep.a, rep.digits.size());
  Int sum = 0;
  for (std::size_t i = 1; i <= rep.digits.size(); ++i)
    sum = detail::checked_add(sum, detail::checked_mul(rep.digits[i - 1], u[i], "decode"),
                              "decode");
  return sum;
}

// The 0/1 correction term of the closed form, read off the low digits.
inline int tau(const ZeckRep& rep) {
  const auto& d = rep.digits;
  if (d.empty()) throw DomainError("tau is undefined for zero");
  if (d[0] == 0) return 0;
  if (d[0] > 1) return 1;
  std::size_t run = 0;  // 1 = alpha_1 = ... = alpha_run
  while (run < d.size() && d[run] == 1) ++run;
  const Int next = run < d.size() ? d[run] : 0;
  if (next == 0) return run % 2 == 1 ? 1 : 0;  // (1 + (-1)^(run+1)) / 2
  return run % 2 == 0 ? 1 : 0;                 // (1 + (-1)^run) / 2
}

// c_{a,n} = sum alpha_i U_{i-1} + tau(n), evaluated over a basis covering n.
inline Int c_closed(const LucasBasis& basis, Int n) {
  if (n < 1) throw DomainError("c_closed needs n >= 1");
  const ZeckRep rep = zeck_encode(basis, n);
  Int sum = 0;
  for (std::size_t i = 1; i <= rep.digits.size(); ++i)
    sum += rep.digits[i - 1] * basis[i - 1];
  return sum + tau(rep);
}

inline Int c_closed(Order a, Int n) { return c_closed(lucas_basis_covering(a, n), n); }

// d+(v_n) in J_inf(1) via the ordinary Zeckendorf representation of n:
// every Fibonacci part f_i is replaced by f_{i-1}.
inline Int bettina_dplus(Int n) {
  if (n < 1) throw DomainError("bettina_dplus needs n >= 1");
  std::vector<Int> fib{0, 1, 1};  // f_0, f_1, f_2
  while (fib.back() <= n - fib[fib.size() - 2]) fib.push_back(fib.back() + fib[fib.size() - 2]);
  Int rest = n;
  Int shifted = 0;
  for (std::size_t i = fib.size() - 1; i >= 2 && rest > 0; --i) {
    if (fib[i] <= rest) {
      rest -= fib[i];
      shifted += fib[i - 1];
      --i;  // Zeckendorf parts are never adjacent
    }
  }
  return shifted;
}

}  // namespace jaco
