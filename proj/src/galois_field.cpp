#include "dcrep/galois_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace dcrep {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned long long> prime_divisors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int smallest_primitive_root(int p) {
  if (p == 2) return 1;
  const auto divs = prime_divisors(static_cast<unsigned long long>(p - 1));
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (auto r : divs) {
      long long acc = 1, base = g;
      unsigned long long e = (p - 1) / r;
      while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
      }
      if (acc == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  throw CheckFailure("no primitive root found mod " + std::to_string(p));
}

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

}  // namespace

GaloisField::GaloisField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p) || p > 97)
    throw InvalidInput("finite field characteristic must be a prime <= 97, got " +
                       std::to_string(p));
  if (k < 1 || k > 4)
    throw InvalidInput("finite field degree must be in 1..4, got " + std::to_string(k));
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= static_cast<std::uint64_t>(p);

  const auto order_divs = prime_divisors(q_ - 1);
  // Plain square-and-multiply: pow() reduces exponents mod q-1, which is only
  // valid once the modulus is known to give a field.
  auto raw_pow = [&](code_type x, std::uint64_t e) {
    code_type acc = 1;
    while (e) {
      if (e & 1) acc = poly_mul(acc, x);
      x = poly_mul(x, x);
      e >>= 1;
    }
    return acc;
  };
  auto has_full_order = [&](code_type x) {
    if (raw_pow(x, q_ - 1) != 1) return false;
    for (auto r : order_divs)
      if (raw_pow(x, (q_ - 1) / r) == 1) return false;
    return true;
  };

  if (k == 1) {
    const int g = smallest_primitive_root(p);
    modulus_ = {(p - g) % p, 1};
    generator_ = static_cast<code_type>(g);
  } else {
    generator_ = static_cast<code_type>(p);
    bool found = false;
    for (std::uint64_t t = 0; t < q_ && !found; ++t) {
      std::vector<int> tail(k);
      std::uint64_t rest = t;
      for (int i = 0; i < k; ++i) {
        tail[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      if (tail[0] == 0) continue;
      modulus_ = tail;
      modulus_.push_back(1);
      found = has_full_order(generator_);
    }
    if (!found) throw CheckFailure("no primitive polynomial found");
  }

  if (q_ <= kTableLimit) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    code_type x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = poly_mul(x, generator_);
    }
    tables_ = true;
  }
}

GaloisField::code_type GaloisField::add(code_type a, code_type b) const {
  if (k_ == 1) return static_cast<code_type>((a + b) % p_);
  code_type out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    out += static_cast<code_type>(((a % p_) + (b % p_)) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

GaloisField::code_type GaloisField::neg(code_type a) const {
  if (k_ == 1) return static_cast<code_type>((p_ - a) % p_);
  code_type out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    out += static_cast<code_type>((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

GaloisField::code_type GaloisField::sub(code_type a, code_type b) const {
  return add(a, neg(b));
}

GaloisField::code_type GaloisField::poly_mul(code_type a, code_type b) const {
  if (k_ == 1)
    return static_cast<code_type>(static_cast<std::uint64_t>(a) * b % p_);
  const auto da = digits(a), db = digits(b);
  std::vector<long long> r(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) r[i + j] += static_cast<long long>(da[i]) * db[j];
  for (auto& c : r) c %= p_;
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const long long c = r[i];
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) r[i - k_ + j] = ((r[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    r[i] = 0;
  }
  std::vector<int> out(k_);
  for (int i = 0; i < k_; ++i) out[i] = static_cast<int>(r[i]);
  return from_digits(out);
}

GaloisField::code_type GaloisField::mul(code_type a, code_type b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return poly_mul(a, b);
  if (tables_) {
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  return poly_mul(a, b);
}

GaloisField::code_type GaloisField::inv(code_type a) const {
  if (a == 0) throw InvalidInput("division by zero in F_" + std::to_string(q_));
  if (tables_) {
    const std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1 - l)];
  }
  return pow(a, Integer(q_ - 2));
}

GaloisField::code_type GaloisField::pow(code_type a, const Integer& e) const {
  if (e < 0) return pow(inv(a), Integer(-e));
  if (e == 0) return 1;
  if (a == 0) return 0;
  const Integer reduced = e % Integer(q_ - 1);
  auto n = reduced.convert_to<std::uint64_t>();
  if (tables_) {
    const auto l = static_cast<unsigned __int128>(log_[a]) * n % (q_ - 1);
    return exp_[static_cast<std::uint64_t>(l)];
  }
  code_type acc = 1, base = a;
  while (n) {
    if (n & 1) acc = poly_mul(acc, base);
    base = poly_mul(base, base);
    n >>= 1;
  }
  return acc;
}

GaloisField::code_type GaloisField::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<code_type>(r);
}

GaloisField::code_type GaloisField::root_of_unity(std::uint64_t order) const {
  if (order == 0 || (q_ - 1) % order != 0)
    throw InvalidInput("F_" + std::to_string(q_) + " has no primitive root of unity of order " +
                       std::to_string(order));
  return pow(generator_, Integer((q_ - 1) / order));
}

std::uint64_t GaloisField::log(code_type a) const {
  if (a == 0) throw InvalidInput("logarithm of zero");
  if (tables_) return log_[a];
  // baby-step giant-step
  std::uint64_t m = 1;
  while (m * m < q_ - 1) ++m;
  std::unordered_map<code_type, std::uint64_t> baby;
  code_type x = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = poly_mul(x, generator_);
  }
  const code_type giant = inv(pow(generator_, Integer(m)));
  code_type y = a;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(y); it != baby.end()) return (i * m + it->second) % (q_ - 1);
    y = poly_mul(y, giant);
  }
  throw CheckFailure("discrete logarithm not found");
}

std::uint64_t GaloisField::multiplicative_order(code_type a) const {
  if (a == 0) throw InvalidInput("order of zero");
  std::uint64_t n = q_ - 1;
  for (auto r : prime_divisors(q_ - 1))
    while (n % r == 0 && pow(a, Integer(n / r)) == 1) n /= r;
  return n;
}

std::vector<int> GaloisField::digits(code_type a) const {
  std::vector<int> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return d;
}

GaloisField::code_type GaloisField::from_digits(const std::vector<int>& d) const {
  code_type out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    const int c = i < static_cast<int>(d.size()) ? ((d[i] % p_) + p_) % p_ : 0;
    out += static_cast<code_type>(c) * place;
    place *= p_;
  }
  return out;
}

std::string GaloisField::str(code_type a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "z^" + std::to_string(log(a));
}

const GaloisField& galois_field(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GaloisField>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[{p, k}];
  if (!slot) slot = std::make_unique<GaloisField>(p, k);
  return *slot;
}

}  // namespace dcrep
